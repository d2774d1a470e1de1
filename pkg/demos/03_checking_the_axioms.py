"""Which clubs are really k-graphs?

The certificate runs completeness, associativity, connectedness, unique
factorisation and the Euler-type count.  Lunar clubs pass every check.  As
soon as a face has three or more points, some arc-face-point paths have no
square, and the club stops being complete.
"""

from hrtrees import club_of
from hrtrees.club import verify_club_theorem
from hrtrees.fixtures import lunar, pizza, random_polyhedral

cases = [("lunar(3)", lunar(3)), ("pizza(1)", pizza(1)), ("pizza(3)", pizza(3)),
         ("random(6)", random_polyhedral(6, seed=2))]
for name, g in cases:
    cert = verify_club_theorem(club_of(g))
    print(f"{name:10s} {cert.summary()}")
    if not cert.complete.ok:
        print("           missing square for", cert.complete.missing[0])
    if cert.witness:
        u, v, reps = cert.witness
        print(f"           {len(reps)} path classes from {u} to {v}")
