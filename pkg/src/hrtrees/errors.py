"""Exception types shared across the package."""

from __future__ import annotations


class MalformedInput(ValueError):
    """Input refers to ids that do not exist or is structurally broken."""


class NotBipartiteDual(ValueError):
    """The dual graph has an odd cycle, so two colours do not suffice.

    ``point`` names a point of odd valency when one exists and ``cycle`` is an
    odd cycle of faces found during the bipartition attempt.
    """

    def __init__(self, point=None, cycle=()):
        self.point = point
        self.cycle = tuple(cycle)
        where = f"point {point!r} has odd valency" if point is not None else ""
        if self.cycle:
            where = (where + "; " if where else "") + "odd dual cycle " + " ".join(self.cycle)
        super().__init__(where or "dual graph is not bipartite")


class Infeasible(ValueError):
    """No proper face colouring exists with the requested palette."""

    def __init__(self, palette: int):
        self.palette = palette
        super().__init__(f"no proper face colouring with {palette} colours")


class ColourClash(ValueError):
    """Two quadrangles demand different colours for the same club edge."""

    def __init__(self, edge: str, demands):
        self.edge = edge
        self.demands = tuple(demands)
        super().__init__(f"edge {edge} is asked for colours {sorted({c for c, _ in self.demands})}")


class SameColourAdjacent(ValueError):
    """A flip was requested on a monochromatic pair of edges."""


class MissingSquare(ValueError):
    """A flip was requested on a bicoloured pair that has no partner."""


class CyclicSkeleton(ValueError):
    """The coloured graph has a directed cycle."""

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("directed cycle through " + " -> ".join(self.cycle))


class DisconnectedInput(ValueError):
    """A spanning tree was requested for a disconnected graph."""


class ReducedUndecided(RuntimeError):
    """The kill/merge reduction stalled; the residual presentation is attached."""

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(
            f"reduction stalled with {len(verdict.residual.generators)} generators left"
        )


class CompatibilityError(ValueError):
    """An equivalence relation relates items that cannot be identified."""

    def __init__(self, first, second, reason: str):
        self.pair = (first, second)
        super().__init__(f"cannot identify {first} with {second}: {reason}")


class NotHereditary(ValueError):
    pass


class NotCohereditary(ValueError):
    pass


class IsoNotSquarePreserving(ValueError):
    pass


class TheoremViolation(RuntimeError):
    """A result that a theorem guarantees did not hold; carries the report."""

    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)
