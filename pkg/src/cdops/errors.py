"""Exception types raised across the package."""


class CdopsError(Exception):
    """Base class for every error raised by cdops."""


class DimensionMismatch(CdopsError, ValueError):
    pass


class KindMismatch(CdopsError, ValueError):
    pass


class EmptyDiamond(CdopsError, ValueError):
    """The endpoints of a requested diamond are not future-timelike related."""


class NotAxisAligned(CdopsError, ValueError):
    """A timelike pair whose diamond is not a rectilinear image of the unit diamond."""


class ViolatingPair(CdopsError):
    """A multimorphism failed the orthogonality or containment check.

    ``j`` equals ``i`` when the failure is containment of map ``i`` in the unit shape.
    """

    def __init__(self, i, j, margin):
        self.i = i
        self.j = j
        self.margin = margin
        if i == j:
            msg = f"map {i} not contained in the unit shape (margin {margin!r})"
        else:
            msg = f"maps {i} and {j} are not orthogonal (margin {margin!r})"
        super().__init__(msg)


class ArityMismatch(CdopsError, ValueError):
    pass


class InstanceMismatch(CdopsError, ValueError):
    pass


class InvalidPermutation(CdopsError, ValueError):
    pass


class PathViolation(CdopsError):
    def __init__(self, u, pair, margin):
        self.u = u
        self.pair = pair
        self.margin = margin
        super().__init__(f"path leaves the operad at u={u!r}: pair {pair} margin {margin!r}")


class MarginalOrder(CdopsError):
    """Two spatial centers coincide within tolerance, so no left-to-right order exists."""


class SamplingExhausted(CdopsError):
    pass


class Unsupported(CdopsError):
    pass
