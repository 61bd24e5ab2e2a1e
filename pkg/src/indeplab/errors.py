"""Exception types shared across the package."""


class IndepLabError(Exception):
    """Base class for all package-specific errors."""


class GraphInputError(IndepLabError, ValueError):
    """Malformed graph input: bad edge, bad graph6 line, bad edge list.

    ``offset`` carries the byte offset of the offending character when the
    input is a graph6 line.
    """

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class HostMismatchError(IndepLabError, ValueError):
    """A vertex set or matching was combined with a host of different order."""


class PartitionError(IndepLabError, ValueError):
    """A claimed bipartition is violated; ``edge`` names the internal edge."""

    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class CapExceededError(IndepLabError):
    """An enumerative routine was asked to exceed its size cap."""

    def __init__(self, what, n, cap):
        super().__init__(f"{what}: size {n} exceeds cap {cap}")
        self.what = what
        self.n = n
        self.cap = cap

    def __reduce__(self):
        return (CapExceededError, (self.what, self.n, self.cap))


class InvariantViolationError(IndepLabError):
    """An internal postcondition failed; indicates a bug, never a valid result."""
