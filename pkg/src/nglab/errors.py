class NGLabError(Exception):
    """Base class for library errors."""


class GuardError(NGLabError, ValueError):
    """An exponential routine was asked to run above its size guard."""

    def __init__(self, what, n, limit):
        super().__init__(f"{what}: n={n} exceeds guard n <= {limit}")
        self.what = what
        self.n = n
        self.limit = limit


class Graph6Error(NGLabError, ValueError):
    pass


class NotType1Error(NGLabError, ValueError):
    pass
