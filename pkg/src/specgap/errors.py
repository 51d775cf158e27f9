"""Exception types shared across the package."""


class SpecgapError(Exception):
    """Base class for all package-specific errors."""


class InfeasibleCertificate(SpecgapError):
    """The candidate function does not certify anything at this (k, z)."""


class NoFeasiblePoint(SpecgapError):
    """No optimizer restart produced a feasible certificate."""


class DisconnectedGraph(SpecgapError):
    """Operation requires a connected graph."""


class NotRegular(SpecgapError):
    """Operation requires a regular graph."""


class UnknownName(SpecgapError):
    """No atlas entry with the requested name."""


class BudgetExceeded(SpecgapError):
    """The enumeration needed to settle a classification exceeds the budget."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"classification needs enumeration up to n = {required} vertices, "
            f"beyond the compute budget of {budget}; raise the budget or pass "
            f"an explicit n_max"
        )


class Graph6Error(SpecgapError, ValueError):
    """Malformed graph6 input; ``offset`` is the first offending byte."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (byte offset {offset})")
