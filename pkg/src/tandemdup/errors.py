"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """A search would exceed its word budget.

    ``depth_reached`` is the largest word length whose level was fully
    built before the budget ran out.
    """

    def __init__(self, limit, depth_reached):
        super().__init__(
            f"word budget of {limit} exceeded; "
            f"levels complete through length {depth_reached}"
        )
        self.limit = limit
        self.depth_reached = depth_reached


class UnsupportedDuplicationLength(ValueError):
    """The requested construction only exists for duplication bounds up to 3."""


class EmptyLanguageError(ValueError):
    """A constraint set leaves no arbitrarily long words."""


class InsufficientDataError(ValueError):
    """A count table is too short to estimate a growth rate."""


class NondeterministicAutomatonError(ValueError):
    """An operation that needs a deterministic automaton got a nondeterministic one."""


class NonConvergenceError(RuntimeError):
    """Power iteration failed to stabilize within the iteration cap."""

    def __init__(self, last_estimate, iterations):
        super().__init__(
            f"spectral radius estimate did not converge after {iterations} "
            f"iterations (last estimate {last_estimate})"
        )
        self.last_estimate = last_estimate
        self.iterations = iterations
