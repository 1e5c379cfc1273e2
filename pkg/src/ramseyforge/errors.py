"""Shared error types and search budgets."""


class BudgetExceededError(RuntimeError):
    """A node-capped search ran out of budget; shrink the instance or raise the cap."""


class UnreachableOrderError(ValueError):
    """A randomized generator could not hit the requested order within its retry budget."""


class ExhaustedPermutationsError(RuntimeError):
    """Gadget sampling could not produce enough pairwise non-isomorphic members."""


class CapsTooSmallError(RuntimeError):
    """Exact host enumeration finished without a witness; the caps were too tight."""


class InvalidBaseColoringError(ValueError):
    """The base coloring handed to the clique lift already has a monochromatic clique."""


class Budget:
    """Mutable countdown of search-tree nodes.

    spend() raises BudgetExceededError once the cap is crossed, so deep
    recursions abort instead of running unbounded.
    """

    __slots__ = ("cap", "used")

    def __init__(self, cap: int):
        self.cap = cap
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.cap:
            raise BudgetExceededError(f"search budget of {self.cap} nodes exceeded")
