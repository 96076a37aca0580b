"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class RangeError(OverflowError):
    """A value lies outside the supported arithmetic or memory range."""


class MemoryCapError(RangeError):
    """A sieve window would need more slots than the configured cap."""


class BudgetExceededError(RuntimeError):
    """An exact enumeration ran past its node budget.

    Raised instead of ever returning a partial value.
    """

    def __init__(self, nodes: int, budget: int):
        super().__init__(
            f"enumeration budget exceeded: {nodes} nodes visited, budget {budget}"
        )
        self.nodes = nodes
        self.budget = budget


class OracleMismatchError(RuntimeError):
    """Identity-based prime count and sieve count disagree for some window."""

    def __init__(self, k, p_identity, p_oracle, first_discrepant_n=None):
        msg = f"k={k}: identity count {p_identity} != sieve count {p_oracle}"
        if first_discrepant_n is not None:
            msg += f"; first discrepant n = {first_discrepant_n}"
        super().__init__(msg)
        self.k = k
        self.p_identity = p_identity
        self.p_oracle = p_oracle
        self.first_discrepant_n = first_discrepant_n


class CertificateError(RuntimeError):
    """A boundary certificate failed its consistency checks."""
