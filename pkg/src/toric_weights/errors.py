"""Exception types.  Each carries the CLI exit code it maps to."""


class ToricWeightsError(Exception):
    exit_code = 1


class MalformedInput(ToricWeightsError):
    exit_code = 1


class ValidationError(ToricWeightsError):
    """Input parsed but violates a requirement on A."""

    exit_code = 2


class RankDeficient(ValidationError):
    pass


class NotFullLattice(ValidationError):
    def __init__(self, gcd):
        super().__init__(f"columns generate a sublattice of index {gcd} (gcd of maximal minors)")
        self.gcd = gcd


class NotPointed(ValidationError):
    pass


class BudgetExceeded(ValidationError):
    pass


class NotComparable(ToricWeightsError):
    exit_code = 2


class InternalInconsistency(ToricWeightsError):
    exit_code = 3


class NotEulerian(InternalInconsistency):
    pass


class NegativeEntry(InternalInconsistency):
    pass


class CrossCheckFailure(InternalInconsistency):
    def __init__(self, face, e, values):
        detail = ", ".join(f"{k}={v}" for k, v in values.items())
        super().__init__(f"weight routes disagree at face={face}, e={e}: {detail}")
        self.face = face
        self.e = e
        self.values = dict(values)


class DependencyCountMismatch(InternalInconsistency):
    pass


class ScopeError(ToricWeightsError):
    exit_code = 4


class MissingPrimitive(ValidationError):
    pass


class DecompositionFailure(ValidationError):
    pass


class BoundTooSmall(ValidationError):
    pass
