"""Errors raised by the weight-bound library.

Management commands map ``exit_code`` onto the process exit status.
"""


class QWeightError(Exception):
    exit_code = 1


class DimensionError(QWeightError, ValueError):
    """Operands disagree on qubit count or vector length."""


class PauliParseError(QWeightError, ValueError):
    pass


class NonCommutingError(QWeightError):
    pass


class NonHermitianError(QWeightError):
    """A generator carries an imaginary phase."""


class MinusIdentityError(QWeightError):
    """The generators span -I, so they define no code."""


class DependentBasisError(QWeightError):
    pass


class BudgetExceeded(QWeightError):
    """An exhaustive search would exceed its configured budget."""

    exit_code = 2


class InadmissibleChoice(QWeightError, ValueError):
    pass


class GraphParseError(QWeightError, ValueError):
    pass


class InstanceParseError(QWeightError, ValueError):
    pass


class NoSolution(QWeightError):
    """H x = s has no solution."""


class SolverError(QWeightError):
    """The exact simplex produced a result that failed its own check."""


class CatalogError(QWeightError):
    pass


class CyclicReference(CatalogError):
    pass


class ChecksumMismatch(CatalogError):
    pass
