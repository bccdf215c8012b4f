"""Exception hierarchy with stable machine-readable codes.

Every error carries a short ``code`` string.  The HTTP layer forwards the
code in the response body and the CLI keys its exit status off the class:
input errors exit 2, budget errors exit 3.
"""


class FermatcoverError(Exception):
    code = "error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)


class InputError(FermatcoverError):
    """Rejected input. CLI exit status 2."""

    code = "invalid-input"


class BudgetError(FermatcoverError):
    """A configured search or enumeration budget was exceeded. CLI exit status 3."""

    code = "budget-exceeded"


class CertificationError(FermatcoverError):
    """An internal consistency check failed; no certificate is emitted."""

    code = "certification-failed"


class InvalidModulusError(InputError):
    code = "invalid-modulus"


class DimensionMismatchError(InputError):
    code = "dimension-mismatch"


class NotInvertibleError(InputError):
    code = "not-invertible"


class OrderBoundError(BudgetError):
    code = "order-bound-exceeded"


class EnumerationBudgetError(BudgetError):
    code = "enumeration-too-large"


class GenusTooSmallError(InputError):
    code = "genus-too-small"


class SignatureError(InputError):
    code = "invalid-signature"


class NotHyperbolicError(InputError):
    code = "not-hyperbolic"


class TriangularSignatureError(InputError):
    code = "triangular-signature"


class NotPrimeError(InputError):
    code = "not-prime"


class ZeroInverseError(InputError):
    code = "division-by-zero"


class NoSplittingPrimeError(BudgetError):
    code = "no-splitting-prime"


class BadLambdaError(InputError):
    code = "bad-lambda"


class ConstraintInfeasibleError(InputError):
    code = "constraint-infeasible"


class FieldInsufficientError(InputError):
    code = "field-insufficient"


class NotSurjectiveError(InputError):
    code = "not-surjective"


class HypothesisViolatedError(InputError):
    code = "hypothesis-violated"


class BadActionError(InputError):
    code = "bad-action"


class NotApplicableError(InputError):
    code = "not-applicable"


class StructureError(InputError):
    code = "structure-mismatch"


class PresentationError(InputError):
    code = "invalid-presentation"


#: codes that the CLI maps to exit status 3 when talking to a remote server
BUDGET_CODES = frozenset(
    {"budget-exceeded", "enumeration-too-large", "order-bound-exceeded", "no-splitting-prime"}
)
