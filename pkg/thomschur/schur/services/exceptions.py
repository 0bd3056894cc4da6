from rest_framework import status
from rest_framework.exceptions import APIException


class BaseServiceException(APIException):
    default_detail = "Computation failed"
    default_code = "error"


class LogicError(BaseServiceException):
    """If this exception is thrown at all, then there is a clear problem
    (shouldn't be like this)"""
    default_detail = "Internal invariant violated"
    default_code = "logic error"


class AlgebraException(BaseServiceException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY

    default_detail = "Exact algebra failed"
    default_code = "algebra"


class InconsistentSystemException(AlgebraException):
    default_detail = "The linear system has no solution"
    default_code = "inconsistent system"


class UnderdeterminedSystemException(AlgebraException):
    default_detail = "The linear system does not determine a unique solution"
    default_code = "underdetermined system"

    def __init__(self, kernel_dim: int):
        self.kernel_dim = kernel_dim
        super().__init__(detail=f"{self.default_detail}: kernel dimension {kernel_dim}")


class NonIntegerSolutionException(AlgebraException):
    default_detail = "The unique solution has non-integer coordinates"
    default_code = "non integer solution"


class DivisionFailedException(AlgebraException):
    default_detail = "Polynomial division left a nonzero remainder"
    default_code = "division failed"


class UnsupportedProductException(AlgebraException):
    default_detail = "The product of two letters is not a linear form"
    default_code = "unsupported product"


class UnknownAlphabetSpecException(AlgebraException):
    default_detail = "Unknown alphabet"
    default_code = "unknown spec"

    def __init__(self, spec: str):
        super().__init__(detail=f"{self.default_detail} '{spec}'. Known names are B<n>, A<n>, "
                                f"Y<n>, X2, D, E, int:<n>, [<letter>] and plain letters.")


class UnknownVariableException(AlgebraException):
    default_detail = "Variable is not part of the polynomial ring"
    default_code = "unknown variable"

    def __init__(self, name: str):
        super().__init__(detail=f"{self.default_detail}: '{name}'. Raise "
                                f"THOMSCHUR_ALPHABET_SIZE if an indexed variable is missing.")


class SchurException(BaseServiceException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY

    default_detail = "Schur function computation failed"
    default_code = "schur"


class InvalidPartitionException(SchurException):
    default_detail = "A partition is a weakly increasing sequence of nonnegative integers"
    default_code = "invalid partition"


class CardinalityMismatchException(SchurException):
    default_detail = "Alphabet cardinalities do not match the partition shape"
    default_code = "cardinality mismatch"


class LengthExceededException(SchurException):
    default_detail = "The raising operator is defined only on partitions with at most three parts"
    default_code = "length exceeded"


class NotInSpanException(SchurException):
    default_detail = "The polynomial is not a combination of Schur functions in the hook"
    default_code = "not in span"


class NonIntegerCoefficientsException(SchurException):
    default_detail = "The Schur expansion has non-integer coefficients"
    default_code = "non integer coefficients"


class ExpressionSyntaxException(SchurException):
    default_detail = "Cannot parse the expression"
    default_code = "syntax"

    def __init__(self, text: str):
        super().__init__(detail=f"{self.default_detail} '{text}'")


class RestrictionException(BaseServiceException):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY

    default_detail = "Restriction equations cannot be built"
    default_code = "restriction"


class UnsupportedSingularityException(RestrictionException):
    default_detail = "Unsupported singularity"
    default_code = "unsupported singularity"

    def __init__(self, target):
        super().__init__(detail=f"{self.default_detail} {target}. Supported are A1, A2, A3 "
                                f"for any r, A4 for r=1, I22 for r>=1 and III22 for r>=2.")


class UsageException(BaseServiceException):
    status_code = status.HTTP_400_BAD_REQUEST

    default_detail = "Invalid request"
    default_code = "usage"


class ParameterRangeException(UsageException):
    default_detail = "Parameter out of range"
    default_code = "parameter range"

    def __init__(self, name: str, value: int, low: int, high: int | None = None):
        bound = f"at least {low}" if high is None else f"between {low} and {high}"
        super().__init__(detail=f"{self.default_detail}: {name}={value}, expected {bound}")
