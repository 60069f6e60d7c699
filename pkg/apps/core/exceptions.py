"""
Custom exceptions for the Malcev project.

Every domain error is a DRF ``APIException`` so the same object can be
rendered by the API exception handler and by the management commands.
Each error carries a ``witness`` (the offending basis triple, simplex,
word, ...) and the CLI ``exit_code`` it maps to.
"""

from rest_framework import status
from rest_framework.exceptions import APIException
from django.http import JsonResponse
from django.utils.translation import gettext_lazy as _


EXIT_OK = 0
EXIT_INPUT_INVALID = 2
EXIT_RESOURCE_GUARD = 3
EXIT_PROPERTY_FAILURE = 4


class MalcevError(APIException):
    """
    Base exception for all Malcev computations.
    """
    status_code = status.HTTP_400_BAD_REQUEST
    default_detail = _('A computation error occurred.')
    default_code = 'error'
    exit_code = EXIT_INPUT_INVALID

    def __init__(self, detail=None, witness=None, code=None, status_code=None):
        if status_code:
            self.status_code = status_code
        self.witness = witness
        super().__init__(detail, code)


class ParseError(MalcevError):
    """
    Input document is not well-formed.
    """
    default_detail = _('Input document could not be parsed.')
    default_code = 'parse_error'

    def __init__(self, detail=None, field_errors=None, witness=None):
        self.field_errors = field_errors or {}
        super().__init__(detail, witness=witness)


class NotAssociative(MalcevError):
    default_detail = _('Product is not associative.')
    default_code = 'not_associative'


class NotGradedCommutative(MalcevError):
    default_detail = _('Product is not graded-commutative.')
    default_code = 'not_graded_commutative'


class NotConnected(MalcevError):
    default_detail = _('Degree-0 cohomology is larger than the ground field.')
    default_code = 'not_connected'


class UnitMissing(MalcevError):
    default_detail = _('Declared unit is missing or is not a two-sided identity.')
    default_code = 'unit_missing'


class UnknownBasisLabel(MalcevError):
    default_detail = _('Unknown basis label.')
    default_code = 'unknown_basis_label'


class DegreeOutOfRange(MalcevError):
    default_detail = _('Degree is outside the range of the complex.')
    default_code = 'degree_out_of_range'


class DegreeMismatch(MalcevError):
    default_detail = _('Element does not have the expected degree.')
    default_code = 'degree_mismatch'


class NotACycle(MalcevError):
    default_detail = _('Representative is not a cycle.')
    default_code = 'not_a_cycle'


class NotMC(MalcevError):
    default_detail = _('Element does not satisfy the Maurer-Cartan equation.')
    default_code = 'not_mc'


class NotReduced(MalcevError):
    default_detail = _('Simplicial set must have exactly one vertex.')
    default_code = 'not_reduced'


class SimplicialIdentityViolation(MalcevError):
    default_detail = _('Face data violates the simplicial identities.')
    default_code = 'simplicial_identity_violation'


class NotACocycle(MalcevError):
    default_detail = _('Edge labelling is not a cocycle.')
    default_code = 'not_a_cocycle'


class NotSurjectiveMonodromy(MalcevError):
    default_detail = _('Monodromy does not generate the group.')
    default_code = 'not_surjective_monodromy'


class TruncationTooLarge(MalcevError):
    """
    Resource guard: the requested window would materialize too many basis
    elements.
    """
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _('Truncation window exceeds the configured basis guard.')
    default_code = 'truncation_too_large'
    exit_code = EXIT_RESOURCE_GUARD


class EnumerationBudgetExceeded(MalcevError):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _('Enumeration budget exceeded.')
    default_code = 'enumeration_budget_exceeded'
    exit_code = EXIT_RESOURCE_GUARD


class SignConventionFailure(MalcevError):
    """
    A constructed differential does not square to zero.
    """
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _('Differential does not square to zero.')
    default_code = 'sign_convention_failure'
    exit_code = EXIT_PROPERTY_FAILURE


class PropertyCheckFailed(MalcevError):
    status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    default_detail = _('A verified identity failed.')
    default_code = 'property_check_failed'
    exit_code = EXIT_PROPERTY_FAILURE


def jsonable(value):
    """
    Convert witnesses (tuples, Fractions, nested containers) to JSON types.
    """
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in value]
        return sorted(items, key=str) if isinstance(value, (set, frozenset)) else items
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(value)


def error_payload(error):
    """
    Machine-readable diagnostic shared by the API and the CLI.
    """
    payload = {
        'error': {
            'code': getattr(error, 'default_code', 'error'),
            'message': str(error.detail) if hasattr(error, 'detail') else str(error),
            'type': error.__class__.__name__,
        }
    }

    witness = getattr(error, 'witness', None)
    if witness is not None:
        payload['error']['witness'] = jsonable(witness)

    if getattr(error, 'field_errors', None):
        payload['error']['fields'] = jsonable(error.field_errors)

    return payload


def create_error_response(error, request=None):
    """
    Create a standardized error response.
    """
    return JsonResponse(
        error_payload(error),
        status=getattr(error, 'status_code', status.HTTP_400_BAD_REQUEST)
    )


class ErrorCodes:
    """
    Centralized error codes for the application.
    """
    PARSE_ERROR = ParseError.default_code
    NOT_ASSOCIATIVE = NotAssociative.default_code
    NOT_GRADED_COMMUTATIVE = NotGradedCommutative.default_code
    NOT_CONNECTED = NotConnected.default_code
    UNIT_MISSING = UnitMissing.default_code
    UNKNOWN_BASIS_LABEL = UnknownBasisLabel.default_code
    DEGREE_OUT_OF_RANGE = DegreeOutOfRange.default_code
    DEGREE_MISMATCH = DegreeMismatch.default_code
    NOT_A_CYCLE = NotACycle.default_code
    NOT_MC = NotMC.default_code
    NOT_REDUCED = NotReduced.default_code
    SIMPLICIAL_IDENTITY_VIOLATION = SimplicialIdentityViolation.default_code
    NOT_A_COCYCLE = NotACocycle.default_code
    NOT_SURJECTIVE_MONODROMY = NotSurjectiveMonodromy.default_code
    TRUNCATION_TOO_LARGE = TruncationTooLarge.default_code
    ENUMERATION_BUDGET_EXCEEDED = EnumerationBudgetExceeded.default_code
    SIGN_CONVENTION_FAILURE = SignConventionFailure.default_code
    PROPERTY_CHECK_FAILED = PropertyCheckFailed.default_code
