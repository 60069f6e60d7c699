"""
Custom validators for the Malcev project.
"""

import re
from fractions import Fraction

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _


RATIONAL_PATTERN = re.compile(r'^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$')
LABEL_PATTERN = re.compile(r'^[^\s@]+$')


class RationalStringValidator:
    """
    Validator for exact rational coefficient strings such as "3/2" or "-1".
    """
    message = _('Enter an exact rational number such as "3/2" or "-1".')

    def __init__(self, message=None):
        if message:
            self.message = message

    def __call__(self, value):
        if isinstance(value, int) and not isinstance(value, bool):
            return
        if not isinstance(value, str) or not RATIONAL_PATTERN.match(value):
            raise ValidationError(self.message)
        if '/' in value and int(value.split('/')[1]) == 0:
            raise ValidationError(_('Denominator must be nonzero.'))


class BasisLabelValidator:
    """
    Validator for basis and simplex labels. '@' is reserved for covers.
    """
    message = _('Labels must be non-empty and contain no whitespace or "@".')

    def __init__(self, message=None):
        if message:
            self.message = message

    def __call__(self, value):
        if not isinstance(value, str) or not LABEL_PATTERN.match(value):
            raise ValidationError(self.message)


def parse_rational(value):
    """Parse a validated coefficient into a Fraction."""
    RationalStringValidator()(value)
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(value.replace(' ', ''))


def format_rational(value):
    """Canonical string form used in every output document."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'
