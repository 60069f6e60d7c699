"""
Tests for validators, error payloads and the API exception handler.
"""

from fractions import Fraction

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
from rest_framework import status
from rest_framework.exceptions import NotFound

from apps.core.exception_handler import custom_exception_handler
from apps.core.exceptions import (
    EXIT_INPUT_INVALID,
    EXIT_PROPERTY_FAILURE,
    EXIT_RESOURCE_GUARD,
    ErrorCodes,
    NotAssociative,
    ParseError,
    PropertyCheckFailed,
    TruncationTooLarge,
    error_payload,
    jsonable,
)
from apps.core.validators import BasisLabelValidator, RationalStringValidator, format_rational, parse_rational


class ValidatorTestCase(SimpleTestCase):
    """Test cases for custom validators."""

    def test_rational_validator(self):
        """Test exact rational coefficient strings."""
        validator = RationalStringValidator()
        for value in ['1', '-3', '3/2', ' -7 / 4 ', 5]:
            try:
                validator(value)
            except ValidationError:
                self.fail(f'{value!r} should be valid')
        for value in ['1.5', 'x', '1/0', '', True, None]:
            with self.assertRaises(ValidationError):
                validator(value)

    def test_label_validator(self):
        """Test basis labels reject whitespace and '@'."""
        validator = BasisLabelValidator()
        validator('x1')
        for value in ['', 'a b', 'e@1', 3]:
            with self.assertRaises(ValidationError):
                validator(value)

    def test_parse_and_format(self):
        """Test rational parsing and canonical formatting."""
        self.assertEqual(parse_rational(' 6 / 4 '), Fraction(3, 2))
        self.assertEqual(parse_rational(-2), Fraction(-2))
        self.assertEqual(format_rational(Fraction(3, 2)), '3/2')
        self.assertEqual(format_rational(Fraction(4, 2)), '2')


class ErrorPayloadTestCase(SimpleTestCase):
    """Test cases for the diagnostic payload."""

    def test_witness(self):
        """Test witnesses are converted to JSON types."""
        error = NotAssociative('Product is not associative.', witness=('x', 'y', 'z'))
        payload = error_payload(error)
        self.assertEqual(payload['error']['code'], ErrorCodes.NOT_ASSOCIATIVE)
        self.assertEqual(payload['error']['witness'], ['x', 'y', 'z'])
        self.assertEqual(payload['error']['type'], 'NotAssociative')

    def test_field_errors(self):
        """Test serializer field errors are carried."""
        payload = error_payload(ParseError('Bad document.', field_errors={'basis': ['Required.']}))
        self.assertEqual(payload['error']['fields'], {'basis': ['Required.']})
        self.assertNotIn('witness', payload['error'])

    def test_jsonable(self):
        """Test fractions, tuples and sets."""
        self.assertEqual(
            jsonable({1: (Fraction(1, 2), {'b', 'a'})}),
            {'1': ['1/2', ['a', 'b']]},
        )

    def test_exit_codes_and_statuses(self):
        """Test each error family maps to its exit code and status."""
        self.assertEqual(ParseError().exit_code, EXIT_INPUT_INVALID)
        self.assertEqual(ParseError().status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(TruncationTooLarge().exit_code, EXIT_RESOURCE_GUARD)
        self.assertEqual(TruncationTooLarge().status_code, status.HTTP_422_UNPROCESSABLE_ENTITY)
        self.assertEqual(PropertyCheckFailed().exit_code, EXIT_PROPERTY_FAILURE)
        self.assertEqual(PropertyCheckFailed().status_code, status.HTTP_422_UNPROCESSABLE_ENTITY)


class ExceptionHandlerTestCase(SimpleTestCase):
    """Test cases for custom_exception_handler."""

    def test_domain_error(self):
        """Test a domain error keeps its status and witness."""
        response = custom_exception_handler(TruncationTooLarge('Too many words.', witness={'max_weight': 9}), {})
        self.assertEqual(response.status_code, status.HTTP_422_UNPROCESSABLE_ENTITY)
        self.assertIn(b'"max_weight": 9', response.content)

    def test_drf_error(self):
        """Test other DRF exceptions keep their status."""
        response = custom_exception_handler(NotFound(), {})
        self.assertEqual(response.status_code, status.HTTP_404_NOT_FOUND)

    def test_django_validation_error(self):
        """Test Django validation errors become parse errors."""
        response = custom_exception_handler(ValidationError('Bad label.'), {})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn(b'parse_error', response.content)

    def test_unexpected_error(self):
        """Test unexpected exceptions answer 500."""
        response = custom_exception_handler(RuntimeError('boom'), {})
        self.assertEqual(response.status_code, status.HTTP_500_INTERNAL_SERVER_ERROR)
