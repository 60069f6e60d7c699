#!/usr/bin/env python
"""
Test runner script for the Malcev library.
"""

import os
import sys
import django
from django.conf import settings
from django.test.utils import get_runner

def setup_django():
    """Setup Django for testing."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'malcev.settings.test')
    django.setup()

def run_tests():
    """Run all tests, or the modules given on the command line."""
    setup_django()

    TestRunner = get_runner(settings)
    test_runner = TestRunner()

    test_patterns = sys.argv[1:] or [
        'apps.core.tests_validation',
        'apps.linear.tests_linear',
        'apps.rings.tests_rings',
        'apps.lie.tests_lie',
        'apps.quillen.tests_quillen',
        'apps.mc.tests_mc',
        'apps.doldkan.tests_doldkan',
        'apps.simplicial.tests_simplicial',
        'apps.equivariant.tests_equivariant',
        'apps.api.tests_api',
        'apps.cli.tests_commands',
        'apps.tests_integration',
    ]

    print("Running Malcev tests...")
    print("=" * 50)

    failures = test_runner.run_tests(test_patterns)

    if failures:
        print(f"\n❌ {failures} test(s) failed!")
        sys.exit(1)
    else:
        print("\n✅ All tests passed!")
        sys.exit(0)

if __name__ == '__main__':
    run_tests()
