"""
Test settings for the Malcev project.
"""

from .base import *

# Use in-memory database for tests
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': ':memory:',
    }
}

# Disable logging during tests
LOGGING_CONFIG = None

# Test-specific settings
TEST_RUNNER = 'django.test.runner.DiscoverRunner'

# Fixed computation limits
MALCEV = {
    'MAX_DEGREE': 10,
    'MAX_WEIGHT': 6,
    'BASIS_GUARD': 20000,
    'ENUMERATION_BUDGET': 200000,
    'DEFAULT_SEED': 0,
}
