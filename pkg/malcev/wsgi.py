"""
WSGI config for the Malcev project.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'malcev.settings.development')

application = get_wsgi_application()
