"""
Django settings for the loopgrass project.

Only the pieces a command-line toolkit needs are configured: installed apps,
logging and the toolkit's own knobs. Every knob can be overridden from the
process environment or a ``.env`` file in the project root.
"""

from pathlib import Path
import os
from dotenv import load_dotenv

# Load environment variables from .env file without overriding process env vars
load_dotenv(override=False)

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: nothing here is served, but Django still wants a key.
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'loopgrass-local-only-key')

DEBUG = os.getenv("DJANGO_DEBUG", "False").lower() in ("1", "true", "yes")

ALLOWED_HOSTS = ['localhost']

# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'arith',
    'circle',
    'loops',
    'lattices',
    'beta',
    'strata',
    'ktheory',
    'cli',
]

# No persistence: every object is recomputed from its JSON payload.
DATABASES = {}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Django REST Framework settings
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
}

# Toolkit settings
LOOPGRASS_MAX_WINDOW = int(os.getenv('LOOPGRASS_MAX_WINDOW', '64'))
LOOPGRASS_DEFAULT_BITS = int(os.getenv('LOOPGRASS_DEFAULT_BITS', '64'))
LOOPGRASS_JOBS = int(os.getenv('LOOPGRASS_JOBS', '1'))
LOOPGRASS_LOG_LEVEL = os.getenv('LOOPGRASS_LOG_LEVEL', 'WARNING').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': LOOPGRASS_LOG_LEVEL,
            'propagate': False,
        }
        for app in ('arith', 'circle', 'loops', 'lattices', 'beta', 'strata', 'ktheory', 'cli')
    },
}
