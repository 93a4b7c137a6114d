import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'loopgrass.settings')
django.setup()
