"""
Django settings for weight_bounds project.

Generated by 'django-admin startproject' using Django 5.2.6.

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Quick-start development settings - unsuitable for production
# See https://docs.djangoproject.com/en/5.2/howto/deployment/checklist/

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'DJANGO_SECRET_KEY',
    'django-insecure-q7w$3b!k0v@x2m#n8r^t5y&u1i*o9p(a4s)d6f-g+h=j_l',
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get('DJANGO_DEBUG', '1') == '1'

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',
    'core',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'weight_bounds.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]

WSGI_APPLICATION = 'weight_bounds.wsgi.application'

# Database
# https://docs.djangoproject.com/en/5.2/ref/settings/#databases

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

# Static files (CSS, JavaScript, Images)
# https://docs.djangoproject.com/en/5.2/howto/static-files/

STATIC_URL = 'static/'
STATIC_ROOT = BASE_DIR / 'staticfiles'

# Default primary key field type
# https://docs.djangoproject.com/en/5.2/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Logging
# Progress of long computations goes to stderr so command output stays clean.

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'progress': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'progress',
        },
    },
    'loggers': {
        'core': {
            'handlers': ['console'],
            'level': os.environ.get('QWEIGHT_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
    },
}

# Weight bound computations

DATA_DIR = BASE_DIR / 'core' / 'data'

QWEIGHT = {
    # Brute-force distance search
    'DISTANCE_MAX_N': 14,
    'DISTANCE_MAX_WEIGHT': 8,
    # Enumeration of the full stabilizer group (2**rank elements)
    'GROUP_MAX_RANK': 24,
    # Support-union histogram without a subset-size cap
    'HISTOGRAM_MAX_CENTERS': 30,
    # Reduction deciders
    'MWSG_MAX_RANK': 20,
    'MLD_MAX_N': 14,
    # Largest n the lp-check endpoint computes a missing table for
    'WEB_MAX_N': 11,
    # Worker processes for table and catalog runs
    'JOBS': int(os.environ.get('QWEIGHT_JOBS', '1')),
    # Shipped assets
    'EAGLE_GRAPH': DATA_DIR / 'eagle127.edges',
    'EAGLE_CENTERS': DATA_DIR / 'eagle_centers.txt',
    'CATALOG': DATA_DIR / 'catalog.json',
    'CATALOG_SHA256': 'ff84831f136ad0f808a403a7c25dffabd7041800bda4bf8e5815827f47735584',
    'OVERRIDES': DATA_DIR / 'overrides.txt',
}
