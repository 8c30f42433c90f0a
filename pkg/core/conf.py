"""Access to the QWEIGHT settings block with built-in fallbacks."""
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DATA_DIR = Path(__file__).resolve().parent / 'data'

DEFAULTS = {
    'DISTANCE_MAX_N': 14,
    'DISTANCE_MAX_WEIGHT': 8,
    'GROUP_MAX_RANK': 24,
    'HISTOGRAM_MAX_CENTERS': 30,
    'MWSG_MAX_RANK': 20,
    'MLD_MAX_N': 14,
    'WEB_MAX_N': 11,
    'JOBS': 1,
    'EAGLE_GRAPH': DATA_DIR / 'eagle127.edges',
    'EAGLE_CENTERS': DATA_DIR / 'eagle_centers.txt',
    'CATALOG': DATA_DIR / 'catalog.json',
    'CATALOG_SHA256': '',
    'OVERRIDES': DATA_DIR / 'overrides.txt',
}


def budget(name):
    """Return a QWEIGHT setting, falling back to ``DEFAULTS``."""
    try:
        overrides = getattr(settings, 'QWEIGHT', {})
    except ImproperlyConfigured:
        overrides = {}
    return overrides.get(name, DEFAULTS[name])


def data_path(name):
    return Path(budget(name))
