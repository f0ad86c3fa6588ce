import os
import yaml

""" homocat_config.py
    Run time settings for homocat. Other modules read the module attributes:

        from . import homocat_config
        workers = homocat_config.threads

    Defaults are overridden by a YAML file (HOMOCAT_CONFIG, else ./homocat.yml)
    and then by the environment (HOMOCAT_THREADS, HOMOCAT_DEBUG).
"""

# worker processes for the pairwise Ext scans and lcm lattice checks
threads = 1
debug = False
# largest Weyl group parab will enumerate
weyl_budget = 50000
output_format = 'json'
# bidegree bound for the Eagon-Northcott exactness audit
audit_bidegree = 3
# y-degrees audited past d+n by the degenerate Beilinson checks
hilbert_slack = 2

_int_keys = ('threads', 'weyl_budget', 'audit_bidegree', 'hilbert_slack')
_formats = ('json', 'tsv', 'text')


def set_value(key, value):
    g = globals()
    if key in _int_keys:
        try:
            value = int(value)
        except (TypeError, ValueError):
            raise ValueError(f"config key {key}: expected an integer, got {value!r}")
        if value < 1:
            raise ValueError(f"config key {key}: must be positive, got {value}")
    elif key == 'debug':
        if isinstance(value, str):
            value = value.strip().lower() in ('1', 'true', 'yes', 'on')
        value = bool(value)
    elif key == 'output_format':
        if value not in _formats:
            raise ValueError(f"config key output_format: one of {_formats}, got {value!r}")
    else:
        raise ValueError(f"unknown config key: {key}")
    g[key] = value


def load(path):
    """apply settings from a YAML file; unknown keys are rejected"""
    with open(path, 'r') as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ValueError(f"config file {path}: expected a mapping at top level")
    for key, value in data.items():
        set_value(key, value)


def load_environment():
    if os.environ.get('HOMOCAT_THREADS'):
        set_value('threads', os.environ['HOMOCAT_THREADS'])
    if os.environ.get('HOMOCAT_DEBUG'):
        set_value('debug', os.environ['HOMOCAT_DEBUG'])


def settings():
    return {'threads': threads, 'debug': debug, 'weyl_budget': weyl_budget,
            'output_format': output_format, 'audit_bidegree': audit_bidegree,
            'hilbert_slack': hilbert_slack}


_path = os.environ.get('HOMOCAT_CONFIG')
if _path:
    load(_path)
elif os.access('homocat.yml', os.R_OK):
    load('homocat.yml')
load_environment()
