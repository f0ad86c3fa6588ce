import sys
from . import homocat_config


def debug(where, msg):
    """print a DEBUG line to stderr when homocat_config.debug is set"""
    if homocat_config.debug:
        print(f"DEBUG {where}: {msg}", file=sys.stderr)


def warn(where, msg):
    print(f"WARNING {where}: {msg}", file=sys.stderr)
