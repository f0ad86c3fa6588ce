__version__ = '1.0.0'
__date__ = 'Oct 19, 2026'
