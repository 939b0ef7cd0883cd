"""
LinTagLab - PoS-tag robustness of dependency-parsing linearizations
"""

__version__ = "0.1.0"
