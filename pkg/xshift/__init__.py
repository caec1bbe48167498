"""Explanation-shift detection and performance-degradation quantification."""

__version__ = '0.1.0'
