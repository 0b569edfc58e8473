"""Certified classification of biharmonic hypersurfaces."""

__version__ = "0.1.0"
