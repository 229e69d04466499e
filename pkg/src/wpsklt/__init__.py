"""Exact tools for weighted projective hypersurfaces with extreme invariants."""

__version__ = "0.1.0"
