"""Exact-arithmetic invariants of Legendrian fronts, Brieskorn spheres and
Stein handlebodies."""

from . import brieskorn, criteria, fronts, handlebody, linalg  # noqa: F401

__version__ = "0.1.0"
