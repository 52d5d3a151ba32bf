"""Valuative invariants of (a,b)-Catalan matroids in exact arithmetic."""

__version__ = "0.1.0"

from .exactalg import BiPoly, UniPoly, interpolate
from .invariants import FAMILIES, catalan_invariant, volume_catalan
from .matroid import catalan, catalan_matroid, schubert_from_r, uniform

__all__ = [
    "BiPoly",
    "UniPoly",
    "interpolate",
    "FAMILIES",
    "catalan_invariant",
    "volume_catalan",
    "catalan",
    "catalan_matroid",
    "schubert_from_r",
    "uniform",
]
