"""Exact counting, verification, and rendering of Berg partitions for
hyperbolic automorphisms of the 2-torus."""

from .intmat import Mat2Z, NotHyperbolicError, NotUnimodularError
from .qfield import QuadNum, eigen_data

__all__ = [
    "Mat2Z",
    "NotHyperbolicError",
    "NotUnimodularError",
    "QuadNum",
    "eigen_data",
]
