"""Exact computations for holonomy algebras of quaternionic structures in signature (4,4)."""
__version__ = "0.1.0"

from .quaternion import Quaternion, QuatOpMatrix, q, I, J, K, ONE, ZERO
from .algebra import Subalgebra, catalog, get

__all__ = ["Quaternion", "QuatOpMatrix", "q", "I", "J", "K", "ONE", "ZERO", "Subalgebra", "catalog", "get"]
