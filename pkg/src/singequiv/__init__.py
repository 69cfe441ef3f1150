"""Exact homological invariants of finite-dimensional quiver algebras.

The package computes, over the rationals or a prime field:

* quotients of path algebras by relations (with certified nilpotency bounds),
* projective covers, syzygies, minimal resolutions, Tor and stable Hom,
* idempotent / hereditary / homological ideal certificates,
* the matrix-extension construction Gamma = [[A, M], [N, k]] and its
  "peeling" inverse,
* numerical shadows of singular equivalences: stabilized Hom-space
  dimensions in the singularity category, compared across a quotient map.

Everything is exact (no floating point); all values are immutable after
construction and all operations are pure functions.
"""

from .fields import QQ, GF, FieldSpec
from .linalg import Matrix, Subspace

__all__ = ["QQ", "GF", "FieldSpec", "Matrix", "Subspace"]

__version__ = "0.1.0"
