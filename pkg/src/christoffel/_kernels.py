"""Kernel backend selection: the compiled extension when built, else pure Python."""
from __future__ import annotations

try:
    from ._ckernels import christoffel_pattern, matmul_i64, matmul_mod
    BACKEND = "cython"
except ImportError:  # extension not built
    from ._pykernels import christoffel_pattern, matmul_i64, matmul_mod
    BACKEND = "python"

__all__ = ["BACKEND", "christoffel_pattern", "matmul_i64", "matmul_mod"]
