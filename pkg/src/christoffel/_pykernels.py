"""Pure-Python kernels; same signatures and results as the compiled ``_ckernels``.

Matrices are flat row-major sequences of length ``n * n``.  The compiled
versions need int64 buffers such as ``array('q', ...)``; these accept any
sequence of ints.
"""
from __future__ import annotations


def matmul_mod(x, y, n: int, modulus: int) -> list[int]:
    """Product of two residue matrices modulo ``modulus``."""
    cols = [y[j::n] for j in range(n)]
    out = []
    for i in range(0, n * n, n):
        row = x[i:i + n]
        out.extend(sum(map(int.__mul__, row, col)) % modulus for col in cols)
    return out


def matmul_i64(x, y, n: int) -> list[int]:
    """Integer product; callers guarantee the result fits in a signed 64-bit word."""
    cols = [y[j::n] for j in range(n)]
    out = []
    for i in range(0, n * n, n):
        row = x[i:i + n]
        out.extend(sum(map(int.__mul__, row, col)) for col in cols)
    return out


def christoffel_pattern(n: int, m: int) -> bytes:
    """1 where the Christoffel array of type ``m`` carries its first letter."""
    return bytes(1 if (i - j * m) % n < m else 0 for i in range(n) for j in range(n))
