# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the dense oracle paths (see ``_pykernels`` for the reference)."""

from cpython.array cimport array, clone

cdef array _LL = array('q')


def matmul_mod(const long long[::1] x, const long long[::1] y, Py_ssize_t n,
               long long modulus):
    """Product of two residue matrices modulo ``modulus``."""
    cdef Py_ssize_t i, j, k
    cdef long long xik
    cdef array out = clone(_LL, n * n, True)
    cdef long long[::1] z = out
    # lazy reduction is safe while n * (modulus - 1)**2 fits in 63 bits
    cdef bint lazy = modulus < 3037000499 and (modulus - 1) * (modulus - 1) <= 9223372036854775807 // (n if n > 0 else 1)
    for i in range(n):
        for k in range(n):
            xik = x[i * n + k]
            if xik == 0:
                continue
            if lazy:
                for j in range(n):
                    z[i * n + j] += xik * y[k * n + j]
            else:
                for j in range(n):
                    z[i * n + j] = (z[i * n + j] + (xik * y[k * n + j]) % modulus) % modulus
    if lazy:
        for i in range(n * n):
            z[i] %= modulus
    return out.tolist()


def matmul_i64(const long long[::1] x, const long long[::1] y, Py_ssize_t n):
    """Integer product; callers guarantee the result fits in a signed 64-bit word."""
    cdef Py_ssize_t i, j, k
    cdef long long xik
    cdef array out = clone(_LL, n * n, True)
    cdef long long[::1] z = out
    for i in range(n):
        for k in range(n):
            xik = x[i * n + k]
            if xik == 0:
                continue
            for j in range(n):
                z[i * n + j] += xik * y[k * n + j]
    return out.tolist()


def christoffel_pattern(Py_ssize_t n, Py_ssize_t m):
    """1 where the Christoffel array of type ``m`` carries its first letter."""
    cdef bytearray buf = bytearray(n * n)
    cdef unsigned char[::1] view = buf
    cdef Py_ssize_t i, j, t
    for j in range(n):
        # (i - j*m) mod n < m  <=>  i in [j*m, j*m + m) mod n
        t = (j * m) % n
        for i in range(m):
            view[((t + i) % n) * n + j] = 1
    return bytes(buf)
