"""Christoffel matrices: implicit arrays, the dense oracle and the closed forms.

``C_m(a, b)`` is the ``n x n`` lexicographic array of ``c_m(a, b)``.  Column
0 is ``m`` copies of ``a`` followed by ``b``'s and every column is the
previous one shifted down by ``m``, so entry ``(i, j)`` is ``a`` exactly
when ``(i - j*m) mod n < m``.

Products, inverses and determinants are computed from ``(n, m, a, b)``
alone; :class:`DenseMatrix` is the brute-force path they are checked
against.
"""
from __future__ import annotations

from array import array
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain
from math import gcd, lcm
from typing import Any, Sequence

from . import _kernels
from .arith import inverse_mod, order_of, permutation_sign
from .errors import (
    EqualLetters,
    NotChristoffel,
    NotCoprime,
    NotIntegralDomain,
    NotInvertible,
    NotPrimitive,
    RingMismatch,
    SizeMismatch,
)
from .ring import INTEGER, RATIONAL, Ring
from .words import ChristoffelWord, christoffel_word

__all__ = [
    "ChristoffelMatrix",
    "DenseMatrix",
    "annihilator_check",
    "constant_shift",
    "dense_identity",
    "dense_mul",
    "det_closed",
    "det_exact",
    "det_sign",
    "entry",
    "from_dense",
    "inverse",
    "is_invertible",
    "lex_array",
    "matrix_new",
    "mul_closed",
    "order_of",
    "to_dense",
]

_I64_MAX = (1 << 63) - 1
_KERNEL_MODULUS_MAX = 1 << 31


# -- dense matrices -------------------------------------------------------------------

@dataclass(frozen=True)
class DenseMatrix:
    """Explicit square matrix.  ``ring`` is ``None`` for symbolic (non-ring) letters."""

    ring: Ring | None
    rows: tuple[tuple, ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        if self.ring is not None:
            rows = tuple(tuple(self.ring(x) for x in r) for r in rows)
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.rows[i][j]

    def flat(self) -> list:
        return list(chain.from_iterable(self.rows))

    def is_zero(self) -> bool:
        zero = self.ring.zero
        return all(x == zero for r in self.rows for x in r)

    def __add__(self, other: DenseMatrix) -> DenseMatrix:
        _check_pair(self, other)
        add = self.ring.add
        return DenseMatrix(self.ring, [[add(x, y) for x, y in zip(r, s)]
                                       for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: DenseMatrix) -> DenseMatrix:
        _check_pair(self, other)
        sub = self.ring.sub
        return DenseMatrix(self.ring, [[sub(x, y) for x, y in zip(r, s)]
                                       for r, s in zip(self.rows, other.rows)])

    def __matmul__(self, other: DenseMatrix) -> DenseMatrix:
        return dense_mul(self, other)

    def scale(self, c) -> DenseMatrix:
        mul = self.ring.mul
        return DenseMatrix(self.ring, [[mul(c, x) for x in r] for r in self.rows])

    def format(self) -> str:
        fmt = self.ring.format_value if self.ring is not None else str
        return "\n".join(" ".join(fmt(x) for x in r) for r in self.rows)

    def to_json(self) -> dict:
        if self.ring is None:
            return {"ring": "symbolic", "n": self.n, "rows": [[str(x) for x in r] for r in self.rows]}
        conv = self.ring.to_json_value
        return {"ring": str(self.ring), "n": self.n,
                "rows": [[conv(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> DenseMatrix:
        if data["ring"] == "symbolic":
            return cls(None, data["rows"])
        ring = Ring.parse(data["ring"])
        rows = [[ring.from_json_value(x) for x in r] for r in data["rows"]]
        if len(rows) != data["n"]:
            raise ValueError("row count does not match n")
        return cls(ring, rows)


def _check_pair(x: DenseMatrix, y: DenseMatrix) -> None:
    if x.ring is None or y.ring is None:
        raise TypeError("symbolic matrices carry no arithmetic")
    if x.ring != y.ring:
        raise RingMismatch(f"rings {x.ring} and {y.ring} differ")
    if x.n != y.n:
        raise SizeMismatch(f"sizes {x.n} and {y.n} differ")


def dense_identity(ring: Ring, n: int) -> DenseMatrix:
    zero, one = ring.zero, ring.one
    return DenseMatrix(ring, [[one if i == j else zero for j in range(n)] for i in range(n)])


def _reshape(flat: Sequence, n: int) -> list[list]:
    return [flat[i:i + n] for i in range(0, n * n, n)]


def dense_mul(x: DenseMatrix, y: DenseMatrix) -> DenseMatrix:
    """Ordinary matrix product (the oracle for every closed form)."""
    _check_pair(x, y)
    ring, n = x.ring, x.n
    if ring.is_modular and ring.modulus < _KERNEL_MODULUS_MAX:
        flat = _kernels.matmul_mod(array("q", x.flat()), array("q", y.flat()), n, ring.modulus)
        return _trusted(ring, _reshape(flat, n))
    if ring.kind == INTEGER:
        flat = _int_product(x.flat(), y.flat(), n)
        if flat is not None:
            return _trusted(ring, _reshape(flat, n))
    elif ring.kind == RATIONAL:
        # clear denominators, multiply integer matrices, divide back
        fx, fy = x.flat(), y.flat()
        dx = lcm(*(v.denominator for v in fx))
        dy = lcm(*(v.denominator for v in fy))
        flat = _int_product([int(v * dx) for v in fx], [int(v * dy) for v in fy], n)
        if flat is not None:
            d = dx * dy
            return _trusted(ring, _reshape([Fraction(v, d) for v in flat], n))
    cols = list(zip(*y.rows))
    norm = ring.normalize
    rows = [[norm(sum(map(_mul, r, c))) for c in cols] for r in x.rows]
    return _trusted(ring, rows)


def _int_product(fx: list[int], fy: list[int], n: int) -> list[int] | None:
    """Kernel product of integer matrices, or ``None`` if it could overflow 64 bits."""
    bound_x = max(map(abs, fx), default=0)
    bound_y = max(map(abs, fy), default=0)
    if n * bound_x * bound_y > _I64_MAX:
        return None
    return _kernels.matmul_i64(array("q", fx), array("q", fy), n)


def _mul(u, v):
    return u * v


def _trusted(ring: Ring, rows) -> DenseMatrix:
    # rows already canonical: skip the coercion pass in __post_init__
    out = object.__new__(DenseMatrix)
    object.__setattr__(out, "ring", ring)
    object.__setattr__(out, "rows", tuple(map(tuple, rows)))
    return out


def det_exact(x: DenseMatrix) -> Any:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Residue rings are handled by lifting entries to ``0..N-1``, taking the
    integer determinant and reducing.
    """
    ring = x.ring
    if ring.kind == RATIONAL:
        return ring(_bareiss([list(r) for r in x.rows]))
    return ring(_bareiss([[ring.lift(v) for v in r] for r in x.rows]))


def _bareiss(a: list[list]) -> Any:
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0 * prev
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                q = row_i[j] * pivot - aik * row_k[j]
                row_i[j] = _exact_div(q, prev)
        prev = pivot
    return sign * a[n - 1][n - 1] if n else 1


def _exact_div(q, d):
    if isinstance(q, int) and isinstance(d, int):
        out, rem = divmod(q, d)
        if rem:
            raise ArithmeticError("inexact Bareiss division")
        return out
    return q / d


# -- Christoffel matrices -------------------------------------------------------------

@dataclass(frozen=True)
class ChristoffelMatrix:
    """Implicit ``C_m(a, b)`` of size ``n`` over ``ring``: O(1) storage and entry access."""

    ring: Ring
    n: int
    m: int
    a: Any
    b: Any

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"size must be at least 2, got {self.n}")
        if not 1 <= self.m <= self.n - 1 or gcd(self.m, self.n) != 1:
            raise NotCoprime(f"type {self.m} is not a unit modulo {self.n}")
        object.__setattr__(self, "a", self.ring(self.a))
        object.__setattr__(self, "b", self.ring(self.b))
        if self.a == self.b:
            raise EqualLetters(f"letters must differ in {self.ring}")

    @property
    def delta(self):
        return self.ring.sub(self.a, self.b)

    @property
    def sigma(self):
        """Row (and column) sum ``m*a + (n-m)*b``."""
        ring = self.ring
        return ring.add(ring.int_scale(self.m, self.a), ring.int_scale(self.n - self.m, self.b))

    @property
    def shift(self) -> int:
        """Each row is the previous one rotated right by ``m^-1 mod n``."""
        return inverse_mod(self.m, self.n)

    def entry(self, i: int, j: int):
        return self.a if (i - j * self.m) % self.n < self.m else self.b

    def word(self) -> ChristoffelWord:
        return christoffel_word(self.n, self.m, self.a, self.b)

    def to_dense(self) -> DenseMatrix:
        a, b, n = self.a, self.b, self.n
        pattern = _kernels.christoffel_pattern(n, self.m)
        return _trusted(self.ring, _reshape([a if t else b for t in pattern], n))

    def __matmul__(self, other: ChristoffelMatrix) -> ChristoffelMatrix:
        return mul_closed(self, other)

    def __str__(self) -> str:
        fmt = self.ring.format_value
        return f"C_{self.m}({fmt(self.a)},{fmt(self.b)})"

    def to_json(self) -> dict:
        conv = self.ring.to_json_value
        return {"ring": str(self.ring), "n": self.n, "m": self.m,
                "a": conv(self.a), "b": conv(self.b)}

    @classmethod
    def from_json(cls, data: dict) -> ChristoffelMatrix:
        ring = Ring.parse(data["ring"])
        return cls(ring, data["n"], data["m"],
                   ring.from_json_value(data["a"]), ring.from_json_value(data["b"]))


def matrix_new(ring: Ring, n: int, m: int, a, b) -> ChristoffelMatrix:
    return ChristoffelMatrix(ring, n, m, a, b)


def entry(matrix: ChristoffelMatrix, i: int, j: int):
    return matrix.entry(i, j)


def to_dense(matrix: ChristoffelMatrix) -> DenseMatrix:
    return matrix.to_dense()


def from_dense(x: DenseMatrix) -> ChristoffelMatrix:
    """Recognise a dense matrix as a Christoffel matrix via its column description."""
    col = [r[0] for r in x.rows]
    a = col[0]
    m = 0
    while m < x.n and col[m] == a:
        m += 1
    if m == x.n:
        raise NotChristoffel("first column is constant")
    try:
        candidate = ChristoffelMatrix(x.ring, x.n, m, a, col[m])
    except (NotCoprime, EqualLetters) as exc:
        raise NotChristoffel(str(exc)) from None
    if candidate.to_dense().rows != x.rows:
        raise NotChristoffel("columns are not successive shifts of the first")
    return candidate


def lex_array(w: Sequence, ring: Ring | None = None) -> DenseMatrix:
    """The ``n`` rotations of ``w`` sorted lexicographically, first letter of ``w`` smallest."""
    w = tuple(w)
    rotations = {w[k:] + w[:k] for k in range(len(w))}
    if len(rotations) != len(w):
        raise NotPrimitive(f"{''.join(map(str, w))!r} is a proper power")
    rank = {w[0]: 0}
    for x in w:
        rank.setdefault(x, len(rank))
    rows = sorted(rotations, key=lambda r: [rank[x] for x in r])
    return DenseMatrix(ring, rows)


def constant_shift(w: Sequence) -> int | None:
    """Shift ``p`` if each row of ``lex_array(w)`` is the previous rotated right by ``p``.

    Returns ``None`` when the shift is not constant.
    """
    rows = lex_array(w).rows
    n = len(rows)
    if n < 2:
        return None
    index = {rows[0][k:] + rows[0][:k]: k for k in range(n)}
    offsets = [index[r] for r in rows]
    p = (offsets[0] - offsets[1]) % n
    if all((offsets[i] - offsets[i + 1]) % n == p for i in range(n - 1)):
        return p
    return None


# -- closed forms ------------------------------------------------------------------

def _require_domain(ring: Ring, what: str) -> None:
    if not ring.is_integral_domain():
        raise NotIntegralDomain(f"{what} needs an integral domain, {ring} is not one")


def mul_closed(x: ChristoffelMatrix, y: ChristoffelMatrix) -> ChristoffelMatrix:
    """``C_{m1}(a1, b1) C_{m2}(a2, b2) = C_{m1 m2 mod n}(a3, b3)``.

    With ``r = ceil(m1 m2 / n)`` and ``s = floor(m1 m2 / n)``, ``a3`` and
    ``b3`` are the integer combinations ``t*a1a2 + (m1-t)*a1b2 + (m2-t)*b1a2
    + (n-m1-m2+t)*b1b2`` for ``t = r`` and ``t = s`` respectively.
    """
    if x.ring != y.ring:
        raise RingMismatch(f"rings {x.ring} and {y.ring} differ")
    if x.n != y.n:
        raise SizeMismatch(f"sizes {x.n} and {y.n} differ")
    ring = x.ring
    _require_domain(ring, "the closed-form product")
    n, m1, m2 = x.n, x.m, y.m
    s, m3 = divmod(m1 * m2, n)
    r = s + 1  # n never divides m1*m2
    aa, ab, ba, bb = x.a * y.a, x.a * y.b, x.b * y.a, x.b * y.b
    a3 = ring.normalize(r * aa + (m1 - r) * ab + (m2 - r) * ba + (n - m1 - m2 + r) * bb)
    b3 = ring.normalize(s * aa + (m1 - s) * ab + (m2 - s) * ba + (n - m1 - m2 + s) * bb)
    return ChristoffelMatrix(ring, n, m3, a3, b3)


def is_invertible(x: ChristoffelMatrix) -> bool:
    """Over an integral domain: ``sigma * delta`` is a unit (``sigma != 0`` over a field).

    Composite residue rings fall back to the exact determinant.
    """
    ring = x.ring
    if not ring.is_integral_domain():
        return ring.is_unit(det_exact(x.to_dense()))
    if ring.is_field():
        return x.sigma != ring.zero
    return ring.is_unit(ring.mul(x.sigma, x.delta))


def inverse(x: ChristoffelMatrix) -> ChristoffelMatrix:
    """``C_m(a, b)^-1 = C_{m^-1}(f t, -d t)`` with ``t = (fc - ed)^-1``.

    ``c, d, e, f`` come from letter counts of ``w = uv`` with ``|u| = m^-1``.
    """
    ring = x.ring
    _require_domain(ring, "the closed-form inverse")
    if not is_invertible(x):
        raise NotInvertible(f"{x} (n={x.n}) is not invertible over {ring}")
    p = x.shift
    letters = x.word().letters
    ua = letters[:p].count(x.a)
    va = letters[p:].count(x.a)
    ub, vb = p - ua, (x.n - p) - va
    a, b = x.a, x.b
    c = ring.normalize(ua * a + ub * b)
    d = ring.normalize((ua - 1) * a + (ub + 1) * b)
    e = ring.normalize(va * a + vb * b)
    f = ring.normalize((va + 1) * a + (vb - 1) * b)
    t = ring.unit_inverse(ring.normalize(f * c - e * d))
    return ChristoffelMatrix(ring, x.n, p, ring.mul(f, t), ring.neg(ring.mul(d, t)))


def det_sign(n: int, m: int) -> int:
    """Sign of ``det C_m(a, b) / (sigma * delta^(n-1))``.

    ``C_m(1, 0)`` is the consecutive-block circulant (determinant exactly
    ``m``) with its columns permuted by ``j -> j*m mod n``, so the sign is
    the parity of that permutation.
    """
    if gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) != 1")
    return permutation_sign([j * m % n for j in range(n)])


def det_closed(x: ChristoffelMatrix):
    ring = x.ring
    value = ring.mul(x.sigma, ring.pow(x.delta, x.n - 1))
    return value if det_sign(x.n, x.m) == 1 else ring.neg(value)


def annihilator_check(x: ChristoffelMatrix) -> bool:
    """``(A^k - delta^k I)(A - sigma I) == 0`` where ``k`` is the order of ``m``."""
    ring = x.ring
    _require_domain(ring, "the annihilator identity")
    k = order_of(x.m, x.n)
    a = x.to_dense()
    ident = dense_identity(ring, x.n)
    power = a
    for _ in range(k - 1):
        power = dense_mul(power, a)
    left = power - ident.scale(ring.pow(x.delta, k))
    right = a - ident.scale(x.sigma)
    return dense_mul(left, right).is_zero()
