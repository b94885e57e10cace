"""Independent brute-force oracles.  Nothing here imports the package."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``a*x + b*y = g = gcd(a, b)``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def naive_matmul(x, y, reduce=lambda v: v):
    n = len(x)
    return [[reduce(sum(x[i][k] * y[k][j] for k in range(n))) for j in range(n)]
            for i in range(n)]


def inverse_mod_p(rows, p: int):
    """Gauss-Jordan inverse over F_p, or ``None`` if singular."""
    n = len(rows)
    a = [[v % p for v in r] + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col]), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = pow(a[col][col], p - 2, p)
        a[col] = [v * inv % p for v in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [(v - f * w) % p for v, w in zip(a[i], a[col])]
    return [r[n:] for r in a]


def inverse_rational(rows):
    n = len(rows)
    a = [[Fraction(v) for v in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col]), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [v - f * w for v, w in zip(a[i], a[col])]
    return [r[n:] for r in a]


def cofactor_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def leibniz_sign(perm) -> int:
    inversions = sum(1 for i, j in combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def brute_christoffel_words(n: int) -> set[str]:
    """All Christoffel words of length ``n`` over {0, 1}, by definition alone.

    Lyndon (strictly least rotation under the order first letter < other)
    and cyclically balanced; no closed form involved.
    """
    found = set()
    for letters in product("01", repeat=n):
        w = "".join(letters)
        if len(set(w)) != 2:
            continue
        first = w[0]
        key = w.translate(str.maketrans({first: "0", "01"[first == "0"]: "1"}))
        if not all(key < key[k:] + key[:k] for k in range(1, n)):
            continue
        doubled = w + w
        balanced = all(
            max(c) - min(c) <= 1
            for length in range(1, n)
            for c in [[doubled[i:i + length].count(first) for i in range(n)]]
        )
        if balanced:
            found.add(w)
    return found


def sorted_conjugates(w: str) -> list[str]:
    first = w[0]
    other = next(c for c in w if c != first)
    key = {first: 0, other: 1}
    return sorted({w[k:] + w[:k] for k in range(len(w))}, key=lambda r: [key[c] for c in r])


def rotation_permutations(n: int):
    return permutations(range(n))
