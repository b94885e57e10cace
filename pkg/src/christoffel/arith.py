"""Small elementary number theory helpers (desk-scale moduli)."""
from __future__ import annotations

from collections import Counter
from math import gcd

from .errors import NotCoprime


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation of ``n >= 1`` by trial division, ``{p: exponent}``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: Counter[int] = Counter()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] += 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] += 1
    return dict(sorted(out.items()))


def units(n: int) -> list[int]:
    """The residues ``1 <= m < n`` coprime to ``n``; for ``n == 1`` returns ``[0]``."""
    if n == 1:
        return [0]
    return [m for m in range(1, n) if gcd(m, n) == 1]


def phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def inverse_mod(m: int, n: int) -> int:
    if gcd(m, n) != 1:
        raise NotCoprime(f"{m} is not invertible modulo {n}")
    return pow(m, -1, n)


def order_of(m: int, n: int) -> int:
    """Multiplicative order of ``m`` in (Z/nZ)^x."""
    if n < 2 or gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) != 1")
    x, k = m % n, 1
    while x != 1:
        x = x * m % n
        k += 1
    return k


def permutation_sign(perm: list[int]) -> int:
    """Sign of a permutation of ``range(len(perm))`` via its cycle decomposition."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def invariant_factors(cyclic_orders) -> list[int]:
    """Invariant factors (ascending, each dividing the next) of a product of cyclic groups."""
    by_prime: dict[int, list[int]] = {}
    for d in cyclic_orders:
        if d < 1:
            raise ValueError(f"cyclic order must be positive, got {d}")
        for p, e in factorize(d).items():
            by_prime.setdefault(p, []).append(p**e)
    width = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * width
    for powers in by_prime.values():
        powers.sort(reverse=True)
        for slot, q in enumerate(powers):
            factors[width - 1 - slot] *= q
    return [d for d in factors if d > 1]
