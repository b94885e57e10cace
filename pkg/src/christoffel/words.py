"""Christoffel words, central words and the duality involution.

A Christoffel word of length ``n`` and type ``m`` on letters ``(a, b)`` is
the Lyndon, cyclically balanced word with ``m`` copies of ``a``; its
letter ``j`` is ``a`` exactly when ``(-j*m) mod n < m``.

>>> str(christoffel_word(5, 2, "a", "b"))
'ababb'
>>> is_christoffel("ababb")
(2, 'a', 'b')
>>> str(word_mul("00101", "11110"))
'10100'
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from math import gcd
from typing import Any, Hashable, Sequence

from .errors import (
    EqualLetters,
    LengthMismatch,
    NotBinaryAlphabet,
    NotCentral,
    NotChristoffel,
    NotCoprime,
)


@dataclass(frozen=True)
class ChristoffelWord:
    """The word ``c_m(a, b)`` of length ``n``; ``(n, m, a, b)`` is the ground truth."""

    n: int
    m: int
    a: Hashable
    b: Hashable

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"length must be at least 2, got {self.n}")
        if not 1 <= self.m <= self.n - 1 or gcd(self.m, self.n) != 1:
            raise NotCoprime(f"type {self.m} is not a unit modulo {self.n}")
        if self.a == self.b:
            raise EqualLetters(f"letters must differ, got {self.a!r} twice")

    @property
    def letters(self) -> tuple:
        n, m, a, b = self.n, self.m, self.a, self.b
        return tuple(a if (-j * m) % n < m else b for j in range(n))

    def __str__(self) -> str:
        return "".join(map(str, self.letters))

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.letters)


def christoffel_word(n: int, m: int, a: Hashable, b: Hashable) -> ChristoffelWord:
    return ChristoffelWord(n, m, a, b)


def _rotations(w: Sequence) -> list[tuple]:
    w = tuple(w)
    return [w[k:] + w[:k] for k in range(len(w))]


def _ranked(w: Sequence, order: Sequence | None) -> tuple:
    if order is None:
        return tuple(w)
    rank = {letter: i for i, letter in enumerate(order)}
    return tuple(rank[x] for x in w)


def is_lyndon(w: Sequence, order: Sequence | None = None) -> bool:
    """True iff ``w`` is strictly smaller than each of its nontrivial rotations.

    ``order`` lists the alphabet from smallest to largest; by default the
    letters' natural ordering is used.
    """
    key = _ranked(w, order)
    return all(key < rot for rot in _rotations(key)[1:])


def is_cyclically_balanced(w: Sequence) -> bool:
    """Counts of each letter over circular factors of equal length differ by at most 1."""
    w = tuple(w)
    n = len(w)
    letters = set(w)
    if len(letters) == 2:
        letters.pop()  # the other letter's counts are length minus these
    for letter in letters:
        prefix = list(accumulate((1 if x == letter else 0 for x in w + w), initial=0))
        for length in range(1, n):
            counts = [prefix[i + length] - prefix[i] for i in range(n)]
            if max(counts) - min(counts) > 1:
                return False
    return True


def is_christoffel(w: Sequence) -> tuple[int, Any, Any] | None:
    """``(type, first letter, other letter)`` if ``w`` is a Christoffel word, else ``None``."""
    w = tuple(w)
    if len(w) < 2:
        return None
    alphabet = set(w)
    if len(alphabet) != 2:
        return None
    a = w[0]
    (b,) = alphabet - {a}
    m = w.count(a)
    if gcd(m, len(w)) != 1:
        return None
    if not is_lyndon(w, order=(a, b)) or not is_cyclically_balanced(w):
        return None
    return m, a, b


def reverse_identity_check(w: ChristoffelWord) -> bool:
    """The reverse of ``c_m(a, b)`` is ``c_{n-m}(b, a)``."""
    return w.letters[::-1] == christoffel_word(w.n, w.n - w.m, w.b, w.a).letters


# -- the product on binary Christoffel words --------------------------------------

_BITS = {"0": 0, "1": 1, 0: 0, 1: 1}


def _as_word(w) -> ChristoffelWord:
    """Binary Christoffel word from a string, letter sequence or ChristoffelWord."""
    if isinstance(w, ChristoffelWord):
        return w
    if not set(w) <= _BITS.keys():
        raise NotBinaryAlphabet(f"{_show(w)!r} is not over the alphabet {{0, 1}}")
    found = is_christoffel(w)
    if found is None:
        raise NotChristoffel(f"{_show(w)!r} is not a Christoffel word")
    return ChristoffelWord(len(w), *found)


def _show(w) -> str:
    return "".join(map(str, w))


def _bits(w: ChristoffelWord) -> tuple[int, int, type]:
    try:
        a, b = _BITS[w.a], _BITS[w.b]
    except KeyError:
        raise NotBinaryAlphabet(f"letters {w.a!r}, {w.b!r} are not 0/1") from None
    if isinstance(w.a, str) != isinstance(w.b, str):
        raise NotBinaryAlphabet("mixed str and int letters")
    return a, b, str if isinstance(w.a, str) else int


def _from_matrix(matrix, kind: type) -> ChristoffelWord:
    a, b = (str(matrix.a), str(matrix.b)) if kind is str else (matrix.a, matrix.b)
    return ChristoffelWord(matrix.n, matrix.m, a, b)


def word_mul(w1, w2) -> ChristoffelWord:
    """Product of two binary Christoffel words: first row of the F_2 matrix product.

    Accepts letter strings such as ``"00101"`` or :class:`ChristoffelWord`
    instances over ``{0, 1}``; letters of the result have the type of ``w1``'s.
    """
    from .lexarray import ChristoffelMatrix, mul_closed
    from .ring import F2

    u, v = _as_word(w1), _as_word(w2)
    if u.n != v.n:
        raise LengthMismatch(f"lengths {u.n} and {v.n} differ")
    a1, b1, kind = _bits(u)
    a2, b2, _ = _bits(v)
    product = mul_closed(ChristoffelMatrix(F2, u.n, u.m, a1, b1),
                         ChristoffelMatrix(F2, v.n, v.m, a2, b2))
    return _from_matrix(product, kind)


def is_central(c: Sequence) -> bool:
    """``c`` is a central word: ``1 c 0`` is a Christoffel word over {0, 1}."""
    letters = tuple(str(x) for x in c)
    if any(x not in "01" for x in letters):
        return False
    return letters == letters[::-1] and is_christoffel(("1",) + letters + ("0",)) is not None


def central_mul(c1: Sequence, c2: Sequence, embed: tuple[str, str] = ("1", "1")) -> str:
    """Product of two central words of equal length, as a 0/1 string.

    ``embed`` picks the first letter used to wrap each factor (``"1"`` wraps
    ``c`` as ``1 c 0``, ``"0"`` as ``0 c 1``); the result does not depend on it.
    """
    s1, s2 = _show(c1), _show(c2)
    if len(s1) != len(s2):
        raise LengthMismatch(f"central words of lengths {len(s1)} and {len(s2)}")
    for c in (s1, s2):
        if not is_central(c):
            raise NotCentral(f"{c!r} is not a central word")
    wrapped = []
    for c, first in zip((s1, s2), embed):
        other = "0" if first == "1" else "1"
        wrapped.append(first + c + other)
    return str(word_mul(*wrapped))[1:-1]


# -- duality -----------------------------------------------------------------------

def _swap(w: ChristoffelWord) -> ChristoffelWord:
    return ChristoffelWord(w.n, w.m, w.b, w.a)


def odd_representative(w) -> ChristoffelWord:
    """Member of ``w``'s letter-exchange class with an odd number of 1's.

    When both members qualify (``n`` even) the one beginning with 1 is taken.
    """
    w = _as_word(w)
    a, _, _ = _bits(w)
    ones = w.m if a == 1 else w.n - w.m
    other_ones = w.n - ones
    if ones % 2 == 1 and (other_ones % 2 == 0 or a == 1):
        return w
    return _swap(w)


def letter_class(w) -> frozenset[str]:
    """The letter-exchange class of a binary word, as a set of strings."""
    s = _show(w)
    return frozenset({s, s.translate(str.maketrans("01", "10"))})


def dual(w, representative: ChristoffelWord | None = None) -> ChristoffelWord:
    """First row of the F_2 inverse of ``w``'s odd representative (type ``m^-1 mod n``).

    ``representative`` overrides the tie-break and must lie in ``w``'s class
    with an odd number of 1's.
    """
    from .lexarray import ChristoffelMatrix, inverse
    from .ring import F2

    u = _as_word(w)
    _, _, kind = _bits(u)
    rep = odd_representative(u) if representative is None else _as_word(representative)
    a, b, _ = _bits(rep)
    return _from_matrix(inverse(ChristoffelMatrix(F2, rep.n, rep.m, a, b)), kind)
