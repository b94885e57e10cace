"""Exact commutative rings.

Ring elements are plain Python values kept in canonical form: ``int`` for
the integers and for residues (reduced into ``0..N-1``), and
:class:`fractions.Fraction` for the rationals.  A :class:`Ring` carries the
operations, so equality of elements is ordinary ``==``.

>>> F5 = Ring.parse("fp:5")
>>> F5.int_scale(7, 2)
4
>>> Ring.parse("mod:6").unit_inverse(5)
5
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Union

from .arith import is_prime
from .errors import NotAUnit

Value = Union[int, Fraction]

INTEGER = "int"
RATIONAL = "rat"
MODN = "mod"
PRIME_FIELD = "fp"

_KINDS = (INTEGER, RATIONAL, MODN, PRIME_FIELD)
_RING_RE = re.compile(r"^(int|rat)$|^(mod|fp):(\d+)$")
_RAT_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


@dataclass(frozen=True)
class Ring:
    """Descriptor for one of Z, Q, Z/NZ or F_p."""

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind in (INTEGER, RATIONAL):
            if self.modulus is not None:
                raise ValueError(f"{self.kind} takes no modulus")
        else:
            if not isinstance(self.modulus, int) or self.modulus < 1:
                raise ValueError(f"modulus must be a positive integer, got {self.modulus!r}")
            if self.kind == PRIME_FIELD and not is_prime(self.modulus):
                raise ValueError(f"fp:{self.modulus}: modulus is not prime")

    # -- construction and naming -------------------------------------------

    @classmethod
    def parse(cls, text: str) -> Ring:
        """Parse ``int``, ``rat``, ``mod:N`` or ``fp:p``."""
        match = _RING_RE.match(text.strip())
        if not match:
            raise ValueError(f"bad ring {text!r}: expected int | rat | mod:N | fp:p")
        if match.group(1):
            return cls(match.group(1))
        return cls(match.group(2), int(match.group(3)))

    def __str__(self) -> str:
        if self.modulus is None:
            return self.kind
        return f"{self.kind}:{self.modulus}"

    @property
    def is_modular(self) -> bool:
        return self.modulus is not None

    def is_integral_domain(self) -> bool:
        if self.kind == MODN:
            return is_prime(self.modulus)
        return True

    def is_field(self) -> bool:
        return self.kind != INTEGER and self.is_integral_domain()

    # -- elements --------------------------------------------------------------

    @property
    def zero(self) -> Value:
        return Fraction(0) if self.kind == RATIONAL else 0

    @property
    def one(self) -> Value:
        return Fraction(1) if self.kind == RATIONAL else 1 % (self.modulus or 2)

    def __call__(self, x: Any) -> Value:
        """Coerce an int, Fraction or textual value into canonical form."""
        if isinstance(x, str):
            return self.parse_value(x)
        if isinstance(x, bool):
            x = int(x)
        if self.kind == RATIONAL:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                if self.kind == INTEGER:
                    raise ValueError(f"{x} is not an integer")
                return x.numerator * self.unit_inverse(x.denominator % self.modulus) % self.modulus
            x = x.numerator
        if not isinstance(x, int):
            raise TypeError(f"cannot coerce {type(x).__name__} into {self}")
        if self.modulus is not None:
            return x % self.modulus
        return x

    def normalize(self, x: Value) -> Value:
        """Canonical form of a raw Python-arithmetic result."""
        if self.modulus is not None:
            return x % self.modulus
        return x

    def elements(self) -> range:
        if self.modulus is None:
            raise ValueError(f"{self} is infinite")
        return range(self.modulus)

    def lift(self, x: Value) -> int:
        """Integer representative (``0..N-1`` for residues)."""
        if self.kind == RATIONAL:
            if x.denominator != 1:
                raise ValueError(f"{x} has no integer lift")
            return x.numerator
        return int(x)

    # -- arithmetic -------------------------------------------------------------

    def add(self, x: Value, y: Value) -> Value:
        return self.normalize(x + y)

    def sub(self, x: Value, y: Value) -> Value:
        return self.normalize(x - y)

    def mul(self, x: Value, y: Value) -> Value:
        return self.normalize(x * y)

    def neg(self, x: Value) -> Value:
        return self.normalize(-x)

    def pow(self, x: Value, k: int) -> Value:
        if k < 0:
            return self.pow(self.unit_inverse(x), -k)
        if self.modulus is not None:
            return pow(x, k, self.modulus)
        return x**k

    def int_scale(self, k: int, x: Value) -> Value:
        """Image of the integer ``k`` under Z -> R, times ``x``."""
        return self.normalize(k * x)

    def is_unit(self, x: Value) -> bool:
        if self.kind == INTEGER:
            return x in (1, -1)
        if self.kind == MODN:
            return gcd(x, self.modulus) == 1
        return x != 0

    def unit_inverse(self, x: Value) -> Value:
        if not self.is_unit(x):
            raise NotAUnit(f"{self.format_value(x)} is not a unit in {self}")
        if self.kind == INTEGER:
            return x
        if self.kind == RATIONAL:
            return 1 / x
        return pow(x, -1, self.modulus)

    # -- text and JSON ----------------------------------------------------------

    def parse_value(self, text: str) -> Value:
        match = _RAT_RE.match(text.strip())
        if not match:
            raise ValueError(f"bad value {text!r} for ring {self}")
        num, den = match.groups()
        if den is not None and self.kind != RATIONAL:
            raise ValueError(f"fractions are only allowed in rat, got {text!r}")
        if self.kind == RATIONAL:
            if den is not None and int(den) == 0:
                raise ValueError(f"zero denominator in {text!r}")
            return Fraction(int(num), int(den or 1))
        value = int(num)
        if self.modulus is not None and not 0 <= value < self.modulus:
            raise ValueError(f"{text!r} is not a residue in 0..{self.modulus - 1}")
        return value

    def format_value(self, x: Value) -> str:
        return str(x)

    def to_json_value(self, x: Value) -> int | str:
        if self.kind == RATIONAL:
            return str(x)
        return int(x)

    def from_json_value(self, x: int | str) -> Value:
        if isinstance(x, str):
            return self.parse_value(x)
        return self(x)


ZZ = Ring(INTEGER)
QQ = Ring(RATIONAL)


def mod(n: int) -> Ring:
    return Ring(MODN, n)


def prime_field(p: int) -> Ring:
    return Ring(PRIME_FIELD, p)


F2 = prime_field(2)
