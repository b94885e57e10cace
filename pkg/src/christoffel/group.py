"""The abelian groups GC_n(F_p) of invertible Christoffel matrices.

Over F_2 every element is ``a_m = C_m(1, 0)`` or ``b_m = C_m(0, 1)`` and
products follow a symbolic rule: writing ``m1*m2 = q*n + r``,
``x_{m1} y_{m2} = i^q(x*y)_r`` where ``*`` is the order-two law on
``{a, b}`` with identity ``a`` and ``i`` swaps the tags.  Other primes use
dense matrix products.
"""
from __future__ import annotations

import operator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import gcd, prod
from typing import Callable, Hashable, Iterable, Sequence

from .arith import factorize, invariant_factors, is_prime, phi, units
from .errors import NotApplicable, NotClosed, NotFound, SizeMismatch
from .lexarray import ChristoffelMatrix, dense_mul, from_dense, is_invertible, mul_closed
from .ring import F2, prime_field

_SWAP = {"a": "b", "b": "a"}


# -- symbolic F_2 elements ------------------------------------------------------------

@dataclass(frozen=True, order=True)
class GroupElementF2:
    """``a_m`` (tag ``"a"``, letters (1, 0)) or ``b_m`` (tag ``"b"``, letters (0, 1)) of size ``n``."""

    n: int
    m: int
    tag: str

    def __post_init__(self):
        if self.tag not in _SWAP:
            raise ValueError(f"tag must be 'a' or 'b', got {self.tag!r}")
        if self.n < 2 or not 1 <= self.m < self.n or gcd(self.m, self.n) != 1:
            raise ValueError(f"{self.m} is not a unit modulo {self.n}")
        # row sum over F_2: m for a_m, n - m for b_m
        if (self.m if self.tag == "a" else self.n - self.m) % 2 == 0:
            raise ValueError(f"{self.name} is not invertible over F_2 at n={self.n}")

    @property
    def matrix(self) -> ChristoffelMatrix:
        letters = (1, 0) if self.tag == "a" else (0, 1)
        return ChristoffelMatrix(F2, self.n, self.m, *letters)

    @property
    def name(self) -> str:
        return f"{self.tag}_{self.m}"

    def __str__(self) -> str:
        return self.name

    def __mul__(self, other: GroupElementF2) -> GroupElementF2:
        return f2_symbolic_mul(self, other)

    @classmethod
    def from_matrix(cls, x: ChristoffelMatrix) -> GroupElementF2:
        if x.ring != F2:
            raise ValueError(f"expected an F_2 matrix, got {x.ring}")
        return cls(x.n, x.m, "a" if x.a == 1 else "b")

    @classmethod
    def parse(cls, text: str, n: int) -> GroupElementF2:
        tag, _, m = text.partition("_")
        return cls(n, int(m), tag)


def identity(n: int) -> GroupElementF2:
    return GroupElementF2(n, 1, "a")


def f2_symbolic_mul(x: GroupElementF2, y: GroupElementF2) -> GroupElementF2:
    if x.n != y.n:
        raise SizeMismatch(f"sizes {x.n} and {y.n} differ")
    n = x.n
    if n % 2:
        # tags are forced by the type for odd n; the symbolic rule needs odd types
        return GroupElementF2.from_matrix(mul_closed(x.matrix, y.matrix))
    q, r = divmod(x.m * y.m, n)
    tag = "a" if x.tag == y.tag else "b"
    if q % 2:
        tag = _SWAP[tag]
    return GroupElementF2(n, r, tag)


def f2_elements(n: int) -> list[GroupElementF2]:
    """GC_n(F_2) as symbolic elements, ordered by type then tag."""
    out = []
    for m in units(n):
        for tag in "ab":
            letters = (1, 0) if tag == "a" else (0, 1)
            if is_invertible(ChristoffelMatrix(F2, n, m, *letters)):
                out.append(GroupElementF2(n, m, tag))
    return out


def element_name(g) -> str:
    if isinstance(g, GroupElementF2):
        return g.name
    return str(g)


# -- enumeration and generic finite abelian group machinery -----------------------------

def enumerate_gc(n: int, p: int) -> list[ChristoffelMatrix]:
    """All invertible ``C_m(a, b)`` over F_p; ``m`` ascending, then ``(a, b)`` lexicographic."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    field = prime_field(p)
    out = []
    for m in units(n):
        for a, b in product(range(p), repeat=2):
            if a != b and (m * a + (n - m) * b) % p:
                out.append(ChristoffelMatrix(field, n, m, a, b))
    return out


def dense_product(x: ChristoffelMatrix, y: ChristoffelMatrix) -> ChristoffelMatrix:
    """Group law on matrices computed densely and recognised back as a Christoffel matrix."""
    return from_dense(dense_mul(x.to_dense(), y.to_dense()))


def _default_mul(elements: Sequence) -> Callable:
    if elements and isinstance(elements[0], ChristoffelMatrix):
        return dense_product
    return operator.mul


def cayley_table(elements: Sequence[Hashable], mul: Callable | None = None) -> list[list[int]]:
    """Index table ``t[i][j] = index(elements[i] * elements[j])``; raises NotClosed."""
    mul = mul or _default_mul(elements)
    index = {g: i for i, g in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("elements are not distinct")
    table = []
    for g in elements:
        row = []
        for h in elements:
            gh = mul(g, h)
            if gh not in index:
                raise NotClosed(f"{element_name(g)} * {element_name(h)} = {element_name(gh)} "
                                "falls outside the set")
            row.append(index[gh])
        table.append(row)
    return table


def _identity_index(table: list[list[int]]) -> int:
    for e, row in enumerate(table):
        if row[e] == e and row == list(range(len(table))):
            return e
    raise NotClosed("no identity element")


def _orders(table: list[list[int]], e: int) -> list[int]:
    out = []
    for g in range(len(table)):
        k, x = 1, g
        while x != e:
            x = table[x][g]
            k += 1
            if k > len(table):
                raise NotClosed("element of infinite order: not a group")
        out.append(k)
    return out


def _check_group(table: list[list[int]]) -> int:
    e = _identity_index(table)
    size = range(len(table))
    for i in size:
        if sorted(table[i]) != list(size):
            raise NotClosed("multiplication by an element is not a bijection")
        for j in size:
            if table[i][j] != table[j][i]:
                raise NotClosed("group is not abelian")
    return e


def _factors_of_table(table: list[list[int]]) -> list[int]:
    if len(table) == 1:
        return []
    e = _identity_index(table)
    orders = _orders(table, e)
    g = max(range(len(table)), key=orders.__getitem__)
    powers, x = [e], g
    while x != e:
        powers.append(x)
        x = table[x][g]
    coset_of = [-1] * len(table)
    reps = []
    for x in range(len(table)):
        if coset_of[x] < 0:
            for h in powers:
                coset_of[table[x][h]] = len(reps)
            reps.append(x)
    quotient = [[coset_of[table[u][v]] for v in reps] for u in reps]
    return _factors_of_table(quotient) + [orders[g]]


@dataclass(frozen=True)
class GroupStructure:
    """Finite abelian group type: invariant factors ``d_1 | d_2 | ...`` (empty for trivial)."""

    order: int
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        if any(d < 2 for d in factors):
            raise ValueError("invariant factors must be at least 2")
        if any(factors[i + 1] % factors[i] for i in range(len(factors) - 1)):
            raise ValueError(f"{list(factors)} is not a divisibility chain")
        if prod(factors) != self.order:
            raise ValueError(f"factors {list(factors)} do not multiply to {self.order}")

    @classmethod
    def from_factors(cls, factors: Iterable[int]) -> GroupStructure:
        """Normalise any list of cyclic orders into invariant-factor form."""
        factors = invariant_factors(factors)
        return cls(prod(factors), tuple(factors))

    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def count_divisible(self, q: int) -> int:
        return sum(1 for d in self.invariant_factors if d % q == 0)

    def embeds_in(self, host: GroupStructure) -> bool:
        """Subgroup criterion: for each prime power q, #factors divisible by q fit in the host."""
        for d in self.invariant_factors:
            for p, e in factorize(d).items():
                for j in range(1, e + 1):
                    if self.count_divisible(p**j) > host.count_divisible(p**j):
                        return False
        return True


def group_structure(elements: Sequence, mul: Callable | None = None) -> GroupStructure:
    """Invariant factors, by peeling off a maximal-order cyclic factor and recursing on the quotient."""
    table = cayley_table(elements, mul)
    _check_group(table)
    return GroupStructure(len(elements), tuple(_factors_of_table(table)))


def element_order(g, mul: Callable | None = None) -> int:
    mul = mul or _default_mul([g])
    k, x = 1, mul(g, g)
    while x != g:
        x = mul(x, g)
        k += 1
    return k


def subgroup_generated(gens: Sequence, mul: Callable | None = None) -> set:
    if not gens:
        raise ValueError("need at least one generator")
    mul = mul or _default_mul(gens)
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise SizeMismatch("generators of different sizes")
    found = set(gens)
    frontier = list(gens)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = mul(x, g)
            if y not in found:
                found.add(y)
                frontier.append(y)
    return found


# -- the F_2 predicted structure ----------------------------------------------------------

def type_homomorphism_check(n: int, p: int) -> bool:
    """The type map is a surjective homomorphism onto (Z/nZ)^x with kernel the type-1 elements."""
    elements = enumerate_gc(n, p)
    mul = _default_mul(elements)
    for x in elements:
        for y in elements:
            if mul(x, y).m != x.m * y.m % n:
                return False
    kernel = [x for x in elements if x.m == 1]
    if subgroup_generated(kernel, mul) != set(kernel):
        return False
    return {x.m for x in elements} == set(units(n)) and len(elements) == len(kernel) * phi(n)


def _two_part(n: int) -> tuple[int, int]:
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    return k, n


def psi(g: GroupElementF2) -> tuple[GroupElementF2, int]:
    """``x_m -> (i^q(x)_r, r')`` with ``m = q 2^k + r`` and ``r' = m mod n'`` for ``n = 2^k n'``."""
    k, odd = _two_part(g.n)
    if k == 0 or odd == 1:
        raise NotApplicable(f"n={g.n} must be even and not a power of 2")
    q, r = divmod(g.m, 2**k)
    tag = _SWAP[g.tag] if q % 2 else g.tag
    return GroupElementF2(2**k, r, tag), g.m % odd


def predicted_structure(n: int) -> GroupStructure:
    """GC_{2^k} contributes Z/2 x Z/2^(k-1); each odd p^e contributes Z/(p^(e-1)(p-1))."""
    k, _ = _two_part(n)
    cyclic = []
    if k >= 1:
        cyclic.append(2)
    if k >= 2:
        cyclic.append(2 ** (k - 1))
    for p, e in factorize(n).items():
        if p != 2:
            cyclic.append(p ** (e - 1) * (p - 1))
    return GroupStructure.from_factors(cyclic)


def gc_structure(n: int, p: int = 2) -> GroupStructure:
    if p == 2:
        return group_structure(f2_elements(n))
    return group_structure(enumerate_gc(n, p))


def verify_neven(n: int) -> bool:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    elements = [GroupElementF2.from_matrix(x) for x in enumerate_gc(n, 2)]
    return group_structure(elements) == predicted_structure(n)


def sweep_neven(ns: Iterable[int], workers: int | None = None) -> list[tuple[int, bool]]:
    """``verify_neven`` over many ``n``, optionally across processes; results in input order."""
    ns = list(ns)
    if workers and workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(zip(ns, pool.map(verify_neven, ns)))
    return [(n, verify_neven(n)) for n in ns]


def gauss_oddness_check(k_max: int) -> bool:
    """``3^(2^(k-2)) = q_k 2^k + 1`` with ``q_k`` odd for ``3 <= k <= k_max``."""
    if k_max < 3:
        raise ValueError("k_max must be at least 3")
    for k in range(3, k_max + 1):
        q, rem = divmod(3 ** (2 ** (k - 2)), 2**k)
        if rem != 1 or q % 2 == 0:
            return False
    return True


# -- faithful representations ------------------------------------------------------------

@dataclass(frozen=True)
class Representation:
    n: int
    generators: tuple[GroupElementF2, ...]
    elements: frozenset[GroupElementF2]
    structure: GroupStructure


def embed_structure(target: Sequence[int], elements: Sequence, mul: Callable = operator.mul,
                    unit=None):
    """Backtracking search for generators ``g_i`` of order ``target[i]`` spanning a direct product.

    Returns ``(generators, span)`` or ``None``.  ``unit`` defaults to ``a_1``.
    """
    orders = {g: element_order(g, mul) for g in elements}
    e = unit if unit is not None else identity(elements[0].n)

    def extend(chosen: list, span: set):
        depth = len(chosen)
        if depth == len(target):
            return chosen, span
        d = target[depth]
        for g in elements:
            if orders[g] != d or g in span:
                continue
            cyclic, x = [e], g
            while x != e:
                cyclic.append(x)
                x = mul(x, g)
            if any(x in span for x in cyclic[1:]):
                continue
            new_span = {mul(s, c) for s in span for c in cyclic}
            found = extend(chosen + [g], new_span)
            if found:
                return found
        return None

    return extend([], {e})


def find_representation(target, n_max: int = 100, odd_first: bool = True) -> Representation:
    """Smallest ``n`` (in scan order) with ``target`` inside GC_n(F_2), plus explicit generators.

    ``target`` is a :class:`GroupStructure` or a list of cyclic orders.  The
    scan visits odd ``n`` first when ``odd_first``, otherwise plain ascending.
    """
    if not isinstance(target, GroupStructure):
        target = GroupStructure.from_factors(target)
    if n_max > 10**4:
        raise ValueError("n_max is limited to 10^4")
    candidates = list(range(2, n_max + 1))
    if odd_first:
        candidates.sort(key=lambda n: (n % 2 == 0, n))
    wanted = tuple(reversed(target.invariant_factors))
    for n in candidates:
        if not target.embeds_in(predicted_structure(n)):
            continue
        found = embed_structure(wanted, f2_elements(n))
        if found is None:
            continue
        gens, span = found
        structure = group_structure(sorted(span))
        if structure != target:
            raise AssertionError(f"embedding at n={n} produced {structure}")
        return Representation(n, tuple(gens), frozenset(span), structure)
    raise NotFound(f"no n <= {n_max} has {list(target.invariant_factors)} in GC_n(F_2)")


def structure_generators(elements: Sequence[GroupElementF2]) -> tuple[GroupElementF2, ...]:
    """Generators realising the invariant factors of the whole group (largest first)."""
    structure = group_structure(elements)
    found = embed_structure(tuple(reversed(structure.invariant_factors)), elements)
    if found is None:
        raise NotClosed("no generating set matches the computed structure")
    return tuple(found[0])
