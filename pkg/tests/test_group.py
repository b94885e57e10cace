from itertools import product
from math import gcd, prod

import pytest

from christoffel.arith import phi, units
from christoffel.errors import NotApplicable, NotClosed, NotFound, SizeMismatch
from christoffel.group import (
    GroupElementF2,
    GroupStructure,
    cayley_table,
    dense_product,
    element_order,
    embed_structure,
    enumerate_gc,
    f2_elements,
    find_representation,
    gauss_oddness_check,
    gc_structure,
    group_structure,
    identity,
    predicted_structure,
    psi,
    structure_generators,
    subgroup_generated,
    sweep_neven,
    type_homomorphism_check,
    verify_neven,
)
from christoffel.lexarray import ChristoffelMatrix, inverse
from christoffel.ring import F2, prime_field


def E(name, n):
    return GroupElementF2.parse(name, n)


def dense_f2(x, y):
    return GroupElementF2.from_matrix(dense_product(x.matrix, y.matrix))


def order_profile(elements, mul):
    """``{d: #{x : x^d = e}}``; for abelian groups this determines the structure."""
    orders = [element_order(g, mul) for g in elements]
    size = len(elements)
    return {d: sum(1 for k in orders if d % k == 0) for d in range(1, size + 1) if size % d == 0}


def profile_of(factors):
    size = prod(factors)
    return {d: prod(gcd(d, f) for f in factors) for d in range(1, size + 1) if size % d == 0}


# -- elements and products ---------------------------------------------------------------

def test_element_validation():
    with pytest.raises(ValueError):
        GroupElementF2(5, 2, "a")  # row sum 2 = 0 in F_2
    with pytest.raises(ValueError):
        GroupElementF2(6, 3, "a")
    with pytest.raises(ValueError):
        GroupElementF2(5, 1, "c")
    assert str(E("b_2", 3)) == "b_2"


def test_symbolic_examples():
    assert E("a_3", 8) * E("a_3", 8) == E("b_1", 8)
    for n in (6, 8, 9, 12):
        for g in f2_elements(n):
            assert identity(n) * g == g
    with pytest.raises(SizeMismatch):
        E("a_1", 4) * E("a_1", 6)


def test_orders_of_involutions():
    assert element_order(identity(10)) == 1
    for n in range(4, 40, 2):
        for name in ("b_1", f"a_{n - 1}", f"b_{n - 1}"):
            assert element_order(E(name, n)) == 2
            assert element_order(E(name, n), dense_f2) == 2


def test_power_rule():
    # (a_m)^j has type m^j mod n and tag a iff floor(m^j / n) is even;
    # (b_m)^j = (a_m)^j (b_1)^j, so the two agree exactly for even j
    for n in range(4, 30, 2):
        for m in units(n):
            a, b = E(f"a_{m}", n), E(f"b_{m}", n)
            pa, pb = a, b
            for j in range(2, 8):
                pa, pb = dense_f2(pa, a), dense_f2(pb, b)
                q, r = divmod(m**j, n)
                assert pa == GroupElementF2(n, r, "ab"[q % 2])
                assert (pa == pb) == (j % 2 == 0)


@pytest.mark.parametrize("n", range(2, 41))
def test_symbolic_matches_dense(n):
    elements = f2_elements(n)
    for x, y in product(elements, repeat=2):
        assert x * y == dense_f2(x, y)


def test_enumerate_examples():
    assert [str(g) for g in f2_elements(8)] == ["a_1", "b_1", "a_3", "b_3", "a_5", "b_5", "a_7", "b_7"]
    gc8 = enumerate_gc(8, 2)
    assert [(x.m, x.a, x.b) for x in gc8] == [(m, a, b) for m in (1, 3, 5, 7) for a, b in ((0, 1), (1, 0))]
    for n in range(2, 129):
        assert len(enumerate_gc(n, 2)) == (2 * phi(n) if n % 2 == 0 else phi(n))
    with pytest.raises(ValueError):
        enumerate_gc(5, 4)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_gc_closed_commutative_and_inverse_closed(p):
    for n in range(2, 41):
        elements = enumerate_gc(n, p)
        members = set(elements)
        full = n <= (12 if p == 2 else 7)
        pairs = product(elements, repeat=2) if full else zip(elements, elements[1:] + elements[:1])
        for x, y in pairs:
            xy = dense_product(x, y)
            assert xy in members and xy == dense_product(y, x)
        for x in elements:
            assert inverse(x) in members


def test_cayley_table_rejects_non_closed_sets():
    with pytest.raises(NotClosed):
        cayley_table([E("a_1", 8), E("a_3", 8)])


# -- structure ------------------------------------------------------------------------------

def test_structure_examples():
    assert gc_structure(8) == GroupStructure(8, (2, 4))
    assert gc_structure(4).invariant_factors == (2, 2)
    assert gc_structure(7).invariant_factors == (6,)
    assert gc_structure(10, 3) == GroupStructure(16, (2, 2, 4))


def test_structure_validation():
    with pytest.raises(ValueError):
        GroupStructure(8, (4, 2))
    with pytest.raises(ValueError):
        GroupStructure(9, (2, 4))
    assert GroupStructure.from_factors([2, 3, 4]).invariant_factors == (2, 12)
    assert GroupStructure.from_factors([]).order == 1


@pytest.mark.parametrize("n", range(2, 61))
def test_group_structure_matches_order_profile_oracle(n):
    elements = f2_elements(n)
    structure = group_structure(elements)
    assert order_profile(elements, dense_f2) == profile_of(structure.invariant_factors)


def test_predicted_structure_pieces():
    assert predicted_structure(2).invariant_factors == (2,)
    assert predicted_structure(9).invariant_factors == (6,)
    assert predicted_structure(8).invariant_factors == (2, 4)
    assert predicted_structure(60).invariant_factors == (2, 2, 2, 4)


def test_neven_sweep_and_two_powers():
    assert all(ok for _, ok in sweep_neven(range(2, 129)))
    assert sweep_neven([8, 12], workers=2) == [(8, True), (12, True)]
    for k in range(2, 8):
        assert gc_structure(2**k).invariant_factors == (2, 2 ** (k - 1))
    assert verify_neven(8)


def test_odd_n_matches_unit_group():
    for n in range(3, 60, 2):
        assert gc_structure(n) == GroupStructure.from_factors(predicted_structure(n).invariant_factors)
        assert order_profile(f2_elements(n), dense_f2) == order_profile(units(n), lambda x, y: x * y % n)


def test_even_n_is_not_cyclic():
    for n in range(4, 60, 2):
        elements = f2_elements(n)
        involutions = [g for g in elements if element_order(g) == 2]
        assert len(involutions) >= 3
        assert len(group_structure(elements).invariant_factors) >= 2


@pytest.mark.parametrize("n,p", [(5, 2), (8, 2), (7, 3), (10, 3), (6, 5)])
def test_type_homomorphism(n, p):
    assert type_homomorphism_check(n, p)
    kernel = [x for x in enumerate_gc(n, p) if x.m == 1]
    if p == 2:
        assert len(kernel) == (1 if n % 2 else 2)


def test_gauss_oddness():
    assert divmod(3**2, 8) == (1, 1) and divmod(3**4, 16) == (5, 1)
    assert gauss_oddness_check(12)
    with pytest.raises(ValueError):
        gauss_oddness_check(2)


# -- psi -------------------------------------------------------------------------------------

def test_psi_examples():
    assert psi(identity(24)) == (identity(8), 1)
    for n in (7, 8, 16):
        with pytest.raises(NotApplicable):
            psi(identity(n))


def test_psi_n24_exhaustive():
    elements = f2_elements(24)
    assert len(elements) == 16
    images = {g: psi(g) for g in elements}
    assert set(images.values()) == set(product(f2_elements(8), units(3)))
    for x, y in product(elements, repeat=2):
        (u, r), (v, s) = images[x], images[y]
        assert images[x * y] == (u * v, r * s % 3)


# -- representations ---------------------------------------------------------------------------

def test_representation_examples():
    rep = find_representation([2])
    assert rep.n == 3 and [str(g) for g in rep.generators] == ["b_2"]
    rep = find_representation([4])
    assert rep.n == 5 and element_order(rep.generators[0]) == 4
    klein = find_representation([2, 2])
    assert klein.structure.invariant_factors == (2, 2)
    assert find_representation([2, 2], odd_first=False).n == 4


def test_representation_minimal_under_each_scan_order():
    for target in ([2], [3], [4], [2, 2], [2, 4], [6]):
        for odd_first in (True, False):
            rep = find_representation(target, n_max=100, odd_first=odd_first)
            order = sorted(range(2, 101), key=lambda n: (n % 2 == 0, n) if odd_first else n)
            earlier = order[:order.index(rep.n)]
            wanted = GroupStructure.from_factors(target)
            for n in earlier:
                # no subgroup of the right type: some prime-power count exceeds the host's
                host = f2_elements(n)
                assert order_profile_contains(host, wanted) is False, (target, n)


def order_profile_contains(elements, target):
    """Brute force: is there a subgroup of type ``target`` (generated by <= 2 elements)?"""
    size = target.order
    for gens in product(elements, repeat=len(target.invariant_factors)):
        span = subgroup_generated(list(gens))
        if len(span) == size and group_structure(sorted(span)) == target:
            return True
    return False


def test_representation_not_found():
    with pytest.raises(NotFound):
        find_representation([2, 2, 2, 2], n_max=20)
    with pytest.raises(ValueError):
        find_representation([2], n_max=10**5)


def test_embed_structure_over_f3():
    elements = enumerate_gc(6, 3)
    unit = ChristoffelMatrix(prime_field(3), 6, 1, 1, 0)
    gens, span = embed_structure((6, 2), elements, dense_product, unit)
    assert group_structure(sorted(span, key=str)).invariant_factors == (2, 6)
    assert embed_structure((4,), elements, dense_product, unit) is None


def test_structure_generators_generate():
    for n in (8, 12, 15, 20):
        elements = f2_elements(n)
        gens = structure_generators(elements)
        assert subgroup_generated(list(gens)) == set(elements)
        assert [element_order(g) for g in gens] == list(reversed(gc_structure(n).invariant_factors))


def test_from_matrix_requires_f2():
    with pytest.raises(ValueError):
        GroupElementF2.from_matrix(ChristoffelMatrix(prime_field(3), 5, 1, 1, 0))
    assert GroupElementF2.from_matrix(ChristoffelMatrix(F2, 5, 1, 1, 0)) == identity(5)
