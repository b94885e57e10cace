"""Exact calculus of Christoffel words and their lexicographic arrays."""
from ._kernels import BACKEND
from .errors import ChristoffelError
from .group import (
    GroupElementF2,
    GroupStructure,
    element_order,
    enumerate_gc,
    f2_symbolic_mul,
    find_representation,
    gauss_oddness_check,
    group_structure,
    psi,
    subgroup_generated,
    type_homomorphism_check,
    verify_neven,
)
from .lexarray import (
    ChristoffelMatrix,
    DenseMatrix,
    annihilator_check,
    dense_mul,
    det_closed,
    det_exact,
    inverse,
    is_invertible,
    lex_array,
    matrix_new,
    mul_closed,
    order_of,
)
from .ring import F2, QQ, ZZ, Ring, mod, prime_field
from .words import (
    ChristoffelWord,
    central_mul,
    christoffel_word,
    dual,
    is_christoffel,
    is_cyclically_balanced,
    is_lyndon,
    reverse_identity_check,
    word_mul,
)

__version__ = "0.1.0"
