from fractions import Fraction

import pytest
from hypothesis import given

from conftest import caterpillar_params
from tree_einstein.algebra import char_poly
from tree_einstein.quotient import (
    build_quotient,
    quotient_char_poly,
    sibling_spectrum,
    spectrum_factorization_check,
)
from tree_einstein.trees import CaterpillarParam


def test_layout_and_similarity():
    qm = build_quotient(CaterpillarParam((2, 0, 3)))
    assert qm.orbit_index == (("spine", 1), ("spine", 2), ("pendant", 1), ("pendant", 3))
    assert qm.spine_indices == [0, 1] and qm.pendant_indices == [2, 3]
    assert qm.H.is_symmetric()
    assert qm.check_similarity()
    assert qm.M[0, 2] == Fraction(2, 3)
    assert qm.M[2, 2] == -1
    assert qm.Q_squares[0, 2] == Fraction(2, 9)


def test_rejects_star():
    with pytest.raises(ValueError):
        build_quotient(CaterpillarParam((4,)))


def test_sibling_spectrum():
    assert sibling_spectrum(CaterpillarParam((3, 0, 1))) == [(-1 - Fraction(2, 4), 2)]
    assert sibling_spectrum(CaterpillarParam((5,))) == [(-1 - Fraction(2, 5), 4)]


@given(caterpillar_params(max_m=6, max_leaves=3))
def test_spectrum_factorization(a):
    assert spectrum_factorization_check(CaterpillarParam(a))


@given(caterpillar_params(max_m=10, max_leaves=6))
def test_recurrence_matches_hessenberg(a):
    p = CaterpillarParam(a)
    assert quotient_char_poly(p) == char_poly(build_quotient(p).M)


@given(caterpillar_params(max_m=7))
def test_h_is_congruent_to_symmetric_form(a):
    qm = build_quotient(CaterpillarParam(a))
    H, M = qm.H, qm.M
    for u in range(qm.dim):
        for v in range(qm.dim):
            assert H[u, v] == H[v, u]
            assert (H[u, v] == 0) == (M[u, v] == 0)
