from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rational_matrices, small_fractions
from tree_einstein.algebra import (
    Polynomial,
    RationalMatrix,
    SingularBlockError,
    SturmChain,
    char_poly,
    count_roots_above,
    count_roots_positive,
    fraction_free_det,
    schur_complement,
    solve,
    square_free_part,
    zero_multiplicity,
)


def leibniz_det(rows):
    """Permutation-sum determinant, only for tiny matrices."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1) ** inv
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    out = Fraction(0)
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            out += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return out


def test_polynomial_arithmetic():
    p = Polynomial.from_roots([1, 2])
    assert p.coeffs == (2, -3, 1)
    q, r = divmod(Polynomial([1, 0, 0, 1]), Polynomial([1, 1]))
    assert r.is_zero() and q == Polynomial([1, -1, 1])
    assert Polynomial([0, 0, 0]).degree == -1
    assert p.shift(1) == Polynomial.from_roots([0, 1])
    assert p.derivative() == Polynomial([-3, 2])


def test_zero_multiplicity():
    assert zero_multiplicity(Polynomial.from_roots([0, 0, 3])) == 2
    assert zero_multiplicity(Polynomial([5])) == 0
    with pytest.raises(ValueError):
        zero_multiplicity(Polynomial([]))


def test_sturm_counts_known_roots():
    p = Polynomial.from_roots([-3, Fraction(-1, 2), 0, 0, Fraction(1, 7), 4, 4])
    assert count_roots_positive(p) == 2
    assert SturmChain.of(p).count_roots(-10, 10) == 5
    assert count_roots_above(p, Fraction(1, 7)) == 1
    assert count_roots_positive(Polynomial([1, 0, 1])) == 0  # x^2 + 1


@given(st.lists(small_fractions(), min_size=1, max_size=6), small_fractions())
def test_sturm_invariant_under_shift(roots, c):
    p = Polynomial.from_roots(roots)
    distinct = set(roots)
    assert count_roots_above(p, c) == sum(1 for r in distinct if r > c)
    q = p.shift(c)
    assert count_roots_positive(q) == sum(1 for r in distinct if r - c > 0)


@given(st.lists(small_fractions(), min_size=1, max_size=6))
def test_sturm_chain_ends_in_nonzero_constant(roots):
    sf = square_free_part(Polynomial.from_roots(roots))
    chain = SturmChain.of(sf)
    assert chain.polys[-1].degree == 0
    assert sf.degree == len(set(roots))


def test_char_poly_examples():
    assert char_poly(RationalMatrix([])) == Polynomial([1])
    M = RationalMatrix([[2, 1], [1, 2]])
    assert char_poly(M) == Polynomial.from_roots([1, 3])


@given(rational_matrices(max_n=5), small_fractions())
def test_char_poly_matches_determinant(M, lam):
    n = M.order
    shifted = RationalMatrix.identity(n).scaled(lam) - M
    assert char_poly(M)(lam) == fraction_free_det(shifted)


@given(rational_matrices(max_n=4))
def test_bareiss_against_leibniz(M):
    assert fraction_free_det(M) == leibniz_det(M.rows) == cofactor_det(M.rows)


@given(rational_matrices(min_n=2, max_n=5, symmetric=True), st.data())
def test_inertia_additivity(M, data):
    n = M.order
    k = data.draw(st.integers(1, n - 1))
    elim = list(range(k, n))
    D = M.principal(elim)
    if fraction_free_det(D) == 0:
        return

    def counts(A):
        # (zero, positive) eigenvalue counts with multiplicity; peel one copy of every root per pass
        chi = char_poly(A)
        z = zero_multiplicity(chi)
        pos = 0
        g = chi
        while g.degree > 0:
            pos += count_roots_positive(g)
            g = g // square_free_part(g)
        return z, pos

    S = schur_complement(M, range(k))
    zM, pM = counts(M)
    zD, pD = counts(D)
    zS, pS = counts(S)
    assert zM + pM == (zD + pD) + (zS + pS)
    assert pM == pD + pS


def test_schur_complement_2x2():
    M = RationalMatrix([[3, 2], [2, 5]])
    assert schur_complement(M, [0]) == RationalMatrix([[Fraction(3) - Fraction(4, 5)]])


def test_singular_block_is_reported():
    M = RationalMatrix([[1, 1, 0], [1, 0, 0], [0, 0, 0]])
    with pytest.raises(SingularBlockError):
        schur_complement(M, [0])
    with pytest.raises(SingularBlockError):
        solve([[1, 2], [2, 4]], [[1], [0]])


def test_leading_minors_and_quadratic_form():
    M = RationalMatrix([[2, 1, 0], [1, 2, 1], [0, 1, 2]])
    assert M.leading_minors() == [2, 3, 4]
    assert M.quadratic_form([1, 0, -1]) == 4
