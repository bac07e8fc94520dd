from collections import Counter
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from schurpos.exceptions import DomainError, NotSymmetricError
from schurpos.partitions import Partition, partitions_of
from schurpos.symfunc import (Basis, MonomialExpansion, SymPoly, add, evaluate, expand_in_variables, from_expansion,
                              is_schur_positive, monomial_sym, scale, schur_sym, schur_to_monomial,
                              to_monomial_basis, to_schur_basis)
from schurpos.tableaux import enumerate_ssyt, weight
from .conftest import partitions, rationals


def m(*terms):
    return sum_terms(Basis.MONOMIAL, terms)


def s(*terms):
    return sum_terms(Basis.SCHUR, terms)


def sum_terms(basis, terms):
    coeffs = {Partition(lam): c for c, lam in terms}
    return SymPoly(next(iter(coeffs)).size(), basis, coeffs)


def test_schur_to_monomial_degree_three():
    assert schur_to_monomial([2, 1]) == m((1, [2, 1]), (2, [1, 1, 1]))
    assert schur_to_monomial([3]) == m((1, [3]), (1, [2, 1]), (1, [1, 1, 1]))
    assert schur_to_monomial([1, 1, 1]) == monomial_sym([1, 1, 1])


def test_schur_31_in_two_variables():
    expansion = expand_in_variables(schur_to_monomial([3, 1]), 2)
    assert expansion.terms == {(3, 1): 1, (2, 2): 1, (1, 3): 1}


def test_schur_21_in_three_variables():
    expansion = expand_in_variables(schur_to_monomial([2, 1]), 3)
    assert len(expansion) == 7
    assert expansion.coefficient((1, 1, 1)) == 2
    assert all(expansion.coefficient(alpha) == 1 for alpha in [(2, 1, 0), (0, 1, 2), (1, 0, 2)])


def test_schur_expansion_drops_long_partitions():
    assert len(expand_in_variables(schur_to_monomial([1, 1, 1]), 2)) == 0
    assert evaluate(schur_to_monomial([1, 1, 1]), [1, 2]) == 0


def test_to_schur_basis_inverts_kostka():
    assert to_schur_basis(m((1, [2, 1]))) == s((1, [2, 1]), (-2, [1, 1, 1]))
    assert to_schur_basis(m((1, [3]))) == s((1, [3]), (-1, [2, 1]), (1, [1, 1, 1]))


@pytest.mark.parametrize("k", range(7))
def test_basis_change_round_trip(k):
    for lam in partitions_of(k):
        assert to_schur_basis(schur_to_monomial(lam)) == schur_sym(lam)
        assert to_monomial_basis(to_schur_basis(monomial_sym(lam))) == monomial_sym(lam)


def test_basis_changes_are_identity_on_their_target():
    f = schur_sym([2, 1])
    assert to_schur_basis(f) is f
    g = monomial_sym([2, 1])
    assert to_monomial_basis(g) is g


def test_is_schur_positive():
    assert not is_schur_positive(monomial_sym([2, 1]))
    assert not is_schur_positive(monomial_sym([3]))
    assert is_schur_positive(schur_to_monomial([2, 1]))
    assert is_schur_positive(m((1, [2, 1]), (2, [1, 1, 1])))
    assert is_schur_positive(SymPoly(3, Basis.MONOMIAL))
    assert is_schur_positive(s((Fraction(1, 3), [2, 1])))
    assert not is_schur_positive(s((-1, [3])))


@given(partitions(min_size=1, max_size=5), st.fractions(min_value=0, max_value=5))
def test_positive_multiples_of_schur_polynomials_are_positive(lam, c):
    assert is_schur_positive(scale(schur_to_monomial(lam), c))


def test_sympoly_validation():
    with pytest.raises(DomainError):
        SymPoly(3, Basis.MONOMIAL, {(2,): 1})
    with pytest.raises(DomainError):
        SymPoly.from_vector(3, Basis.MONOMIAL, [1, 2])
    assert SymPoly(3, Basis.MONOMIAL, {(2, 1): 0}).is_zero()
    f = SymPoly.from_vector(3, Basis.MONOMIAL, [0, 1, 2])
    assert f.items() == [((2, 1), 1), ((1, 1, 1), 2)]
    assert f.vector() == [0, 1, 2]
    assert f.coefficient_sum() == 3


def test_add_and_scale():
    f = monomial_sym([2, 1])
    assert add(f, f) == scale(f, 2)
    assert f + f - f == f
    assert (-f).coeff([2, 1]) == -1
    with pytest.raises(DomainError):
        add(f, monomial_sym([2]))
    with pytest.raises(DomainError):
        add(f, schur_sym([2, 1]))


def test_evaluate():
    assert evaluate(schur_to_monomial([2, 1]), [1, 2, 3]) == 60
    assert evaluate(schur_to_monomial([1]), [Fraction(1, 2), Fraction(1, 3)]) == Fraction(5, 6)
    assert evaluate(schur_sym([2]), [2, 3]) == 19


def test_monomial_expansion_symmetry():
    e = expand_in_variables(schur_to_monomial([2, 1]), 3)
    assert e.is_symmetric()
    assert e.permuted([2, 0, 1]) == e
    lopsided = MonomialExpansion(2, {(2, 0): 1})
    assert not lopsided.is_symmetric()
    assert lopsided.permuted([1, 0]).terms == {(0, 2): 1}
    with pytest.raises(DomainError):
        lopsided.permuted([0, 0])


def test_from_expansion():
    e = expand_in_variables(schur_to_monomial([2, 1]), 3)
    assert from_expansion(e) == schur_to_monomial([2, 1])
    # m_(1,1,1) vanishes in two variables
    assert from_expansion(expand_in_variables(schur_to_monomial([2, 1]), 2)) == monomial_sym([2, 1])
    with pytest.raises(NotSymmetricError):
        from_expansion(MonomialExpansion(2, {(2, 0): 1}))
    with pytest.raises(DomainError):
        from_expansion(MonomialExpansion(2, {(1, 0): 1, (0, 1): 1, (1, 1): 1}))
    with pytest.raises(DomainError):
        from_expansion(e, degree=4)


@given(partitions(min_size=1, max_size=5), st.lists(rationals, min_size=1, max_size=4))
def test_expansion_evaluation_agrees(lam, x):
    f = schur_to_monomial(lam)
    assert expand_in_variables(f, len(x)).evaluate(x) == evaluate(f, x)
    assert evaluate(f, x) == evaluate(f, list(reversed(x)))


@pytest.mark.parametrize("n", range(1, 5))
def test_schur_expansion_counts_tableau_weights(n):
    for k in range(1, 7):
        for lam in partitions_of(k):
            expected = Counter(weight(t) + (0,) * (n - len(weight(t))) for t in enumerate_ssyt(lam, n))
            assert expand_in_variables(schur_to_monomial(lam), n).terms == dict(expected)


@pytest.mark.parametrize("n", range(1, 5))
def test_expansions_are_fixed_by_every_permutation(n):
    for k in range(1, 7):
        for lam in partitions_of(k):
            e = expand_in_variables(schur_to_monomial(lam), n)
            assert all(e.permuted(sigma) == e for sigma in permutations(range(n)))
