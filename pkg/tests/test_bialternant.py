from fractions import Fraction

import pytest

from schurpos.bialternant import (alternant_matrix, bialternant_eval, bialternant_numerator, vandermonde,
                                  vandermonde_product)
from schurpos.exceptions import DomainError, SingularMatrixError
from schurpos.partitions import partitions_of
from schurpos.symfunc import evaluate, schur_to_monomial
from .conftest import distinct_rationals


def test_schur_21_at_123():
    assert bialternant_numerator([2, 1], [1, 2, 3]) == -120
    assert vandermonde([1, 2, 3]) == -2
    assert bialternant_eval([2, 1], [1, 2, 3]) == 60


def test_small_cases():
    assert bialternant_eval([], [Fraction(1, 2), 3]) == 1
    assert bialternant_eval([1], [5]) == 5
    assert bialternant_eval([1, 1], [2, 3]) == 6


def test_vandermonde_matches_product(rng):
    for n in range(6):
        x = distinct_rationals(rng, n)
        assert vandermonde(x) == vandermonde_product(x)


def test_alternant_matrix():
    assert alternant_matrix([2, 0], [3, 5]).to_lists() == [[9, 1], [25, 1]]
    with pytest.raises(DomainError):
        alternant_matrix([1], [1, 2])


def test_errors():
    with pytest.raises(DomainError):
        bialternant_eval([1, 1, 1], [1, 2])
    with pytest.raises(SingularMatrixError):
        bialternant_eval([2, 1], [1, 1, 2])


def test_agrees_with_tableau_expansion(rng):
    shapes = [lam for k in range(1, 8) for lam in partitions_of(k)]
    for _ in range(100):
        mu = rng.choice(shapes)
        n = len(mu) + rng.randint(0, 2)
        x = distinct_rationals(rng, n)
        value = bialternant_eval(mu, x)
        assert value == evaluate(schur_to_monomial(mu), x)
        shuffled = list(x)
        rng.shuffle(shuffled)
        assert bialternant_eval(mu, shuffled) == value
