from fractions import Fraction
from random import Random
from typing import List

import pytest
from hypothesis import strategies as st

from schurpos.exactmath import RationalMatrix
from schurpos.partitions import partitions_of


def partitions(min_size: int = 0, max_size: int = 7) -> st.SearchStrategy:
    """Partitions of a random size, uniformly among the partitions of that size."""
    return st.integers(min_value=min_size, max_value=max_size).flatmap(lambda k: st.sampled_from(partitions_of(k)))


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)


@st.composite
def rational_matrices(draw, n: int = 3) -> RationalMatrix:
    return RationalMatrix(n, n, draw(st.lists(rationals, min_size=n * n, max_size=n * n)))


def random_rational(rng: Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 6))


def random_invertible_2x2(rng: Random) -> RationalMatrix:
    while True:
        m = RationalMatrix(2, 2, [random_rational(rng) for _ in range(4)])
        if m.determinant():
            return m


def distinct_rationals(rng: Random, n: int) -> List[Fraction]:
    values: List[Fraction] = []
    while len(values) < n:
        v = random_rational(rng)
        if v not in values:
            values.append(v)
    return values


@pytest.fixture
def rng() -> Random:
    return Random(20190601)
