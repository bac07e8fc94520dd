from fractions import Fraction

import pytest

from schurpos.conegeom import (_count_block, _inverse_columns, _is_positive_dyadic, build_slice_basis, classify_point,
                               sample_positivity, schur_positivity_probability,
                               simplex_block, slice_vertices, slice_volume_ratio, slice_volumes)
from schurpos.exceptions import DomainError
from schurpos.partitions import Partition, partitions_of
from schurpos.symfunc import schur_to_monomial

SEED = 20190601

PROBABILITIES = {
    1: Fraction(1),
    2: Fraction(1, 2),
    3: Fraction(1, 9),
    4: Fraction(1, 560),
    5: Fraction(1, 480480),
    6: Fraction(1, 1027458432000),
    7: Fraction(1, 2465474364698304960000),
}


@pytest.mark.parametrize("k, expected", PROBABILITIES.items())
def test_probability_table(k, expected):
    assert schur_positivity_probability(k) == expected


@pytest.mark.parametrize("k", range(1, 7))
def test_slice_ratio_matches_probability(k):
    assert slice_volume_ratio(k) == schur_positivity_probability(k)


def test_degree_must_be_positive():
    with pytest.raises(DomainError):
        schur_positivity_probability(0)
    with pytest.raises(DomainError):
        build_slice_basis(-1)


def test_slice_basis_degree_three():
    basis = build_slice_basis(3)
    assert basis.origin == (1, 1, 1)
    assert basis.labels == ((3,), (2, 1))
    assert basis.dimension == 2
    assert basis.v_coordinates([2, 1]) == {Partition([2, 1]): Fraction(1, 3)}
    assert basis.v_coordinates([3]) == {Partition([3]): Fraction(1, 3), Partition([2, 1]): Fraction(1, 3)}


def test_slice_volumes_degree_three():
    assert slice_volumes(3) == (Fraction(1, 2), Fraction(1, 18))
    monomial, schur = slice_volumes(4)
    assert schur / monomial == Fraction(1, 560)


def test_slice_vertices_lie_on_the_slice():
    for k in range(1, 6):
        vertices = slice_vertices(k)
        assert all(v.coefficient_sum() == 1 for v in vertices)
        assert all(classify_point(k, v.vector()) for v in vertices)


def test_classify_point():
    assert not classify_point(3, [0, 1, 0])
    assert classify_point(3, [1, 1, 1])
    assert classify_point(3, [0, Fraction(1, 3), Fraction(2, 3)])
    assert not classify_point(3, [0, Fraction(1, 3), Fraction(1, 2)])


def test_simplex_block_points():
    points = simplex_block(3, SEED, 0, count=50)
    assert len(points) == 50
    assert all(sum(p) == 1 and min(p) >= 0 and len(p) == 3 for p in points)
    assert simplex_block(3, SEED, 0, count=50) == points
    assert simplex_block(3, SEED, 1, count=50) != points


def within_three_standard_errors(report, exact):
    assert report.exact == str(exact)
    assert abs(report.estimate - float(exact)) <= 3 * report.standard_error


def test_monte_carlo_degree_two():
    within_three_standard_errors(sample_positivity(2, 100000, SEED), Fraction(1, 2))


def test_monte_carlo_degree_three():
    report = sample_positivity(3, 100000, SEED)
    assert report.samples == 100000
    assert report.positive == round(report.estimate * 100000)
    within_three_standard_errors(report, Fraction(1, 9))


def test_monte_carlo_is_reproducible():
    first = sample_positivity(3, 10000, SEED)
    assert sample_positivity(3, 10000, SEED) == first
    assert sample_positivity(3, 10000, SEED, workers=2) == first


def test_monte_carlo_prefix_stability():
    # the first block does not depend on how many blocks follow
    small = sample_positivity(3, 4096, SEED)
    assert small.positive <= sample_positivity(3, 8192, SEED).positive


def test_sample_count_must_be_positive():
    with pytest.raises(DomainError):
        sample_positivity(3, 0, SEED)


@pytest.mark.slow
def test_monte_carlo_degree_four():
    report = sample_positivity(4, 1000000, SEED, workers=4)
    within_three_standard_errors(report, Fraction(1, 560))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_block_count_agrees_with_exact_classification(k):
    count = 2048
    exact = sum(classify_point(k, p) for p in simplex_block(k, SEED, 0, count=count))
    assert _count_block((k, SEED, 0, count)) == exact


@pytest.mark.parametrize("k", range(1, 6))
def test_dyadic_classifier_on_crafted_rows(k):
    columns = _inverse_columns(k)
    p = len(partitions_of(k))
    assert _is_positive_dyadic([0.0] * (p - 1) + [1.0], columns)
    assert _is_positive_dyadic([1.0] * p, columns)
    for lam in partitions_of(k):
        # the Schur vertex direction: scale invariance lets the integer Kostka row stand in
        vertex = [float(c) / 8 for c in schur_to_monomial(lam).vector()]
        assert _is_positive_dyadic(vertex, columns)
        assert classify_point(k, [Fraction(v) for v in vertex])


def test_dyadic_classifier_rejects_lone_monomials():
    columns = _inverse_columns(3)
    assert not _is_positive_dyadic([0.0, 1.0, 0.0], columns)
    assert not _is_positive_dyadic([0.5, 0.0, 0.0], columns)
    assert _is_positive_dyadic([0.5, 0.5, 0.5], columns)
