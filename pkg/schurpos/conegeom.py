import logging
import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .exactmath import RationalMatrix, Scalar, determinant
from .exceptions import DomainError
from .kostka import inverse_kostka_matrix, k_lambda
from .models import MonteCarloReport
from .partitions import Partition, partitions_of
from .symfunc import Basis, SymPoly, is_schur_positive, scale, schur_to_monomial

logger = logging.getLogger(__name__)

BLOCK_SIZE: int = 4096
"""Samples drawn from one random stream. Part of the reproducibility key, do not tune per run."""


def _check_degree(k: int) -> None:
    if k < 1:
        raise DomainError(f"degree must be at least 1, got {k}")


def schur_positivity_probability(k: int) -> Fraction:
    """Exact probability ``Π_{λ⊢k} 1/k_λ`` that a random nonnegative degree-``k`` polynomial is Schur positive."""
    _check_degree(k)
    result = Fraction(1)
    for lam in partitions_of(k):
        result /= k_lambda(lam)
    return result


class SliceBasis:
    """Coordinates for the coefficient-sum-1 slices of the monomial and Schur-positive cones.

    The origin is ``m_(1^k)`` (equal to ``s_(1^k)``). For each other ``λ ⊢ k``, in
    canonical order, the ``e``-vector is ``m_λ - m_(1^k)`` and the ``v``-vector is
    ``(1/k_λ)s_λ - s_(1^k)``.

    Attributes:
        degree (`int`): The degree ``k``.
        labels (`Tuple[Partition, ...]`): The partitions indexing the vectors (all but ``(1^k)``).
        origin (:class:`Partition`): ``(1^k)``.
        e_vectors (:class:`RationalMatrix`): One row per label, monomial coordinates.
        v_monomial (:class:`RationalMatrix`): One row per label, monomial coordinates.
        v_vectors (:class:`RationalMatrix`): One row per label, coordinates in the ``e``-basis.
    """

    __slots__ = ("degree", "labels", "origin", "e_vectors", "v_monomial", "v_vectors")

    def __init__(self, degree: int, labels: Tuple[Partition, ...], origin: Partition,
                 e_vectors: RationalMatrix, v_monomial: RationalMatrix, v_vectors: RationalMatrix) -> None:
        self.degree = degree
        self.labels = labels
        self.origin = origin
        self.e_vectors = e_vectors
        self.v_monomial = v_monomial
        self.v_vectors = v_vectors

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(degree={self.degree!r}, dimension={self.dimension})"

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def v_coordinates(self, lam: Sequence[int]) -> Dict[Partition, Fraction]:
        """Nonzero ``e``-basis coordinates of the ``v``-vector labelled ``lam``."""
        row = self.v_vectors.row(self.labels.index(Partition(lam)))
        return {label: c for label, c in zip(self.labels, row) if c}


def build_slice_basis(k: int) -> SliceBasis:
    _check_degree(k)
    order = partitions_of(k)
    p = len(order)
    labels = tuple(order[:-1])
    origin = order[-1]
    e_rows = [[int(j == i) - int(j == p - 1) for j in range(p)] for i in range(p - 1)]
    v_rows = []
    for lam in labels:
        # (1/k_λ)s_λ - s_(1^k) in monomial coordinates; s_(1^k) = m_(1^k)
        vertex = scale(schur_to_monomial(lam), Fraction(1, k_lambda(lam))).vector()
        vertex[-1] -= 1
        v_rows.append(vertex)
    # a vector with coefficient sum 0 has e-coordinates equal to its first p-1 monomial ones
    v_e = [row[:-1] for row in v_rows]
    return SliceBasis(
        degree=k,
        labels=labels,
        origin=origin,
        e_vectors=RationalMatrix(p - 1, p, (e for row in e_rows for e in row)),
        v_monomial=RationalMatrix(p - 1, p, (e for row in v_rows for e in row)),
        v_vectors=RationalMatrix(p - 1, p - 1, (e for row in v_e for e in row)),
    )


def _free_coordinates(m: RationalMatrix) -> RationalMatrix:
    # drop the origin column, which the coefficient-sum constraint determines
    return RationalMatrix(m.rows, m.cols - 1, (e for row in m.iter_rows() for e in row[:-1]))


def slice_volume_ratio(k: int) -> Fraction:
    """``|det V| / |det E|`` for the slice basis of degree ``k``.

    Equals :func:`schur_positivity_probability`. The ``1/d!`` simplex factor cancels and is
    left out; ``k = 1`` gives empty determinants and the ratio 1.
    """
    basis = build_slice_basis(k)
    det_e = determinant(_free_coordinates(basis.e_vectors))
    det_v = determinant(_free_coordinates(basis.v_monomial))
    return abs(det_v) / abs(det_e)


def slice_volumes(k: int) -> Tuple[Fraction, Fraction]:
    """Simplex volumes ``(vol M_slice, vol S_slice)`` in the free monomial coordinates.

    Degree 3 gives ``(1/2, 1/18)``.
    """
    basis = build_slice_basis(k)
    d = basis.dimension
    volume = Fraction(1, math.factorial(d))
    det_e = determinant(_free_coordinates(basis.e_vectors))
    det_v = determinant(_free_coordinates(basis.v_monomial))
    return volume * abs(det_e), volume * abs(det_v)


def slice_vertices(k: int) -> List[SymPoly]:
    """The vertices ``(1/k_λ)s_λ`` of the Schur-positive slice, in the monomial basis."""
    _check_degree(k)
    return [scale(schur_to_monomial(lam), Fraction(1, k_lambda(lam))) for lam in partitions_of(k)]


def classify_point(k: int, coefficients: Sequence[Scalar]) -> bool:
    """Exact Schur-positivity test of the monomial coefficient vector ``coefficients``."""
    return is_schur_positive(SymPoly.from_vector(k, Basis.MONOMIAL, coefficients))


def _inverse_columns(k: int) -> List[List[Tuple[int, int]]]:
    inverse = inverse_kostka_matrix(k)
    return [
        [(i, int(inverse[i, j])) for i in range(inverse.rows) if inverse[i, j]]
        for j in range(inverse.cols)
    ]


def _is_positive_dyadic(row: Sequence[float], columns: List[List[Tuple[int, int]]]) -> bool:
    # floats are dyadic rationals: bring them to integers over one power-of-two denominator
    ratios = [v.as_integer_ratio() for v in row]
    common = max(d for _, d in ratios)
    scaled = [n * (common // d) for n, d in ratios]
    return all(sum(scaled[i] * c for i, c in column) >= 0 for column in columns)


def _block_stream(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed % 2 ** 64, block])))


def _count_block(task: Tuple[int, int, int, int]) -> int:
    """Number of positive samples in one block; runs in worker processes."""
    k, seed, block, count = task
    columns = _inverse_columns(k)
    draws = _block_stream(seed, block).standard_exponential((count, len(columns)))
    return sum(1 for row in draws.tolist() if _is_positive_dyadic(row, columns))


def simplex_block(k: int, seed: int, block: int, count: int = BLOCK_SIZE) -> List[List[Fraction]]:
    """The exact, normalised simplex points of one block (for inspection and tests)."""
    p = len(partitions_of(k))
    draws = _block_stream(seed, block).standard_exponential((count, p))
    points = []
    for row in draws.tolist():
        exact = [Fraction(v) for v in row]
        total = sum(exact, Fraction(0))
        points.append([v / total for v in exact])
    return points


def sample_positivity(k: int, n_samples: int, seed: int, workers: Optional[int] = None) -> MonteCarloReport:
    """Estimate the Schur-positivity probability by uniform sampling of the coefficient simplex.

    Each sample draws one standard exponential per partition of ``k``; normalising them
    gives a uniform point of ``{a_λ >= 0, Σ a_λ = 1}``. Positivity is scale invariant, so the
    test runs on the exact (dyadic) draws directly. Samples are split into blocks of
    :data:`BLOCK_SIZE`, block ``b`` drawing from a Philox stream keyed by ``(seed, b)``; the
    report only depends on ``(k, n_samples, seed)`` whatever the worker count.

    Parameters:
        k (`int`): Degree.
        n_samples (`int`): Number of samples, at least 1.
        seed (`int`): Seed; negative values are reduced modulo ``2**64``.
        workers (`int`, optional): Worker processes (``None`` or 1 runs in-process).

    Returns:
        :class:`MonteCarloReport`
    """
    _check_degree(k)
    if n_samples < 1:
        raise DomainError(f"n_samples must be at least 1, got {n_samples}")
    tasks = []
    for block, start in enumerate(range(0, n_samples, BLOCK_SIZE)):
        tasks.append((k, seed, block, min(BLOCK_SIZE, n_samples - start)))
    logger.info("sampling degree %d: %d samples in %d blocks (workers=%s)", k, n_samples, len(tasks), workers or 1)
    if workers and workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            positive = sum(pool.map(_count_block, tasks))
    else:
        positive = sum(_count_block(task) for task in tasks)
    estimate = positive / n_samples
    exact = schur_positivity_probability(k)
    logger.debug("degree %d: %d of %d samples Schur positive", k, positive, n_samples)
    return MonteCarloReport(
        degree=k,
        samples=n_samples,
        seed=seed,
        positive=positive,
        estimate=estimate,
        standard_error=math.sqrt(estimate * (1 - estimate) / n_samples),
        exact=str(exact),
        exact_approx=float(exact),
    )
