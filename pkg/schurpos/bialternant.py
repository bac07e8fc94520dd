"""Schur polynomials as quotients of alternants, evaluated at exact rational points."""
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence

from .exactmath import RationalMatrix, Scalar, determinant, to_rational
from .exceptions import DomainError, SingularMatrixError
from .partitions import Partition


def _point(x: Sequence[Scalar]) -> List[Fraction]:
    return [to_rational(v) for v in x]


def alternant_matrix(exponents: Sequence[int], x: Sequence[Scalar]) -> RationalMatrix:
    """The matrix ``(x_i ** exponents[j])``."""
    point = _point(x)
    if len(exponents) != len(point):
        raise DomainError(f"need one exponent per variable, got {len(exponents)} for {len(point)}")
    return RationalMatrix(len(point), len(point), (xi ** e for xi in point for e in exponents))


def vandermonde(x: Sequence[Scalar]) -> Fraction:
    """``det(x_i^{n-j})``, which equals ``Π_{i<j} (x_i - x_j)``."""
    n = len(x)
    return determinant(alternant_matrix([n - j for j in range(1, n + 1)], x))


def vandermonde_product(x: Sequence[Scalar]) -> Fraction:
    """Closed form ``Π_{i<j} (x_i - x_j)``."""
    result = Fraction(1)
    for a, b in combinations(_point(x), 2):
        result *= a - b
    return result


def bialternant_numerator(mu: Sequence[int], x: Sequence[Scalar]) -> Fraction:
    """``det(x_i^{mu_j + n - j})`` with ``mu`` padded by zeros to ``n = len(x)``.

    Raises:
        :class:`DomainError`: If ``mu`` has more than ``len(x)`` parts.
    """
    n = len(x)
    padded = Partition(mu).padded(n)
    return determinant(alternant_matrix([padded[j - 1] + n - j for j in range(1, n + 1)], x))


def bialternant_eval(mu: Sequence[int], x: Sequence[Scalar]) -> Fraction:
    """Exact value of ``s_mu(x)`` as ``det(x_i^{mu_j+n-j}) / det(x_i^{n-j})``.

    Raises:
        :class:`DomainError`: If ``mu`` has more parts than there are variables.
        :class:`SingularMatrixError`: If two entries of ``x`` coincide.
    """
    mu = Partition(mu)
    point = _point(x)
    if len(mu) > len(point):
        raise DomainError(f"{mu} has more than {len(point)} parts")
    if len(set(point)) != len(point):
        raise SingularMatrixError("evaluation points must be pairwise distinct (Vandermonde determinant is zero)")
    return bialternant_numerator(mu, point) / vandermonde(point)
