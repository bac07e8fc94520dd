import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from .exactmath import RationalMatrix
from .exceptions import DomainError
from .partitions import Partition, partition_index, partitions_of
from .tableaux import count_ssyt_content

logger = logging.getLogger(__name__)


class KostkaMatrix:
    """The Kostka matrix of one degree, rows and columns in :func:`partitions_of` order.

    Entry ``(i, j)`` is ``K_{order[i], order[j]}``. The matrix is upper unitriangular
    because ``K_{λμ} > 0`` only when ``λ`` dominates ``μ``.

    Parameters:
        degree (`int`): The degree ``k``.
        order (`Tuple[Partition, ...]`): ``partitions_of(k)``.
        entries (:class:`RationalMatrix`): The ``p(k) x p(k)`` Kostka numbers.
    """

    __slots__ = ("_degree", "_order", "_entries")

    def __init__(self, degree: int, order: Tuple[Partition, ...], entries: RationalMatrix) -> None:
        self._degree = degree
        self._order = order
        self._entries = entries

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(degree={self._degree!r}, size={len(self._order)})"

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def order(self) -> Tuple[Partition, ...]:
        return self._order

    @property
    def entries(self) -> RationalMatrix:
        return self._entries

    def __getitem__(self, key: Tuple[Partition, Partition]) -> int:
        lam, mu = key
        return int(self._entries[partition_index(lam), partition_index(mu)])

    def row_sum(self, lam: Partition) -> int:
        i = partition_index(lam)
        return int(sum(self._entries.row(i)))

    def to_int_lists(self) -> List[List[int]]:
        return [[int(e) for e in row] for row in self._entries.iter_rows()]


def kostka_number(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``.

    Zero when ``|lam| != |mu|``. ``mu`` may be any composition; the count only depends on
    the sorted content.
    """
    if lam.size() != sum(mu):
        return 0
    return count_ssyt_content(lam, tuple(mu))


@lru_cache(maxsize=None)
def _kostka_matrix(k: int) -> KostkaMatrix:
    order = tuple(partitions_of(k))
    logger.debug("computing Kostka matrix of degree %d (%d partitions)", k, len(order))
    entries = RationalMatrix(
        len(order), len(order),
        (kostka_number(lam, mu) for lam in order for mu in order)
    )
    return KostkaMatrix(k, order, entries)


def kostka_matrix(k: int) -> KostkaMatrix:
    """Return the Kostka matrix of degree ``k`` (cached per degree; values are immutable).

    Raises:
        :class:`DomainError`: If ``k`` is negative.
    """
    if k < 0:
        raise DomainError(f"degree must be non-negative, got {k}")
    return _kostka_matrix(k)


def k_lambda(lam: Partition) -> int:
    """Row sum ``Σ_μ K_{λμ}``: the sum of the monomial coefficients of ``s_λ``."""
    return kostka_matrix(lam.size()).row_sum(lam)


@lru_cache(maxsize=None)
def _inverse_kostka_matrix(k: int) -> RationalMatrix:
    u = kostka_matrix(k).entries
    n = u.rows
    x = [[Fraction(0)] * n for _ in range(n)]
    # back-substitution on an upper unitriangular matrix keeps every entry an integer
    for i in range(n - 1, -1, -1):
        x[i][i] = Fraction(1)
        for j in range(i + 1, n):
            x[i][j] = -sum((u[i, l] * x[l][j] for l in range(i + 1, j + 1)), Fraction(0))
    return RationalMatrix.from_rows(x)


def inverse_kostka_matrix(k: int) -> RationalMatrix:
    """Exact inverse of ``kostka_matrix(k).entries``; every entry is an integer.

    Raises:
        :class:`DomainError`: If ``k`` is negative.
    """
    if k < 0:
        raise DomainError(f"degree must be non-negative, got {k}")
    return _inverse_kostka_matrix(k)
