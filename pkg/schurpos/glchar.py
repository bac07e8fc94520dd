from fractions import Fraction
from typing import Sequence, Tuple

from .exactmath import RationalMatrix, Scalar, to_rational
from .exceptions import DimensionError, DomainError
from .partitions import Partition
from .symfunc import evaluate, schur_to_monomial


class RepMatrix:
    """The matrix ``φ(A)`` of a representation ``φ: GL_N -> GL_M`` at one group element.

    Parameters:
        matrix (:class:`RationalMatrix`): The ``M x M`` image matrix.
        source_dim (`int`): ``N``, the size of the input matrix.
    """

    __slots__ = ("_matrix", "_source_dim")

    def __init__(self, matrix: RationalMatrix, source_dim: int) -> None:
        if not matrix.is_square:
            raise DimensionError(f"representation matrices are square, got {matrix.rows}x{matrix.cols}")
        self._matrix = matrix
        self._source_dim = source_dim

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(N={self._source_dim}, M={self.target_dim}, {self._matrix.to_lists()!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self._source_dim == other._source_dim and self._matrix == other._matrix

    @property
    def matrix(self) -> RationalMatrix:
        return self._matrix

    @property
    def source_dim(self) -> int:
        return self._source_dim

    @property
    def target_dim(self) -> int:
        return self._matrix.rows

    def character(self) -> Fraction:
        """``char_φ(A) = trace(φ(A))``."""
        return self._matrix.trace()


def _require_2x2(a: RationalMatrix) -> None:
    if a.shape != (2, 2):
        raise DimensionError(f"expected a 2x2 matrix, got {a.rows}x{a.cols}")


def sym_square_matrix(a: RationalMatrix) -> RepMatrix:
    """The symmetric square ``S²(A)`` in the ordered basis ``(x², xy, y²)``.

    ``[[a,b],[c,d]]`` maps to ``[[a², 2ab, b²], [ac, ad+bc, bd], [c², 2cd, d²]]``.

    Raises:
        :class:`DimensionError`: If ``a`` is not 2x2.
    """
    _require_2x2(a)
    (p, q), (r, s) = a.iter_rows()
    image = RationalMatrix.from_rows([
        [p * p, 2 * p * q, q * q],
        [p * r, p * s + q * r, q * s],
        [r * r, 2 * r * s, s * s],
    ])
    return RepMatrix(image, source_dim=2)


def char_sym_square(a: RationalMatrix) -> Fraction:
    """Character of ``S²`` at ``a``; equals ``trace(a)² - det(a)``."""
    return sym_square_matrix(a).character()


def sym_square_eigenvalues(t1: Scalar, t2: Scalar) -> Tuple[Fraction, Fraction, Fraction]:
    """Spectrum of ``S²(A)`` when ``A`` has eigenvalues ``t1, t2``: ``(t1², t1·t2, t2²)``."""
    t1, t2 = to_rational(t1), to_rational(t2)
    return t1 * t1, t1 * t2, t2 * t2


def direct_sum(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Block-diagonal matrix with blocks ``a`` and ``b``.

    Raises:
        :class:`DimensionError`: If either block is not square.
    """
    if not (a.is_square and b.is_square):
        raise DimensionError(f"direct sum needs square blocks, got {a.rows}x{a.cols} and {b.rows}x{b.cols}")
    n = a.rows + b.rows
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, row in enumerate(a.iter_rows()):
        rows[i][:a.rows] = row
    for i, row in enumerate(b.iter_rows()):
        rows[a.rows + i][a.rows:] = row
    return RationalMatrix.from_rows(rows)


def direct_sum_rep(phi1: RepMatrix, phi2: RepMatrix) -> RepMatrix:
    """``(φ1 ⊕ φ2)(A)`` from ``φ1(A)`` and ``φ2(A)``; both must act on the same ``GL_N``."""
    if phi1.source_dim != phi2.source_dim:
        raise DimensionError(
            f"cannot add representations of GL_{phi1.source_dim} and GL_{phi2.source_dim}"
        )
    return RepMatrix(direct_sum(phi1.matrix, phi2.matrix), phi1.source_dim)


def char_schur_eval(lam: Sequence[int], eigenvalues: Sequence[Scalar]) -> Fraction:
    """Character of the irreducible polynomial representation indexed by ``lam``.

    This is ``s_lam`` evaluated at the eigenvalues of the group element.

    Raises:
        :class:`DomainError`: If ``lam`` has more parts than there are eigenvalues.
    """
    lam = Partition(lam)
    if len(lam) > len(eigenvalues):
        raise DomainError(f"{lam} has more than {len(eigenvalues)} parts")
    return evaluate(schur_to_monomial(lam), eigenvalues)
