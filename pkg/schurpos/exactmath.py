from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from .exceptions import DimensionError, SingularMatrixError

BigRational = Fraction
"""Exact rational scalar. :class:`fractions.Fraction` keeps lowest terms and a positive denominator."""

Scalar = Union[int, Rational, str]


def to_rational(value: Scalar) -> Fraction:
    """Coerce an integer, rational or ``"num/den"`` string to a :class:`Fraction`.

    Floats are rejected; convert them with ``Fraction.from_float`` first.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact scalars; use Fraction.from_float explicitly")
    return Fraction(value)


class RationalMatrix:
    """A dense, immutable matrix of :class:`Fraction` entries stored row-major.

    Parameters:
        rows (`int`): Number of rows.
        cols (`int`): Number of columns.
        entries (`Iterable`): ``rows * cols`` scalars in row-major order.
    """

    __slots__ = ("_rows", "_cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Scalar]) -> None:
        if rows < 0 or cols < 0:
            raise DimensionError(f"matrix dimensions must be non-negative, got {rows}x{cols}")
        values = tuple(to_rational(e) for e in entries)
        if len(values) != rows * cols:
            raise DimensionError(f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(values)}")
        self._rows = rows
        self._cols = cols
        self._entries = values

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "RationalMatrix":
        """Build a matrix from a sequence of equally long rows."""
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionError("all rows must have the same length")
        return cls(len(rows), width, (e for row in rows for e in row))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, (int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, (0 for _ in range(rows * cols)))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.to_lists()!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._entries))

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(f"index {key} out of range for a {self._rows}x{self._cols} matrix")
        return self._entries[i * self._cols + j]

    def __mul__(self, other: "RationalMatrix") -> "RationalMatrix":
        return mat_mul(self, other)

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        return self._rows, self._cols

    @property
    def entries(self) -> Tuple[Fraction, ...]:
        """Row-major entries."""
        return self._entries

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self._entries[i * self._cols:(i + 1) * self._cols]

    def iter_rows(self) -> Iterator[Tuple[Fraction, ...]]:
        for i in range(self._rows):
            yield self.row(i)

    def to_lists(self) -> List[List[Fraction]]:
        return [list(row) for row in self.iter_rows()]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self._cols, self._rows,
            (self[i, j] for j in range(self._cols) for i in range(self._rows))
        )

    def trace(self) -> Fraction:
        if not self.is_square:
            raise DimensionError(f"trace needs a square matrix, got {self._rows}x{self._cols}")
        return sum((self[i, i] for i in range(self._rows)), Fraction(0))

    def scaled(self, c: Scalar) -> "RationalMatrix":
        factor = to_rational(c)
        return RationalMatrix(self._rows, self._cols, (factor * e for e in self._entries))

    def is_identity(self) -> bool:
        return self.is_square and self == RationalMatrix.identity(self._rows)

    def is_upper_triangular(self) -> bool:
        return all(self[i, j] == 0 for i in range(self._rows) for j in range(min(i, self._cols)))

    def determinant(self) -> Fraction:
        return determinant(self)

    def inverse(self) -> "RationalMatrix":
        return inverse(self)


def determinant(m: RationalMatrix) -> Fraction:
    """Return the exact determinant of a square matrix.

    Fraction-free (Bareiss) elimination: after step ``k`` every pivot-block entry is a
    ``(k+1)``-minor of the input, and the division by the previous pivot is exact.
    A ``0x0`` matrix has determinant 1.

    Raises:
        :class:`DimensionError`: If the matrix is not square.
    """
    if not m.is_square:
        raise DimensionError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    a = m.to_lists()
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            # find a row below with a nonzero pivot
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = pivot
    if n == 0:
        return Fraction(1)
    return sign * a[n - 1][n - 1]


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Return the exact product ``a·b``.

    Raises:
        :class:`DimensionError`: If ``a.cols != b.rows``.
    """
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply a {a.rows}x{a.cols} matrix by a {b.rows}x{b.cols} matrix")
    b_cols = [tuple(b[i, j] for i in range(b.rows)) for j in range(b.cols)]
    return RationalMatrix(
        a.rows, b.cols,
        (sum((x * y for x, y in zip(row, col)), Fraction(0)) for row in a.iter_rows() for col in b_cols)
    )


def inverse(m: RationalMatrix) -> RationalMatrix:
    """Return the exact inverse of a square matrix by Gauss-Jordan elimination.

    Raises:
        :class:`DimensionError`: If the matrix is not square.
        :class:`SingularMatrixError`: If the matrix is not invertible.
    """
    if not m.is_square:
        raise DimensionError(f"inverse needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    x = m.to_lists()
    y = RationalMatrix.identity(n).to_lists()
    # downward elimination: make lower triangle zero and main diagonal 1
    for i in range(n):
        for j in range(i, n):
            if x[j][i] != 0:
                if i != j:
                    x[i], x[j] = x[j], x[i]
                    y[i], y[j] = y[j], y[i]
                break
        else:
            raise SingularMatrixError("matrix is not invertible")
        pivot = x[i][i]
        x[i] = [e / pivot for e in x[i]]
        y[i] = [e / pivot for e in y[i]]
        for j in range(i + 1, n):
            factor = x[j][i]
            if factor:
                x[j] = [e - factor * p for e, p in zip(x[j], x[i])]
                y[j] = [e - factor * p for e, p in zip(y[j], y[i])]
    # upward elimination: zero the upper triangle
    for j in range(n - 2, -1, -1):
        for i in range(j + 1, n):
            factor = x[j][i]
            if factor:
                x[j] = [e - factor * p for e, p in zip(x[j], x[i])]
                y[j] = [e - factor * p for e, p in zip(y[j], y[i])]
    return RationalMatrix.from_rows(y)
