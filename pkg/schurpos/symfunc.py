from enum import Enum
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .exactmath import Scalar, to_rational
from .exceptions import DomainError, NotSymmetricError
from .kostka import inverse_kostka_matrix, kostka_matrix
from .partitions import Composition, Partition, compositions_sorting_to, partition_index, partitions_of


class Basis(str, Enum):
    """The basis a :class:`SymPoly` is written in."""

    MONOMIAL = "monomial"
    SCHUR = "schur"

    @property
    def letter(self) -> str:
        """Letter used by the expression grammar (``m`` or ``s``)."""
        return "m" if self is Basis.MONOMIAL else "s"

    @classmethod
    def from_letter(cls, letter: str) -> "Basis":
        return cls.MONOMIAL if letter == "m" else cls.SCHUR


class SymPoly:
    """A homogeneous symmetric polynomial of fixed degree as exact coefficients over partitions.

    The polynomial does not carry a variable count; ``n`` only enters at
    :func:`expand_in_variables` and :func:`evaluate`, where partitions with more than
    ``n`` parts vanish.

    Parameters:
        degree (`int`): The degree ``k``; every key must be a partition of ``k``.
        basis (:class:`Basis`): Monomial or Schur basis.
        coeffs (`Mapping`, optional): Partition (or tuple) to scalar. Zero values are dropped.

    Raises:
        :class:`DomainError`: If a key is not a partition of ``degree``.
    """

    __slots__ = ("_degree", "_basis", "_coeffs")

    def __init__(self, degree: int, basis: Basis, coeffs: Optional[Mapping[Sequence[int], Scalar]] = None) -> None:
        if degree < 0:
            raise DomainError(f"degree must be non-negative, got {degree}")
        self._degree = degree
        self._basis = Basis(basis)
        cleaned: Dict[Partition, Fraction] = {}
        for key, value in (coeffs or {}).items():
            lam = Partition(key)
            if lam.size() != degree:
                raise DomainError(f"{lam} is not a partition of {degree}")
            c = to_rational(value)
            if c:
                cleaned[lam] = cleaned.get(lam, Fraction(0)) + c
        # canonical partition order, zeros never stored
        self._coeffs = {lam: cleaned[lam] for lam in sorted(cleaned, key=partition_index) if cleaned[lam]}

    @classmethod
    def from_vector(cls, degree: int, basis: Basis, vector: Sequence[Scalar]) -> "SymPoly":
        """Build from coefficients listed in :func:`partitions_of` order."""
        order = partitions_of(degree)
        if len(vector) != len(order):
            raise DomainError(f"expected {len(order)} coefficients for degree {degree}, got {len(vector)}")
        return cls(degree, basis, dict(zip(order, vector)))

    def __repr__(self) -> str:
        terms = ", ".join(f"{lam}: {c}" for lam, c in self._coeffs.items())
        return f"{self.__class__.__name__}(degree={self._degree}, basis={self._basis.value}, {{{terms}}})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return (self._degree, self._basis, self._coeffs) == (other._degree, other._basis, other._coeffs)

    def __hash__(self) -> int:
        return hash((self._degree, self._basis, tuple(self._coeffs.items())))

    def __add__(self, other: "SymPoly") -> "SymPoly":
        return add(self, other)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return add(self, scale(other, -1))

    def __neg__(self) -> "SymPoly":
        return scale(self, -1)

    def __iter__(self) -> Iterator[Tuple[Partition, Fraction]]:
        return iter(self._coeffs.items())

    def __len__(self) -> int:
        return len(self._coeffs)

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def basis(self) -> Basis:
        return self._basis

    @property
    def coeffs(self) -> Dict[Partition, Fraction]:
        """A copy of the nonzero coefficients, in canonical partition order."""
        return dict(self._coeffs)

    def coeff(self, lam: Sequence[int]) -> Fraction:
        return self._coeffs.get(Partition(lam), Fraction(0))

    def items(self) -> List[Tuple[Partition, Fraction]]:
        return list(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def vector(self) -> List[Fraction]:
        """All coefficients in :func:`partitions_of` order, zeros included."""
        return [self._coeffs.get(lam, Fraction(0)) for lam in partitions_of(self._degree)]

    def coefficient_sum(self) -> Fraction:
        return sum(self._coeffs.values(), Fraction(0))


class MonomialExpansion:
    """A polynomial in ``n`` variables as a map from exponent vectors to coefficients.

    Parameters:
        n_vars (`int`): Number of variables.
        terms (`Mapping[Composition, Scalar]`, optional): Exponent vector to coefficient.
    """

    __slots__ = ("_n_vars", "_terms")

    def __init__(self, n_vars: int, terms: Optional[Mapping[Sequence[int], Scalar]] = None) -> None:
        self._n_vars = n_vars
        self._terms: Dict[Composition, Fraction] = {}
        for alpha, value in (terms or {}).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != n_vars or any(a < 0 for a in alpha):
                raise DomainError(f"exponent vector {alpha} does not fit {n_vars} variables")
            c = to_rational(value)
            if c:
                self._terms[alpha] = c

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(n_vars={self._n_vars}, terms={len(self._terms)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialExpansion):
            return NotImplemented
        return self._n_vars == other._n_vars and self._terms == other._terms

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def n_vars(self) -> int:
        return self._n_vars

    @property
    def terms(self) -> Dict[Composition, Fraction]:
        return dict(self._terms)

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def permuted(self, sigma: Sequence[int]) -> "MonomialExpansion":
        """Apply ``x_i -> x_sigma(i)``: position ``i`` of every exponent vector moves to ``sigma[i]``."""
        if sorted(sigma) != list(range(self._n_vars)):
            raise DomainError(f"{tuple(sigma)} is not a permutation of {self._n_vars} positions")
        moved: Dict[Composition, Fraction] = {}
        for alpha, c in self._terms.items():
            beta = [0] * self._n_vars
            for i, a in enumerate(alpha):
                beta[sigma[i]] = a
            moved[tuple(beta)] = c
        return MonomialExpansion(self._n_vars, moved)

    def is_symmetric(self) -> bool:
        """Every rearrangement of an exponent vector carries the same coefficient."""
        for alpha, c in self._terms.items():
            lam = Partition.from_composition(alpha)
            if any(self._terms.get(beta) != c for beta in compositions_sorting_to(lam, self._n_vars)):
                return False
        return True

    def evaluate(self, x: Sequence[Scalar]) -> Fraction:
        if len(x) != self._n_vars:
            raise DomainError(f"expected {self._n_vars} values, got {len(x)}")
        point = [to_rational(v) for v in x]
        total = Fraction(0)
        for alpha, c in self._terms.items():
            term = c
            for xi, a in zip(point, alpha):
                if a:
                    term *= xi ** a
            total += term
        return total


def monomial_sym(lam: Sequence[int]) -> SymPoly:
    """The monomial symmetric polynomial ``m_lam``."""
    lam = Partition(lam)
    return SymPoly(lam.size(), Basis.MONOMIAL, {lam: 1})


def schur_sym(lam: Sequence[int]) -> SymPoly:
    """The Schur polynomial ``s_lam`` written in the Schur basis."""
    lam = Partition(lam)
    return SymPoly(lam.size(), Basis.SCHUR, {lam: 1})


def to_monomial_basis(g: SymPoly) -> SymPoly:
    """Rewrite a Schur-basis polynomial in the monomial basis: ``Σ_λ g_λ K_{λμ} m_μ``.

    Monomial-basis input is returned unchanged.
    """
    if g.basis is Basis.MONOMIAL:
        return g
    kostka = kostka_matrix(g.degree)
    order = kostka.order
    coeffs: Dict[Partition, Fraction] = {}
    for lam, c in g:
        row = kostka.entries.row(partition_index(lam))
        for mu, entry in zip(order, row):
            if entry:
                coeffs[mu] = coeffs.get(mu, Fraction(0)) + c * entry
    return SymPoly(g.degree, Basis.MONOMIAL, coeffs)


def schur_to_monomial(lam: Sequence[int]) -> SymPoly:
    """``s_lam`` in the monomial basis: coefficient ``K_{lam,μ}`` on ``m_μ``."""
    return to_monomial_basis(schur_sym(lam))


def to_schur_basis(f: SymPoly) -> SymPoly:
    """Rewrite a monomial-basis polynomial in the Schur basis using the inverse Kostka matrix.

    If ``f = Σ a_μ m_μ`` then ``a = g·K`` for the Schur coefficients ``g``, so ``g = a·K⁻¹``.
    Schur-basis input is returned unchanged.
    """
    if f.basis is Basis.SCHUR:
        return f
    inverse = inverse_kostka_matrix(f.degree)
    order = partitions_of(f.degree)
    coeffs: Dict[Partition, Fraction] = {}
    for mu, a in f:
        row = inverse.row(partition_index(mu))
        for lam, entry in zip(order, row):
            if entry:
                coeffs[lam] = coeffs.get(lam, Fraction(0)) + a * entry
    return SymPoly(f.degree, Basis.SCHUR, coeffs)


def is_schur_positive(f: SymPoly) -> bool:
    """``True`` iff every Schur coefficient of ``f`` is non-negative.

    Boundary points count as positive (closed cone); the zero polynomial is positive.
    """
    return all(c >= 0 for _, c in to_schur_basis(f))


def add(f: SymPoly, g: SymPoly) -> SymPoly:
    """Coefficientwise sum.

    Raises:
        :class:`DomainError`: If the degrees or bases differ.
    """
    if f.degree != g.degree:
        raise DomainError(f"cannot add polynomials of degrees {f.degree} and {g.degree}")
    if f.basis is not g.basis:
        raise DomainError(f"cannot add a {f.basis.value}-basis polynomial to a {g.basis.value}-basis one")
    coeffs = f.coeffs
    for lam, c in g:
        coeffs[lam] = coeffs.get(lam, Fraction(0)) + c
    return SymPoly(f.degree, f.basis, coeffs)


def scale(f: SymPoly, c: Scalar) -> SymPoly:
    factor = to_rational(c)
    return SymPoly(f.degree, f.basis, {lam: factor * a for lam, a in f})


def expand_in_variables(f: SymPoly, n: int) -> MonomialExpansion:
    """Expand ``f`` into monomials in ``n`` variables.

    Schur-basis input is converted to the monomial basis first. Partitions with more
    than ``n`` parts contribute nothing.
    """
    if n < 0:
        raise DomainError(f"number of variables must be non-negative, got {n}")
    terms: Dict[Composition, Fraction] = {}
    for lam, c in to_monomial_basis(f):
        for alpha in compositions_sorting_to(lam, n):
            terms[alpha] = c
    return MonomialExpansion(n, terms)


def evaluate(f: SymPoly, x: Sequence[Scalar]) -> Fraction:
    """Exact value of ``f`` at the point ``x`` (the number of variables is ``len(x)``)."""
    return expand_in_variables(f, len(x)).evaluate(x)


def from_expansion(e: MonomialExpansion, degree: Optional[int] = None) -> SymPoly:
    """Decompose a symmetric expansion into monomial symmetric polynomials.

    The coefficient of ``m_λ`` is read off the exponent vector ``λ`` padded with zeros.

    Raises:
        :class:`NotSymmetricError`: If ``e`` is not symmetric.
        :class:`DomainError`: If ``e`` is not homogeneous or disagrees with ``degree``.
    """
    if not e.is_symmetric():
        raise NotSymmetricError("expansion is not invariant under permuting the variables")
    degrees = {sum(alpha) for alpha in e.terms}
    if len(degrees) > 1:
        raise DomainError(f"expansion is not homogeneous (degrees {sorted(degrees)})")
    if degree is None:
        degree = degrees.pop() if degrees else 0
    elif degrees and degrees != {degree}:
        raise DomainError(f"expansion has degree {degrees.pop()}, expected {degree}")
    coeffs = {
        Partition(alpha): c for alpha, c in e.terms.items()
        if list(alpha) == sorted(alpha, reverse=True)
    }
    return SymPoly(degree, Basis.MONOMIAL, coeffs)
