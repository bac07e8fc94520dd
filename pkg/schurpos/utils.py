from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from .kostka import KostkaMatrix
from .models import (ExponentTerm, KostkaMatrixModel, MonomialExpansionModel, SymPolyModel, TableauList,
                     TermModel)
from .partitions import Composition, Partition
from .symfunc import MonomialExpansion, SymPoly
from .tableaux import Tableau


def render_rational(q: Fraction) -> str:
    """Render an exact rational as ``"n"`` or ``"n/d"``."""
    return str(Fraction(q))


def render_approx(value: float) -> str:
    """Decimal approximation to 6 significant digits."""
    return "%.6g" % value


def render_partition(lam: Sequence[int]) -> str:
    return str(Partition(lam))


def render_sympoly(f: SymPoly) -> str:
    """Render ``f`` in the expression grammar, e.g. ``s[2,1] - 2*s[1,1,1]``.

    Terms follow the canonical partition order; a coefficient of 1 is omitted and the
    zero polynomial renders as ``0``.
    """
    if f.is_zero():
        return "0"
    pieces: List[str] = []
    for lam, c in f:
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        term = f"{f.basis.letter}{lam}" if magnitude == 1 else f"{magnitude}*{f.basis.letter}{lam}"
        if not pieces:
            pieces.append(term if sign == "+" else f"-{term}")
        else:
            pieces.append(f"{sign} {term}")
    return " ".join(pieces)


def render_tableau(t: Tableau) -> str:
    """One row per line, entries separated by single spaces."""
    return str(t)


def render_tableaux(tableaux: Iterable[Tableau]) -> str:
    """Tableaux separated by blank lines."""
    return "\n\n".join(render_tableau(t) for t in tableaux)


def sympoly_model(f: SymPoly) -> SymPolyModel:
    return SymPolyModel(
        degree=f.degree,
        basis=f.basis.value,
        terms=[TermModel(partition=list(lam), coefficient=render_rational(c)) for lam, c in f],
        text=render_sympoly(f),
    )


def tableau_list_model(
        shape: Partition,
        tableaux: List[Tableau],
        max_entry: Optional[int] = None,
        content: Optional[Composition] = None
) -> TableauList:
    return TableauList(
        shape=list(shape),
        max_entry=max_entry,
        content=list(content) if content is not None else None,
        count=len(tableaux),
        tableaux=[[list(row) for row in t.rows] for t in tableaux],
    )


def kostka_matrix_model(kostka: KostkaMatrix) -> KostkaMatrixModel:
    return KostkaMatrixModel(
        degree=kostka.degree,
        order=[list(lam) for lam in kostka.order],
        matrix=kostka.to_int_lists(),
        row_sums=[kostka.row_sum(lam) for lam in kostka.order],
    )


def _monomial(alpha: Composition) -> str:
    factors = [f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(alpha, start=1) if a]
    return "*".join(factors)


def render_expansion(e: MonomialExpansion) -> str:
    """Render an explicit expansion such as ``x1^2*x2 + 2*x1*x2*x3``."""
    pieces: List[str] = []
    for alpha, c in sorted(e.terms.items(), reverse=True):
        monomial = _monomial(alpha)
        magnitude = abs(c)
        if not monomial:
            term = str(magnitude)
        elif magnitude == 1:
            term = monomial
        else:
            term = f"{magnitude}*{monomial}"
        if not pieces:
            pieces.append(f"-{term}" if c < 0 else term)
        else:
            pieces.append(f"{'-' if c < 0 else '+'} {term}")
    return " ".join(pieces) or "0"


def expansion_model(e: MonomialExpansion) -> MonomialExpansionModel:
    return MonomialExpansionModel(
        n_vars=e.n_vars,
        terms=[
            ExponentTerm(exponents=list(alpha), coefficient=render_rational(c))
            for alpha, c in sorted(e.terms.items(), reverse=True)
        ],
        text=render_expansion(e),
    )
