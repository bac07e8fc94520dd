import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, List, Optional

import pyparsing as pp

from .exceptions import DegreeMismatchError, DomainError, ParseError, ValidationError
from .partitions import Composition, Partition
from .symfunc import Basis, SymPoly

logger = logging.getLogger(__name__)

_integer = pp.Word(pp.nums)
_int_list = pp.Group(_integer + pp.ZeroOrMore(pp.Suppress(",") + _integer))
_sign = pp.one_of("+ -")
_fraction = pp.Combine(_integer + pp.Optional("/" + _integer), adjacent=False)
_rational = pp.Combine(pp.Optional(_sign) + _fraction, adjacent=False)

# offset of the next token, after whitespace
_start = pp.Empty().set_parse_action(lambda s, loc, toks: [loc])("start")

# term := [coeff '*'] basis '[' int (',' int)* ']'
_term = pp.Group(
    _start
    + pp.Optional(_fraction("coefficient") + pp.Suppress("*"))
    + pp.one_of("m s")("letter")
    + pp.Suppress("[") + _int_list("parts") + pp.Suppress("]")
)
# a sign in front of the first term is accepted so rendered negatives parse back
SYMEXPR = pp.Group(pp.Optional(_sign, default="+") + _term) + pp.ZeroOrMore(pp.Group(_sign + _term))
PARTITION = (pp.Suppress("[") + _int_list + pp.Suppress("]")) | _int_list
RATIONAL_LIST = pp.Group(_rational + pp.ZeroOrMore(pp.Suppress(",") + _rational))


class SymTerm:
    """One signed term ``c * b[λ]`` of a parsed expression."""

    __slots__ = ("coefficient", "basis", "partition", "position")

    def __init__(self, coefficient: Fraction, basis: Basis, partition: Partition, position: int = 0) -> None:
        self.coefficient = coefficient
        self.basis = basis
        self.partition = partition
        self.position = position

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.coefficient!s}*{self.basis.letter}{self.partition})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymTerm):
            return NotImplemented
        return (self.coefficient, self.basis, self.partition) == (other.coefficient, other.basis, other.partition)


class SymExpr:
    """Parse tree of a symmetric-polynomial expression: signed terms sharing a degree and basis."""

    __slots__ = ("terms",)

    def __init__(self, terms: List[SymTerm]) -> None:
        self.terms = terms

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.terms!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymExpr):
            return NotImplemented
        return self.terms == other.terms

    @property
    def degree(self) -> int:
        return self.terms[0].partition.size()

    @property
    def basis(self) -> Basis:
        return self.terms[0].basis

    def to_sympoly(self) -> SymPoly:
        """Collect the terms; repeated partitions add up."""
        coeffs = {}
        for term in self.terms:
            coeffs[term.partition] = coeffs.get(term.partition, Fraction(0)) + term.coefficient
        return SymPoly(self.degree, self.basis, coeffs)


class BaseParser(ABC):
    """Base class for the text parsers used by the CLI and the web routers.

    Parameters:
        text (`str`): The text to parse.
    """

    __slots__ = ("_text",)

    grammar: pp.ParserElement

    def __init__(self, text: str) -> None:
        if not isinstance(text, str):
            raise TypeError(f"Parser input must be a string, not {type(text)}")
        self._text = text

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self._text!r})"

    @property
    def text(self) -> str:
        return self._text

    def _parse(self) -> pp.ParseResults:
        try:
            return self.grammar.parse_string(self._text, parse_all=True)
        except pp.ParseException as exc:
            logger.debug("rejected %r at %d: %s", self._text, exc.loc, exc.msg)
            raise ParseError(f"cannot parse {self._text!r}: {exc.msg}", position=exc.loc) from None

    @abstractmethod
    def parsed(self) -> Any:
        ...


def _to_partition(parts: List[str], position: Optional[int] = None) -> Partition:
    values = [int(p) for p in parts]
    try:
        if 0 in values:
            raise DomainError("parts must be positive")
        return Partition(values)
    except DomainError as exc:
        raise ValidationError(f"[{','.join(parts)}] is not a partition: {exc.msg}", position=position) from None


class SymExprParser(BaseParser):
    """Parser for ``c*m[p1,p2,...]`` / ``c*s[...]`` terms joined by ``+`` and ``-``.

    All terms must use the same basis letter and partitions of the same size.
    """

    grammar = SYMEXPR

    def parsed(self) -> SymExpr:
        terms = [self._term(sign, term) for sign, term in self._parse()]
        first = terms[0]
        for term in terms[1:]:
            if term.basis is not first.basis:
                raise DegreeMismatchError("cannot mix m and s terms in one expression", position=term.position)
            if term.partition.size() != first.partition.size():
                raise DegreeMismatchError(
                    f"term {term.basis.letter}{term.partition} has degree {term.partition.size()}, "
                    f"expected {first.partition.size()}",
                    position=term.position,
                )
        return SymExpr(terms)

    @staticmethod
    def _term(sign: str, term: pp.ParseResults) -> SymTerm:
        position = term["start"]
        try:
            coefficient = Fraction(term.get("coefficient", "1"))
        except ZeroDivisionError:
            raise ParseError("zero denominator in coefficient", position=position) from None
        if sign == "-":
            coefficient = -coefficient
        partition = _to_partition(list(term["parts"]), position=position)
        return SymTerm(coefficient, Basis.from_letter(term["letter"]), partition, position)


class PartitionParser(BaseParser):
    """Parser for ``[3,2,1]``; the bare form ``3,2,1`` is accepted too."""

    grammar = PARTITION

    def parsed(self) -> Partition:
        return _to_partition(list(self._parse()[0]))


class CompositionParser(BaseParser):
    """Parser for contents such as ``[2,0,1]``: same syntax as partitions, zeros and any order allowed."""

    grammar = PARTITION

    def parsed(self) -> Composition:
        return tuple(int(v) for v in self._parse()[0])


class RationalListParser(BaseParser):
    """Parser for comma-separated exact rationals such as ``1,-2,3/4``."""

    grammar = RATIONAL_LIST

    def parsed(self) -> List[Fraction]:
        try:
            return [Fraction(v) for v in self._parse()[0]]
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {self._text!r}") from None


def parse_symexpr(text: str) -> SymExpr:
    """Parse an expression in the symmetric-polynomial grammar."""
    return SymExprParser(text).parsed()


def parse_partition(text: str) -> Partition:
    return PartitionParser(text).parsed()


def parse_composition(text: str) -> Composition:
    return CompositionParser(text).parsed()


def parse_rationals(text: str) -> List[Fraction]:
    return RationalListParser(text).parsed()
