from typing import List, Optional

from pydantic import BaseModel, Field


class PartitionList(BaseModel):
    """All partitions of one integer, in canonical (descending lexicographic) order."""
    degree: int = Field(
        ...,
        title="Degree",
        description="The integer being partitioned.",
        example=3,
        ge=0
    )
    count: int = Field(
        ...,
        title="Count",
        description="Number of partitions, p(k).",
        example=3
    )
    partitions: List[List[int]] = Field(
        ...,
        title="Partitions",
        description="The partitions, largest first.",
        example=[[3], [2, 1], [1, 1, 1]]
    )


class TableauList(BaseModel):
    """Semistandard Young tableaux of one shape."""
    shape: List[int] = Field(
        ...,
        title="Shape",
        description="The shape of every tableau in the list.",
        example=[3, 1]
    )
    max_entry: Optional[int] = Field(
        None,
        title="Maximum entry",
        description="Upper bound on the entries (absent for fixed-content enumeration).",
        example=2
    )
    content: Optional[List[int]] = Field(
        None,
        title="Content",
        description="Multiplicity of each entry (absent for bounded enumeration).",
        example=None
    )
    count: int = Field(
        ...,
        title="Count",
        description="Number of tableaux.",
        example=3
    )
    tableaux: List[List[List[int]]] = Field(
        ...,
        title="Tableaux",
        description="Each tableau as a list of rows.",
        example=[[[1, 1, 1], [2]], [[1, 1, 2], [2]], [[1, 2, 2], [2]]]
    )


class KostkaNumber(BaseModel):
    """A single Kostka number."""
    shape: List[int] = Field(..., title="Shape", example=[2, 1])
    content: List[int] = Field(..., title="Content", example=[1, 1, 1])
    value: int = Field(
        ...,
        title="Value",
        description="Number of semistandard tableaux of the shape with the given content.",
        example=2
    )


class KostkaMatrixModel(BaseModel):
    """The Kostka matrix of one degree with its row/column order."""
    degree: int = Field(..., title="Degree", example=3)
    order: List[List[int]] = Field(
        ...,
        title="Order",
        description="Partition labelling rows and columns, in order.",
        example=[[3], [2, 1], [1, 1, 1]]
    )
    matrix: List[List[int]] = Field(
        ...,
        title="Matrix",
        description="Row-major Kostka numbers; entry (i, j) is K_{order[i], order[j]}.",
        example=[[1, 1, 1], [0, 1, 2], [0, 0, 1]]
    )
    row_sums: List[int] = Field(
        ...,
        title="Row sums",
        description="k_λ for every λ in order.",
        example=[3, 3, 1]
    )


class TermModel(BaseModel):
    """One term of a symmetric polynomial."""
    partition: List[int] = Field(..., title="Partition", example=[2, 1])
    coefficient: str = Field(
        ...,
        title="Coefficient",
        description="Exact rational coefficient as \"num/den\" or an integer string.",
        example="1/3"
    )


class SymPolyModel(BaseModel):
    """A homogeneous symmetric polynomial in one basis."""
    degree: int = Field(..., title="Degree", example=3)
    basis: str = Field(..., title="Basis", description="`monomial` or `schur`.", example="monomial")
    terms: List[TermModel] = Field(..., title="Terms", description="Nonzero terms in canonical order.")
    text: str = Field(
        ...,
        title="Text",
        description="The polynomial in expression grammar.",
        example="m[2,1] + 2*m[1,1,1]"
    )


class ExpressionRequest(BaseModel):
    """Request body carrying an expression in the `c*m[...]`/`c*s[...]` grammar."""
    expression: str = Field(
        ...,
        title="Expression",
        description="Symmetric polynomial expression.",
        example="m[2,1] + 2*m[1,1,1]",
        min_length=1
    )


class PositivityResult(BaseModel):
    """Outcome of a Schur-positivity test."""
    positive: bool = Field(..., title="Schur positive", example=False)
    input: SymPolyModel = Field(..., title="Input", description="The parsed input polynomial.")
    schur_expansion: SymPolyModel = Field(..., title="Schur expansion")


class ProbabilityResult(BaseModel):
    """Exact probability that a random nonnegative symmetric polynomial is Schur positive."""
    degree: int = Field(..., title="Degree", example=3)
    probability: str = Field(..., title="Probability", example="1/9")
    probability_approx: float = Field(
        ...,
        title="Approximation",
        description="Decimal approximation of the probability (not exact).",
        example=0.111111
    )
    k_lambda: List[int] = Field(
        ...,
        title="k_λ values",
        description="Row sums of the Kostka matrix in canonical order.",
        example=[3, 3, 1]
    )


class SliceRatioResult(BaseModel):
    """Slice geometry of the two cones, computed with determinants."""
    degree: int = Field(..., title="Degree", example=3)
    ratio: str = Field(
        ...,
        title="Volume ratio",
        description="|det V| / |det E|; the simplex factor 1/d! cancels.",
        example="1/9"
    )
    ratio_approx: float = Field(..., title="Approximation", example=0.111111)
    monomial_slice_volume: str = Field(..., title="Monomial slice volume", example="1/2")
    schur_slice_volume: str = Field(..., title="Schur slice volume", example="1/18")
    dimension: int = Field(..., title="Dimension", description="d = p(k) - 1.", example=2)


class MonteCarloReport(BaseModel):
    """Result of sampling the coefficient simplex and testing Schur positivity."""
    degree: int = Field(..., title="Degree", example=3, ge=0)
    samples: int = Field(..., title="Samples", example=100000, gt=0)
    seed: int = Field(..., title="Seed", example=20190601)
    positive: int = Field(..., title="Positive count", example=11104, ge=0)
    estimate: float = Field(
        ...,
        title="Estimate",
        description="positive / samples.",
        example=0.11104,
        ge=0,
        le=1
    )
    standard_error: float = Field(
        ...,
        title="Standard error",
        description="sqrt(p(1-p)/N) for the estimate p.",
        example=0.000993
    )
    exact: str = Field(..., title="Exact probability", example="1/9")
    exact_approx: float = Field(..., title="Exact probability (approximation)", example=0.111111)


class BialternantResult(BaseModel):
    """Value of a Schur polynomial at a point via the quotient of determinants."""
    partition: List[int] = Field(..., title="Partition", example=[2, 1])
    point: List[str] = Field(..., title="Point", example=["1", "2", "3"])
    value: str = Field(..., title="Value", example="60")
    numerator: str = Field(..., title="Alternant determinant", example="-120")
    vandermonde: str = Field(..., title="Vandermonde determinant", example="-2")


class CharacterResult(BaseModel):
    """Value of a character."""
    kind: str = Field(..., title="Kind", description="`sym2` or `schur`.", example="sym2")
    value: str = Field(..., title="Value", example="3")
    matrix: Optional[List[List[str]]] = Field(
        None,
        title="Representation matrix",
        description="S²(A) for the `sym2` kind.",
        example=[["1", "2", "1"], ["0", "1", "1"], ["0", "0", "1"]]
    )
    partition: Optional[List[int]] = Field(None, title="Partition", example=None)
    eigenvalues: Optional[List[str]] = Field(None, title="Eigenvalues", example=None)


class ExponentTerm(BaseModel):
    """One monomial ``c * x1^a1 * ... * xn^an``."""
    exponents: List[int] = Field(..., title="Exponents", example=[1, 1, 1])
    coefficient: str = Field(..., title="Coefficient", example="2")


class MonomialExpansionModel(BaseModel):
    """A symmetric polynomial written out in a fixed number of variables."""
    n_vars: int = Field(..., title="Variables", example=2, ge=0)
    terms: List[ExponentTerm] = Field(
        ...,
        title="Terms",
        description="Nonzero monomials, exponent vectors in descending lexicographic order."
    )
    text: str = Field(..., title="Text", example="x1^3*x2 + x1^2*x2^2 + x1*x2^3")
