from typing import Optional, Union

from fastapi import APIRouter, Body, Depends, Path, Query

from schurpos import utils
from schurpos.bialternant import bialternant_eval, bialternant_numerator, vandermonde
from schurpos.exactmath import RationalMatrix
from schurpos.glchar import char_schur_eval, sym_square_matrix
from schurpos.models import (BialternantResult, CharacterResult, ExpressionRequest, MonomialExpansionModel,
                             PositivityResult, SymPolyModel)
from schurpos.parsers import parse_partition, parse_rationals, parse_symexpr
from schurpos.symfunc import SymPoly, expand_in_variables, is_schur_positive, schur_to_monomial, to_schur_basis
from .base import check_degree, raise_error

router = APIRouter(tags=["Symmetric polynomials"])


def get_expression(
        request: ExpressionRequest = Body(
            ...,
            title="Expression",
            description="A symmetric polynomial in the `c*m[...]` / `c*s[...]` grammar.",
            example={"expression": "m[2,1] + 2*m[1,1,1]"}
        )
) -> SymPoly:
    f = parse_symexpr(request.expression).to_sympoly()
    check_degree(f.degree)
    return f


@router.get(
    "/schur/{partition}/expand",
    response_model=Union[MonomialExpansionModel, SymPolyModel],
    summary="Expand a Schur polynomial in the monomial basis.",
    response_description="Kostka numbers as coefficients, or the explicit polynomial in n variables.",
    status_code=200
)
def expand_schur(
        partition: str = Path(..., title="Partition", example="[2,1]"),
        variables: Optional[int] = Query(
            None,
            title="Variables",
            description="Write the polynomial out in this many variables instead.",
            example=3,
            ge=0
        )
) -> Union[MonomialExpansionModel, SymPolyModel]:
    lam = parse_partition(partition)
    check_degree(lam.size())
    f = schur_to_monomial(lam)
    if variables is None:
        return utils.sympoly_model(f)
    check_degree(variables)
    return utils.expansion_model(expand_in_variables(f, variables))


@router.post(
    "/expressions/to-schur",
    response_model=SymPolyModel,
    summary="Rewrite an expression in the Schur basis.",
    response_description="The Schur coefficients.",
    status_code=200
)
def expression_to_schur(f: SymPoly = Depends(get_expression)) -> SymPolyModel:
    return utils.sympoly_model(to_schur_basis(f))


@router.post(
    "/expressions/positivity",
    response_model=PositivityResult,
    summary="Decide whether an expression is Schur positive.",
    response_description="The verdict with the Schur expansion it rests on.",
    status_code=200
)
def expression_positivity(f: SymPoly = Depends(get_expression)) -> PositivityResult:
    g = to_schur_basis(f)
    return PositivityResult(
        positive=is_schur_positive(g),
        input=utils.sympoly_model(f),
        schur_expansion=utils.sympoly_model(g)
    )


@router.get(
    "/bialternant",
    response_model=BialternantResult,
    summary="Evaluate a Schur polynomial as a quotient of determinants.",
    response_description="The exact value with both determinants.",
    status_code=200
)
def get_bialternant(
        partition: str = Query(..., title="Partition", example="[2,1]"),
        x: str = Query(
            ...,
            title="Point",
            description="Pairwise distinct rationals, e.g. `1,2,3` or `1/2,-3`.",
            example="1,2,3"
        )
) -> BialternantResult:
    mu, point = parse_partition(partition), parse_rationals(x)
    check_degree(mu.size())
    check_degree(len(point))
    value = bialternant_eval(mu, point)
    return BialternantResult(
        partition=list(mu),
        point=[utils.render_rational(v) for v in point],
        value=utils.render_rational(value),
        numerator=utils.render_rational(bialternant_numerator(mu, point)),
        vandermonde=utils.render_rational(vandermonde(point))
    )


@router.get(
    "/characters/sym2",
    response_model=CharacterResult,
    response_model_exclude_none=True,
    summary="Character of the symmetric square of GL_2.",
    response_description="trace(S²(A)) with the matrix S²(A).",
    status_code=200
)
def get_sym2_character(
        matrix: str = Query(
            ...,
            title="Matrix",
            description="The entries a,b,c,d of [[a,b],[c,d]].",
            example="1,1,0,1"
        )
) -> CharacterResult:
    entries = parse_rationals(matrix)
    if len(entries) != 4:
        raise_error(400, message=f"expected 4 matrix entries, got {len(entries)}")
    image = sym_square_matrix(RationalMatrix(2, 2, entries))
    return CharacterResult(
        kind="sym2",
        value=utils.render_rational(image.character()),
        matrix=[[utils.render_rational(e) for e in row] for row in image.matrix.iter_rows()]
    )


@router.get(
    "/characters/schur",
    response_model=CharacterResult,
    response_model_exclude_none=True,
    summary="Character of the irreducible polynomial representation indexed by a partition.",
    response_description="s_λ evaluated at the eigenvalues.",
    status_code=200
)
def get_schur_character(
        partition: str = Query(..., title="Partition", example="[2]"),
        eigenvalues: str = Query(..., title="Eigenvalues", example="2,3")
) -> CharacterResult:
    lam, spectrum = parse_partition(partition), parse_rationals(eigenvalues)
    check_degree(lam.size())
    check_degree(len(spectrum))
    return CharacterResult(
        kind="schur",
        value=utils.render_rational(char_schur_eval(lam, spectrum)),
        partition=list(lam),
        eigenvalues=[utils.render_rational(v) for v in spectrum]
    )
