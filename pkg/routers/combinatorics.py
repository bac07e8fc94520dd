from typing import Optional

from fastapi import APIRouter, Depends, Query

from schurpos import utils
from schurpos.kostka import kostka_matrix, kostka_number
from schurpos.models import KostkaMatrixModel, KostkaNumber, PartitionList, TableauList
from schurpos.parsers import parse_composition, parse_partition
from schurpos.partitions import partitions_of
from schurpos.tableaux import enumerate_ssyt, enumerate_ssyt_content
from .base import check_degree, get_degree, raise_error

router = APIRouter(tags=["Combinatorics"])


@router.get(
    "/partitions/{k}",
    response_model=PartitionList,
    summary="List the partitions of k in canonical order.",
    response_description="The partitions, largest first.",
    status_code=200
)
def get_partitions(k: int = Depends(get_degree)) -> PartitionList:
    order = partitions_of(k)
    return PartitionList(degree=k, count=len(order), partitions=[list(lam) for lam in order])


@router.get(
    "/ssyt",
    response_model=TableauList,
    response_model_exclude_none=True,
    summary="Enumerate semistandard Young tableaux of a shape.",
    response_description="The tableaux, in lexicographic order of their reading words.",
    status_code=200
)
def get_ssyt(
        shape: str = Query(
            ...,
            title="Shape",
            description="The shape as a partition, e.g. `[3,1]`.",
            example="[3,1]"
        ),
        max_entry: Optional[int] = Query(
            None,
            title="Maximum entry",
            description="Bound the entries by this value. Exactly one of `max_entry` and `content` is required.",
            example=2,
            ge=0
        ),
        content: Optional[str] = Query(
            None,
            title="Content",
            description="Fix the multiplicity of each entry, e.g. `[2,1,1]`.",
            example=None
        )
) -> TableauList:
    if (max_entry is None) == (content is None):
        raise_error(400, message="give exactly one of max_entry and content")
    lam = parse_partition(shape)
    check_degree(lam.size())
    if content is not None:
        mu = parse_composition(content)
        return utils.tableau_list_model(lam, enumerate_ssyt_content(lam, mu), content=mu)
    check_degree(max_entry)
    return utils.tableau_list_model(lam, enumerate_ssyt(lam, max_entry), max_entry=max_entry)


@router.get(
    "/kostka",
    response_model=KostkaNumber,
    summary="Compute a single Kostka number.",
    response_description="The number of tableaux of the shape with the given content.",
    status_code=200
)
def get_kostka_number(
        shape: str = Query(..., title="Shape", example="[2,1]"),
        content: str = Query(..., title="Content", example="[1,1,1]")
) -> KostkaNumber:
    lam, mu = parse_partition(shape), parse_composition(content)
    check_degree(lam.size())
    return KostkaNumber(shape=list(lam), content=list(mu), value=kostka_number(lam, mu))


@router.get(
    "/kostka/matrix/{k}",
    response_model=KostkaMatrixModel,
    summary="The Kostka matrix of degree k.",
    response_description="Row-major Kostka numbers with the partition order and row sums.",
    status_code=200
)
def get_kostka_matrix(k: int = Depends(get_degree)) -> KostkaMatrixModel:
    return utils.kostka_matrix_model(kostka_matrix(k))
