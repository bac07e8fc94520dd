from fastapi import APIRouter, Depends, Query

import cfg
from schurpos import utils
from schurpos.conegeom import sample_positivity, schur_positivity_probability, slice_volume_ratio, slice_volumes
from schurpos.kostka import k_lambda
from schurpos.models import MonteCarloReport, ProbabilityResult, SliceRatioResult
from schurpos.partitions import partitions_of
from .base import get_degree, raise_error

router = APIRouter(tags=["Cone geometry"])


@router.get(
    "/probability/{k}",
    response_model=ProbabilityResult,
    summary="Exact probability that a random nonnegative symmetric polynomial of degree k is Schur positive.",
    response_description="The product of 1/k_λ over the partitions of k.",
    status_code=200
)
def get_probability(k: int = Depends(get_degree)) -> ProbabilityResult:
    p = schur_positivity_probability(k)
    return ProbabilityResult(
        degree=k,
        probability=utils.render_rational(p),
        probability_approx=float(p),
        k_lambda=[k_lambda(lam) for lam in partitions_of(k)]
    )


@router.get(
    "/slice/{k}",
    response_model=SliceRatioResult,
    summary="Volumes of the coefficient-sum-1 slices of the monomial and Schur-positive cones.",
    response_description="Both slice volumes and their ratio, from determinants.",
    status_code=200
)
def get_slice(k: int = Depends(get_degree)) -> SliceRatioResult:
    ratio = slice_volume_ratio(k)
    monomial_volume, schur_volume = slice_volumes(k)
    return SliceRatioResult(
        degree=k,
        ratio=utils.render_rational(ratio),
        ratio_approx=float(ratio),
        monomial_slice_volume=utils.render_rational(monomial_volume),
        schur_slice_volume=utils.render_rational(schur_volume),
        dimension=len(partitions_of(k)) - 1
    )


@router.get(
    "/sample/{k}",
    response_model=MonteCarloReport,
    summary="Monte Carlo estimate of the Schur-positivity probability.",
    response_description="Positive count, estimate and standard error next to the exact value.",
    status_code=200
)
def get_sample(
        k: int = Depends(get_degree),
        samples: int = Query(
            cfg.DEFAULT_SAMPLES,
            title="Samples",
            description="Number of uniform points drawn from the coefficient simplex.",
            gt=0
        ),
        seed: int = Query(
            cfg.DEFAULT_SEED,
            title="Seed",
            description="The same seed and sample count always give the same report."
        )
) -> MonteCarloReport:
    if samples > cfg.MAX_SAMPLES:
        raise_error(400, message=f"{samples} samples exceed the server limit of {cfg.MAX_SAMPLES}")
    return sample_positivity(k, samples, seed, workers=cfg.WORKERS)
