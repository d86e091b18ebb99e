"""FastAPI service wrapping the core package.

Every endpoint is a stateless request/response wrapper over the pure
library functions; run it with `uvicorn ordermaps.service:app`.
"""

from itertools import islice

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..counting import count_cell, count_family, count_stratum, verify_identity
from ..distributions import (
    DistributionTable,
    conditional_moments,
    conditional_pmf,
    image_size_moments,
    image_size_pmf,
)
from ..oracle import enumerate_family
from ..ranking import rank, unrank
from ..render import approx_str, fraction_str
from ..sampling import monte_carlo_report, sample_chunked
from ..transform import Family, make_partial_map
from ..verify import run_verification
from . import schemas

app = FastAPI(
    title="ordermaps",
    version=__version__,
    description="Exact counting, image-size distributions, ranking and "
                "uniform sampling for order-preserving partial transformations "
                "of the chain {1..n}.",
)


@app.exception_handler(ValueError)
async def value_error_handler(_: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _transformation_model(alpha) -> schemas.TransformationModel:
    return schemas.TransformationModel(n=alpha.n, map=list(alpha.mapping))


def _pmf_response(table: DistributionTable, family: str, n: int, r=None) -> schemas.PmfResponse:
    return schemas.PmfResponse(
        family=family,
        n=n,
        r=r,
        label=table.label,
        normalizer=table.normalizer,
        support=[
            schemas.SupportPoint(k=k, p=fraction_str(p), p_approx=approx_str(p))
            for k, p in table.support
        ],
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/count", response_model=schemas.CountResponse)
def count(req: schemas.CountRequest) -> schemas.CountResponse:
    family = Family(req.family)
    if req.k is not None:
        if req.r is None:
            raise HTTPException(status_code=400, detail="k requires r")
        value = count_cell(family, req.n, req.r, req.k)
    elif req.r is not None:
        value = count_stratum(family, req.n, req.r)
    else:
        include = True if req.include_null is None else req.include_null
        value = count_family(family, req.n, include_null=include)
    return schemas.CountResponse(
        family=req.family, n=req.n, r=req.r, k=req.k,
        include_null=req.include_null, value=value,
    )


@app.post("/pmf", response_model=schemas.PmfResponse)
def pmf(req: schemas.PmfRequest) -> schemas.PmfResponse:
    family = Family(req.family)
    if req.r is not None:
        table = conditional_pmf(family, req.n, req.r)
    else:
        table = image_size_pmf(family, req.n, include_null=req.include_null)
    return _pmf_response(table, req.family, req.n, req.r)


@app.post("/moments", response_model=schemas.MomentsResponse)
def moments(req: schemas.PmfRequest) -> schemas.MomentsResponse:
    family = Family(req.family)
    if req.r is not None:
        mean, variance = conditional_moments(family, req.n, req.r)
    else:
        mean, variance = image_size_moments(family, req.n, include_null=req.include_null)
    return schemas.MomentsResponse(
        family=req.family, n=req.n, r=req.r,
        mean=fraction_str(mean), variance=fraction_str(variance),
        mean_approx=approx_str(mean), variance_approx=approx_str(variance),
    )


@app.post("/enumerate", response_model=schemas.EnumerateResponse)
def enumerate_(req: schemas.EnumerateRequest) -> schemas.EnumerateResponse:
    family = Family(req.family)
    total = count_family(family, req.n, include_null=True)
    items = [
        _transformation_model(alpha)
        for alpha in islice(enumerate_family(family, req.n), req.limit)
    ]
    return schemas.EnumerateResponse(
        family=req.family, n=req.n, total=total,
        truncated=len(items) < total, items=items,
    )


@app.post("/sample", response_model=schemas.SampleResponse)
def sample(req: schemas.SampleRequest) -> schemas.SampleResponse:
    stream = sample_chunked(
        Family(req.family), req.n, req.seed, req.count,
        jobs=req.jobs, include_null=req.include_null,
    )
    return schemas.SampleResponse(
        family=req.family, n=req.n, seed=req.seed, count=req.count,
        items=[_transformation_model(alpha) for alpha in stream],
    )


@app.post("/sample/report", response_model=schemas.SampleReportResponse)
def sample_report(req: schemas.SampleReportRequest) -> schemas.SampleReportResponse:
    report = monte_carlo_report(
        Family(req.family), req.n, req.seed, req.count, include_null=req.include_null,
    )
    return schemas.SampleReportResponse(
        family=req.family,
        n=req.n,
        sample_count=report.sample_count,
        seed=report.seed,
        include_null=report.include_null,
        empirical=report.empirical,
        exact=_pmf_response(report.exact, req.family, req.n),
        tv_distance=fraction_str(report.tv_distance),
        tv_distance_approx=approx_str(report.tv_distance),
    )


@app.post("/rank", response_model=schemas.RankResponse)
def rank_(req: schemas.RankRequest) -> schemas.RankResponse:
    alpha = make_partial_map(req.transformation.n, req.transformation.map)
    index = rank(alpha, Family(req.family))
    return schemas.RankResponse(family=req.family, n=alpha.n, index=index)


@app.post("/unrank", response_model=schemas.UnrankResponse)
def unrank_(req: schemas.UnrankRequest) -> schemas.UnrankResponse:
    alpha = unrank(Family(req.family), req.n, req.index)
    return schemas.UnrankResponse(
        family=req.family, index=req.index, transformation=_transformation_model(alpha),
    )


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    results = run_verification(Family(req.family), req.max_n)
    failure = next((r for r in results if not r.ok), None)
    return schemas.VerifyResponse(
        family=req.family,
        max_n=req.max_n,
        checks=len(results),
        ok=failure is None,
        failure=None if failure is None else schemas.FailureDetail(
            name=failure.name, n=failure.n, detail=failure.detail,
        ),
    )


@app.post("/identity", response_model=schemas.IdentityResponse)
def identity(req: schemas.IdentityRequest) -> schemas.IdentityResponse:
    checked = 0
    if req.id == 1:
        grid = (
            {"a": a, "b": b, "r": r}
            for a in range(req.max + 1)
            for b in range(req.max + 1)
            for r in range(req.max + 1)
        )
    else:
        grid = (
            {"n": n, "r": r}
            for n in range(req.max + 1)
            for r in range(1, req.max + 1)
        )
    for params in grid:
        check = verify_identity(req.id, params)
        checked += 1
        if not check.equal:
            return schemas.IdentityResponse(
                id=req.id, max=req.max, checked=checked, ok=False,
                counterexample=schemas.IdentityCounterexample(
                    identity=check.identity, params=dict(check.params),
                    lhs=check.lhs, rhs=check.rhs,
                ),
            )
    return schemas.IdentityResponse(id=req.id, max=req.max, checked=checked, ok=True)
