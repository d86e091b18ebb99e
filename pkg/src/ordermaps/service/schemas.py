"""Pydantic request/response models for the HTTP service.

Exact rationals travel as "num/den" strings; decimal fields are
display-only approximations.
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field

FamilyTag = Literal["pt", "po", "poi", "o"]


class TransformationModel(BaseModel):
    n: int = Field(ge=1)
    map: list[tuple[int, int]]


class CountRequest(BaseModel):
    family: FamilyTag
    n: int = Field(ge=1)
    r: Optional[int] = None
    k: Optional[int] = None
    include_null: Optional[bool] = None


class CountResponse(BaseModel):
    family: FamilyTag
    n: int
    r: Optional[int] = None
    k: Optional[int] = None
    include_null: Optional[bool] = None
    value: int


class PmfRequest(BaseModel):
    family: FamilyTag
    n: int = Field(ge=1)
    r: Optional[int] = None
    include_null: Optional[bool] = None


class SupportPoint(BaseModel):
    k: int
    p: str
    p_approx: str


class PmfResponse(BaseModel):
    family: FamilyTag
    n: int
    r: Optional[int] = None
    label: str
    normalizer: int
    support: list[SupportPoint]


class MomentsResponse(BaseModel):
    family: FamilyTag
    n: int
    r: Optional[int] = None
    mean: str
    variance: str
    mean_approx: str
    variance_approx: str


class EnumerateRequest(BaseModel):
    family: FamilyTag
    n: int = Field(ge=1, le=6)
    limit: int = Field(default=10000, ge=1, le=100000)


class EnumerateResponse(BaseModel):
    family: FamilyTag
    n: int
    total: int
    truncated: bool
    items: list[TransformationModel]


class SampleRequest(BaseModel):
    family: FamilyTag
    n: int = Field(ge=1)
    seed: int = 0
    count: int = Field(default=1, ge=0, le=100000)
    jobs: int = Field(default=1, ge=1, le=64)
    include_null: Optional[bool] = None


class SampleResponse(BaseModel):
    family: FamilyTag
    n: int
    seed: int
    count: int
    items: list[TransformationModel]


class SampleReportRequest(BaseModel):
    family: FamilyTag
    n: int = Field(ge=1)
    seed: int = 0
    count: int = Field(default=10000, ge=1, le=1000000)
    include_null: Optional[bool] = None


class SampleReportResponse(BaseModel):
    family: FamilyTag
    n: int
    sample_count: int
    seed: int
    include_null: bool
    empirical: dict[int, int]
    exact: PmfResponse
    tv_distance: str
    tv_distance_approx: str


class RankRequest(BaseModel):
    family: FamilyTag
    transformation: TransformationModel


class RankResponse(BaseModel):
    family: FamilyTag
    n: int
    index: int


class UnrankRequest(BaseModel):
    family: FamilyTag
    n: int = Field(ge=1)
    index: int = Field(ge=0)


class UnrankResponse(BaseModel):
    family: FamilyTag
    index: int
    transformation: TransformationModel


class VerifyRequest(BaseModel):
    family: FamilyTag
    max_n: int = Field(default=4, ge=1, le=6)


class FailureDetail(BaseModel):
    name: str
    n: int
    detail: str


class VerifyResponse(BaseModel):
    family: FamilyTag
    max_n: int
    checks: int
    ok: bool
    failure: Optional[FailureDetail] = None


class IdentityRequest(BaseModel):
    id: int = Field(ge=1, le=4)
    max: int = Field(default=12, ge=0, le=60)


class IdentityCounterexample(BaseModel):
    identity: int
    params: dict[str, int]
    lhs: int
    rhs: int


class IdentityResponse(BaseModel):
    id: int
    max: int
    checked: int
    ok: bool
    counterexample: Optional[IdentityCounterexample] = None
