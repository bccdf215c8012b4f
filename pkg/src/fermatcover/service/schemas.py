"""Request models for the HTTP service and the in-process CLI dispatch.

Every operation takes a single JSON body; validation failures surface as
pydantic errors (HTTP 422, CLI exit 2).  Field names match the core API.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..covers import DEFAULT_CROSSCHECK_BUDGET
from ..curve import DEFAULT_POINT_BUDGET
from ..zmod import DEFAULT_ENUMERATION_BUDGET


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class PresentationModel(StrictModel):
    label: str = ""
    generator_count: int = Field(ge=0)
    relators: list[list[int]]


class GenusRequest(StrictModel):
    g: int = Field(ge=2)
    k: int = Field(ge=2)


class BaseGenusRequest(StrictModel):
    k: int = Field(ge=2)
    cover_genus: int = Field(ge=2)


class HurwitzRequest(StrictModel):
    cover_genus: int = Field(ge=2)


class AutOrderRequest(StrictModel):
    base_aut: int = Field(ge=1)
    g: int = Field(ge=2)
    k: int = Field(ge=2)


class SylowRequest(StrictModel):
    g: int = Field(ge=2)
    p: int = Field(ge=2)
    r: int = Field(default=1, ge=1)


class HyperellipticRequest(StrictModel):
    g: int = Field(ge=2)
    k: int = Field(ge=2)


class HomologyRequest(StrictModel):
    presentation: PresentationModel
    k: int = Field(ge=2)


class ChainCheckRequest(StrictModel):
    g: int = Field(ge=2)


class TeichmullerRequest(StrictModel):
    genus: int = Field(ge=0)
    cone_count: int = Field(ge=0)


class BuildPresentationRequest(StrictModel):
    kind: str = Field(pattern="^(surface|orbifold)$")
    genus: int = Field(ge=0)
    cone_orders: list[int] = Field(default_factory=list)
    allow_triangular: bool = False

    @model_validator(mode="after")
    def _check_shape(self):
        if self.kind == "surface" and self.cone_orders:
            raise ValueError("surface presentations take no cone orders")
        if self.kind == "orbifold" and not self.cone_orders:
            raise ValueError("orbifold presentations need at least one cone order")
        return self


class CurveRequest(StrictModel):
    g: int = Field(ge=2)
    q: int = Field(ge=3)
    lambdas: list[int] = Field(min_length=1)
    budget: int = Field(default=DEFAULT_POINT_BUDGET, ge=2)


class CaseARequest(StrictModel):
    g: int = Field(ge=2)
    lambdas: list[int | str] = Field(min_length=1)
    sign_choices: dict[str, int] | None = None
    num_primes: int = Field(default=3, ge=1)
    lower: int = Field(default=20, ge=3)
    samples: int = Field(default=10, ge=0)
    seed: int = 0
    search_limit: int = Field(default=1_000_000, ge=10)


class CaseBRequest(StrictModel):
    g: int = Field(ge=2)
    q: int = Field(ge=3)
    lambdas: list[int] = Field(min_length=1)
    samples: int = Field(default=10, ge=0)
    seed: int = 0


class KernelRequest(StrictModel):
    k: int = Field(ge=2)
    theta: list[list[int]] = Field(min_length=1)

    @model_validator(mode="after")
    def _rectangular(self):
        widths = {len(row) for row in self.theta}
        if len(widths) != 1 or 0 in widths:
            raise ValueError("theta must be a nonempty rectangular matrix")
        return self


class FiberCheckRequest(StrictModel):
    g: int = Field(ge=1)
    k: int = Field(ge=2)
    budget: int = Field(default=DEFAULT_ENUMERATION_BUDGET, ge=2)


class GilmanRequest(StrictModel):
    p: int = Field(ge=2)
    r: int = Field(ge=3)
    k: int | None = Field(default=None, ge=2)


class ClosureRequest(StrictModel):
    k: int = Field(ge=2)
    p: int = Field(ge=2)
    r: int = Field(ge=3)
    kernel_basis: list[list[int]]
    crosscheck_budget: int = Field(default=DEFAULT_CROSSCHECK_BUDGET, ge=1)

    @model_validator(mode="after")
    def _rows_match(self):
        width = (self.p - 1) * (self.r - 2)
        for row in self.kernel_basis:
            if len(row) != width:
                raise ValueError(
                    f"kernel basis rows must have length (p-1)(r-2) = {width}, got {len(row)}"
                )
        return self


class SValuesRequest(StrictModel):
    k: int = Field(ge=2)
    p: int = Field(ge=2)
    r: int = Field(ge=3)
    budget: int = Field(default=DEFAULT_ENUMERATION_BUDGET, ge=2)


class LiftExponentRequest(StrictModel):
    k: int = Field(ge=2)
    p: int = Field(ge=2)
