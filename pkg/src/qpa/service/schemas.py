"""Pydantic request/response models for the calculator service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator


class SectorRequest(BaseModel):
    shape: str = Field(..., description="sector rows, e.g. '2,0'")
    k: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    spectrum: str = Field(..., description="rationals or decimals, e.g. '3/4,1/4'")
    environment: Optional[str] = None
    objective: Literal["all", "one"] = "all"


class SectorResponse(BaseModel):
    shape: str
    k: int
    m: int
    environment: str
    objective: str
    fidelity: str


class OverallRequest(BaseModel):
    n: int = Field(..., ge=1)
    d: int = Field(..., ge=1)
    k: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    spectrum: str
    rule: Literal["overhang", "optimal", "explicit"] = "overhang"
    objective: Literal["all", "one"] = "all"
    removal: Optional[str] = Field(None, description="explicit removal counts, e.g. '1,0'")
    float_mode: bool = False


class AsymptoteRequest(BaseModel):
    kind: Literal[
        "intensive", "extensive", "one-site", "all-bound", "one-bound",
        "threshold", "concentration",
    ]
    spectrum: Optional[str] = None
    k: int = 1
    m: Optional[int] = None
    n: Optional[int] = None
    rate: Optional[float] = Field(None, alias="R")
    objective: Literal["all", "one"] = "all"
    d_k_min: Optional[float] = None
    alpha: Optional[float] = None

    model_config = {"populate_by_name": True}


class AsymptoteResponse(BaseModel):
    kind: str
    value: float
    valid: Optional[bool] = None
    extras: dict = {}


class PhaseDiagramRequest(BaseModel):
    family: Literal["depolarized", "explicit"] = "depolarized"
    d: Optional[int] = Field(None, description="local dimension; omit for the d->inf limit")
    k: int = 1
    mode: Literal["all", "one"] = "all"
    lambdas: list[float] = Field(default_factory=lambda: [0.2, 0.4, 0.6, 0.8])
    rates: list[float] = Field(default_factory=lambda: [0.1, 0.25, 0.5, 0.75, 1.0])
    spectra: Optional[list[str]] = Field(
        None, description="explicit family: one spectrum string per lambda"
    )

    @field_validator("rates", "lambdas")
    @classmethod
    def _nonempty(cls, v: list[float]) -> list[float]:
        if not v:
            raise ValueError("grid must be nonempty")
        return v


class PhaseDiagramResponse(BaseModel):
    rows: list[dict]
    diagnostics: list[str] = []


class VerifyRequest(BaseModel):
    suite: str
    seed: Optional[int] = None
    cases: Optional[int] = None
    max_n: Optional[int] = None
    samples: Optional[int] = None


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    cases: int
    violations: int
    counterexample: Optional[dict] = None
    seed: Optional[int] = None
    params: dict = {}
