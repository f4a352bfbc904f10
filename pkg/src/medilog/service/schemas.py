"""Request/response models for the HTTP service.

Scenario evaluation reuses the scenario schema and decision-report models
from the fusion package; the models here cover the formula-level operations
(evaluation, validity, entailment, paraconsistency, axiom templates).
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict

from ..fusion.report import DecisionReport

_STRICT = ConfigDict(extra="forbid")

TNormName = Literal["lukasiewicz", "godel", "product"]
DesignationName = Literal["mu", "m"]


class PairModel(BaseModel):
    model_config = _STRICT
    mu: float
    nu: float


class PipelineResponse(BaseModel):
    reports: list[DecisionReport]
    batched: bool


class EvalRequest(BaseModel):
    model_config = _STRICT
    formula: str
    valuation: dict[str, PairModel]
    tnorm: TNormName = "lukasiewicz"


class EvalResponse(BaseModel):
    formula: str
    tnorm: TNormName
    mu: float
    nu: float
    pi: float
    zeta: float
    m: float


class ValidityRequest(BaseModel):
    model_config = _STRICT
    formula: str
    grid: int = 11
    designation: DesignationName = "mu"
    tnorm: TNormName = "lukasiewicz"


class EntailmentRequest(BaseModel):
    model_config = _STRICT
    premises: list[str]
    conclusion: str
    grid: int = 11
    designation: DesignationName = "mu"
    tnorm: TNormName = "lukasiewicz"


class ValidityResponse(BaseModel):
    designation: DesignationName
    grid_points: int
    atoms: list[str]
    verdict: str
    witness: Optional[dict[str, PairModel]] = None
    extremal_degree: Optional[float] = None
    witness_degree: Optional[float] = None


class ProbeRequest(BaseModel):
    model_config = _STRICT
    threshold: float
    tnorm: TNormName = "lukasiewicz"


class ProbeResponse(BaseModel):
    found: bool
    mu: Optional[float] = None
    nu: Optional[float] = None
    degree: Optional[float] = None


class AxiomsRequest(BaseModel):
    model_config = _STRICT
    grid: int = 11
    tnorm: TNormName = "lukasiewicz"


class AxiomsResponse(BaseModel):
    verdicts: dict[str, dict[str, ValidityResponse]]


class HealthResponse(BaseModel):
    status: str
    version: str
