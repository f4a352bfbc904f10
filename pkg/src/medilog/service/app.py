"""FastAPI application exposing the engine as a stateless evaluation service.

Scenario evaluation is request/response: POST a scenario document, receive the
decision reports.  Input problems map to 400 with the offending detail;
engine bugs map to 500.
"""

from __future__ import annotations

from typing import Any

from fastapi import Body, FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import InputError, MedilogError
from . import handlers
from .schemas import (
    AxiomsRequest,
    AxiomsResponse,
    EntailmentRequest,
    EvalRequest,
    EvalResponse,
    HealthResponse,
    PipelineResponse,
    ProbeRequest,
    ProbeResponse,
    ValidityRequest,
    ValidityResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="medilog",
        version=__version__,
        description="Mediative fuzzy logic evaluation service",
    )

    @app.exception_handler(MedilogError)
    async def _medilog_error(request: Request, exc: MedilogError) -> JSONResponse:
        status = 400 if isinstance(exc, InputError) else 500
        return JSONResponse(
            status_code=status,
            content={"error": str(exc), "kind": type(exc).__name__},
        )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/v1/fuse", response_model=PipelineResponse, response_model_exclude_none=True)
    def fuse(scenario: Any = Body(...)) -> PipelineResponse:
        return handlers.handle_pipeline(scenario)

    @app.post("/v1/type2", response_model=PipelineResponse, response_model_exclude_none=True)
    def type2(scenario: Any = Body(...)) -> PipelineResponse:
        return handlers.handle_pipeline(scenario, expect_mode="t2")

    @app.post("/v1/qmfl", response_model=PipelineResponse, response_model_exclude_none=True)
    def qmfl(scenario: Any = Body(...)) -> PipelineResponse:
        return handlers.handle_pipeline(scenario, expect_mode="qmfl")

    @app.post("/v1/eval", response_model=EvalResponse)
    def eval_formula(req: EvalRequest) -> EvalResponse:
        return handlers.handle_eval(req)

    @app.post("/v1/validity", response_model=ValidityResponse, response_model_exclude_none=True)
    def validity(req: ValidityRequest) -> ValidityResponse:
        return handlers.handle_validity(req)

    @app.post(
        "/v1/entailment", response_model=ValidityResponse, response_model_exclude_none=True
    )
    def entailment(req: EntailmentRequest) -> ValidityResponse:
        return handlers.handle_entailment(req)

    @app.post(
        "/v1/paraconsistency", response_model=ProbeResponse, response_model_exclude_none=True
    )
    def paraconsistency(req: ProbeRequest) -> ProbeResponse:
        return handlers.handle_probe(req)

    @app.post("/v1/axioms", response_model=AxiomsResponse, response_model_exclude_none=True)
    def axioms(req: AxiomsRequest) -> AxiomsResponse:
        return handlers.handle_axioms(req)

    return app


app = create_app()
