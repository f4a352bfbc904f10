"""Service-layer operations behind the HTTP endpoints.

These functions carry the whole behavior of the service; the FastAPI app and
the CLI are both thin clients of this layer.  They raise the package's
exception types; transport adapters translate them to status codes or exit
codes.
"""

from __future__ import annotations

from typing import Any

from ..algebra import TNorm
from ..core import contradiction, hesitation, mediative_eval
from ..errors import InvariantError
from ..formula.checks import (
    Designation,
    ValidityReport,
    axiom_verdicts,
    check_entailment,
    check_validity,
    paraconsistency_probe,
)
from ..formula.semantics import Valuation, evaluate, m_degree
from ..formula.syntax import Atom, Not, parse, render
from ..fusion.pipeline import run_case
from ..fusion.scenario import parse_scenario, resolve_cases
from .schemas import (
    AxiomsRequest,
    AxiomsResponse,
    EntailmentRequest,
    EvalRequest,
    EvalResponse,
    PairModel,
    PipelineResponse,
    ProbeRequest,
    ProbeResponse,
    ValidityRequest,
    ValidityResponse,
)


def handle_pipeline(scenario_data: Any, expect_mode: str | None = None) -> PipelineResponse:
    scenario = parse_scenario(scenario_data)
    cases = resolve_cases(scenario)
    if expect_mode is not None:
        bad = [c.label for c in cases if c.mode != expect_mode]
        if bad:
            raise InvariantError(
                f"endpoint expects mode {expect_mode!r}; cases with another mode: {bad}"
            )
    reports = [run_case(c) for c in cases]
    return PipelineResponse(reports=reports, batched=scenario.cases is not None)


def _valuation(req_valuation: dict[str, PairModel], tnorm: str) -> Valuation:
    raw = {name: {"mu": p.mu, "nu": p.nu} for name, p in req_valuation.items()}
    return Valuation.from_mapping(raw, algebra=TNorm(tnorm))


def handle_eval(req: EvalRequest) -> EvalResponse:
    f = parse(req.formula)
    pair = evaluate(f, _valuation(req.valuation, req.tnorm))
    return EvalResponse(
        formula=render(f),
        tnorm=req.tnorm,
        mu=pair.mu,
        nu=pair.nu,
        pi=hesitation(pair),
        zeta=contradiction(pair),
        m=mediative_eval(pair),
    )


def _validity_response(report: ValidityReport) -> ValidityResponse:
    witness = None
    if report.witness is not None:
        witness = {
            name: PairModel(mu=p.mu, nu=p.nu) for name, p in sorted(report.witness.items())
        }
    return ValidityResponse(
        designation=report.designation.value,
        grid_points=report.grid_points,
        atoms=list(report.atoms),
        verdict=report.verdict,
        witness=witness,
        extremal_degree=report.extremal_degree,
        witness_degree=report.witness_degree,
    )


def handle_validity(req: ValidityRequest) -> ValidityResponse:
    report = check_validity(
        parse(req.formula), req.grid, Designation(req.designation), TNorm(req.tnorm)
    )
    return _validity_response(report)


def handle_entailment(req: EntailmentRequest) -> ValidityResponse:
    report = check_entailment(
        [parse(text) for text in req.premises],
        parse(req.conclusion),
        req.grid,
        Designation(req.designation),
        TNorm(req.tnorm),
    )
    return _validity_response(report)


def handle_probe(req: ProbeRequest) -> ProbeResponse:
    witness = paraconsistency_probe(req.threshold, TNorm(req.tnorm))
    if witness is None:
        return ProbeResponse(found=False)
    pair = witness.lookup("p")
    degree = min(m_degree(Atom("p"), witness), m_degree(Not(Atom("p")), witness))
    return ProbeResponse(found=True, mu=pair.mu, nu=pair.nu, degree=degree)


def handle_axioms(req: AxiomsRequest) -> AxiomsResponse:
    verdicts = axiom_verdicts(req.grid, TNorm(req.tnorm))
    return AxiomsResponse(
        verdicts={
            name: {mode: _validity_response(rep) for mode, rep in by_mode.items()}
            for name, by_mode in verdicts.items()
        }
    )
