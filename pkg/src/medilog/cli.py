"""Command-line client for the evaluation service.

The CLI carries no domain logic: each subcommand builds a service request and
dispatches it, by default straight into the in-process service layer (no
server needed; batch runs stay deterministic), or over HTTP when ``--server``
points at a running instance (`medilog serve`).

Exit codes: 0 success, 1 input error, 2 internal error.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import click
from pydantic import ValidationError

from .errors import InputError, MedilogError, ScenarioIOError, SchemaError
from .fusion.report import render_report
from .service import handlers
from .service.schemas import (
    AxiomsRequest,
    AxiomsResponse,
    EntailmentRequest,
    EvalRequest,
    EvalResponse,
    PipelineResponse,
    ValidityRequest,
    ValidityResponse,
)

_TNORM_CHOICES = click.Choice(["lukasiewicz", "godel", "product"])


class RemoteError(MedilogError):
    """Transport-level failure talking to a remote service."""


class ServiceClient:
    """Dispatch requests in process or to a remote HTTP service."""

    def __init__(self, server: str | None):
        self.server = server.rstrip("/") if server else None

    def _post(self, path: str, payload: Any) -> Any:
        import httpx

        try:
            response = httpx.post(f"{self.server}{path}", json=payload, timeout=300.0)
        except httpx.HTTPError as exc:
            raise RemoteError(f"cannot reach service at {self.server}: {exc}") from exc
        if response.status_code >= 400:
            try:
                detail = response.json().get("error", response.text)
            except ValueError:
                detail = response.text
            if response.status_code == 422:
                raise SchemaError(detail)
            if response.status_code == 400:
                raise InputError(detail)
            raise RemoteError(f"service error {response.status_code}: {detail}")
        return response.json()

    def pipeline(self, scenario: Any, expect_mode: str | None, endpoint: str) -> PipelineResponse:
        if self.server is None:
            return handlers.handle_pipeline(scenario, expect_mode)
        return PipelineResponse.model_validate(self._post(endpoint, scenario))

    def eval_formula(self, req: EvalRequest) -> EvalResponse:
        if self.server is None:
            return handlers.handle_eval(req)
        return EvalResponse.model_validate(self._post("/v1/eval", req.model_dump()))

    def validity(self, req: ValidityRequest) -> ValidityResponse:
        if self.server is None:
            return handlers.handle_validity(req)
        return ValidityResponse.model_validate(self._post("/v1/validity", req.model_dump()))

    def entailment(self, req: EntailmentRequest) -> ValidityResponse:
        if self.server is None:
            return handlers.handle_entailment(req)
        return ValidityResponse.model_validate(self._post("/v1/entailment", req.model_dump()))

    def axioms(self, req: AxiomsRequest) -> AxiomsResponse:
        if self.server is None:
            return handlers.handle_axioms(req)
        return AxiomsResponse.model_validate(self._post("/v1/axioms", req.model_dump()))


def _read_json(path: str, what: str) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ScenarioIOError(f"cannot read {what} file {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON in {what} file {path}: {exc}") from exc


def _apply_tnorm_override(scenario: Any, tnorm: str | None) -> Any:
    if tnorm is None or not isinstance(scenario, dict):
        return scenario
    scenario = dict(scenario)
    scenario["tnorm"] = tnorm
    if isinstance(scenario.get("cases"), list):
        scenario["cases"] = [
            {k: v for k, v in case.items() if k != "tnorm"} if isinstance(case, dict) else case
            for case in scenario["cases"]
        ]
    return scenario


def _run(ctx: click.Context, action) -> None:
    try:
        action()
    except InputError as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(1)
    except MedilogError as exc:
        click.echo(f"internal error: {exc}", err=True)
        ctx.exit(2)
    except Exception as exc:  # noqa: BLE001 - last-resort CLI boundary
        click.echo(f"internal error: {type(exc).__name__}: {exc}", err=True)
        ctx.exit(2)


def _emit_pipeline(result: PipelineResponse, fmt: str) -> None:
    payload = result.reports if result.batched else result.reports[0]
    click.echo(render_report(payload, fmt), nl=False)


@click.group()
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "table"]),
    default="json",
    show_default=True,
    help="Output rendering.",
)
@click.option("--tnorm", type=_TNORM_CHOICES, default=None, help="Override the algebra.")
@click.option(
    "--server",
    default=None,
    metavar="URL",
    help="Base URL of a running service; omit to evaluate in process.",
)
@click.pass_context
def main(ctx: click.Context, fmt: str, tnorm: str | None, server: str | None) -> None:
    """Mediative fuzzy logic engine."""
    ctx.obj = {"fmt": fmt, "tnorm": tnorm, "client": ServiceClient(server)}


def _pipeline_command(ctx: click.Context, scenario_path: str, expect_mode: str | None,
                      endpoint: str) -> None:
    obj = ctx.obj

    def action() -> None:
        scenario = _apply_tnorm_override(_read_json(scenario_path, "scenario"), obj["tnorm"])
        result = obj["client"].pipeline(scenario, expect_mode, endpoint)
        _emit_pipeline(result, obj["fmt"])

    _run(ctx, action)


@main.command()
@click.argument("scenario", type=click.Path())
@click.pass_context
def fuse(ctx: click.Context, scenario: str) -> None:
    """Run the fusion pipeline on a scenario file (any mode)."""
    _pipeline_command(ctx, scenario, None, "/v1/fuse")


@main.command()
@click.argument("scenario", type=click.Path())
@click.pass_context
def type2(ctx: click.Context, scenario: str) -> None:
    """Run an interval type-2 scenario (type-reduced or envelope mode)."""
    _pipeline_command(ctx, scenario, "t2", "/v1/type2")


@main.command()
@click.argument("scenario", type=click.Path())
@click.pass_context
def qmfl(ctx: click.Context, scenario: str) -> None:
    """Run a quantum scenario (exact expectations or finite shots)."""
    _pipeline_command(ctx, scenario, "qmfl", "/v1/qmfl")


@main.command("eval")
@click.option("--formula", required=True, help="Formula in the ASCII grammar.")
@click.option(
    "--valuation",
    "valuation_path",
    required=True,
    type=click.Path(),
    help='JSON file mapping atoms to {"mu": x, "nu": y}.',
)
@click.pass_context
def eval_cmd(ctx: click.Context, formula: str, valuation_path: str) -> None:
    """Evaluate a formula under a valuation file."""
    obj = ctx.obj

    def action() -> None:
        raw = _read_json(valuation_path, "valuation")
        try:
            req = EvalRequest(
                formula=formula, valuation=raw, tnorm=obj["tnorm"] or "lukasiewicz"
            )
        except ValidationError as exc:
            first = exc.errors()[0]
            loc = ".".join(str(part) for part in first["loc"])
            raise SchemaError(first["msg"], path=loc) from exc
        result = obj["client"].eval_formula(req)
        if obj["fmt"] == "json":
            click.echo(result.model_dump_json(indent=2))
        else:
            click.echo(
                f"{result.formula}: (mu, nu) = ({result.mu:.6f}, {result.nu:.6f})  "
                f"pi = {result.pi:.6f}  zeta = {result.zeta:.6f}  M = {result.m:.6f}"
            )

    _run(ctx, action)


def _echo_validity(result: ValidityResponse, fmt: str, label: str | None = None) -> None:
    if fmt == "json":
        click.echo(result.model_dump_json(indent=2, exclude_none=True))
        return
    prefix = f"{label}/" if label else ""
    line = f"{prefix}{result.designation}: {result.verdict} (grid {result.grid_points})"
    if result.witness is not None:
        parts = ", ".join(
            f"{name}=({p.mu:.6f}, {p.nu:.6f})" for name, p in result.witness.items()
        )
        line += f"  witness: {parts or '(any valuation)'}  degree {result.witness_degree:.6f}"
    if result.extremal_degree is not None:
        line += f"  extremal degree {result.extremal_degree:.6f}"
    click.echo(line)


@main.command()
@click.option("--formula", default=None, help="Formula in the ASCII grammar.")
@click.option("--grid", default=11, show_default=True, help="Grid points per atom coordinate.")
@click.option(
    "--designation",
    type=click.Choice(["mu", "m"]),
    default="mu",
    show_default=True,
    help="Designated-value criterion.",
)
@click.option("--axioms", is_flag=True, help="Check the built-in axiom templates instead.")
@click.pass_context
def validity(ctx: click.Context, formula: str | None, grid: int, designation: str,
             axioms: bool) -> None:
    """Grid-check a formula (or the axiom templates) for validity."""
    obj = ctx.obj
    tnorm = obj["tnorm"] or "lukasiewicz"

    def action() -> None:
        if axioms:
            result = obj["client"].axioms(AxiomsRequest(grid=grid, tnorm=tnorm))
            if obj["fmt"] == "json":
                click.echo(result.model_dump_json(indent=2, exclude_none=True))
            else:
                for name, by_mode in result.verdicts.items():
                    for rep in by_mode.values():
                        _echo_validity(rep, "table", label=name)
            return
        if formula is None:
            raise InputError("provide --formula or --axioms")
        req = ValidityRequest(
            formula=formula, grid=grid, designation=designation, tnorm=tnorm
        )
        _echo_validity(obj["client"].validity(req), obj["fmt"])

    _run(ctx, action)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the evaluation service with uvicorn."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
