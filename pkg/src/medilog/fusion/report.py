"""Decision report model and machine/human-readable rendering.

The JSON rendering is schema-stable: keys appear in the declared order,
``None`` fields are omitted, and every degree is rounded to six decimals when
the report is built, so rendering and re-parsing preserve all numeric fields
exactly.  The table rendering shows one row per case with (mu, nu), hesitation, contradiction, the mode's
degree column, and the action.
"""

from __future__ import annotations

import json
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict

Bound = tuple[float, float]
DegreeField = Union[float, Bound]


def round6(value: float) -> float:
    """Report-level degree rounding (six decimals)."""
    return round(float(value), 6)


def round6_pair(value: tuple[float, float]) -> Bound:
    return (round6(value[0]), round6(value[1]))


class DecisionReport(BaseModel):
    """One evaluated case.  Interval-valued modes use [lo, hi] pairs."""

    model_config = ConfigDict(extra="forbid")

    case: str
    mode: str
    tnorm: str
    mu: Optional[DegreeField] = None
    nu: Optional[DegreeField] = None
    pi: Optional[DegreeField] = None
    zeta: Optional[DegreeField] = None
    m: Optional[float] = None
    mu_centroid: Optional[Bound] = None
    nu_centroid: Optional[Bound] = None
    m_lo: Optional[float] = None
    m_hi: Optional[float] = None
    corner_lo: Optional[float] = None
    corner_hi: Optional[float] = None
    action_band: Optional[str] = None
    m_g: Optional[float] = None
    level: Optional[str] = None
    m_q: Optional[float] = None
    margin: Optional[float] = None
    shots: Optional[int] = None
    action: str = ""
    seed: Optional[int] = None
    rng: Optional[str] = None


Reportish = Union[DecisionReport, list[DecisionReport]]


def _fmt(value) -> str:
    if isinstance(value, tuple | list):
        return "[" + ", ".join(f"{v:.6f}" for v in value) + "]"
    return f"{value:.6f}"


def _degree_column(r: DecisionReport) -> tuple[str, str]:
    if r.m is not None:
        return "M", _fmt(r.m)
    if r.m_lo is not None:
        return "[M_L, M_U]", _fmt((r.m_lo, r.m_hi))
    if r.m_g is not None:
        return "M_G", _fmt(r.m_g)
    if r.m_q is not None:
        text = _fmt(r.m_q)
        if r.margin:
            text += f" +/- {r.margin:.6f}"
        return "M_q", text
    return "M", ""


def _table(reports: list[DecisionReport]) -> str:
    header = ["case", "mode", "(mu, nu)", "pi", "zeta", "M", "action"]
    rows = []
    for r in reports:
        _, degree_text = _degree_column(r)
        mu = _fmt(r.mu) if r.mu is not None else "-"
        nu = _fmt(r.nu) if r.nu is not None else "-"
        pair = f"({mu}, {nu})"
        pi = _fmt(r.pi) if r.pi is not None else "-"
        zeta = _fmt(r.zeta) if r.zeta is not None else "-"
        action = r.action
        if r.action_band is not None and r.action_band != r.action:
            action += f" (band: {r.action_band})"
        rows.append([r.case, r.mode, pair, pi, zeta, degree_text, action])
    widths = [max(len(header[i]), *(len(row[i]) for row in rows)) for i in range(len(header))]
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(header)),
        "  ".join("-" * w for w in widths),
    ]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    return "\n".join(lines) + "\n"


def render_report(report: Reportish, format: str = "json") -> str:
    """Serialize a report (or batch) as canonical JSON or a fixed-width table."""
    if format == "json":
        if isinstance(report, list):
            payload = [r.model_dump(exclude_none=True) for r in report]
        else:
            payload = report.model_dump(exclude_none=True)
        return json.dumps(payload, indent=2) + "\n"
    if format == "table":
        reports = report if isinstance(report, list) else [report]
        return _table(reports)
    raise ValueError(f"unknown report format {format!r}")


def parse_report(text: str) -> Reportish:
    """Inverse of the JSON rendering."""
    data = json.loads(text)
    if isinstance(data, list):
        return [DecisionReport.model_validate(item) for item in data]
    return DecisionReport.model_validate(data)
