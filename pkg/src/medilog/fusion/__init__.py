"""Safety-first fusion pipeline: scenarios, decisions, reports."""

from .decisions import (
    Action,
    DEFAULT_THRESHOLDS,
    Thresholds,
    band_annotation,
    decide,
    decide_envelope,
    decide_quantum,
)
from .pipeline import fuse_channels, run_case, run_pipeline
from .report import DecisionReport, parse_report, render_report, round6
from .scenario import (
    CaseSpec,
    ResolvedCase,
    Scenario,
    load_scenario,
    parse_scenario,
    resolve_cases,
)

__all__ = [
    "Action",
    "CaseSpec",
    "DEFAULT_THRESHOLDS",
    "DecisionReport",
    "ResolvedCase",
    "Scenario",
    "Thresholds",
    "band_annotation",
    "decide",
    "decide_envelope",
    "decide_quantum",
    "fuse_channels",
    "load_scenario",
    "parse_report",
    "parse_scenario",
    "render_report",
    "resolve_cases",
    "round6",
    "run_case",
    "run_pipeline",
]
