"""Propositional language: syntax, valuation semantics, and grid checkers."""

from .checks import (
    AXIOM_SCHEMATA,
    DESIGNATION_TOL,
    Designation,
    ValidityReport,
    VERDICT_COUNTEREXAMPLE,
    VERDICT_HOLDS,
    VERDICT_VALID,
    axiom_verdicts,
    check_entailment,
    check_validity,
    paraconsistency_probe,
)
from .semantics import ANCHOR_ATOM, Valuation, evaluate, m_degree, normalize
from .syntax import (
    And,
    Atom,
    Bot,
    Formula,
    Iff,
    Implies,
    Med,
    Not,
    Or,
    Top,
    formula_atoms,
    parse,
    render,
)

__all__ = [
    "AXIOM_SCHEMATA",
    "ANCHOR_ATOM",
    "And",
    "Atom",
    "Bot",
    "DESIGNATION_TOL",
    "Designation",
    "Formula",
    "Iff",
    "Implies",
    "Med",
    "Not",
    "Or",
    "Top",
    "ValidityReport",
    "VERDICT_COUNTEREXAMPLE",
    "VERDICT_HOLDS",
    "VERDICT_VALID",
    "Valuation",
    "axiom_verdicts",
    "check_entailment",
    "check_validity",
    "evaluate",
    "formula_atoms",
    "m_degree",
    "normalize",
    "paraconsistency_probe",
    "parse",
    "render",
]
