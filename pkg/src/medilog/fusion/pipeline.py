"""End-to-end pipeline: channel fusion, mode dispatch, decision, report.

Every numeric report field is rounded to six decimals first and the action is
derived from the rounded values, so a report is always internally consistent:
re-applying the decision rule to the printed degrees reproduces the printed
action.
"""

from __future__ import annotations

from typing import Sequence

from ..core import (
    MediativePair,
    contradiction_degree,
    hesitation_degree,
    mediative_score,
)
from ..errors import WeightMismatchError
from ..formula.semantics import evaluate
from ..formula.syntax import Atom
from ..qmfl.semantics import (
    RNG_ALGORITHM,
    hoeffding_margin,
    quantum_channels,
    quantum_degree,
    simulate_shots,
)
from ..type2.intervals import (
    Envelope,
    diagonal_corner_bounds,
    t2_contradiction_bounds,
    t2_eval_envelope,
    t2_hesitation_bounds,
    type_reduced_channels,
)
from ..type3 import AggregationLevel, aggregate
from .decisions import (
    band_annotation,
    decide,
    decide_envelope,
    decide_quantum,
)
from .report import DecisionReport, round6, round6_pair
from .scenario import ResolvedCase, Scenario, resolve_cases

_WEIGHT_TOL = 1e-9

_P = Atom("p")


def fuse_channels(
    channels: Sequence[MediativePair], weights: Sequence[float]
) -> MediativePair:
    """Componentwise convex combination of channel assessments."""
    if len(channels) != len(weights):
        raise WeightMismatchError(
            f"{len(channels)} channels but {len(weights)} weights"
        )
    total = float(sum(weights))
    if abs(total - 1.0) > _WEIGHT_TOL:
        raise WeightMismatchError(f"weights must be normalized, sum is {total}")
    mu = sum(w * c.mu for w, c in zip(weights, channels))
    nu = sum(w * c.nu for w, c in zip(weights, channels))
    return MediativePair(mu, nu)


def _base_report(case: ResolvedCase) -> dict:
    return {"case": case.label, "mode": case.mode, "tnorm": case.tnorm.value}


def _run_t1(case: ResolvedCase) -> DecisionReport:
    fused = fuse_channels([c.pair for c in case.channels], [c.weight for c in case.channels])
    mu, nu = round6(fused.mu), round6(fused.nu)
    m = round6(mediative_score(mu, nu))
    return DecisionReport(
        **_base_report(case),
        mu=mu,
        nu=nu,
        pi=round6(hesitation_degree(mu, nu)),
        zeta=round6(contradiction_degree(mu, nu)),
        m=m,
        action=decide(m, case.thresholds).value,
    )


def _run_t2(case: ResolvedCase) -> DecisionReport:
    if case.type2_sets is not None:
        mu_set, nu_set, grid_points = case.type2_sets
        mu, nu, mu_interval, nu_interval = type_reduced_channels(mu_set, nu_set, grid_points)
        mu, nu = round6(mu), round6(nu)
        m = round6(mediative_score(mu, nu))
        return DecisionReport(
            **_base_report(case),
            mu=mu,
            nu=nu,
            pi=round6(hesitation_degree(mu, nu)),
            zeta=round6(contradiction_degree(mu, nu)),
            m=m,
            mu_centroid=round6_pair(mu_interval),
            nu_centroid=round6_pair(nu_interval),
            action=decide(m, case.thresholds).value,
        )
    interval = case.envelope_intervals
    env = t2_eval_envelope(interval)
    corner_lo, corner_hi = diagonal_corner_bounds(interval)
    m_lo, m_hi = round6(env.m_lo), round6(env.m_hi)
    rounded_env = Envelope(m_lo=m_lo, m_hi=m_hi, at_lo=env.at_lo, at_hi=env.at_hi)
    return DecisionReport(
        **_base_report(case),
        mu=round6_pair((interval.mu_lo, interval.mu_hi)),
        nu=round6_pair((interval.nu_lo, interval.nu_hi)),
        pi=round6_pair(t2_hesitation_bounds(interval)),
        zeta=round6_pair(t2_contradiction_bounds(interval)),
        m_lo=m_lo,
        m_hi=m_hi,
        corner_lo=round6(corner_lo),
        corner_hi=round6(corner_hi),
        action=decide_envelope(rounded_env, case.thresholds).value,
        action_band=band_annotation(rounded_env, case.thresholds).value,
    )


def _run_t3(case: ResolvedCase) -> DecisionReport:
    assignment, agg = case.assignment, case.aggregator
    pairs = [
        evaluate(_P, assignment.local_valuation(g.id)) for g in assignment.granules
    ]
    mu = aggregate([p.mu for p in pairs], agg)
    nu = aggregate([p.nu for p in pairs], agg)
    if case.level is AggregationLevel.PAIR:
        m_g = mediative_score(mu, nu)
    else:
        m_g = aggregate([mediative_score(p.mu, p.nu) for p in pairs], agg)
    mu, nu, m_g = round6(mu), round6(nu), round6(m_g)
    return DecisionReport(
        **_base_report(case),
        mu=mu,
        nu=nu,
        pi=round6(hesitation_degree(mu, nu)),
        zeta=round6(contradiction_degree(mu, nu)),
        m_g=m_g,
        level=case.level.value,
        action=decide(m_g, case.thresholds).value,
    )


def _run_qmfl(case: ResolvedCase) -> DecisionReport:
    q = case.quantum
    mu, nu, pi, zeta = quantum_channels(q.triple)
    if q.shots > 0:
        estimate, _ = simulate_shots(q.triple, q.shots, q.seed)
        margin = hoeffding_margin(q.shots, q.delta)
        seed, rng = q.seed, RNG_ALGORITHM
    else:
        estimate = quantum_degree(q.triple)
        margin = 0.0
        seed = rng = None
    m_q, margin = round6(estimate), round6(margin)
    return DecisionReport(
        **_base_report(case),
        mu=round6(mu),
        nu=round6(nu),
        pi=round6(pi),
        zeta=round6(zeta),
        m_q=m_q,
        margin=margin,
        shots=q.shots,
        action=decide_quantum(m_q, margin, case.thresholds).value,
        seed=seed,
        rng=rng,
    )


_RUNNERS = {"t1": _run_t1, "t2": _run_t2, "t3": _run_t3, "qmfl": _run_qmfl}


def run_case(case: ResolvedCase) -> DecisionReport:
    return _RUNNERS[case.mode](case)


def run_pipeline(scenario: Scenario) -> list[DecisionReport]:
    """Evaluate every case of a scenario, in case order."""
    return [run_case(case) for case in resolve_cases(scenario)]
