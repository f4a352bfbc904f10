"""Interval propagation and the two evaluation modes for projected bounds.

Once an IT2 set has been projected to scalar bounds, connectives propagate
those bounds by endpoint evaluation (all operations are monotone in each
argument; the residuum is antitone in its antecedent).  The mediative
evaluation over a bounds rectangle is piecewise *quadratic* with the regime
boundary mu + nu = 1, so the exact envelope needs more than the rectangle
corners: along horizontal edges d/dmu changes sign at mu + nu = 1/2, giving
edge-interior minima.  The solver below evaluates corners, those edge
critical points, and the crossings with the regime boundary, which is a
complete candidate set (vertical restrictions are monotone in nu).

The diagonal-corner bounds M(mu_lo, nu_hi), M(mu_hi, nu_lo) are also exposed:
they are the conventional pessimistic/optimistic summary and are reported
alongside, never instead of, the true envelope.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import DEFAULT_TNORM, TNorm, as_degree, residuum, tconorm, tnorm
from ..core import mediative_score
from ..errors import DomainError
from .sets import IT2Set, KM_GRID_POINTS, km_type_reduce


@dataclass(frozen=True)
class IntervalPair:
    """Projected scalar bounds [mu_lo, mu_hi] x [nu_lo, nu_hi]."""

    mu_lo: float
    mu_hi: float
    nu_lo: float
    nu_hi: float

    def __post_init__(self):
        for name in ("mu_lo", "mu_hi", "nu_lo", "nu_hi"):
            object.__setattr__(self, name, as_degree(getattr(self, name), what=name))
        if self.mu_lo > self.mu_hi:
            raise DomainError(f"mu interval inverted: [{self.mu_lo}, {self.mu_hi}]")
        if self.nu_lo > self.nu_hi:
            raise DomainError(f"nu interval inverted: [{self.nu_lo}, {self.nu_hi}]")

    @classmethod
    def degenerate(cls, mu: float, nu: float) -> "IntervalPair":
        return cls(mu, mu, nu, nu)


def it2_and(p: IntervalPair, q: IntervalPair, kind: TNorm = DEFAULT_TNORM) -> IntervalPair:
    return IntervalPair(
        tnorm(kind, p.mu_lo, q.mu_lo),
        tnorm(kind, p.mu_hi, q.mu_hi),
        tconorm(kind, p.nu_lo, q.nu_lo),
        tconorm(kind, p.nu_hi, q.nu_hi),
    )


def it2_or(p: IntervalPair, q: IntervalPair, kind: TNorm = DEFAULT_TNORM) -> IntervalPair:
    return IntervalPair(
        tconorm(kind, p.mu_lo, q.mu_lo),
        tconorm(kind, p.mu_hi, q.mu_hi),
        tnorm(kind, p.nu_lo, q.nu_lo),
        tnorm(kind, p.nu_hi, q.nu_hi),
    )


def it2_not(p: IntervalPair) -> IntervalPair:
    """Swap the truth and falsity intervals."""
    return IntervalPair(p.nu_lo, p.nu_hi, p.mu_lo, p.mu_hi)


def it2_implies(p: IntervalPair, q: IntervalPair, kind: TNorm = DEFAULT_TNORM) -> IntervalPair:
    # Residuum is antitone in its antecedent, monotone in its consequent.
    return IntervalPair(
        residuum(kind, p.mu_hi, q.mu_lo),
        residuum(kind, p.mu_lo, q.mu_hi),
        residuum(kind, q.nu_hi, p.nu_lo),
        residuum(kind, q.nu_lo, p.nu_hi),
    )


def t2_hesitation_bounds(p: IntervalPair) -> tuple[float, float]:
    """[H_L, H_U]: endpoint envelope of max(0, 1 - mu - nu) over the rectangle."""
    return (
        max(0.0, 1.0 - p.mu_hi - p.nu_hi),
        max(0.0, 1.0 - p.mu_lo - p.nu_lo),
    )


def t2_contradiction_bounds(p: IntervalPair) -> tuple[float, float]:
    """[C_L, C_U]: endpoint envelope of max(0, mu + nu - 1) over the rectangle."""
    return (
        max(0.0, p.mu_lo + p.nu_lo - 1.0),
        max(0.0, p.mu_hi + p.nu_hi - 1.0),
    )


@dataclass(frozen=True)
class Envelope:
    """Exact min/max of the mediative evaluation over a bounds rectangle."""

    m_lo: float
    m_hi: float
    at_lo: tuple[float, float]
    at_hi: tuple[float, float]


def _envelope_candidates(p: IntervalPair) -> list[tuple[float, float]]:
    cands = [
        (p.mu_lo, p.nu_lo),
        (p.mu_lo, p.nu_hi),
        (p.mu_hi, p.nu_lo),
        (p.mu_hi, p.nu_hi),
    ]
    for nu in (p.nu_lo, p.nu_hi):
        crit = 0.5 - nu  # sign change of dM/dmu inside the mu+nu <= 1 regime
        if p.mu_lo < crit < p.mu_hi:
            cands.append((crit, nu))
        seam = 1.0 - nu  # regime boundary crossing on a horizontal edge
        if p.mu_lo < seam < p.mu_hi:
            cands.append((seam, nu))
    for mu in (p.mu_lo, p.mu_hi):
        seam = 1.0 - mu
        if p.nu_lo < seam < p.nu_hi:
            cands.append((mu, seam))
    return cands


def t2_eval_envelope(p: IntervalPair) -> Envelope:
    """Exact envelope [M_L, M_U] of the mediative evaluation over ``p``."""
    best_lo = best_hi = None
    at_lo = at_hi = (p.mu_lo, p.nu_lo)
    for mu, nu in _envelope_candidates(p):
        m = mediative_score(mu, nu)
        if best_lo is None or m < best_lo:
            best_lo, at_lo = m, (mu, nu)
        if best_hi is None or m > best_hi:
            best_hi, at_hi = m, (mu, nu)
    return Envelope(m_lo=best_lo, m_hi=best_hi, at_lo=at_lo, at_hi=at_hi)


def diagonal_corner_bounds(p: IntervalPair) -> tuple[float, float]:
    """Pessimistic/optimistic slice scores [M(mu_lo, nu_hi), M(mu_hi, nu_lo)].

    These always lie inside the true envelope but need not attain it; the
    rectangle [0, 0.1]^2 is the standard counterexample.
    """
    return mediative_score(p.mu_lo, p.nu_hi), mediative_score(p.mu_hi, p.nu_lo)


def t2_eval_type_reduced(
    mu_set: IT2Set, nu_set: IT2Set, grid_points: int = KM_GRID_POINTS
) -> float:
    """Type-reduce both sets to centroid midpoints, then evaluate mediatively."""
    mu_l, mu_r = km_type_reduce(mu_set, grid_points)
    nu_l, nu_r = km_type_reduce(nu_set, grid_points)
    return mediative_score(0.5 * (mu_l + mu_r), 0.5 * (nu_l + nu_r))


def type_reduced_channels(
    mu_set: IT2Set, nu_set: IT2Set, grid_points: int = KM_GRID_POINTS
) -> tuple[float, float, tuple[float, float], tuple[float, float]]:
    """Midpoint channels plus the raw centroid intervals (report plumbing)."""
    mu_interval = km_type_reduce(mu_set, grid_points)
    nu_interval = km_type_reduce(nu_set, grid_points)
    mu = 0.5 * (mu_interval[0] + mu_interval[1])
    nu = 0.5 * (nu_interval[0] + nu_interval[1])
    return mu, nu, mu_interval, nu_interval
