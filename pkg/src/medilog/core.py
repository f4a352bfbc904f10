"""Type-1 mediative truth values and the mediative operator.

A mediative truth value is a pair (mu, nu) of independent agreement and
non-agreement degrees; mu + nu may exceed 1 (overdetermined evidence) or fall
short of it (incomplete evidence).  Hesitation and contradiction are the
positive parts of that defect and are never simultaneously positive.  The
mediative operator blends an agreement channel ``a`` with a
lack-of-disagreement channel ``b`` using weights derived from hesitation and
contradiction, and the scalar mediative evaluation applies it with a = mu and
b = 1 - nu.

Corner worth knowing: total ignorance evaluates high -- ``mediative_score(0, 0)
== 1`` because full hesitation puts all weight on the lack-of-disagreement
channel, which is maximal when nothing disagrees.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    DEFAULT_TNORM,
    TNorm,
    as_degree,
    residuum,
    tconorm,
    tnorm,
)
from .errors import ParameterError

_M1_BAND = 1e-9


@dataclass(frozen=True)
class MediativePair:
    """Agreement/non-agreement degree pair; coordinates are independent."""

    mu: float
    nu: float

    def __post_init__(self):
        object.__setattr__(self, "mu", as_degree(self.mu, what="mu"))
        object.__setattr__(self, "nu", as_degree(self.nu, what="nu"))


def hesitation_degree(mu: float, nu: float) -> float:
    """max(0, 1 - mu - nu); positive exactly when information is incomplete."""
    return max(0.0, 1.0 - mu - nu)


def contradiction_degree(mu: float, nu: float) -> float:
    """max(0, mu + nu - 1); positive exactly when evidence is overdetermined."""
    return max(0.0, mu + nu - 1.0)


def hesitation(p: MediativePair) -> float:
    return hesitation_degree(p.mu, p.nu)


def contradiction(p: MediativePair) -> float:
    return contradiction_degree(p.mu, p.nu)


@dataclass(frozen=True)
class MediativeWeights:
    """Normalized channel weights w1 = 1 - pi - zeta/2 and w2 = pi + zeta/2."""

    w1: float
    w2: float
    pi: float
    zeta: float

    @classmethod
    def from_pi_zeta(cls, pi: float, zeta: float) -> "MediativeWeights":
        if pi < 0.0 or zeta < 0.0:
            raise ParameterError(
                f"hesitation and contradiction must be nonnegative, got pi={pi}, zeta={zeta}"
            )
        w2 = pi + zeta / 2.0
        if w2 > 1.0 + _M1_BAND:
            raise ParameterError(
                f"weight normalization violated: pi + zeta/2 = {w2} exceeds 1"
            )
        w2 = min(1.0, w2)
        return cls(w1=1.0 - w2, w2=w2, pi=pi, zeta=zeta)


def mediative_operator(a: float, b: float, pi: float, zeta: float) -> float:
    """Convex blend (1 - pi - zeta/2) * a + (pi + zeta/2) * b.

    The result always lies between min(a, b) and max(a, b); with pi = zeta = 0
    it reduces to the agreement channel ``a`` exactly.
    """
    w = MediativeWeights.from_pi_zeta(pi, zeta)
    if w.w2 == 0.0:
        return a
    return w.w1 * a + w.w2 * b


def mediative_score(mu: float, nu: float) -> float:
    """Scalar mediative evaluation M(mu, nu) with channels a = mu, b = 1 - nu."""
    w2 = hesitation_degree(mu, nu) + contradiction_degree(mu, nu) / 2.0
    if w2 == 0.0:
        return mu
    return (1.0 - w2) * mu + w2 * (1.0 - nu)


def mediative_eval(p: MediativePair) -> float:
    """Mediative evaluation of a pair (see :func:`mediative_score`)."""
    return mediative_score(p.mu, p.nu)


def mediative_score_arrays(mu: np.ndarray, nu: np.ndarray) -> np.ndarray:
    """Elementwise mediative evaluation; the definitional computation."""
    pi = np.maximum(0.0, 1.0 - mu - nu)
    zeta = np.maximum(0.0, mu + nu - 1.0)
    w2 = pi + zeta / 2.0
    return (1.0 - w2) * mu + w2 * (1.0 - nu)


# Closed forms of the evaluation on each regime of mu + nu.  Internal: they
# back the envelope solver's critical-point analysis and the algebraic
# cross-check tests, and are not part of the public contract.

def _score_quadratic_low(mu, nu):
    """Closed form for mu + nu <= 1: (mu+nu)^2 - mu - 2*nu + 1."""
    s = mu + nu
    return s * s - mu - 2.0 * nu + 1.0


def _score_quadratic_high(mu, nu):
    """Closed form for mu + nu >= 1: (-(mu+nu)^2 + 4*mu + 2*nu - 1) / 2."""
    s = mu + nu
    return (-(s * s) + 4.0 * mu + 2.0 * nu - 1.0) / 2.0


def pair_and(p: MediativePair, q: MediativePair, kind: TNorm = DEFAULT_TNORM) -> MediativePair:
    """(T(mu1, mu2), S(nu1, nu2)): conjunction lowers truth, raises falsity."""
    return MediativePair(tnorm(kind, p.mu, q.mu), tconorm(kind, p.nu, q.nu))


def pair_or(p: MediativePair, q: MediativePair, kind: TNorm = DEFAULT_TNORM) -> MediativePair:
    """(S(mu1, mu2), T(nu1, nu2)): disjunction raises truth, lowers falsity."""
    return MediativePair(tconorm(kind, p.mu, q.mu), tnorm(kind, p.nu, q.nu))


def pair_not(p: MediativePair) -> MediativePair:
    """Swap truth and falsity; an involution."""
    return MediativePair(p.nu, p.mu)


def pair_implies(p: MediativePair, q: MediativePair, kind: TNorm = DEFAULT_TNORM) -> MediativePair:
    """(mu1 => mu2, nu2 => nu1) under the residuum of the chosen t-norm."""
    return MediativePair(residuum(kind, p.mu, q.mu), residuum(kind, q.nu, p.nu))
