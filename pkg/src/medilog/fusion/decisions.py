"""Safety-first threshold policies mapping degrees to control actions.

The scalar rule brakes at or above the braking threshold and decelerates in
the band between the two thresholds.  For envelopes the strict rule demands
the *lower* endpoint to clear the braking threshold before braking, and
decelerates whenever the upper endpoint makes deceleration-worthy degrees
admissible.  Interval summaries are also commonly labeled by where the band
sits relative to the braking threshold; that looser reading is emitted
alongside the strict verdict as a band annotation, never instead of it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..algebra import as_degree
from ..errors import InvariantError, ParameterError
from ..type2.intervals import Envelope


class Action(str, enum.Enum):
    BRAKE = "brake"
    DECELERATE = "decelerate"
    PROCEED = "proceed"


@dataclass(frozen=True)
class Thresholds:
    brake: float = 0.7
    decelerate: float = 0.5

    def __post_init__(self):
        object.__setattr__(self, "brake", as_degree(self.brake, what="brake threshold"))
        object.__setattr__(
            self, "decelerate", as_degree(self.decelerate, what="decelerate threshold")
        )
        if self.brake < self.decelerate:
            raise InvariantError(
                f"brake threshold {self.brake} must not be below "
                f"decelerate threshold {self.decelerate}"
            )


DEFAULT_THRESHOLDS = Thresholds()


def decide(m: float, thresholds: Thresholds = DEFAULT_THRESHOLDS) -> Action:
    """Scalar policy: brake at m >= brake, decelerate at m >= decelerate."""
    if m >= thresholds.brake:
        return Action.BRAKE
    if m >= thresholds.decelerate:
        return Action.DECELERATE
    return Action.PROCEED


def decide_envelope(env: Envelope, thresholds: Thresholds = DEFAULT_THRESHOLDS) -> Action:
    """Strict envelope policy: brake only when the lower endpoint clears the
    braking threshold; decelerate while the upper endpoint leaves
    deceleration-worthy degrees admissible."""
    if env.m_lo >= thresholds.brake:
        return Action.BRAKE
    if env.m_hi >= thresholds.decelerate:
        return Action.DECELERATE
    return Action.PROCEED


def band_annotation(env: Envelope, thresholds: Thresholds = DEFAULT_THRESHOLDS) -> Action:
    """Band-position reading of an envelope: classify by its midpoint."""
    return decide(0.5 * (env.m_lo + env.m_hi), thresholds)


def decide_quantum(
    estimate: float, margin: float, thresholds: Thresholds = DEFAULT_THRESHOLDS
) -> Action:
    """Margin-aware policy: brake only when the whole confidence interval is
    above the braking threshold; decelerate while it may reach the
    deceleration threshold."""
    if margin < 0.0:
        raise ParameterError(f"margin must be nonnegative, got {margin}")
    if estimate - margin >= thresholds.brake:
        return Action.BRAKE
    if estimate + margin >= thresholds.decelerate:
        return Action.DECELERATE
    return Action.PROCEED
