"""Interval type-2 mediative semantics: FOUs, bound propagation, envelopes."""

from .intervals import (
    Envelope,
    IntervalPair,
    diagonal_corner_bounds,
    it2_and,
    it2_implies,
    it2_not,
    it2_or,
    t2_contradiction_bounds,
    t2_eval_envelope,
    t2_eval_type_reduced,
    t2_hesitation_bounds,
    type_reduced_channels,
)
from .sets import (
    IT2Set,
    KM_GRID_POINTS,
    PiecewiseLinear,
    fou_contains,
    km_type_reduce,
    project,
    trapezoid,
)

__all__ = [
    "Envelope",
    "IT2Set",
    "IntervalPair",
    "KM_GRID_POINTS",
    "PiecewiseLinear",
    "diagonal_corner_bounds",
    "fou_contains",
    "it2_and",
    "it2_implies",
    "it2_not",
    "it2_or",
    "km_type_reduce",
    "project",
    "t2_contradiction_bounds",
    "t2_eval_envelope",
    "t2_eval_type_reduced",
    "t2_hesitation_bounds",
    "trapezoid",
    "type_reduced_channels",
]
