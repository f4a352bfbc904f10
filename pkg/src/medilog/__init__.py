"""medilog: a mediative fuzzy logic engine.

Truth values are independent agreement/non-agreement pairs; hesitation and
contradiction are derived from them and drive a convex mediative evaluation.
The package layers interval type-2 bound propagation with Karnik-Mendel type
reduction, granule-indexed aggregation, and an effect/density-operator
semantics on top of the same scalar core, and ships a safety-first
sensor-fusion pipeline plus an HTTP service and CLI around it.
"""

__version__ = "0.1.0"

from .algebra import DEFAULT_TNORM, TNorm, as_degree, residuum, tconorm, tnorm
from .core import (
    MediativePair,
    MediativeWeights,
    contradiction,
    contradiction_degree,
    hesitation,
    hesitation_degree,
    mediative_eval,
    mediative_operator,
    mediative_score,
    pair_and,
    pair_implies,
    pair_not,
    pair_or,
)

__all__ = [
    "DEFAULT_TNORM",
    "MediativePair",
    "MediativeWeights",
    "TNorm",
    "__version__",
    "as_degree",
    "contradiction",
    "contradiction_degree",
    "hesitation",
    "hesitation_degree",
    "mediative_eval",
    "mediative_operator",
    "mediative_score",
    "pair_and",
    "pair_implies",
    "pair_not",
    "pair_or",
    "residuum",
    "tconorm",
    "tnorm",
]
