"""Left-continuous t-norms, their dual t-conorms, and residua.

Every pair-level connective in the engine is parameterized by one of the
three families below.  Lukasiewicz is the default throughout: its residuum
is the one needed to reproduce the validity-checker findings, and all table
reproductions are anchored on it.

The scalar functions assume their degree arguments are already valid (the
engine validates degrees at type boundaries); the ``*_arrays`` variants apply
the same operations elementwise to numpy arrays and are used by the grid
checkers and oracles.
"""

from __future__ import annotations

import enum

import numpy as np

from .errors import DomainError

#: Clamping band for float noise on degree boundaries.
DEGREE_BAND = 1e-9


class TNorm(str, enum.Enum):
    LUKASIEWICZ = "lukasiewicz"
    GODEL = "godel"
    PRODUCT = "product"


DEFAULT_TNORM = TNorm.LUKASIEWICZ


def as_degree(value: float, *, what: str = "degree") -> float:
    """Validate a truth degree in [0, 1], clamping noise within a 1e-9 band."""
    x = float(value)
    if not (-DEGREE_BAND <= x <= 1.0 + DEGREE_BAND):  # also rejects NaN
        raise DomainError(f"{what} must lie in [0, 1], got {value!r}")
    return min(1.0, max(0.0, x))


def tnorm(kind: TNorm, a: float, b: float) -> float:
    """T(a, b): commutative, associative, monotone, with unit 1."""
    if kind is TNorm.LUKASIEWICZ:
        return max(0.0, a + b - 1.0)
    if kind is TNorm.GODEL:
        return min(a, b)
    if kind is TNorm.PRODUCT:
        return a * b
    raise DomainError(f"unknown t-norm kind {kind!r}")


def tconorm(kind: TNorm, a: float, b: float) -> float:
    """S(a, b) = 1 - T(1 - a, 1 - b), the dual t-conorm."""
    if kind is TNorm.LUKASIEWICZ:
        return min(1.0, a + b)
    if kind is TNorm.GODEL:
        return max(a, b)
    if kind is TNorm.PRODUCT:
        return a + b - a * b
    raise DomainError(f"unknown t-norm kind {kind!r}")


def residuum(kind: TNorm, a: float, b: float) -> float:
    """a => b, the residuum sup{c : T(a, c) <= b}.

    Satisfies the adjointness T(a, c) <= b iff c <= residuum(a, b); in
    particular residuum(a, b) = 1 exactly when a <= b, and residuum(0, b) = 1
    by convention (T(0, c) = 0 <= b for every c).
    """
    if a <= b:
        return 1.0
    if kind is TNorm.LUKASIEWICZ:
        return 1.0 - a + b
    if kind is TNorm.GODEL:
        return b
    if kind is TNorm.PRODUCT:
        return b / a  # a > b >= 0 here, so a > 0
    raise DomainError(f"unknown t-norm kind {kind!r}")


# Elementwise array counterparts.  Kept adjacent to the scalar definitions;
# tests assert scalar/array agreement on random samples.

def tnorm_arrays(kind: TNorm, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if kind is TNorm.LUKASIEWICZ:
        return np.maximum(0.0, a + b - 1.0)
    if kind is TNorm.GODEL:
        return np.minimum(a, b)
    if kind is TNorm.PRODUCT:
        return a * b
    raise DomainError(f"unknown t-norm kind {kind!r}")


def tconorm_arrays(kind: TNorm, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if kind is TNorm.LUKASIEWICZ:
        return np.minimum(1.0, a + b)
    if kind is TNorm.GODEL:
        return np.maximum(a, b)
    if kind is TNorm.PRODUCT:
        return a + b - a * b
    raise DomainError(f"unknown t-norm kind {kind!r}")


def residuum_arrays(kind: TNorm, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if kind is TNorm.LUKASIEWICZ:
        tail = 1.0 - a + b
    elif kind is TNorm.GODEL:
        tail = b
    elif kind is TNorm.PRODUCT:
        tail = np.divide(b, a, out=np.ones_like(b + a), where=a > b)
    else:
        raise DomainError(f"unknown t-norm kind {kind!r}")
    return np.where(a <= b, 1.0, tail)
