"""Interval type-2 membership sets and Karnik-Mendel type reduction.

Membership functions are sorted piecewise-linear breakpoint lists on [0, 1],
linearly interpolated between breakpoints and held constant outside the first
and last one.  This covers the trapezoids and triangles used in practice and
keeps projections and the KM discretization exact up to the grid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebra import as_degree
from ..errors import (
    ConvergenceError,
    DomainError,
    EmptyProjectionError,
    EmptySetError,
    ParameterError,
)

#: Default uniform discretization of [0, 1] for type reduction.
KM_GRID_POINTS = 1001

_KM_MAX_ITER = 100
_NUDGE = 1e-12


@dataclass(frozen=True)
class PiecewiseLinear:
    """Piecewise-linear function on [0, 1] given by breakpoints (x, y)."""

    xs: tuple[float, ...]
    ys: tuple[float, ...]

    def __post_init__(self):
        if len(self.xs) != len(self.ys) or not self.xs:
            raise DomainError("breakpoint lists must be nonempty and equal length")
        xs = tuple(float(x) for x in self.xs)
        ys = tuple(as_degree(y, what="membership") for y in self.ys)
        for x in xs:
            if not (0.0 <= x <= 1.0):
                raise DomainError(f"breakpoint abscissa {x} outside [0, 1]")
        for a, b in zip(xs, xs[1:]):
            if not a < b:
                raise DomainError("breakpoint abscissae must be strictly increasing")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    def __call__(self, x: float) -> float:
        return float(np.interp(x, self.xs, self.ys))

    def sample(self, xs: np.ndarray) -> np.ndarray:
        return np.interp(xs, self.xs, self.ys)

    @property
    def max_value(self) -> float:
        return max(self.ys)

    def support(self) -> tuple[float, float]:
        """inf/sup of {x in [0, 1] : f(x) > 0}; EmptyProjectionError if f == 0."""
        ys = self.ys
        if self.max_value == 0.0:
            raise EmptyProjectionError("membership function is identically zero")
        if ys[0] > 0.0:
            lo = 0.0
        else:
            i = next(k for k, y in enumerate(ys) if y > 0.0)
            lo = self.xs[i - 1]  # linear ramp starts rising at the previous knot
        if ys[-1] > 0.0:
            hi = 1.0
        else:
            j = next(k for k in reversed(range(len(ys))) if ys[k] > 0.0)
            hi = self.xs[j + 1]
        return lo, hi

    def alpha_cut(self, alpha: float) -> tuple[float, float]:
        """inf/sup of {x in [0, 1] : f(x) >= alpha} for alpha in (0, 1]."""
        if not 0.0 < alpha <= 1.0:
            raise ParameterError(f"alpha must lie in (0, 1], got {alpha}")
        xs, ys = self.xs, self.ys
        if self.max_value < alpha:
            raise EmptyProjectionError(f"alpha-cut at {alpha} is empty")
        if ys[0] >= alpha:
            lo = 0.0
        else:
            i = next(k for k, y in enumerate(ys) if y >= alpha)
            x0, y0, x1, y1 = xs[i - 1], ys[i - 1], xs[i], ys[i]
            lo = x0 + (alpha - y0) * (x1 - x0) / (y1 - y0)
        if ys[-1] >= alpha:
            hi = 1.0
        else:
            j = next(k for k in reversed(range(len(ys))) if ys[k] >= alpha)
            x0, y0, x1, y1 = xs[j], ys[j], xs[j + 1], ys[j + 1]
            hi = x0 + (alpha - y0) * (x1 - x0) / (y1 - y0)
        return lo, hi


def _trapezoid_breakpoints(a: float, b: float, c: float, d: float, height: float):
    """Breakpoints for a trapezoid; vertical edges are nudged by 1e-12."""
    if not a <= b <= c <= d:
        raise DomainError(f"trapezoid abscissae must satisfy a <= b <= c <= d, got {(a, b, c, d)}")
    height = as_degree(height, what="height")
    pts: list[tuple[float, float]] = []
    if a == b:
        if a > 0.0:
            pts.append((max(0.0, a - _NUDGE), 0.0))
        pts.append((a, height))
    else:
        pts.append((a, 0.0))
        pts.append((b, height))
    if c > b:
        pts.append((c, height))
    if d == c:
        if d < 1.0:
            pts.append((min(1.0, d + _NUDGE), 0.0))
    else:
        pts.append((d, 0.0))
    xs, ys = zip(*pts)
    return xs, ys


def trapezoid(a: float, b: float, c: float, d: float, height: float = 1.0) -> PiecewiseLinear:
    """Trapezoidal membership function with the given shoulder/peak abscissae."""
    xs, ys = _trapezoid_breakpoints(a, b, c, d, height)
    return PiecewiseLinear(xs, ys)


@dataclass(frozen=True)
class IT2Set:
    """Interval type-2 set: lower and upper membership with lower <= upper."""

    lower: PiecewiseLinear
    upper: PiecewiseLinear

    def __post_init__(self):
        if self.lower is self.upper:
            return
        # Between consecutive knots of the union both functions are linear,
        # so checking the inequality at every union knot is exact.
        knots = sorted(set(self.lower.xs) | set(self.upper.xs))
        for x in knots:
            if self.lower(x) > self.upper(x) + 1e-12:
                raise DomainError(
                    f"lower membership exceeds upper at x={x}: "
                    f"{self.lower(x)} > {self.upper(x)}"
                )

    @classmethod
    def from_samples(cls, lower_pts, upper_pts) -> "IT2Set":
        lower = PiecewiseLinear(tuple(x for x, _ in lower_pts), tuple(y for _, y in lower_pts))
        upper = PiecewiseLinear(tuple(x for x, _ in upper_pts), tuple(y for _, y in upper_pts))
        return cls(lower, upper)

    @classmethod
    def from_trapezoids(
        cls,
        lower: tuple[float, float, float, float],
        upper: tuple[float, float, float, float],
        lower_height: float = 1.0,
        upper_height: float = 1.0,
    ) -> "IT2Set":
        return cls(trapezoid(*lower, lower_height), trapezoid(*upper, upper_height))

    @classmethod
    def crisp(cls, x: float, half_width: float = 0.02) -> "IT2Set":
        """Degenerate FOU: a symmetric triangle spike at ``x`` on both bounds.

        With ``x`` on the type-reduction grid the spike is sampled
        symmetrically, so its centroid is exactly ``x``.
        """
        x = as_degree(x, what="crisp value")
        if half_width <= 0.0:
            raise ParameterError("half_width must be positive")
        a = max(0.0, x - half_width)
        d = min(1.0, x + half_width)
        tri = trapezoid(a, x, x, d)
        return cls(tri, tri)


def fou_contains(s: IT2Set, x: float, u: float) -> bool:
    """Membership of (x, u) in the footprint of uncertainty."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"primary degree {x} outside [0, 1]")
    u = as_degree(u, what="membership level")
    return s.lower(x) <= u <= s.upper(x)


def project(s: IT2Set, mode: str = "outer", alpha: float | None = None) -> tuple[float, float]:
    """Project an IT2 set to a crisp interval of admissible primary degrees.

    ``outer`` projects the support of the upper membership (conservative),
    ``inner`` the support of the lower membership (guaranteed), and ``alpha``
    uses the alpha-cut of the upper membership for the given level.
    """
    if mode == "outer":
        return s.upper.support()
    if mode == "inner":
        return s.lower.support()
    if mode == "alpha":
        if alpha is None:
            raise ParameterError("alpha projection requires an alpha level")
        return s.upper.alpha_cut(alpha)
    raise ParameterError(f"unknown projection mode {mode!r}")


def km_type_reduce(s: IT2Set, grid_points: int = KM_GRID_POINTS) -> tuple[float, float]:
    """Karnik-Mendel centroid interval [c_l, c_r] of a discretized IT2 set.

    The set is sampled on ``grid_points`` uniform points of [0, 1]; c_l uses
    upper memberships left of the switch point and lower memberships to the
    right, c_r the reverse.  Iteration stops when the switch index stabilizes
    (at most 100 iterations).
    """
    if grid_points < 3:
        raise ParameterError(f"grid_points must be >= 3, got {grid_points}")
    xs = np.linspace(0.0, 1.0, grid_points)
    lo = s.lower.sample(xs)
    hi = s.upper.sample(xs)
    if float(hi.sum()) <= 0.0:
        raise EmptySetError("upper membership carries no mass on the grid")
    c_l = _km_endpoint(xs, left=hi, right=lo)
    c_r = _km_endpoint(xs, left=lo, right=hi)
    return c_l, c_r


def _km_endpoint(xs: np.ndarray, left: np.ndarray, right: np.ndarray) -> float:
    idx = np.arange(len(xs))
    w = 0.5 * (left + right)
    c = float((xs * w).sum() / w.sum())
    k_prev = -2
    for _ in range(_KM_MAX_ITER):
        k = int(np.searchsorted(xs, c, side="right")) - 1
        k = min(max(k, 0), len(xs) - 1)
        w = np.where(idx <= k, left, right)
        denom = float(w.sum())
        if denom <= 0.0:
            # This switch block carries no mass: all mass sits on one side,
            # so take that side whole (k = -1 means an empty left block).
            k = len(xs) - 1 if float(left.sum()) > 0.0 else -1
            w = left if k >= 0 else right
            denom = float(w.sum())
        c = float((xs * w).sum() / denom)
        if k == k_prev:
            return c
        k_prev = k
    raise ConvergenceError("Karnik-Mendel switch point failed to stabilize in 100 iterations")
