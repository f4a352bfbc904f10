"""Effect/density-operator semantics and finite-shot estimation.

Evidence for a proposition lives in two effects (a positive and a negative
channel, not required to be complementary) and a state rho.  Born
expectations give the channel degrees, from which hesitation and
contradiction follow exactly as in the scalar case.  The mediative effect is
the state-dependent convex combination w1*E+ + w2*(I - E-); its Born
expectation coincides with the classical mediative evaluation of the channel
degrees by linearity of the trace, for arbitrary (including non-commuting)
effects.

Shot simulation treats that expectation as the success probability of a
two-outcome measurement of the mediative effect.  The effect depends on rho
through the weights, so measuring it in one shot presumes the weights are
already known; the simulator documents this idealization and stays exact at
the distribution level.
"""

from __future__ import annotations

from dataclasses import dataclass

import math

import numpy as np

from ..algebra import as_degree
from ..core import (
    MediativeWeights,
    contradiction_degree,
    hesitation_degree,
)
from ..errors import (
    DimensionError,
    DomainError,
    NonRealTraceError,
    ParameterError,
)
from .linalg import eigenvalues_prevalidated, require_hermitian

#: Lowner-order tolerance on eigenvalue bounds and on the trace defect.
PSD_TOL = 1e-10

#: Tolerance on the imaginary part of Born expectations.
TRACE_IMAG_TOL = 1e-10

#: Identifier of the pseudo-random generator backing shot simulation.
RNG_ALGORITHM = "pcg64"


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Validated complex Hermitian matrix of dimension 2..16."""

    data: np.ndarray

    def __post_init__(self):
        a = require_hermitian(self.data)
        a.setflags(write=False)
        object.__setattr__(self, "data", a)

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def eigenvalues(self) -> list[float]:
        return eigenvalues_prevalidated(self.data)


@dataclass(frozen=True, eq=False)
class Effect(HermitianMatrix):
    """Self-adjoint operator with 0 <= E <= I in the Lowner order."""

    def __post_init__(self):
        super().__post_init__()
        eigs = self.eigenvalues()
        if eigs[0] < -PSD_TOL or eigs[-1] > 1.0 + PSD_TOL:
            raise DomainError(
                f"effect eigenvalues must lie in [0, 1], got range "
                f"[{eigs[0]:.3e}, {eigs[-1]:.6f}]"
            )


@dataclass(frozen=True, eq=False)
class DensityOperator(HermitianMatrix):
    """Positive semidefinite operator with unit trace."""

    def __post_init__(self):
        super().__post_init__()
        eigs = self.eigenvalues()
        if eigs[0] < -PSD_TOL:
            raise DomainError(f"density operator has negative eigenvalue {eigs[0]:.3e}")
        trace = float(np.trace(self.data).real)
        if abs(trace - 1.0) > PSD_TOL:
            raise DomainError(f"density operator trace must be 1, got {trace}")


@dataclass(frozen=True, eq=False)
class QuantumTriple:
    """State plus positive/negative evidence effects on one Hilbert space."""

    rho: DensityOperator
    e_plus: Effect
    e_minus: Effect

    def __post_init__(self):
        dims = {self.rho.dim, self.e_plus.dim, self.e_minus.dim}
        if len(dims) != 1:
            raise DimensionError(f"state and effects must share a dimension, got {sorted(dims)}")

    @property
    def dim(self) -> int:
        return self.rho.dim


def born(rho: DensityOperator, e: Effect) -> float:
    """Born expectation Tr(rho E) as a degree."""
    if rho.dim != e.dim:
        raise DimensionError(f"dimension mismatch: state {rho.dim} vs effect {e.dim}")
    tr = complex(np.trace(rho.data @ e.data))
    if abs(tr.imag) > TRACE_IMAG_TOL:
        raise NonRealTraceError(f"Born expectation has imaginary part {tr.imag:.3e}")
    return as_degree(tr.real, what="Born expectation")


def quantum_channels(t: QuantumTriple) -> tuple[float, float, float, float]:
    """(mu, nu, pi, zeta): channel degrees plus hesitation and contradiction."""
    mu = born(t.rho, t.e_plus)
    nu = born(t.rho, t.e_minus)
    return mu, nu, hesitation_degree(mu, nu), contradiction_degree(mu, nu)


def mediative_effect(t: QuantumTriple) -> Effect:
    """State-conditioned effect w1*E+ + w2*(I - E-); always a valid effect."""
    mu, nu, pi, zeta = quantum_channels(t)
    w = MediativeWeights.from_pi_zeta(pi, zeta)
    eye = np.eye(t.dim, dtype=np.complex128)
    combo = w.w1 * t.e_plus.data + w.w2 * (eye - t.e_minus.data)
    return Effect(combo)


def quantum_degree(t: QuantumTriple) -> float:
    """Born expectation of the mediative effect.

    Equals the classical mediative evaluation of (mu, nu) by linearity of the
    trace, whether or not the operators commute.
    """
    return born(t.rho, mediative_effect(t))


def diag_encode(mu: float, nu: float) -> QuantumTriple:
    """Minimal qubit encoding: rho = |0><0|, E+ = diag(mu, 0), E- = diag(nu, 0)."""
    mu = as_degree(mu, what="mu")
    nu = as_degree(nu, what="nu")
    rho = DensityOperator(np.array([[1.0, 0.0], [0.0, 0.0]], dtype=np.complex128))
    e_plus = Effect(np.array([[mu, 0.0], [0.0, 0.0]], dtype=np.complex128))
    e_minus = Effect(np.array([[nu, 0.0], [0.0, 0.0]], dtype=np.complex128))
    return QuantumTriple(rho=rho, e_plus=e_plus, e_minus=e_minus)


def is_classical(t: QuantumTriple, tol: float = 1e-10) -> bool:
    """True when rho, E+ and E- pairwise commute (no operational coherences)."""
    mats = (t.rho.data, t.e_plus.data, t.e_minus.data)
    for i in range(3):
        for j in range(i + 1, 3):
            comm = mats[i] @ mats[j] - mats[j] @ mats[i]
            if float(np.max(np.abs(comm))) >= tol:
                return False
    return True


def shot_seed(seed: int, batch_index: int = 0) -> np.random.SeedSequence:
    """Derived seed for shot batch ``batch_index`` (documented derivation)."""
    return np.random.SeedSequence(entropy=seed, spawn_key=(batch_index,))


_SHOT_CHUNK = 1 << 20


def simulate_shots(t: QuantumTriple, n: int, seed: int) -> tuple[float, int]:
    """Estimate the quantum mediative degree from ``n`` two-outcome shots.

    Outcomes are i.i.d. Bernoulli with success probability quantum_degree(t),
    drawn from a PCG64 stream keyed by ``seed``; returns (sample mean, number
    of success outcomes).  Fixed seeds reproduce results exactly.  Draws are
    consumed in bounded chunks, which leaves the stream (and thus the result)
    identical to a single draw of length ``n``.
    """
    if n < 1:
        raise ParameterError(f"shot count must be >= 1, got {n}")
    p = quantum_degree(t)
    rng = np.random.Generator(np.random.PCG64(shot_seed(seed)))
    successes = 0
    remaining = n
    while remaining > 0:
        k = min(_SHOT_CHUNK, remaining)
        successes += int(np.count_nonzero(rng.random(k) < p))
        remaining -= k
    return successes / n, successes


def hoeffding_margin(n: int, delta: float) -> float:
    """Two-sided Hoeffding half-width sqrt(ln(2/delta) / (2n)) for [0,1] outcomes."""
    if n < 1:
        raise ParameterError(f"shot count must be >= 1, got {n}")
    if not 0.0 < delta < 1.0:
        raise ParameterError(f"delta must lie in (0, 1), got {delta}")
    return math.sqrt(math.log(2.0 / delta) / (2.0 * n))
