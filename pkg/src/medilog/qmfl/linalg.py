"""Small complex Hermitian eigenvalue kernel (cyclic Jacobi rotations).

The engine only ever sees operators on Hilbert spaces of dimension 2..16, so
a cyclic Jacobi sweep is plenty: simple, robust, and easy to validate against
an independent solver.  Each rotation eliminates one off-diagonal entry by a
unitary plane rotation whose phase absorbs the entry's argument.

The sweep kernel works on plain Python complex scalars: at these dimensions
interpreter arithmetic beats numpy's per-call overhead by an order of
magnitude, and operator validation sits on hot paths (every effect
construction runs a spectral check).
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import ConvergenceError, DimensionError, NotHermitianError

MIN_DIM = 2
MAX_DIM = 16

#: Hermiticity tolerance on max |A - A^H| entry magnitude.
HERMITIAN_TOL = 1e-10

#: Termination threshold on the Frobenius norm of the off-diagonal part.
OFFDIAG_TOL = 1e-12

_MAX_SWEEPS = 100


def require_hermitian(matrix, *, what: str = "matrix") -> np.ndarray:
    """Validate shape, dimension range and Hermiticity; return a complex copy."""
    a = np.array(matrix, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"{what} must be square, got shape {a.shape}")
    d = a.shape[0]
    if not MIN_DIM <= d <= MAX_DIM:
        raise DimensionError(f"{what} dimension must lie in [{MIN_DIM}, {MAX_DIM}], got {d}")
    defect = float(np.max(np.abs(a - a.conj().T)))
    if defect > HERMITIAN_TOL:
        raise NotHermitianError(f"{what} is not Hermitian: max |A - A^H| = {defect:.3e}")
    return a


def offdiagonal_norm(a: np.ndarray) -> float:
    """Frobenius norm of the off-diagonal part."""
    off = np.asarray(a) - np.diag(np.diag(np.asarray(a)))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def hermitian_eigenvalues(matrix) -> list[float]:
    """Eigenvalues of a complex Hermitian matrix, ascending.

    Runs cyclic Jacobi sweeps until the off-diagonal Frobenius norm drops
    below 1e-12; raises :class:`ConvergenceError` after 100 sweeps (which a
    Hermitian input never needs in practice).
    """
    return eigenvalues_prevalidated(require_hermitian(matrix))


def eigenvalues_prevalidated(matrix: np.ndarray) -> list[float]:
    """Jacobi eigenvalues of an already-validated Hermitian array."""
    n = matrix.shape[0]
    a = [[complex(matrix[i, j]) for j in range(n)] for i in range(n)]
    for _ in range(_MAX_SWEEPS):
        off2 = 0.0
        for p in range(n - 1):
            row = a[p]
            for q in range(p + 1, n):
                z = row[q]
                off2 += z.real * z.real + z.imag * z.imag
        if math.sqrt(2.0 * off2) < OFFDIAG_TOL:
            return sorted(a[i][i].real for i in range(n))
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, n, p, q)
    raise ConvergenceError(
        f"Jacobi sweeps did not reduce the off-diagonal norm below {OFFDIAG_TOL} "
        f"within {_MAX_SWEEPS} sweeps"
    )


def _rotate(a: list[list[complex]], n: int, p: int, q: int) -> None:
    """Unitary plane rotation on (p, q) zeroing a[p][q] in place."""
    apq = a[p][q]
    r = abs(apq)
    if r == 0.0:
        return
    phase = apq / r
    phase_c = phase.conjugate()
    tau = (a[p][p].real - a[q][q].real) / (2.0 * r)
    if tau >= 0.0:
        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
    else:
        t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    s_phase = s * phase
    s_phase_c = s * phase_c
    # U acts on the (p, q) plane as [[c, -s*phase], [s*conj(phase), c]];
    # update columns (A <- A U) then rows (A <- U^H A).
    for i in range(n):
        row = a[i]
        colp, colq = row[p], row[q]
        row[p] = c * colp + s_phase_c * colq
        row[q] = c * colq - s_phase * colp
    rowp, rowq = a[p], a[q]
    for j in range(n):
        xp, xq = rowp[j], rowq[j]
        rowp[j] = c * xp + s_phase * xq
        rowq[j] = c * xq - s_phase_c * xp
    # Zero by construction; clearing drift keeps the matrix exactly Hermitian.
    a[p][q] = 0.0
    a[q][p] = 0.0
    a[p][p] = complex(a[p][p].real, 0.0)
    a[q][q] = complex(a[q][q].real, 0.0)
