"""Empirical semantic checkers: grid validity, entailment, paraconsistency.

The underlying calculus ships no proof search, so these checkers explore the
semantics exhaustively over finite valuation grids.  Two designation modes are
offered because the verbatim implication clause gives every tautology the
value pair (1, 1), whose mediative degree is 0.5: under ``m`` a formula counts
as designated when its mediative degree is 1, under ``mu`` when its truth
coordinate is 1.  Reports carry the mode used; neither is canonical.

Grid sweeps run vectorized over valuation blocks; any counterexample found is
re-verified through the scalar evaluator before it is reported.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from ..algebra import (
    DEFAULT_TNORM,
    TNorm,
    residuum_arrays,
    tconorm_arrays,
    tnorm_arrays,
)
from ..core import MediativePair, mediative_eval, mediative_score_arrays
from ..errors import InternalError, ParameterError, TooManyAtomsError
from .semantics import ANCHOR_ATOM, Valuation, evaluate, m_degree, normalize
from .syntax import (
    And,
    Atom,
    Bot,
    Formula,
    Iff,
    Implies,
    Med,
    Not,
    Or,
    Top,
    formula_atoms,
)

#: Designated means degree >= 1 - this tolerance (absorbs float ulp noise).
DESIGNATION_TOL = 1e-9

#: Hard cap on distinct atoms in a grid sweep (the grid has n^(2k) points).
MAX_GRID_ATOMS = 4

_BLOCK = 1 << 18


class Designation(str, enum.Enum):
    MU = "mu"  # truth coordinate equals 1
    M = "m"  # mediative degree equals 1


VERDICT_VALID = "valid-on-grid"
VERDICT_HOLDS = "holds-on-grid"
VERDICT_COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class ValidityReport:
    designation: Designation
    grid_points: int
    atoms: tuple[str, ...]
    verdict: str
    witness: Mapping[str, MediativePair] | None
    extremal_degree: float | None
    witness_degree: float | None = None


# Built-in axiom schema templates for the mediative connective.  Their grid
# verdicts are reported, not asserted: under the verbatim semantics several
# fail one or both designation modes.
_P, _Q = Atom("p"), Atom("q")
AXIOM_SCHEMATA: dict[str, Formula] = {
    "Med1": Implies(Implies(_P, _Q), Implies(Med(_P), Med(_Q))),
    "Med2a": Iff(Med(Top()), Top()),
    "Med2b": Iff(Med(Bot()), Bot()),
    "Med3": Implies(Iff(_P, _Q), Iff(Med(_P), Med(_Q))),
}


def _eval_grid(f: Formula, env: Mapping[str, tuple[np.ndarray, np.ndarray]], kind: TNorm):
    """Evaluate a normalized formula over arrays of atom values."""
    if isinstance(f, Atom):
        try:
            return env[f.name]
        except KeyError:
            if f.name == ANCHOR_ATOM:
                return 0.0, 0.0
            raise
    if isinstance(f, Not):
        mu, nu = _eval_grid(f.operand, env, kind)
        return nu, mu
    if isinstance(f, And):
        mu1, nu1 = _eval_grid(f.left, env, kind)
        mu2, nu2 = _eval_grid(f.right, env, kind)
        return tnorm_arrays(kind, mu1, mu2), tconorm_arrays(kind, nu1, nu2)
    if isinstance(f, Or):
        mu1, nu1 = _eval_grid(f.left, env, kind)
        mu2, nu2 = _eval_grid(f.right, env, kind)
        return tconorm_arrays(kind, mu1, mu2), tnorm_arrays(kind, nu1, nu2)
    if isinstance(f, Implies):
        mu1, nu1 = _eval_grid(f.left, env, kind)
        mu2, nu2 = _eval_grid(f.right, env, kind)
        return residuum_arrays(kind, mu1, mu2), residuum_arrays(kind, nu2, nu1)
    if isinstance(f, Med):
        mu, nu = _eval_grid(f.operand, env, kind)
        m = mediative_score_arrays(np.asarray(mu, dtype=float), np.asarray(nu, dtype=float))
        return m, 1.0 - m
    raise TypeError(f"not a normalized formula: {f!r}")


def _degree_grid(f: Formula, env, kind: TNorm, designation: Designation) -> np.ndarray:
    mu, nu = _eval_grid(f, env, kind)
    if designation is Designation.MU:
        deg = np.asarray(mu, dtype=float)
    else:
        deg = mediative_score_arrays(np.asarray(mu, dtype=float), np.asarray(nu, dtype=float))
    return np.atleast_1d(deg)


def _degree_scalar(f: Formula, v: Valuation, designation: Designation) -> float:
    pair = evaluate(f, v)
    return pair.mu if designation is Designation.MU else mediative_eval(pair)


def _check_grid_args(atoms: Sequence[str], grid_points: int) -> None:
    if len(atoms) > MAX_GRID_ATOMS:
        raise TooManyAtomsError(
            f"grid search supports at most {MAX_GRID_ATOMS} distinct atoms, "
            f"formula has {len(atoms)}: {', '.join(atoms)}"
        )
    if grid_points < 2:
        raise ParameterError(f"grid_points_per_atom must be >= 2, got {grid_points}")


def _digits_for(idx: np.ndarray, n: int, count: int) -> list[np.ndarray]:
    """Base-n digits of each index, most significant first."""
    digits: list[np.ndarray] = []
    rem = idx.copy()
    for _ in range(count):
        digits.append(rem % n)
        rem //= n
    digits.reverse()
    return digits


def _env_for(idx: np.ndarray, n: int, atoms: Sequence[str], grid: np.ndarray):
    digits = _digits_for(idx, n, 2 * len(atoms))
    return {
        name: (grid[digits[2 * i]], grid[digits[2 * i + 1]])
        for i, name in enumerate(atoms)
    }


def _valuation_at(index: int, n: int, atoms: Sequence[str], grid: np.ndarray, kind: TNorm) -> Valuation:
    digits = _digits_for(np.array([index], dtype=np.int64), n, 2 * len(atoms))
    pairs = {
        name: MediativePair(float(grid[digits[2 * i][0]]), float(grid[digits[2 * i + 1][0]]))
        for i, name in enumerate(atoms)
    }
    return Valuation(atoms=pairs, algebra=kind)


def _verify_witness(
    formulas_designated: Iterable[Formula],
    formula_violated: Formula,
    v: Valuation,
    designation: Designation,
) -> float:
    """Re-check a vectorized finding through the scalar evaluator."""
    for g in formulas_designated:
        if _degree_scalar(g, v, designation) < 1.0 - DESIGNATION_TOL:
            raise InternalError("grid evaluator disagreement on a premise at the witness")
    degree = _degree_scalar(formula_violated, v, designation)
    if degree >= 1.0 - DESIGNATION_TOL:
        raise InternalError("grid evaluator disagreement: witness re-evaluates as designated")
    return degree


def check_validity(
    f: Formula,
    grid_points_per_atom: int = 11,
    designation: Designation = Designation.MU,
    kind: TNorm = DEFAULT_TNORM,
) -> ValidityReport:
    """Exhaustively evaluate ``f`` over a uniform valuation grid.

    Each atom ranges over the grid {0, 1/(n-1), ..., 1}^2 of (mu, nu) pairs.
    The first counterexample in lexicographic atom/grid order is reported,
    together with the extremal designation degree found on the grid.
    """
    return check_entailment((), f, grid_points_per_atom, designation, kind)


def check_entailment(
    premises: Sequence[Formula],
    conclusion: Formula,
    grid_points_per_atom: int = 11,
    designation: Designation = Designation.MU,
    kind: TNorm = DEFAULT_TNORM,
) -> ValidityReport:
    """Grid entailment check, restricted to valuations designating all premises."""
    premises = tuple(premises)
    names: set[str] = set()
    for g in (*premises, conclusion):
        names.update(formula_atoms(g))
    atoms = tuple(sorted(names))
    n = grid_points_per_atom
    _check_grid_args(atoms, n)

    grid = np.linspace(0.0, 1.0, n)
    norm_premises = [normalize(g) for g in premises]
    norm_conclusion = normalize(conclusion)
    cutoff = 1.0 - DESIGNATION_TOL

    total = n ** (2 * len(atoms))
    first_violation = -1
    any_designated = False
    extremal = np.inf
    for start in range(0, total, _BLOCK):
        idx = np.arange(start, min(start + _BLOCK, total), dtype=np.int64)
        env = _env_for(idx, n, atoms, grid)
        mask = np.ones(len(idx), dtype=bool)
        for g in norm_premises:
            mask &= _degree_grid(g, env, kind, designation) >= cutoff
            if not mask.any():
                break
        if not mask.any():
            continue
        any_designated = True
        deg = _degree_grid(norm_conclusion, env, kind, designation)
        # closed formulas evaluate to a single value regardless of the block
        deg = np.broadcast_to(deg, idx.shape)
        masked = deg[mask]
        block_min = float(masked.min())
        extremal = min(extremal, block_min)
        if block_min < cutoff:
            violations = np.flatnonzero(mask & (deg < cutoff))
            first_violation = int(idx[violations[0]])
            break

    if first_violation < 0:
        return ValidityReport(
            designation=designation,
            grid_points=n,
            atoms=atoms,
            verdict=VERDICT_HOLDS if premises else VERDICT_VALID,
            witness=None,
            extremal_degree=None if not any_designated else float(extremal),
        )

    witness = _valuation_at(first_violation, n, atoms, grid, kind)
    witness_degree = _verify_witness(premises, conclusion, witness, designation)
    return ValidityReport(
        designation=designation,
        grid_points=n,
        atoms=atoms,
        verdict=VERDICT_COUNTEREXAMPLE,
        witness=dict(witness.atoms),
        extremal_degree=float(extremal),
        witness_degree=witness_degree,
    )


def paraconsistency_probe(threshold: float, kind: TNorm = DEFAULT_TNORM) -> Valuation | None:
    """Search the overdetermined diagonal for a joint high-degree witness.

    Scans mu = nu over 1001 uniform points restricted to mu + nu >= 1 (the
    contradiction regime; the incomplete regime is excluded because total
    ignorance trivially scores 1) and returns the valuation maximizing
    min(M(v(p)), M(v(~p))) when that maximum reaches ``threshold``.  The
    analytic maximum is 0.625, attained at mu = nu = 0.75; above it the probe
    returns None.
    """
    xs = np.linspace(0.0, 1.0, 1001)
    xs = xs[2.0 * xs >= 1.0]
    scores = mediative_score_arrays(xs, xs)
    best = int(np.argmax(scores))
    if scores[best] < threshold - 1e-12:
        return None
    x = float(xs[best])
    witness = Valuation(atoms={"p": MediativePair(x, x)}, algebra=kind)
    p = Atom("p")
    attained = min(m_degree(p, witness), m_degree(Not(p), witness))
    if attained < threshold - 1e-9:
        raise InternalError("paraconsistency witness failed scalar re-evaluation")
    return witness


def axiom_verdicts(
    grid_points: int = 11, kind: TNorm = DEFAULT_TNORM
) -> dict[str, dict[str, ValidityReport]]:
    """Grid verdicts of the built-in axiom schemata under both designations."""
    out: dict[str, dict[str, ValidityReport]] = {}
    for name, schema in AXIOM_SCHEMATA.items():
        out[name] = {
            mode.value: check_validity(schema, grid_points, mode, kind)
            for mode in Designation
        }
    return out
