"""Valuations and the evaluation clauses for the propositional language.

Atoms take arbitrary mediative pairs; the connectives act coordinatewise via
the pair operations, and the mediative connective collapses its operand to the
scalar evaluation m and returns the pair (m, 1 - m).

``top`` and ``bot`` are definable constants: before evaluation ``top``
normalizes to ``p0 -> p0`` for the reserved anchor atom ``p0`` and ``bot`` to
``~top``.  Any anchor value yields the same result (the residuum of equal
arguments is 1), so a valuation that does not assign ``p0`` receives the
default (0, 0) for it.  Note the corner this implies: both constants evaluate
to the pair (1, 1), whose mediative degree is 0.5.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..algebra import DEFAULT_TNORM, TNorm
from ..core import (
    MediativePair,
    mediative_eval,
    pair_and,
    pair_implies,
    pair_not,
    pair_or,
)
from ..errors import UnboundAtomError
from .syntax import And, Atom, Bot, Formula, Iff, Implies, Med, Not, Or, Top

#: Reserved atom anchoring the normalization of ``top`` and ``bot``.
ANCHOR_ATOM = "p0"

_ANCHOR_DEFAULT = MediativePair(0.0, 0.0)


@dataclass(frozen=True, eq=False)
class Valuation:
    """Assignment of mediative pairs to atom names, plus the algebra in use."""

    atoms: Mapping[str, MediativePair]
    algebra: TNorm = field(default=DEFAULT_TNORM)

    @classmethod
    def from_mapping(
        cls, raw: Mapping[str, Mapping[str, float]], algebra: TNorm = DEFAULT_TNORM
    ) -> "Valuation":
        """Build from the file format ``{atom: {"mu": x, "nu": y}}``."""
        pairs = {name: MediativePair(entry["mu"], entry["nu"]) for name, entry in raw.items()}
        return cls(atoms=pairs, algebra=algebra)

    def lookup(self, name: str) -> MediativePair:
        try:
            return self.atoms[name]
        except KeyError:
            if name == ANCHOR_ATOM:
                return _ANCHOR_DEFAULT
            raise UnboundAtomError(name) from None


def normalize(f: Formula) -> Formula:
    """Expand abbreviations: iff into both implications, top/bot via the anchor."""
    if isinstance(f, Atom):
        return f
    if isinstance(f, Top):
        anchor = Atom(ANCHOR_ATOM)
        return Implies(anchor, anchor)
    if isinstance(f, Bot):
        return Not(normalize(Top()))
    if isinstance(f, Not):
        return Not(normalize(f.operand))
    if isinstance(f, Med):
        return Med(normalize(f.operand))
    if isinstance(f, And):
        return And(normalize(f.left), normalize(f.right))
    if isinstance(f, Or):
        return Or(normalize(f.left), normalize(f.right))
    if isinstance(f, Implies):
        return Implies(normalize(f.left), normalize(f.right))
    if isinstance(f, Iff):
        left, right = normalize(f.left), normalize(f.right)
        return And(Implies(left, right), Implies(right, left))
    raise TypeError(f"not a formula: {f!r}")


def evaluate(f: Formula, v: Valuation) -> MediativePair:
    """Structural evaluation of ``f`` under ``v``; raises UnboundAtomError."""
    return _eval(normalize(f), v)


def _eval(f: Formula, v: Valuation) -> MediativePair:
    if isinstance(f, Atom):
        return v.lookup(f.name)
    if isinstance(f, Not):
        return pair_not(_eval(f.operand, v))
    if isinstance(f, And):
        return pair_and(_eval(f.left, v), _eval(f.right, v), v.algebra)
    if isinstance(f, Or):
        return pair_or(_eval(f.left, v), _eval(f.right, v), v.algebra)
    if isinstance(f, Implies):
        return pair_implies(_eval(f.left, v), _eval(f.right, v), v.algebra)
    if isinstance(f, Med):
        m = mediative_eval(_eval(f.operand, v))
        return MediativePair(m, 1.0 - m)
    raise TypeError(f"not a normalized formula: {f!r}")


def m_degree(f: Formula, v: Valuation) -> float:
    """Scalar mediative degree of ``f`` under ``v``."""
    return mediative_eval(evaluate(f, v))
