"""Scenario schema, loading, and resolution into runtime case objects.

Scenario files are JSON.  A file either describes a single case at the top
level or carries a ``cases`` array whose entries inherit any top-level field
they do not override.  Shape problems raise :class:`SchemaError` naming the
offending field path; semantic problems (inverted thresholds, weights that
cannot be normalized, missing mode blocks) raise :class:`InvariantError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Literal, Optional

import json

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError

from ..algebra import DEFAULT_TNORM, TNorm, as_degree
from ..core import MediativePair
from ..errors import InvariantError, ScenarioIOError, SchemaError
from ..qmfl.semantics import DensityOperator, Effect, QuantumTriple, diag_encode
from ..type2.intervals import IntervalPair
from ..type2.sets import IT2Set, KM_GRID_POINTS, PiecewiseLinear, trapezoid
from ..type3 import (
    AggregationLevel,
    Aggregator,
    GranularAssignment,
    Granule,
    Hierarchical,
    OWA,
    TrustedDominance,
    WeightedMean,
)
from .decisions import Thresholds

_STRICT = ConfigDict(extra="forbid")

#: Matrix literal: nested arrays of [re, im] entry pairs.
MatrixLiteral = list[list[tuple[float, float]]]


class ChannelSpec(BaseModel):
    model_config = _STRICT
    name: str
    mu: float
    nu: float
    weight: Optional[float] = None


class ThresholdsSpec(BaseModel):
    model_config = _STRICT
    brake: float = 0.7
    decelerate: float = 0.5


class MembershipSpec(BaseModel):
    """One membership function: either a trapezoid or explicit samples."""

    model_config = _STRICT
    trapezoid: Optional[tuple[float, float, float, float]] = None
    height: float = 1.0
    samples: Optional[list[tuple[float, float]]] = None


class IT2SetSpec(BaseModel):
    model_config = _STRICT
    lower: MembershipSpec
    upper: MembershipSpec


class IntervalsSpec(BaseModel):
    model_config = _STRICT
    mu: tuple[float, float]
    nu: tuple[float, float]


class Type2Spec(BaseModel):
    model_config = _STRICT
    mu: Optional[IT2SetSpec] = None
    nu: Optional[IT2SetSpec] = None
    intervals: Optional[IntervalsSpec] = None
    grid_points: int = KM_GRID_POINTS


class GranuleSpec(BaseModel):
    model_config = _STRICT
    id: str
    source: str = ""
    window: str = ""
    context: str = ""
    trusted: bool = False
    weight: float = 1.0
    mu: Optional[float] = None
    nu: Optional[float] = None
    mu_set: Optional[IT2SetSpec] = None
    nu_set: Optional[IT2SetSpec] = None


class AggregatorSpec(BaseModel):
    model_config = _STRICT
    kind: Literal["weighted_mean", "owa", "trusted_dominance", "hierarchical"] = (
        "weighted_mean"
    )
    level: Literal["pair", "score"] = "pair"
    params: dict[str, Any] = {}


class QuantumSpec(BaseModel):
    model_config = _STRICT
    encode: Optional[Literal["diagonal"]] = None
    rho: Optional[MatrixLiteral] = None
    e_plus: Optional[MatrixLiteral] = None
    e_minus: Optional[MatrixLiteral] = None
    shots: int = 0
    delta: float = 0.05
    seed: int = 0


class CaseSpec(BaseModel):
    model_config = _STRICT
    case: Optional[str] = None
    mode: Optional[Literal["t1", "t2", "t3", "qmfl"]] = None
    tnorm: Optional[Literal["lukasiewicz", "godel", "product"]] = None
    alpha: Optional[float] = None
    channels: Optional[list[ChannelSpec]] = None
    granules: Optional[list[GranuleSpec]] = None
    aggregator: Optional[AggregatorSpec] = None
    type2: Optional[Type2Spec] = None
    quantum: Optional[QuantumSpec] = None
    thresholds: Optional[ThresholdsSpec] = None


class Scenario(CaseSpec):
    """Top-level scenario: single case fields plus an optional batch array."""

    cases: Optional[list[CaseSpec]] = None


def _format_loc(loc: tuple) -> str:
    parts: list[str] = []
    for item in loc:
        if isinstance(item, int):
            parts.append(f"[{item}]")
        else:
            parts.append(("." if parts else "") + str(item))
    return "".join(parts) or "<root>"


def parse_scenario(data: Any) -> Scenario:
    try:
        return Scenario.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise SchemaError(first["msg"], path=_format_loc(tuple(first["loc"]))) from exc


def load_scenario(path: str | Path) -> Scenario:
    """Read and validate a scenario file; returns the validated model.

    All invariants are enforced here: the file resolves fully into runtime
    case objects (thresholds, weights, membership sets, operators) before the
    scenario is returned.
    """
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ScenarioIOError(f"cannot read scenario file {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    scenario = parse_scenario(data)
    resolve_cases(scenario)
    return scenario


# Runtime case objects -------------------------------------------------------


@dataclass(frozen=True)
class ResolvedChannel:
    name: str
    pair: MediativePair
    weight: float


@dataclass(frozen=True, eq=False)
class ResolvedQuantum:
    triple: QuantumTriple
    shots: int
    delta: float
    seed: int
    diagonal_encoding: bool


@dataclass(frozen=True, eq=False)
class ResolvedCase:
    label: str
    mode: str
    tnorm: TNorm
    thresholds: Thresholds
    channels: tuple[ResolvedChannel, ...] = ()
    type2_sets: Optional[tuple[IT2Set, IT2Set, int]] = None
    envelope_intervals: Optional[IntervalPair] = None
    assignment: Optional[GranularAssignment] = None
    aggregator: Optional[Aggregator] = None
    level: AggregationLevel = AggregationLevel.PAIR
    quantum: Optional[ResolvedQuantum] = None


def _membership(spec: MembershipSpec, path: str) -> PiecewiseLinear:
    if (spec.trapezoid is None) == (spec.samples is None):
        raise SchemaError("exactly one of 'trapezoid' or 'samples' is required", path=path)
    if spec.trapezoid is not None:
        return trapezoid(*spec.trapezoid, height=spec.height)
    xs = tuple(x for x, _ in spec.samples)
    ys = tuple(y for _, y in spec.samples)
    return PiecewiseLinear(xs, ys)


def _it2set(spec: IT2SetSpec, path: str) -> IT2Set:
    return IT2Set(
        lower=_membership(spec.lower, path + ".lower"),
        upper=_membership(spec.upper, path + ".upper"),
    )


def _matrix(literal: MatrixLiteral) -> np.ndarray:
    return np.array(
        [[complex(re, im) for re, im in row] for row in literal], dtype=np.complex128
    )


def _resolve_channels(case: CaseSpec) -> tuple[ResolvedChannel, ...]:
    if not case.channels:
        raise InvariantError(f"mode {case.mode!r} requires a nonempty 'channels' list")
    explicit = [c.weight for c in case.channels if c.weight is not None]
    if case.alpha is not None:
        if len(case.channels) != 2:
            raise InvariantError("'alpha' is a two-channel shorthand; found "
                                 f"{len(case.channels)} channels")
        if explicit:
            raise InvariantError("'alpha' and explicit channel weights are mutually exclusive")
        alpha = as_degree(case.alpha, what="alpha")
        weights = [alpha, 1.0 - alpha]
    else:
        weights = [c.weight if c.weight is not None else 1.0 for c in case.channels]
    total = float(sum(weights))
    if total <= 0.0 or any(w < 0.0 for w in weights):
        raise InvariantError(f"channel weights are not normalizable: {weights}")
    weights = [w / total for w in weights]
    return tuple(
        ResolvedChannel(name=c.name, pair=MediativePair(c.mu, c.nu), weight=w)
        for c, w in zip(case.channels, weights)
    )


def _granule_weights(granules: tuple[Granule, ...]) -> tuple[float, ...]:
    total = sum(g.weight for g in granules)
    if total <= 0.0:
        raise InvariantError("granule weights are not normalizable")
    return tuple(g.weight / total for g in granules)


def _build_leaf_aggregator(
    kind: str, params: dict, granules: tuple[Granule, ...], brake: float
) -> Aggregator:
    if kind == "weighted_mean":
        weights = params.get("weights") or _granule_weights(granules)
        return WeightedMean(weights=tuple(weights))
    if kind == "owa":
        if "weights" not in params:
            raise InvariantError("OWA aggregator requires params.weights")
        return OWA(weights=tuple(params["weights"]))
    if kind == "trusted_dominance":
        weights = params.get("weights") or _granule_weights(granules)
        return TrustedDominance(
            tau_dom=float(params.get("tau_dom", brake)),
            weights=tuple(weights),
            trusted=tuple(g.trusted for g in granules),
        )
    raise SchemaError(f"unknown aggregator kind {kind!r}", path="aggregator.kind")


def _build_aggregator(
    spec: AggregatorSpec, granules: tuple[Granule, ...], brake: float
) -> Aggregator:
    if spec.kind != "hierarchical":
        return _build_leaf_aggregator(spec.kind, spec.params, granules, brake)
    groups_spec = spec.params.get("groups")
    if not groups_spec:
        raise InvariantError("hierarchical aggregator requires params.groups")
    index_of = {g.id: i for i, g in enumerate(granules)}
    groups = []
    group_weights = []
    for entry in groups_spec:
        ids = entry.get("ids", [])
        missing = [i for i in ids if i not in index_of]
        if missing:
            raise InvariantError(f"hierarchical group references unknown granules: {missing}")
        indices = tuple(index_of[i] for i in ids)
        members = tuple(granules[i] for i in indices)
        inner = _build_leaf_aggregator(
            entry.get("kind", "weighted_mean"), entry.get("params", {}), members, brake
        )
        groups.append((inner, indices))
        group_weights.append(sum(g.weight for g in members))
    combiner_spec = spec.params.get("combiner")
    if combiner_spec:
        combiner = _build_leaf_aggregator(
            combiner_spec.get("kind", "weighted_mean"),
            combiner_spec.get("params", {"weights": group_weights}),
            granules,
            brake,
        )
    else:
        combiner = WeightedMean(weights=tuple(group_weights))
    return Hierarchical(groups=tuple(groups), combiner=combiner)


def _resolve_t3(case: CaseSpec, tnorm: TNorm, brake: float):
    if not case.granules:
        raise InvariantError("mode 't3' requires a nonempty 'granules' list")
    granules = []
    values: dict[str, dict[str, Any]] = {}
    for i, spec in enumerate(case.granules):
        granules.append(
            Granule(
                id=spec.id,
                source=spec.source,
                window=spec.window,
                context=spec.context,
                trusted=spec.trusted,
                weight=spec.weight,
            )
        )
        path = f"granules[{i}]"
        has_pair = spec.mu is not None and spec.nu is not None
        has_sets = spec.mu_set is not None and spec.nu_set is not None
        if has_pair == has_sets:
            raise InvariantError(
                f"granule {spec.id!r} needs either mu/nu or mu_set/nu_set (not both)"
            )
        if has_pair:
            values[spec.id] = {"p": MediativePair(spec.mu, spec.nu)}
        else:
            values[spec.id] = {
                "p": (
                    _it2set(spec.mu_set, path + ".mu_set"),
                    _it2set(spec.nu_set, path + ".nu_set"),
                )
            }
    granules = tuple(granules)
    grid_points = case.type2.grid_points if case.type2 else KM_GRID_POINTS
    assignment = GranularAssignment(
        granules=granules, values=values, algebra=tnorm, grid_points=grid_points
    )
    agg_spec = case.aggregator or AggregatorSpec()
    aggregator = _build_aggregator(agg_spec, granules, brake)
    return assignment, aggregator, AggregationLevel(agg_spec.level)


def _resolve_quantum(case: CaseSpec, channels: tuple[ResolvedChannel, ...]):
    spec = case.quantum
    if spec is None:
        raise InvariantError("mode 'qmfl' requires a 'quantum' block")
    if spec.encode == "diagonal":
        if any(m is not None for m in (spec.rho, spec.e_plus, spec.e_minus)):
            raise InvariantError(
                "'encode: diagonal' and explicit operator literals are mutually exclusive"
            )
        mu = sum(c.weight * c.pair.mu for c in channels)
        nu = sum(c.weight * c.pair.nu for c in channels)
        triple = diag_encode(mu, nu)
        diagonal = True
    else:
        if spec.rho is None or spec.e_plus is None or spec.e_minus is None:
            raise InvariantError(
                "quantum block needs either 'encode: diagonal' or all of rho/e_plus/e_minus"
            )
        triple = QuantumTriple(
            rho=DensityOperator(_matrix(spec.rho)),
            e_plus=Effect(_matrix(spec.e_plus)),
            e_minus=Effect(_matrix(spec.e_minus)),
        )
        diagonal = False
    if spec.shots < 0:
        raise InvariantError(f"shot count must be nonnegative, got {spec.shots}")
    if not 0.0 < spec.delta < 1.0:
        raise InvariantError(f"delta must lie in (0, 1), got {spec.delta}")
    return ResolvedQuantum(
        triple=triple,
        shots=spec.shots,
        delta=spec.delta,
        seed=spec.seed,
        diagonal_encoding=diagonal,
    )


def _merge(case: CaseSpec, defaults: CaseSpec) -> CaseSpec:
    merged = {
        name: (
            getattr(case, name)
            if getattr(case, name) is not None
            else getattr(defaults, name)
        )
        for name in CaseSpec.model_fields
    }
    return CaseSpec.model_construct(**merged)


def resolve_cases(scenario: Scenario) -> list[ResolvedCase]:
    """Merge batch defaults, enforce invariants, build runtime case objects."""
    defaults = CaseSpec.model_construct(
        **{name: getattr(scenario, name) for name in CaseSpec.model_fields}
    )
    if scenario.cases is not None:
        if not scenario.cases:
            raise InvariantError("'cases' must be a nonempty array when present")
        merged = [_merge(c, defaults) for c in scenario.cases]
        batched = True
    else:
        merged = [defaults]
        batched = False

    resolved = []
    for i, case in enumerate(merged):
        if case.mode is None:
            raise SchemaError(
                "'mode' is required (top level or per case)",
                path=f"cases[{i}].mode" if batched else "mode",
            )
        label = case.case if case.case is not None else str(i + 1)
        tnorm = TNorm(case.tnorm) if case.tnorm else DEFAULT_TNORM
        spec_thresholds = case.thresholds or ThresholdsSpec()
        thresholds = Thresholds(spec_thresholds.brake, spec_thresholds.decelerate)

        channels: tuple[ResolvedChannel, ...] = ()
        type2_sets = envelope_intervals = assignment = aggregator = quantum = None
        level = AggregationLevel.PAIR

        if case.mode == "t1":
            channels = _resolve_channels(case)
        elif case.mode == "t2":
            spec = case.type2
            if spec is None:
                raise InvariantError("mode 't2' requires a 'type2' block")
            has_sets = spec.mu is not None and spec.nu is not None
            if has_sets == (spec.intervals is not None):
                raise InvariantError(
                    "'type2' needs either mu/nu membership sets (type-reduced mode) "
                    "or 'intervals' (envelope mode)"
                )
            if has_sets:
                type2_sets = (
                    _it2set(spec.mu, "type2.mu"),
                    _it2set(spec.nu, "type2.nu"),
                    spec.grid_points,
                )
            else:
                iv = spec.intervals
                envelope_intervals = IntervalPair(
                    iv.mu[0], iv.mu[1], iv.nu[0], iv.nu[1]
                )
        elif case.mode == "t3":
            assignment, aggregator, level = _resolve_t3(case, tnorm, thresholds.brake)
        elif case.mode == "qmfl":
            if case.quantum is not None and case.quantum.encode == "diagonal":
                channels = _resolve_channels(case)
            quantum = _resolve_quantum(case, channels)

        resolved.append(
            ResolvedCase(
                label=label,
                mode=case.mode,
                tnorm=tnorm,
                thresholds=thresholds,
                channels=channels,
                type2_sets=type2_sets,
                envelope_intervals=envelope_intervals,
                assignment=assignment,
                aggregator=aggregator,
                level=level,
                quantum=quantum,
            )
        )
    return resolved
