import pytest

from medilog.core import MediativePair, mediative_score
from medilog.errors import (
    EmptyFamilyError,
    MissingGranuleError,
    UnboundAtomError,
    WeightMismatchError,
)
from medilog.formula.syntax import Atom, parse
from medilog.type2.sets import IT2Set
from medilog.type3 import (
    AggregationLevel,
    GranularAssignment,
    Granule,
    Hierarchical,
    OWA,
    TrustedDominance,
    WeightedMean,
    aggregate,
    granular_eval,
    local_eval,
)

P = Atom("p")


@pytest.fixture
def radar_camera() -> GranularAssignment:
    return GranularAssignment(
        granules=(
            Granule(id="radar", source="radar", window="current", context="fog",
                    trusted=True, weight=0.7),
            Granule(id="camera", source="camera", window="current", context="fog",
                    weight=0.3),
        ),
        values={
            "radar": {"p": MediativePair(0.8, 0.1)},
            "camera": {"p": MediativePair(0.4, 0.2)},
        },
    )


class TestLocalEval:
    def test_radar_score(self, radar_camera):
        assert local_eval("radar", radar_camera, P) == pytest.approx(0.81, abs=1e-12)

    def test_camera_score(self, radar_camera):
        assert local_eval("camera", radar_camera, P) == pytest.approx(0.56, abs=1e-12)

    def test_type2_granule_balanced(self):
        assignment = GranularAssignment(
            granules=(Granule(id="g"),),
            values={"g": {"p": (IT2Set.crisp(0.5), IT2Set.crisp(0.5))}},
        )
        assert local_eval("g", assignment, P) == pytest.approx(0.5, abs=1e-9)

    def test_missing_granule(self, radar_camera):
        with pytest.raises(MissingGranuleError):
            local_eval("lidar", radar_camera, P)

    def test_unbound_atom(self, radar_camera):
        with pytest.raises(UnboundAtomError):
            local_eval("radar", radar_camera, parse("p & q"))

    def test_compound_formula_is_local(self, radar_camera):
        got = local_eval("radar", radar_camera, parse("~p"))
        assert got == pytest.approx(mediative_score(0.1, 0.8), abs=1e-12)


class TestAggregate:
    def test_weighted_mean(self):
        agg = WeightedMean(weights=(0.7, 0.3))
        assert aggregate([0.81, 0.56], agg) == pytest.approx(0.735, abs=1e-12)

    def test_owa_top_weight_is_max(self):
        assert aggregate([0.3, 0.9, 0.5], OWA(weights=(1, 0, 0))) == 0.9

    def test_owa_sorts_descending(self):
        got = aggregate([0.2, 0.8, 0.5], OWA(weights=(0.5, 0.3, 0.2)))
        assert got == pytest.approx(0.5 * 0.8 + 0.3 * 0.5 + 0.2 * 0.2, abs=1e-12)

    def test_trusted_dominance_fires(self):
        agg = TrustedDominance(tau_dom=0.8, weights=(0.7, 0.3), trusted=(True, False))
        assert aggregate([0.81, 0.56], agg) == pytest.approx(0.81, abs=1e-12)

    def test_trusted_dominance_untriggered_is_mean(self):
        agg = TrustedDominance(tau_dom=0.9, weights=(0.7, 0.3), trusted=(True, False))
        assert aggregate([0.81, 0.56], agg) == pytest.approx(0.735, abs=1e-12)

    def test_untrusted_never_dominates(self):
        agg = TrustedDominance(tau_dom=0.5, weights=(0.5, 0.5), trusted=(False, False))
        assert aggregate([0.99, 0.01], agg) == pytest.approx(0.5, abs=1e-12)

    def test_hierarchical_two_groups(self):
        agg = Hierarchical(
            groups=(
                (WeightedMean(weights=(0.5, 0.5)), (0, 1)),
                (WeightedMean(weights=(1.0,)), (2,)),
            ),
            combiner=WeightedMean(weights=(2.0, 1.0)),
        )
        got = aggregate([0.6, 0.8, 0.3], agg)
        assert got == pytest.approx((2 * 0.7 + 0.3) / 3, abs=1e-12)

    def test_hierarchical_requires_partition(self):
        agg = Hierarchical(
            groups=((WeightedMean(weights=(1.0,)), (0,)),),
            combiner=WeightedMean(weights=(1.0,)),
        )
        with pytest.raises(WeightMismatchError):
            aggregate([0.1, 0.2], agg)

    def test_weight_mismatch(self):
        with pytest.raises(WeightMismatchError):
            aggregate([0.1, 0.2, 0.3], WeightedMean(weights=(0.5, 0.5)))

    def test_empty_family(self):
        with pytest.raises(EmptyFamilyError):
            aggregate([], WeightedMean(weights=(1.0,)))

    def test_bad_weights(self):
        with pytest.raises(WeightMismatchError):
            WeightedMean(weights=(0.0, 0.0))
        with pytest.raises(WeightMismatchError):
            OWA(weights=(0.5, -0.5))

    @pytest.mark.parametrize(
        "agg",
        [
            WeightedMean(weights=(0.2, 0.5, 0.3)),
            OWA(weights=(0.6, 0.3, 0.1)),
            TrustedDominance(tau_dom=0.4, weights=(0.2, 0.5, 0.3), trusted=(True, False, True)),
            Hierarchical(
                groups=(
                    (WeightedMean(weights=(0.4, 0.6)), (0, 2)),
                    (OWA(weights=(1.0,)), (1,)),
                ),
                combiner=OWA(weights=(0.7, 0.3)),
            ),
        ],
    )
    def test_idempotence(self, agg):
        for c in (0.0, 0.42, 1.0):
            assert aggregate([c, c, c], agg) == pytest.approx(c, abs=1e-12)

    @pytest.mark.parametrize(
        "agg",
        [
            WeightedMean(weights=(0.2, 0.5, 0.3)),
            OWA(weights=(0.6, 0.3, 0.1)),
            TrustedDominance(tau_dom=0.4, weights=(0.2, 0.5, 0.3), trusted=(True, False, True)),
            Hierarchical(
                groups=(
                    (WeightedMean(weights=(0.4, 0.6)), (0, 2)),
                    (OWA(weights=(1.0,)), (1,)),
                ),
                combiner=OWA(weights=(0.7, 0.3)),
            ),
        ],
    )
    def test_monotonicity(self, agg, rng):
        # raising any single input never decreases the aggregate; 25k random
        # perturbations per aggregator kind (1e5 across the four kinds)
        values = rng.random((25_000, 3))
        bump_at = rng.integers(0, 3, size=25_000)
        bump_by = rng.random(25_000)
        for k in range(25_000):
            row = list(values[k])
            base = aggregate(row, agg)
            i = int(bump_at[k])
            bumped = list(row)
            bumped[i] = min(1.0, bumped[i] + float(bump_by[k]) * (1.0 - bumped[i]))
            assert aggregate(bumped, agg) >= base - 1e-12

    def test_dominance_property(self, rng):
        # trusted granule at or above tau_dom lifts the aggregate to its score
        tau = 0.7
        agg = TrustedDominance(tau_dom=tau, weights=(0.1, 0.9), trusted=(True, False))
        for _ in range(200):
            strong = float(rng.uniform(tau, 1.0))
            weak = float(rng.random())
            assert aggregate([strong, weak], agg) >= strong - 1e-12


class TestGranularEval:
    def test_pair_level_matches_channel_fusion(self, radar_camera):
        agg = WeightedMean(weights=(0.7, 0.3))
        got = granular_eval(radar_camera, P, agg, AggregationLevel.PAIR)
        assert got == pytest.approx(0.7161, abs=1e-12)

    def test_score_level_differs(self, radar_camera):
        agg = WeightedMean(weights=(0.7, 0.3))
        got = granular_eval(radar_camera, P, agg, AggregationLevel.SCORE)
        assert got == pytest.approx(0.735, abs=1e-12)

    def test_homogeneous_reduction(self, rng):
        # identical local values: any idempotent aggregator at any level
        # returns the common local evaluation
        for _ in range(50):
            mu, nu = float(rng.random()), float(rng.random())
            assignment = GranularAssignment(
                granules=(
                    Granule(id="a", weight=0.6),
                    Granule(id="b", weight=0.4),
                    Granule(id="c", weight=1.0),
                ),
                values={g: {"p": MediativePair(mu, nu)} for g in ("a", "b", "c")},
            )
            expected = mediative_score(mu, nu)
            for agg in (
                WeightedMean(weights=(0.6, 0.4, 1.0)),
                OWA(weights=(0.2, 0.5, 0.3)),
                TrustedDominance(tau_dom=0.5, weights=(1, 1, 1), trusted=(True, True, False)),
            ):
                for level in AggregationLevel:
                    got = granular_eval(assignment, P, agg, level)
                    assert got == pytest.approx(expected, abs=1e-12)

    def test_empty_family_rejected(self):
        with pytest.raises(EmptyFamilyError):
            GranularAssignment(granules=(), values={})
