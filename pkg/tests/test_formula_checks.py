import pytest

from medilog.algebra import TNorm
from medilog.core import MediativePair, mediative_eval
from medilog.errors import TooManyAtomsError
from medilog.formula.checks import (
    AXIOM_SCHEMATA,
    Designation,
    VERDICT_COUNTEREXAMPLE,
    VERDICT_HOLDS,
    VERDICT_VALID,
    axiom_verdicts,
    check_entailment,
    check_validity,
    paraconsistency_probe,
)
from medilog.formula.semantics import Valuation, evaluate, m_degree
from medilog.formula.syntax import Atom, Not, parse

LUK = TNorm.LUKASIEWICZ


class TestValidity:
    def test_self_implication_mu_designation(self):
        report = check_validity(parse("p -> p"), 11, Designation.MU)
        assert report.verdict == VERDICT_VALID
        assert report.witness is None
        assert report.extremal_degree == pytest.approx(1.0, abs=1e-9)

    def test_self_implication_m_designation(self):
        report = check_validity(parse("p -> p"), 11, Designation.M)
        assert report.verdict == VERDICT_COUNTEREXAMPLE
        # the tautology pair is (1, 1) whose mediative degree is constant 0.5
        assert report.witness_degree == pytest.approx(0.5, abs=1e-12)
        assert report.extremal_degree == pytest.approx(0.5, abs=1e-12)

    def test_explosion_has_counterexample(self):
        report = check_validity(parse("(p & ~p) -> q"), 11, Designation.MU)
        assert report.verdict == VERDICT_COUNTEREXAMPLE
        assert report.witness is not None
        v = Valuation(dict(report.witness), algebra=LUK)
        assert evaluate(parse("(p & ~p) -> q"), v).mu < 1.0 - 1e-9

    def test_too_many_atoms(self):
        with pytest.raises(TooManyAtomsError):
            check_validity(parse("a & b & c & d & e"), 5)

    def test_deterministic_witness(self):
        f = parse("(p & ~p) -> q")
        r1 = check_validity(f, 11, Designation.MU)
        r2 = check_validity(f, 11, Designation.MU)
        assert r1.witness == r2.witness
        assert r1.extremal_degree == r2.extremal_degree

    def test_closed_formula(self):
        report = check_validity(parse("top"), 11, Designation.MU)
        assert report.verdict == VERDICT_VALID
        report = check_validity(parse("top"), 11, Designation.M)
        assert report.verdict == VERDICT_COUNTEREXAMPLE
        assert report.witness == {}


class TestEntailment:
    def test_modus_ponens_holds(self):
        report = check_entailment(
            [parse("p"), parse("p -> q")], parse("q"), 11, Designation.MU
        )
        assert report.verdict == VERDICT_HOLDS

    def test_empty_premises_top(self):
        report = check_entailment([], parse("top"), 11, Designation.MU)
        assert report.verdict == VERDICT_VALID

    def test_atom_independence(self):
        report = check_entailment([parse("p")], parse("q"), 11, Designation.MU)
        assert report.verdict == VERDICT_COUNTEREXAMPLE
        witness = dict(report.witness)
        # premise designated, conclusion not
        assert witness["p"].mu == 1.0
        assert witness["q"].mu < 1.0 - 1e-9

    def test_closed_conclusion_with_open_premises(self):
        # a constant conclusion evaluates once per block; the mask must still
        # apply across all premise valuations
        report = check_entailment([parse("p")], parse("top"), 11, Designation.MU)
        assert report.verdict == VERDICT_HOLDS
        report = check_entailment([parse("p")], parse("top"), 11, Designation.M)
        assert report.verdict == VERDICT_COUNTEREXAMPLE
        assert report.witness_degree == pytest.approx(0.5, abs=1e-12)


class TestParaconsistencyProbe:
    def test_witness_at_their_maximum(self):
        witness = paraconsistency_probe(0.6)
        assert witness is not None
        pair = witness.lookup("p")
        assert (pair.mu, pair.nu) == (0.75, 0.75)
        both = (
            m_degree(Atom("p"), witness),
            m_degree(Not(Atom("p")), witness),
        )
        assert both[0] == pytest.approx(0.625, abs=1e-9)
        assert both[1] == pytest.approx(0.625, abs=1e-9)

    def test_low_threshold_finds_witness(self):
        witness = paraconsistency_probe(0.51)
        assert witness is not None
        pair = witness.lookup("p")
        assert min(
            m_degree(Atom("p"), witness), m_degree(Not(Atom("p")), witness)
        ) >= 0.51 - 1e-12
        assert pair.mu + pair.nu >= 1.0  # overdetermined regime only

    def test_above_analytic_maximum(self):
        assert paraconsistency_probe(0.7) is None


class TestAxiomSchemata:
    def test_templates_parse_and_render(self):
        assert set(AXIOM_SCHEMATA) == {"Med1", "Med2a", "Med2b", "Med3"}

    def test_verdicts_cover_both_designations(self):
        verdicts = axiom_verdicts(grid_points=6)
        for name, by_mode in verdicts.items():
            assert set(by_mode) == {"mu", "m"}
            for report in by_mode.values():
                # reported witnesses must genuinely fail designation
                if report.verdict == VERDICT_COUNTEREXAMPLE:
                    v = Valuation(dict(report.witness), algebra=LUK)
                    schema = AXIOM_SCHEMATA[name]
                    pair = evaluate(schema, v)
                    degree = pair.mu if report.designation is Designation.MU else mediative_eval(pair)
                    assert degree < 1.0 - 1e-9

    def test_med2_fails_under_verbatim_semantics(self):
        # Med(top) <-> top evaluates below designation in both modes: the
        # documented tension between the axiom and the valuation clauses.
        verdicts = axiom_verdicts(grid_points=6)
        assert verdicts["Med2a"]["mu"].verdict == VERDICT_COUNTEREXAMPLE
        assert verdicts["Med2a"]["m"].verdict == VERDICT_COUNTEREXAMPLE


class TestGridSemanticsAgainstScalar:
    def test_witness_reevaluation_guard(self):
        # spot-check: every counterexample re-evaluates as non-designated
        for text, designation in [
            ("p -> p", Designation.M),
            ("(p & ~p) -> q", Designation.MU),
            ("p | q", Designation.MU),
            ("Med(p) -> p", Designation.MU),
        ]:
            report = check_validity(parse(text), 7, designation)
            if report.verdict != VERDICT_COUNTEREXAMPLE:
                continue
            v = Valuation(dict(report.witness), algebra=LUK)
            pair = evaluate(parse(text), v)
            degree = pair.mu if designation is Designation.MU else mediative_eval(pair)
            assert degree < 1.0 - 1e-9

    def test_three_atom_sweep(self):
        report = check_validity(parse("(p & q) -> (q | r)"), 4, Designation.MU)
        assert report.verdict == VERDICT_VALID

    def test_chunked_sweep_finds_first_counterexample(self):
        # 4 atoms at 5 grid points = 390625 valuations, i.e. two sweep
        # blocks.  The premise designates only valuations with mu_a = 1,
        # whose first lexicographic index (a is the most significant digit)
        # lies in the second block; the reported witness must still be the
        # lexicographically first one overall.
        premise = parse("a & (c -> c) & (d -> d)")
        report = check_entailment([premise], parse("b"), 5, Designation.MU)
        assert report.verdict == VERDICT_COUNTEREXAMPLE
        witness = dict(report.witness)
        assert witness["a"] == MediativePair(1.0, 0.0)
        assert witness["b"] == MediativePair(0.0, 0.0)
        assert witness["c"] == MediativePair(0.0, 0.0)
        assert witness["d"] == MediativePair(0.0, 0.0)

    def test_chunked_sweep_valid_formula(self):
        # exercises multi-block traversal with no violations anywhere
        f = parse("(a & b & c & d) -> (a | b | c | d)")
        report = check_validity(f, 5, Designation.MU)
        assert report.verdict == VERDICT_VALID


def test_godel_algebra_changes_findings():
    # under Godel, p -> p is still mu-valid; witnesses may differ elsewhere
    report = check_validity(parse("p -> p"), 11, Designation.MU, TNorm.GODEL)
    assert report.verdict == VERDICT_VALID
