import math

import pytest

from trisolve import (
    ComparisonReport,
    CorpusSpec,
    DomainError,
    SasProblem,
    compare_methods,
    compare_regimes,
    generate_corpus,
    reference_solution,
    sin_deg,
)


class TestCorpusSpec:
    def test_bad_regime(self):
        with pytest.raises(DomainError):
            CorpusSpec(regime="bogus", count=1, seed=0)

    def test_bad_count(self):
        with pytest.raises(DomainError):
            CorpusSpec(regime="well_conditioned", count=0, seed=0)


class TestGenerateCorpus:
    def test_deterministic(self):
        spec = CorpusSpec(regime="well_conditioned", count=10, seed=1)
        assert generate_corpus(spec) == generate_corpus(spec)

    def test_thin_isoceles_valid(self):
        for p in generate_corpus(CorpusSpec(regime="thin_isoceles", count=100, seed=7)):
            assert p.a > 0 and p.b > 0 and 0 < p.omega_deg < 180
            assert abs(p.a / p.b - 1.0) <= 1e-6 * (1 + 1e-9)
            assert 1e-6 <= p.omega_deg <= 1e-2

    def test_near_straight_bounds(self):
        for p in generate_corpus(CorpusSpec(regime="near_straight", count=5, seed=3)):
            assert 179.0 <= p.omega_deg < 180.0

    def test_extreme_ratio_bounds(self):
        for p in generate_corpus(CorpusSpec(regime="extreme_ratio", count=50, seed=5)):
            assert 1e6 * (1 - 1e-9) <= p.a / p.b <= 1e12 * (1 + 1e-9)

    def test_different_seeds_differ(self):
        a = generate_corpus(CorpusSpec(regime="well_conditioned", count=10, seed=1))
        b = generate_corpus(CorpusSpec(regime="well_conditioned", count=10, seed=2))
        assert a != b


class TestReferenceSolution:
    def test_equilateral_exact(self):
        sol = reference_solution(SasProblem(a=1.0, b=1.0, omega_deg=60.0))
        assert sol.c == 1.0
        assert sol.theta_deg == 60.0
        assert sol.phi_deg == 60.0
        assert sol.method == "reference"

    def test_right_triangle(self):
        sol = reference_solution(SasProblem(a=5.0, b=3.0, omega_deg=90.0))
        assert sol.c == math.sqrt(34.0)  # correctly rounded

    def test_worked_example_digits(self):
        from trisolve import angle_from_half_tangent

        sol = reference_solution(SasProblem(a=3.0, b=1.0, omega_deg=angle_from_half_tangent(2.0)))
        assert sol.c == pytest.approx(3.687817786, abs=1e-6)
        assert sol.theta_deg == pytest.approx(40.60129465, abs=1e-6)
        assert sol.phi_deg == pytest.approx(12.52880771, abs=1e-6)

    def test_tightened_invariants_across_regimes(self):
        # every TriangleSolution invariant, with tolerances 1000x tighter
        for regime in ("well_conditioned", "thin_isoceles", "near_straight", "extreme_ratio"):
            for p in generate_corpus(CorpusSpec(regime=regime, count=200, seed=13)):
                sol = reference_solution(p)
                assert abs(sol.theta_deg + sol.phi_deg + sol.omega_deg - 180.0) <= 1e-13
                ratios = (
                    sol.a / sin_deg(sol.theta_deg),
                    sol.b / sin_deg(sol.phi_deg),
                    sol.c / sin_deg(sol.omega_deg),
                )
                assert max(ratios) / min(ratios) - 1.0 <= 1e-13
                # triangle inequality with 1-ulp slack: rounding to double can
                # collapse c against a + b when omega is within 1e-9 of 180
                assert abs(sol.a - sol.b) * (1 - 1e-15) <= sol.c <= (sol.a + sol.b) * (1 + 1e-15)
                assert (sol.a >= sol.b) == (sol.theta_deg >= sol.phi_deg)


class TestCompareMethods:
    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            compare_methods([])

    def test_single_equilateral_zero_error(self):
        report = compare_methods([SasProblem(a=1.0, b=1.0, omega_deg=60.0)])
        rec = report.records[0]
        assert rec.sines.c_rel <= 1e-15
        assert rec.sines.theta_rel <= 1e-15
        assert rec.cosines.c_rel <= 1e-15

    def test_well_conditioned_both_methods_tight(self):
        corpus = generate_corpus(CorpusSpec(regime="well_conditioned", count=1000, seed=1))
        report = compare_methods(corpus, regime="well_conditioned")
        agg = report.aggregates["well_conditioned"]
        assert agg["sines"]["max_c_rel"] <= 1e-12
        assert agg["cosines"]["max_c_rel"] <= 1e-12
        assert agg["sines"]["failures"] == 0
        assert agg["cosines"]["failures"] == 0

    def test_thin_isoceles_sines_stays_accurate(self):
        corpus = generate_corpus(CorpusSpec(regime="thin_isoceles", count=1000, seed=7))
        report = compare_methods(corpus, regime="thin_isoceles")
        agg = report.aggregates["thin_isoceles"]
        assert agg["sines"]["max_c_rel"] <= 1e-9
        # the cosines gap is an experimental observation; just require the
        # column to be present and recomputable
        assert agg["cosines"]["max_c_rel"] is not None

    def test_aggregates_recomputable(self):
        corpus = generate_corpus(CorpusSpec(regime="extreme_ratio", count=200, seed=2))
        report = compare_methods(corpus, regime="extreme_ratio")
        assert report.aggregates == ComparisonReport.aggregate(report.records)

    def test_report_determinism(self):
        corpus = generate_corpus(CorpusSpec(regime="near_straight", count=50, seed=9))
        r1 = compare_methods(corpus, regime="near_straight")
        r2 = compare_methods(corpus, regime="near_straight")
        assert r1.to_dict() == r2.to_dict()

    def test_failures_recorded_not_fatal(self):
        # a needle the cosines route cannot survive, mixed with a good one
        needle = SasProblem(a=0.0014143657585302678, b=876.880896559047, omega_deg=0.33586195915270706)
        good = SasProblem(a=1.0, b=1.0, omega_deg=60.0)
        report = compare_methods([needle, good])
        assert report.records[0].cosines_failure is not None
        assert report.records[1].cosines is not None


def test_compare_regimes_merges_all():
    report = compare_regimes(count=20, seed=4)
    assert set(report.aggregates) == {
        "well_conditioned",
        "thin_isoceles",
        "near_straight",
        "extreme_ratio",
    }
    assert len(report.records) == 80
