from fractions import Fraction

import pytest

from ordermaps import (
    Family,
    HypergeometricParams,
    classify,
    hypergeometric_pmf,
    identity_map,
    monte_carlo_report,
    sample_chunked,
    sample_uniform,
)
from ordermaps.sampling import total_variation

SEED = 20260810


class TestDeterminism:
    @pytest.mark.parametrize("family", list(Family))
    def test_same_seed_same_stream(self, family):
        first = list(sample_uniform(family, 4, SEED, 25))
        second = list(sample_uniform(family, 4, SEED, 25))
        assert first == second

    def test_different_seeds_usually_differ(self):
        a = list(sample_uniform(Family.PO, 5, 1, 20))
        b = list(sample_uniform(Family.PO, 5, 2, 20))
        assert a != b

    def test_single_worker_chunking_is_the_plain_stream(self):
        plain = list(sample_uniform(Family.POI, 4, SEED, 17))
        chunked = list(sample_chunked(Family.POI, 4, SEED, 17, jobs=1))
        assert plain == chunked

    def test_worker_fanout_merges_in_worker_order(self):
        merged = list(sample_chunked(Family.PO, 4, SEED, 10, jobs=3))
        expected = (
            list(sample_uniform(Family.PO, 4, SEED ^ 0, 4))
            + list(sample_uniform(Family.PO, 4, SEED ^ 1, 3))
            + list(sample_uniform(Family.PO, 4, SEED ^ 2, 3))
        )
        assert merged == expected

    def test_job_count_validated(self):
        with pytest.raises(ValueError):
            list(sample_chunked(Family.PO, 3, SEED, 5, jobs=0))


class TestSampleSpace:
    def test_singleton_family(self):
        draws = list(sample_uniform(Family.O, 1, 123, 3))
        assert draws == [identity_map(1)] * 3

    @pytest.mark.parametrize("family", list(Family))
    def test_samples_belong_to_their_family(self, family):
        for alpha in sample_uniform(family, 5, SEED, 300):
            assert family in classify(alpha)

    def test_po_excludes_null_by_default(self):
        assert all(not a.is_null() for a in sample_uniform(Family.PO, 2, SEED, 400))

    def test_poi_includes_null_by_default(self):
        # P(null) = 1/6 per draw; 300 draws miss it with prob (5/6)^300
        assert any(a.is_null() for a in sample_uniform(Family.POI, 2, SEED, 300))

    def test_po_include_null_override(self):
        assert any(a.is_null() for a in sample_uniform(Family.PO, 2, SEED, 400, include_null=True))

    def test_negative_count_rejected(self):
        with pytest.raises(ValueError):
            list(sample_uniform(Family.PO, 3, SEED, -1))


class TestTotalVariation:
    def test_perfect_match_is_zero(self):
        exact = hypergeometric_pmf(HypergeometricParams(4, 2, 2))
        empirical = {0: 1, 1: 4, 2: 1}
        assert total_variation(empirical, 6, exact) == 0

    def test_disjoint_support_is_one(self):
        exact = hypergeometric_pmf(HypergeometricParams(4, 4, 4))  # all mass at 4
        assert total_variation({0: 10}, 10, exact) == 1


class TestMonteCarloReport:
    def test_degenerate_family_has_zero_distance(self):
        report = monte_carlo_report(Family.O, 1, SEED, 100)
        assert report.tv_distance == 0
        assert report.empirical == {1: 100}

    def test_report_bookkeeping(self):
        report = monte_carlo_report(Family.POI, 3, SEED, 500)
        assert sum(report.empirical.values()) == report.sample_count == 500
        assert 0 <= report.tv_distance <= 1
        assert report.include_null is True

    def test_poi_2_statistics(self):
        report = monte_carlo_report(Family.POI, 2, SEED, 60000)
        assert report.exact.as_dict() == {0: Fraction(1, 6), 1: Fraction(4, 6), 2: Fraction(1, 6)}
        assert report.tv_distance <= Fraction(2, 100)

    def test_po_2_statistics(self):
        report = monte_carlo_report(Family.PO, 2, SEED, 70000)
        assert report.exact.as_dict() == {1: Fraction(6, 7), 2: Fraction(1, 7)}
        assert report.tv_distance <= Fraction(2, 100)

    def test_ambient_family_has_no_exact_distribution(self):
        with pytest.raises(ValueError):
            monte_carlo_report(Family.PT, 3, SEED, 10)

    def test_count_must_be_positive(self):
        with pytest.raises(ValueError):
            monte_carlo_report(Family.PO, 3, SEED, 0)


def test_stratified_sampling_reproduces_the_conditional_law():
    # unconditional PO_4 draws, conditioned on domain size 3 after the fact
    conditional = {}
    drawn = 0
    for alpha in sample_uniform(Family.PO, 4, SEED, 125000):
        if alpha.domain_size == 3:
            conditional[alpha.image_size] = conditional.get(alpha.image_size, 0) + 1
            drawn += 1
    assert drawn >= 50000
    exact = hypergeometric_pmf(HypergeometricParams(6, 4, 3))
    assert total_variation(conditional, drawn, exact) <= Fraction(2, 100)
