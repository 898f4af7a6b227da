"""
Tests for the independent checks of the decomposition
"""
from math import comb

import numpy as np
import pytest

from src.chains.families import Chain, FamilyParams
from src.ladders.peeling import peel_ladder, scd
from src.lattice.core import AmbientParams, covers, enumerate_lattice
from src.verify.checks import (
    SAMPLE_LIMIT, VerificationReport, gf_truncated_check, is_saturated, is_symmetric,
    monomial_exponents, verify_chain_profile, verify_l2k_scd, verify_ladders,
    verify_partition, verify_peel_conservation, verify_scd, weight, weight_series, weights
)


class TestChainPredicates:
    """Saturation and symmetry of single chains."""

    def test_saturated(self):
        assert is_saturated([(0, 0, 0, 0, 0), (0, 0, 0, 0, 1)])
        assert not is_saturated([(0, 0, 0, 0, 0), (0, 0, 0, 1, 1)])
        assert is_saturated([(0, 1, 1, 2, 2)])

    def test_saturated_accepts_chain_objects(self):
        assert is_saturated(Chain(points=((0, 0, 0, 0, 0), (0, 0, 0, 0, 1))))

    def test_symmetric(self):
        assert is_symmetric([(0, 0, 0, 0, 0), (1, 1, 1, 1, 1)], 1)
        assert is_symmetric([(0, 0, 0, 1, 1), (1, 1, 2, 2, 2)], 2)
        assert not is_symmetric([(0, 0, 0, 0, 0)], 1)


class TestWeight:
    """The weight map to degree-n monomials in six variables."""

    @pytest.mark.parametrize("point, n, expected", [
        ((0, 0, 0, 0, 0), 2, (2, 0, 0, 0, 0, 0)),
        ((1, 1, 1, 1, 1), 1, (0, 0, 0, 0, 0, 1)),
        ((0, 1, 1, 2, 2), 2, (0, 0, 1, 0, 1, 0)),
    ])
    def test_examples(self, point, n, expected):
        assert weight(point, n) == expected

    def test_vectorized_matches_scalar(self):
        points = list(enumerate_lattice(AmbientParams(5, 3)))
        expected = np.array([weight(point, 3) for point in points])
        np.testing.assert_array_equal(weights(points, 3), expected)

    @pytest.mark.parametrize("n", range(0, 16))
    def test_bijection_onto_monomials(self, n):
        images = {weight(point, n) for point in enumerate_lattice(AmbientParams(5, n))}
        assert images == set(monomial_exponents(n))

    @pytest.mark.parametrize("degree", range(0, 6))
    def test_monomial_exponents(self, degree):
        monomials = list(monomial_exponents(degree))
        assert len(monomials) == comb(degree + 5, 5)
        assert len(set(monomials)) == len(monomials)
        assert all(len(e) == 6 and sum(e) == degree and min(e) >= 0 for e in monomials)


class TestVerifyPartition:
    """Coverage of L(5, n) by a list of chains."""

    @pytest.mark.parametrize("n, points, chains", [(0, 1, 1), (2, 21, 3), (3, 56, 6)])
    def test_passes(self, n, points, chains):
        report = verify_partition(scd(n), n)
        assert report.passed
        assert (report.total_points, report.chain_count) == (points, chains)

    def test_dropped_chain(self):
        report = verify_partition(scd(2)[1:], 2)
        assert not report.passed
        assert len(report.missing) == 7
        assert not report.duplicates

    def test_duplicate_point(self):
        chains = scd(2) + [Chain(points=((0, 0, 0, 0, 0),))]
        report = verify_partition(chains, 2)
        assert report.duplicates == [(0, 0, 0, 0, 0)]
        assert report.symmetry_failures == [((0, 0, 0, 0, 0), (0, 0, 0, 0, 0))]

    def test_foreign_point(self):
        chains = scd(1) + [Chain(points=((0, 0, 0, 1, 2), (0, 0, 0, 2, 2), (0, 0, 1, 2, 2)))]
        report = verify_partition(chains, 1)
        assert len(report.unexpected) == 3
        assert not report.passed

    def test_junction_between_chains_is_not_a_step(self):
        chains = scd(2)
        assert not all(covers(a.points[-1], b.points[0]) for a, b in zip(chains, chains[1:]))
        assert not verify_partition(chains, 2).saturation_failures

    def test_jump_inside_chain(self):
        chains = scd(1) + [Chain(points=((0, 0, 0, 0, 0), (0, 0, 0, 1, 1)))]
        report = verify_partition(chains, 1)
        assert report.saturation_failures == [((0, 0, 0, 0, 0), (0, 0, 0, 1, 1))]
        assert len(report.duplicates) == 2

    def test_empty_chain(self):
        report = verify_partition(scd(2) + [Chain(points=())], 2)
        assert report.errors == ["empty chain"]
        assert report.total_points == 21

    def test_samples_are_bounded(self):
        report = verify_partition([], 3)
        assert len(report.missing) == SAMPLE_LIMIT

    def test_summary_line(self):
        assert verify_partition(scd(0), 0).summary_line() == "n=0 points=1 chains=1 pass"
        assert VerificationReport(n=4, errors=["x"]).summary_line() == "n=4 points=0 chains=0 fail"


class TestChainProfile:
    """Chain start ranks against the rank size oracle."""

    @pytest.mark.parametrize("n", range(0, 10))
    def test_matches_oracle(self, n):
        assert verify_chain_profile(scd(n), n)

    def test_n2_start_ranks(self):
        assert sorted(chain.min_rank for chain in scd(2)) == [0, 2, 4]

    def test_n3_start_ranks(self):
        assert sorted(chain.min_rank for chain in scd(3)) == [0, 2, 3, 4, 5, 6]

    def test_missing_chain_is_detected(self):
        assert not verify_chain_profile(scd(3)[:-1], 3)


class TestGeneratingFunction:
    """Truncated coverage of 1 / prod(1 - x_i)."""

    def test_degree_zero(self):
        report = gf_truncated_check(0)
        assert report.passed
        assert report.total_points == 1

    def test_degree_five(self):
        report = gf_truncated_check(5)
        assert report.passed
        assert report.total_points == comb(11, 6) == 462

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            gf_truncated_check(-1)

    def test_weight_series_per_family(self):
        assert weight_series(scd(3), 3) == {"C1": 12, "C2": 10, "C3": 30, "C9": 4}


class TestPeelConservation:
    """Peeling keeps exactly the points of a ladder."""

    def test_one_row_ladder(self, ladders_n3, find_ladder):
        ladder = find_ladder(ladders_n3, "C2")
        assert verify_peel_conservation(ladder, peel_ladder(ladder).chains)

    def test_two_row_ladder(self, ladders_n3, find_ladder):
        ladder = find_ladder(ladders_n3, "C3", FamilyParams(u=1))
        chains = peel_ladder(ladder).chains
        assert sum(len(chain) for chain in chains) == 14
        assert verify_peel_conservation(ladder, chains)

    def test_duplicated_point(self, ladders_n3, find_ladder):
        ladder = find_ladder(ladders_n3, "C3", FamilyParams(u=1))
        chains = list(peel_ladder(ladder).chains)
        chains.append(Chain(points=(chains[0].first,)))
        assert not verify_peel_conservation(ladder, chains)

    @pytest.mark.parametrize("n", range(0, 11))
    def test_every_ladder(self, n):
        assert verify_ladders(n) == []


class TestL2k:
    """The L(2, k) decomposition oracle."""

    @pytest.mark.parametrize("k", range(0, 31))
    def test_l2k_scd(self, k):
        assert verify_l2k_scd(k)

    def test_rejects_broken_decomposition(self):
        assert not verify_l2k_scd(2, [[(0, 0), (0, 1), (0, 2), (1, 2), (2, 2)]])
        assert not verify_l2k_scd(1, [[(0, 0), (1, 1)], [(0, 1)]])


class TestVerifyScd:
    """All per-n checks together."""

    @pytest.mark.parametrize("n", range(0, 9))
    def test_passes(self, n):
        assert verify_scd(n).passed

    @pytest.mark.parametrize("n", range(0, 7))
    def test_deep_passes(self, n):
        report = verify_scd(n, deep=True)
        assert report.passed, report.failure_counts()

    def test_dropped_family_fails(self):
        report = verify_scd(2, drop_families=("C3",))
        assert not report.passed
        assert len(report.missing) == 11


@pytest.mark.slow
class TestFullSweep:
    """Desk-scale acceptance sweeps."""

    @pytest.mark.parametrize("n", range(0, 41))
    def test_verify_scd(self, n):
        report = verify_scd(n, deep=True)
        assert report.passed, report.failure_counts()
        assert report.total_points == comb(n + 5, 5)

    def test_gf_truncated_to_25(self):
        report = gf_truncated_check(25, threads=0)
        assert report.passed
        assert report.total_points == comb(31, 6) == 736281
