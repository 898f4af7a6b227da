"""
Tests for the nine parallel chain families and the L(2, k) decomposition
"""
from collections import Counter
from math import comb

import numpy as np
import pytest

from src.chains.families import (
    ConstructionError, FamilyInstance, FamilyParams, RowIndex, chain_length, check_expansion,
    enumerate_family_params, family_row_count, family_rows, get_table, l2k_scd, materialize_chain,
    parallel_chains
)
from src.lattice.core import AmbientParams, covers, enumerate_lattice, is_valid_point, pack_points, rank


def chain_of(family, n, row=RowIndex(), **params):
    return materialize_chain(FamilyInstance(family, FamilyParams(**params), row, n)).points


class TestEnumerateFamilyParams:
    """Parameter tuples admitted by the table conditions."""

    def test_n0(self):
        assert enumerate_family_params(0) == [("C9", FamilyParams())]

    def test_n1(self):
        assert enumerate_family_params(1) == [("C3", FamilyParams())]

    def test_n2(self):
        assert enumerate_family_params(2) == [
            ("C1", FamilyParams()),
            ("C3", FamilyParams()),
            ("C9", FamilyParams(k=1)),
        ]

    def test_n3_family_breakdown(self):
        found = enumerate_family_params(3)
        assert Counter(family for family, _ in found) == {"C1": 1, "C2": 1, "C3": 2, "C9": 1}
        assert ("C3", FamilyParams(u=1)) in found
        assert ("C9", FamilyParams(u=1)) in found

    @pytest.mark.parametrize("n", range(0, 16))
    def test_l2k_families_force_parity(self, n):
        for family, params in enumerate_family_params(n):
            if family in ("C7", "C8", "C9"):
                assert params.u == n % 2
                assert params.j == 0
            else:
                assert params.w == 0

    def test_order_is_canonical(self):
        found = enumerate_family_params(12)
        ranks = [(int(family[1:]), params) for family, params in found]
        assert ranks == sorted(ranks)

    def test_drop_families(self):
        assert enumerate_family_params(2, drop_families=("C3",)) == [
            ("C1", FamilyParams()),
            ("C9", FamilyParams(k=1)),
        ]

    def test_negative_n(self):
        with pytest.raises(ValueError):
            enumerate_family_params(-1)

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="Unknown family"):
            get_table("C10")


class TestMaterializeChain:
    """Expansion of table rows into explicit chains."""

    def test_c1_n2(self):
        assert chain_of("C1", 2) == (
            (0, 0, 0, 1, 1), (0, 0, 1, 1, 1), (0, 1, 1, 1, 1), (1, 1, 1, 1, 1),
            (1, 1, 1, 1, 2), (1, 1, 1, 2, 2), (1, 1, 2, 2, 2),
        )

    def test_c3_n1(self):
        assert chain_of("C3", 1) == (
            (0, 0, 0, 0, 0), (0, 0, 0, 0, 1), (0, 0, 0, 1, 1),
            (0, 0, 1, 1, 1), (0, 1, 1, 1, 1), (1, 1, 1, 1, 1),
        )

    def test_c9_n0(self):
        assert chain_of("C9", 0) == ((0, 0, 0, 0, 0),)

    def test_c2_n3(self):
        assert chain_of("C2", 3) == (
            (0, 0, 0, 1, 2), (0, 0, 0, 2, 2), (0, 0, 1, 2, 2), (0, 0, 2, 2, 2),
            (0, 1, 2, 2, 2), (0, 2, 2, 2, 2), (1, 2, 2, 2, 2), (2, 2, 2, 2, 2),
            (2, 2, 2, 2, 3), (2, 2, 2, 3, 3),
        )

    def test_c3_zigzag_rows_n3(self):
        assert chain_of("C3", 3, RowIndex(p=0), u=1) == (
            (0, 0, 1, 1, 2), (0, 0, 1, 1, 3), (0, 0, 1, 2, 3), (0, 0, 2, 2, 3),
            (0, 1, 2, 2, 3), (0, 2, 2, 2, 3), (1, 2, 2, 2, 3),
        )
        assert chain_of("C3", 3, RowIndex(p=1), u=1) == (
            (0, 1, 1, 1, 2), (0, 1, 1, 1, 3), (0, 1, 1, 2, 3), (0, 1, 1, 3, 3),
            (0, 1, 2, 3, 3), (0, 2, 2, 3, 3), (1, 2, 2, 3, 3),
        )

    def test_c9_n3(self):
        assert chain_of("C9", 3, u=1) == (
            (0, 1, 1, 2, 2), (1, 1, 1, 2, 2), (1, 1, 2, 2, 2), (1, 1, 2, 2, 3),
        )

    def test_c9_n2_rows(self):
        rows = [RowIndex(0, 0), RowIndex(0, 1), RowIndex(1, 1)]
        assert [chain_of("C9", 2, row, k=1) for row in rows] == [
            ((0, 0, 1, 1, 2),), ((0, 1, 1, 1, 2),), ((0, 1, 1, 2, 2),),
        ]

    def test_c1_n5_two_rows(self):
        lower = chain_of("C1", 5, RowIndex(p=0), k=1)
        upper = chain_of("C1", 5, RowIndex(p=1), k=1)
        assert (len(lower), len(upper)) == (9, 9)
        assert (lower[0], lower[-1]) == ((0, 1, 1, 3, 3), (2, 2, 4, 4, 4))
        assert (upper[0], upper[-1]) == ((1, 1, 1, 3, 3), (2, 2, 4, 4, 5))

    @pytest.mark.parametrize("family, n, first, last, length", [
        ("C4", 4, (1, 1, 1, 2, 3), (1, 2, 3, 3, 3), 5),
        ("C5", 4, (0, 1, 1, 2, 3), (2, 2, 3, 3, 3), 7),
        ("C6", 7, (1, 2, 2, 5, 5), (2, 3, 4, 5, 6), 6),
    ])
    def test_endpoints(self, family, n, first, last, length):
        points = chain_of(family, n)
        assert (points[0], points[-1], len(points)) == (first, last, length)

    def test_c7_n6(self):
        assert chain_of("C7", 6) == ((1, 2, 3, 4, 4), (1, 2, 3, 4, 5), (2, 2, 3, 4, 5))

    def test_c8_n9(self):
        assert chain_of("C8", 9, u=1) == (
            (1, 3, 4, 6, 7), (2, 3, 4, 6, 7), (3, 3, 4, 6, 7), (3, 3, 5, 6, 7),
        )

    def test_condition_must_hold(self):
        with pytest.raises(ValueError, match="condition"):
            materialize_chain(FamilyInstance("C1", FamilyParams(), RowIndex(), 1))

    def test_row_must_be_in_range(self):
        with pytest.raises(ValueError, match="row index"):
            materialize_chain(FamilyInstance("C1", FamilyParams(), RowIndex(p=1), 2))

    def test_provenance(self):
        instance = FamilyInstance("C3", FamilyParams(), RowIndex(), 1)
        chain = materialize_chain(instance)
        assert chain.provenance == instance
        assert (chain.min_rank, chain.max_rank) == (0, 5)

    @pytest.mark.parametrize("n", range(0, 13))
    def test_every_instance_is_saturated_with_closed_form_length(self, n):
        for family, params in enumerate_family_params(n):
            expected = chain_length(family, params, n)
            for _, rows in family_rows(family, params):
                for row in rows:
                    points = chain_of(family, n, row, **params.as_dict())
                    assert len(points) == expected
                    assert all(is_valid_point(point, n) for point in points)
                    assert all(covers(lo, hi) for lo, hi in zip(points, points[1:]))

    def test_check_expansion_rejects_jump(self):
        instance = FamilyInstance("C3", FamilyParams(), RowIndex(), 1)
        with pytest.raises(ConstructionError, match="is not a cover"):
            check_expansion([(0, 0, 0, 0, 0), (0, 0, 0, 1, 1)], instance)

    def test_check_expansion_rejects_point_outside_box(self):
        instance = FamilyInstance("C3", FamilyParams(), RowIndex(), 1)
        with pytest.raises(ConstructionError, match="not a point of L"):
            check_expansion([(0, 0, 0, 0, 1), (0, 0, 0, 0, 2)], instance)

    def test_check_expansion_accepts_chain(self):
        instance = FamilyInstance("C3", FamilyParams(), RowIndex(), 1)
        check_expansion(list(chain_of("C3", 1)), instance)


class TestRows:
    """Row index sets of the families."""

    def test_c2_rows_descend(self):
        assert family_rows("C2", FamilyParams(k=1)) == [(None, [RowIndex(0, 1), RowIndex(0, 0)])]

    def test_row_counts(self):
        assert family_row_count("C1", FamilyParams(k=2)) == 3
        assert family_row_count("C3", FamilyParams(k=1, u=1)) == 4
        assert family_row_count("C7", FamilyParams(k=2)) == 6

    def test_l2k_layers(self):
        layers = family_rows("C9", FamilyParams(k=2))
        assert [t for t, _ in layers] == [0, 1]
        assert layers[1][1] == [RowIndex(1, 1)]

    @pytest.mark.parametrize("n", range(0, 13))
    def test_row_ranks_rise_by_one(self, n):
        for family, params in enumerate_family_params(n):
            for _, rows in family_rows(family, params):
                firsts = [rank(chain_of(family, n, row, **params.as_dict())[0]) for row in rows]
                assert firsts == list(range(firsts[0], firsts[0] + len(firsts)))


class TestL2kScd:
    """Symmetric chains of L(2, k) on pairs (q, p)."""

    def test_k0(self):
        assert l2k_scd(0) == [[(0, 0)]]

    def test_k2(self):
        assert l2k_scd(2) == [[(0, 0), (0, 1), (0, 2), (1, 2), (2, 2)], [(1, 1)]]

    def test_k3(self):
        chains = l2k_scd(3)
        assert [len(chain) for chain in chains] == [7, 3]
        assert len({pair for chain in chains for pair in chain}) == 10


class TestParallelChains:
    """All pre-peel chains at one n."""

    @pytest.mark.parametrize("n", range(0, 11))
    def test_partition_the_lattice(self, n):
        points = [point for chain in parallel_chains(n) for point in chain.points]
        assert len(points) == comb(n + 5, 5)
        keys = np.sort(pack_points(points))
        expected = pack_points(list(enumerate_lattice(AmbientParams(5, n))))
        np.testing.assert_array_equal(keys, expected)

    def test_n3_totals(self):
        chains = parallel_chains(3)
        assert sorted(len(chain) for chain in chains) == [4, 7, 7, 10, 12, 16]
