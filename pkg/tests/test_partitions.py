import math

import pytest

from polykron import (
    Composition,
    ContingencyMatrix,
    DegreeMismatchError,
    Partition,
    SizeBoundError,
    SkewShape,
    enumerate_contingency,
    enumerate_partitions,
)
from polykron.partitions import enumerate_compositions, partitions_of


def P(*parts):
    return Partition(parts)


def C(*entries):
    return Composition(entries)


class TestPartition:
    def test_canonical_form_strips_trailing_zeros(self):
        assert P(3, 2, 0, 0) == P(3, 2)
        assert P(0) == P()
        assert P().parts == ()

    def test_invalid_inputs(self):
        with pytest.raises(ValueError):
            Partition([1, 2])
        with pytest.raises(ValueError):
            Partition([2, -1])
        with pytest.raises(ValueError):
            Partition([2, 0, 1])

    def test_size_and_row(self):
        p = P(4, 2, 1)
        assert p.size == 7
        assert len(p) == 3
        assert p.row(0) == 4
        assert p.row(5) == 0

    def test_text(self):
        assert P(3, 2, 1).text() == "3,2,1"
        assert P().text() == "0"

    @pytest.mark.parametrize(
        "parts, expected",
        [((2, 1), (2, 1)), ((), ()), ((3, 1), (2, 1, 1))],
    )
    def test_conjugate_fixtures(self, parts, expected):
        assert Partition(parts).conjugate() == Partition(expected)

    def test_conjugate_is_involution(self):
        for d in range(0, 13):
            for p in partitions_of(d):
                assert p.conjugate().conjugate() == p

    def test_containment(self):
        assert P(3, 2).contains(P(2, 2))
        assert not P(3).contains(P(1, 1))
        assert P().contains(P())


class TestOuterCorners:
    def test_two_corners(self):
        assert P(2, 1).outer_corners() == [(1, 2), (2, 1)]

    def test_single_row(self):
        assert P(6).outer_corners() == [(1, 6)]

    def test_rectangle(self):
        assert P(2, 2).outer_corners() == [(2, 2)]

    def test_empty_raises(self):
        with pytest.raises(ValueError):
            P().outer_corners()


class TestOneBoxMoves:
    def test_staircase(self):
        assert P(2, 1).one_box_moves() == [P(3), P(1, 1, 1)]

    def test_single_row(self):
        assert P(5).one_box_moves() == [P(4, 1)]

    def test_rectangle(self):
        assert P(2, 2).one_box_moves() == [P(3, 1), P(2, 1, 1)]

    def test_moves_preserve_size_and_exclude_self(self):
        for d in range(1, 9):
            for p in partitions_of(d):
                moves = p.one_box_moves()
                assert len(set(moves)) == len(moves)
                for alpha in moves:
                    assert alpha.size == d
                    assert alpha != p

    def test_move_count_identity(self):
        # each corner removal contributes one move per addable cell of the
        # smaller shape, minus the one that restores p
        for d in range(1, 10):
            for p in partitions_of(d):
                total = 0
                for (r, _c) in p.outer_corners():
                    smaller = list(p.parts)
                    smaller[r - 1] -= 1
                    addable = len({x for x in smaller if x}) + 1
                    total += addable - 1
                assert total == len(p.one_box_moves())


class TestEnumeratePartitions:
    def test_degree_zero(self):
        assert enumerate_partitions(0) == [P()]

    def test_counts(self):
        assert len(enumerate_partitions(4)) == 5
        assert len(enumerate_partitions(8)) == 22

    def test_descending_lex_order(self):
        for d in range(0, 10):
            ps = enumerate_partitions(d)
            assert ps == sorted(ps, key=lambda p: p.parts, reverse=True)

    def test_bound(self):
        with pytest.raises(SizeBoundError):
            enumerate_partitions(31)
        assert len(enumerate_partitions(31, bound=31)) > 0


class TestComposition:
    def test_zeros_are_significant(self):
        assert C(1, 0, 1) != C(1, 1)
        assert len(C(1, 0, 1)) == 3
        assert C(1, 0, 1).degree == 2

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            Composition([1, -1])

    def test_sorted_partition(self):
        assert C(0, 3, 1, 3).sorted_partition() == P(3, 3, 1)

    def test_text(self):
        assert C(2, 0, 1).text() == "2,0,1"
        assert C().text() == "0"

    def test_enumerate_compositions_counts(self):
        for d in range(0, 7):
            for n in range(1, 5):
                got = enumerate_compositions(d, n)
                assert len(got) == math.comb(d + n - 1, n - 1)
                assert len(set(got)) == len(got)
                assert all(c.degree == d and len(c) == n for c in got)


class TestSkewShape:
    def test_containment_enforced(self):
        SkewShape(P(3, 1), P(1))
        with pytest.raises(ValueError):
            SkewShape(P(2), P(3))

    def test_size(self):
        assert SkewShape(P(3, 2), P(2)).size == 3


class TestContingency:
    def test_single_row_forces_everything(self):
        for lam in [C(3), C(2, 1), C(1, 1, 1), C(0, 3, 0)]:
            ms = enumerate_contingency(C(3), lam)
            assert len(ms) == 1
            assert ms[0].rows == (lam.entries,)

    def test_two_by_two_permutation_matrices(self):
        ms = enumerate_contingency(C(1, 1), C(1, 1))
        assert [m.rows for m in ms] == [((1, 0), (0, 1)), ((0, 1), (1, 0))]
        assert [m.flatten() for m in ms] == [C(1, 0, 0, 1), C(0, 1, 1, 0)]

    def test_count_fixture(self):
        assert len(enumerate_contingency(C(2, 1), C(2, 1))) == 2

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            enumerate_contingency(C(2), C(3))

    def test_degenerate_degree_zero(self):
        ms = enumerate_contingency(C(0, 0), C(0))
        assert len(ms) == 1
        assert ms[0].flatten() == C(0, 0)

    def test_row_major_descending_order(self):
        for mu, lam in [(C(2, 2), C(2, 1, 1)), (C(3, 1), C(1, 1, 2))]:
            flats = [m.flatten().entries for m in enumerate_contingency(mu, lam)]
            assert flats == sorted(flats, reverse=True)
            assert len(set(flats)) == len(flats)

    def test_transpose_sets(self):
        for mu, lam in [(C(2, 1), C(1, 1, 1)), (C(2, 2), C(3, 1)), (C(1, 1, 1), C(2, 1))]:
            forward = {m.rows for m in enumerate_contingency(mu, lam)}
            backward = {m.transpose().rows for m in enumerate_contingency(lam, mu)}
            assert forward == backward

    def test_matrix_margins_exposed(self):
        m = enumerate_contingency(C(2, 1), C(2, 1))[0]
        assert m.row_sums == C(2, 1)
        assert m.col_sums == C(2, 1)
        assert m.total == 3

    def test_rsk_count_identity_small(self):
        from polykron import kostka
        from polykron.partitions import enumerate_compositions

        for d in range(0, 5):
            weights = [c for n in (1, 2, 3) for c in enumerate_compositions(d, n)]
            for mu in weights:
                for lam in weights:
                    count = len(enumerate_contingency(mu, lam))
                    rsk = sum(
                        kostka(v, mu) * kostka(v, lam) for v in partitions_of(d)
                    )
                    assert count == rsk, (mu, lam)

    def test_matrix_validation(self):
        with pytest.raises(ValueError):
            ContingencyMatrix([[1, 0], [0, 1]], row_sums=[2, 0])
        with pytest.raises(ValueError):
            ContingencyMatrix([[1, -1]])
        ok = ContingencyMatrix([[1, 1], [0, 1]])
        assert ok.row_sums == C(2, 1)
        assert ok.col_sums == C(1, 2)
