"""Tests for ribbons, decompositions, and the subribbon table.

The 12-cell host (4,3,3,2,1)/(1) with the guide ribbon (6,6,6,5,3)/(6,6,4,2)
is the worked golden case: four pieces of sizes 1, 4, 6, 1.
"""

import pytest
from hypothesis import given, settings, strategies as st

from schurmzv.errors import PreconditionError
from schurmzv.ribbons import (
    RIGHT,
    UP,
    Ribbon,
    SubribbonStatus,
    anchored_ribbon,
    decomposition_from_ribbon,
    fill_subribbon,
    is_ribbon,
    minimal_containing_ribbon,
    ribbon_from_walk,
    subribbon_of,
    subribbon_table,
)
from schurmzv.shapes import (
    content_set,
    diagonal_tableau,
    from_cells,
    make_skew,
    translation_equivalent,
)

HOST = make_skew((4, 3, 3, 2, 1), (1,))
GUIDE = Ribbon(make_skew((6, 6, 6, 5, 3), (6, 6, 4, 2)))


class TestRibbonBasics:
    def test_is_ribbon(self):
        assert is_ribbon(GUIDE.shape)
        assert not is_ribbon(make_skew((2, 2)))  # 2x2 square
        assert is_ribbon(make_skew((1,)))
        assert not is_ribbon(make_skew(()))
        assert not is_ribbon(make_skew((2, 1), (1,)))  # corner-connected only

    def test_guide_walk(self):
        assert GUIDE.start == (5, 1)
        assert GUIDE.end == (3, 6)
        assert GUIDE.cmin == -4 and GUIDE.cmax == 3
        assert GUIDE.steps == (RIGHT, RIGHT, UP, RIGHT, RIGHT, UP, RIGHT)

    def test_walk_roundtrip(self):
        r = ribbon_from_walk(GUIDE.start, GUIDE.steps)
        assert r.shape == GUIDE.shape

    def test_anchored_is_furthest_left(self):
        r = anchored_ribbon(-4, GUIDE.steps)
        assert r.shape == GUIDE.shape
        # A single cell of content 2 sits at (1,3).
        assert anchored_ribbon(2, ()).shape.cells == ((1, 3),)
        # A single cell of content -2 sits at (3,1).
        assert anchored_ribbon(-2, ()).shape.cells == ((3, 1),)

    def test_subribbon_of(self):
        sub = subribbon_of(GUIDE, -4, 0)
        assert content_set(sub.shape) == (-4, -3, -2, -1, 0)
        assert sub.steps == (RIGHT, RIGHT, UP, RIGHT)
        with pytest.raises(PreconditionError):
            subribbon_of(GUIDE, -5, 0)


class TestDecomposeGolden:
    def test_pieces(self):
        theta = decomposition_from_ribbon(HOST, GUIDE)
        assert [p.n_cells for p in theta.pieces] == [1, 4, 6, 1]
        assert set(theta.pieces[0].shape.cells) == {(5, 1)}
        assert set(theta.pieces[1].shape.cells) == {(4, 1), (4, 2), (3, 2), (3, 3)}
        assert set(theta.pieces[2].shape.cells) == {
            (3, 1), (2, 1), (2, 2), (2, 3), (1, 3), (1, 4),
        }
        assert set(theta.pieces[3].shape.cells) == {(1, 2)}

    def test_minimal_ribbon_roundtrip(self):
        theta = decomposition_from_ribbon(HOST, GUIDE)
        assert minimal_containing_ribbon(theta).shape == GUIDE.shape

    def test_content_mismatch_rejected(self):
        short = anchored_ribbon(-1, (UP,))  # 2-cell column, contents {-1,0}
        with pytest.raises(PreconditionError):
            decomposition_from_ribbon(make_skew((2, 2)), short)

    def test_disconnected_host_rejected(self):
        host = make_skew((2, 1), (1,))
        r = anchored_ribbon(-1, (UP, UP))
        with pytest.raises(PreconditionError):
            decomposition_from_ribbon(host, r)

    def test_host_itself_a_ribbon(self):
        host = make_skew((3, 1))
        theta = decomposition_from_ribbon(host, Ribbon(host))
        assert theta.n_pieces == 1
        assert theta.pieces[0].shape == host


class TestColumnRowDecompositions:
    def test_column_decomposition_of_square(self):
        host = make_skew((2, 2))
        col = anchored_ribbon(-1, (UP, UP))
        theta = decomposition_from_ribbon(host, col)
        assert [set(p.shape.cells) for p in theta.pieces] == [
            {(2, 1), (1, 1)},
            {(2, 2), (1, 2)},
        ]
        # The containing ribbon is the column of 3 spanning contents {-1,0,1}.
        r = minimal_containing_ribbon(theta)
        assert r.steps == (UP, UP)
        assert content_set(r.shape) == (-1, 0, 1)

    def test_row_decomposition_of_square(self):
        host = make_skew((2, 2))
        row = anchored_ribbon(-1, (RIGHT, RIGHT))
        theta = decomposition_from_ribbon(host, row)
        assert [set(p.shape.cells) for p in theta.pieces] == [
            {(2, 1), (2, 2)},
            {(1, 1), (1, 2)},
        ]
        assert minimal_containing_ribbon(theta).steps == (RIGHT, RIGHT)


class TestSubribbonTable:
    def test_golden_statuses(self):
        theta = decomposition_from_ribbon(HOST, GUIDE)
        table = subribbon_table(theta)
        assert table.n == 4
        # Content intervals: pieces span [-4,-4], [-3,0], [-2,3], [1,1].
        assert table.entry(2, 1).status is SubribbonStatus.EMPTY   # [-3,-4]
        assert table.entry(4, 2).status is SubribbonStatus.EMPTY   # [1,0]
        assert table.entry(3, 1).status is SubribbonStatus.UNDEFINED  # [-2,-4]
        assert table.entry(4, 1).status is SubribbonStatus.UNDEFINED  # [1,-4]
        assert table.count(SubribbonStatus.EMPTY) == 2
        assert table.count(SubribbonStatus.UNDEFINED) == 2
        assert table.count(SubribbonStatus.DEFINED) == 12

    def test_golden_defined_entries(self):
        theta = decomposition_from_ribbon(HOST, GUIDE)
        table = subribbon_table(theta)
        # (1,3) spans the full content range, so it is the whole ribbon.
        assert table.entry(1, 3).ribbon.shape == GUIDE.shape
        # Diagonal entries are translates of the pieces themselves.
        for i, p in enumerate(theta.pieces, start=1):
            assert translation_equivalent(table.entry(i, i).ribbon.shape, p.shape)
        # (1,2) spans [-4,0]: two rows of 2 and 3 cells.
        r12 = table.entry(1, 2).ribbon
        assert content_set(r12.shape) == (-4, -3, -2, -1, 0)
        assert r12.steps == (RIGHT, RIGHT, UP, RIGHT)
        # (4,3) spans [1,3]: an up-right staircase of 3 cells.
        r43 = table.entry(4, 3).ribbon
        assert content_set(r43.shape) == (1, 2, 3)
        assert r43.steps == (UP, RIGHT)

    def test_fill_golden(self):
        theta = decomposition_from_ribbon(HOST, GUIDE)
        table = subribbon_table(theta)
        k = diagonal_tableau(
            HOST,
            {-4: 3, -3: 7, -2: 4, -1: 6, 0: 3, 1: 2, 2: 1, 3: 5},
        )
        t12 = fill_subribbon(k, table.entry(1, 2))
        assert t12.rows[-2:] == ((6, 3), (3, 7, 4))
        t33 = fill_subribbon(k, table.entry(3, 3))
        assert t33.rows[-3:] == ((1, 5), (6, 3, 2), (4,))
        assert fill_subribbon(k, table.entry(2, 1)) is SubribbonStatus.EMPTY
        assert fill_subribbon(k, table.entry(4, 1)) is SubribbonStatus.UNDEFINED


@st.composite
def connected_skew_shapes(draw, max_cells=8):
    """Grow a random edge-connected skew shape cell by cell."""
    n = draw(st.integers(1, max_cells))
    cells = {(4, 4)}
    for _ in range(n - 1):
        frontier = sorted(
            {
                nb
                for (i, j) in cells
                for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1))
                if nb not in cells and nb[0] > 0 and nb[1] > 0
            }
        )
        pick = draw(st.integers(0, len(frontier) - 1))
        cand = cells | {frontier[pick]}
        try:
            s = from_cells(cand)
        except PreconditionError:
            continue
        from schurmzv.shapes import is_edge_connected

        if is_edge_connected(s):
            cells = cand
    return from_cells(cells)


class TestRoundTripProperty:
    @settings(max_examples=60, deadline=None)
    @given(connected_skew_shapes(), st.data())
    def test_decompose_then_reconstruct(self, host, data):
        span = content_set(host)
        steps = tuple(
            data.draw(st.sampled_from([UP, RIGHT]))
            for _ in range(span[-1] - span[0])
        )
        guide = anchored_ribbon(span[0], steps)
        theta = decomposition_from_ribbon(host, guide)
        assert minimal_containing_ribbon(theta).shape == guide.shape
        got = sorted(c for p in theta.pieces for c in p.shape.cells)
        assert got == sorted(host.cells)
