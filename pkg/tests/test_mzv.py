import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurmzv.errors import PreconditionError
from schurmzv.evaluate import truncated_schur_zeta
from schurmzv.mzv import (
    expand_tableau,
    is_admissible_index,
    numeric_mzv,
    richardson_extrapolate,
    truncated_mzsv,
    truncated_mzv,
    truncated_mzv_float,
    truncated_mzv_float_ladder,
)
from schurmzv.shapes import Tableau, make_skew, tableau_from_entries

from test_ribbons import connected_skew_shapes

PI = math.pi
ZETA3 = 1.2020569031595942854


def brute_mzv(idx, M):
    from itertools import combinations

    total = Fraction(0)
    for ms in combinations(range(1, M), len(idx)):
        term = Fraction(1)
        for m, k in zip(ms, idx):
            term *= Fraction(1, m**k)
        total += term
    return total


class TestTruncated:
    def test_single(self):
        assert truncated_mzv((2,), 3) == Fraction(5, 4)

    def test_depth_two(self):
        assert truncated_mzv((1, 2), 3) == Fraction(1, 4)

    def test_matches_brute_force(self):
        for idx in [(1, 3), (2, 1, 2), (1, 1, 1), (4,)]:
            for M in (1, 2, 3, 6):
                assert truncated_mzv(idx, M) == brute_mzv(idx, M)

    def test_short_cutoff_is_zero(self):
        assert truncated_mzv((1, 2, 1), 3) == 0
        assert truncated_mzv((2,), 1) == 0

    def test_star_single(self):
        assert truncated_mzsv((2,), 3) == Fraction(5, 4)

    def test_star_pairs(self):
        # (1,1): pairs (1,1), (1,2), (2,2) -> 1 + 1/2 + 1/4
        assert truncated_mzsv((1, 1), 3) == Fraction(7, 4)

    def test_star_one_term(self):
        assert truncated_mzsv((4,), 2) == 1

    def test_star_dominates_strict(self):
        for idx in [(1, 2), (2, 2), (1, 1, 2)]:
            assert truncated_mzsv(idx, 8) >= truncated_mzv(idx, 8)

    def test_empty_index_rejected(self):
        with pytest.raises(PreconditionError):
            truncated_mzv((), 5)
        with pytest.raises(PreconditionError):
            truncated_mzv((0, 2), 5)

    def test_float_agrees_with_exact(self):
        for idx in [(2,), (1, 2), (3, 1, 2)]:
            for M in (2, 5, 30):
                assert truncated_mzv_float(idx, M) == pytest.approx(
                    float(truncated_mzv(idx, M)), abs=1e-12
                )

    def test_float_ladder(self):
        idx = (1, 2)
        Ms = [4, 16, 64]
        ladder = truncated_mzv_float_ladder(idx, Ms)
        for M, v in zip(Ms, ladder):
            assert v == pytest.approx(float(truncated_mzv(idx, M)), abs=1e-12)


class TestExpandTableau:
    def test_hook(self):
        t = Tableau(make_skew((2, 1)), ((1, 2), (3,)))
        assert expand_tableau(t) == {
            (1, 3, 2): 1,
            (1, 5): 1,
            (1, 2, 3): 1,
            (3, 3): 1,
        }

    def test_single_row_is_star_expansion(self):
        t = Tableau(make_skew((3,)), ((1, 2, 2),))
        comb = expand_tableau(t)
        assert sum(comb.values()) == 4  # 2^(r-1) compositions
        for M in (2, 4, 7):
            total = sum(mult * truncated_mzv(idx, M) for idx, mult in comb.items())
            assert total == truncated_mzsv((1, 2, 2), M)

    def test_single_column(self):
        t = Tableau(make_skew((1, 1, 1)), ((2,), (1,), (3,)))
        assert expand_tableau(t) == {(2, 1, 3): 1}

    def test_empty(self):
        t = Tableau(make_skew(()), ())
        assert expand_tableau(t) == {(): 1}

    def test_skew_disconnected_rows_commute(self):
        # (2,2)/(1,1)... actually two cells in one column is strict; use a
        # genuinely disconnected shape: (2,1)/(1) has cells (1,2) and (2,1).
        t = Tableau(make_skew((2, 1), (1,)), ((5,), (7,)))
        comb = expand_tableau(t)
        assert comb == {(5, 7): 1, (7, 5): 1, (12,): 1}

    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_expansion_matches_schur_sum(self, data):
        shape = data.draw(connected_skew_shapes(max_cells=7))
        entries = {
            cell: data.draw(st.integers(min_value=1, max_value=3), label=f"k{cell}")
            for cell in shape.cells
        }
        t = tableau_from_entries(shape, entries)
        M = data.draw(st.integers(min_value=2, max_value=7), label="M")
        comb = expand_tableau(t)
        total = sum(mult * truncated_mzv(idx, M) for idx, mult in comb.items())
        assert total == truncated_schur_zeta(t, M)


class TestNumeric:
    def test_zeta2(self):
        assert numeric_mzv((2,), 1e-9) == pytest.approx(PI**2 / 6, abs=1e-8)

    def test_zeta3(self):
        assert numeric_mzv((3,), 1e-9) == pytest.approx(ZETA3, abs=1e-8)

    def test_euler_identity(self):
        # zeta(1,2) = zeta(3)
        assert numeric_mzv((1, 2), 1e-8) == pytest.approx(ZETA3, abs=1e-6)

    def test_depth_two_weight_four(self):
        assert numeric_mzv((1, 3), 1e-8) == pytest.approx(PI**4 / 360, abs=1e-6)

    def test_non_admissible_rejected(self):
        with pytest.raises(PreconditionError):
            numeric_mzv((2, 1))

    def test_tolerance_floor(self):
        with pytest.raises(PreconditionError):
            numeric_mzv((2,), 1e-12)


class TestRichardson:
    def test_constant(self):
        assert richardson_extrapolate([(10, 3.5), (20, 3.5)]) == pytest.approx(3.5)

    def test_linear_in_inverse_m(self):
        f = lambda M: 2.0 + 5.0 / M
        pts = [(M, f(M)) for M in (8, 16, 32)]
        assert richardson_extrapolate(pts) == pytest.approx(2.0, abs=1e-12)

    def test_accelerates_zeta2(self):
        Ms = [64, 128, 256, 512]
        vals = truncated_mzv_float_ladder((2,), Ms)
        raw_err = abs(vals[-1] - PI**2 / 6)
        acc_err = abs(richardson_extrapolate(list(zip(Ms, vals))) - PI**2 / 6)
        assert acc_err < raw_err / 100
        assert acc_err < 1e-9

    def test_empty_rejected(self):
        with pytest.raises(PreconditionError):
            richardson_extrapolate([])
