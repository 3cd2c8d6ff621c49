from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amalgrowth.core import Presentation, reindex
from amalgrowth.geodesics import TypeTag
from amalgrowth.oracle import bfs_spheres
from amalgrowth.ratfun import Poly, RationalFunction, h_func, taylor
from amalgrowth.series import (
    WindowSpec,
    case_term,
    class_series,
    growth_series,
    omega,
    omega_K,
    omega_KK,
    series_gamma1,
    series_gamma3,
    series_gamma30,
)
from amalgrowth.canonical import case_grid

from conftest import count_window_words, poly_from_text
from golden_data import PRINTED_SERIES

ONE = Poly.const(1)


def P(*c: int) -> Poly:
    return Poly(c)


class TestWindowCounts:
    def test_omega(self):
        assert omega([(0, 0), (0, 0)]) == RationalFunction(1)
        assert omega([(0, 1), (0, 1)]) == RationalFunction(P(1, 1), P(1, -1))

    def test_omega_K(self):
        assert omega_K(WindowSpec(((0, 0), (0, 0)), 2)) == RationalFunction(1)
        assert omega_K(WindowSpec(((1, 1), (1, 1)), 1)) == RationalFunction(1, P(1, -2))

    def test_omega_KK(self):
        assert omega_KK(WindowSpec(((0, 0), (0, 0)), 1)) == RationalFunction(0)
        assert omega_KK(WindowSpec(((1, 1), (1, 1)), 2)) == RationalFunction(P(0, 2), P(1, 0, -4))

    def test_window_spec_validation(self):
        with pytest.raises(ValueError):
            WindowSpec(((-1, 0),))
        with pytest.raises(ValueError):
            WindowSpec(((0, 0),), 2)

    @given(
        st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=3),
        st.data(),
    )
    @settings(max_examples=40, deadline=None)
    def test_against_brute_force(self, windows, data):
        K = data.draw(st.integers(1, len(windows)))
        L = 7
        ws = WindowSpec(tuple(windows), K)
        assert taylor(omega(ws), L) == count_window_words(windows, L)
        assert taylor(omega_K(ws), L) == count_window_words(windows, L, K)
        assert taylor(omega_KK(ws), L) == count_window_words(windows, L, K, both_ends=True)


class TestClassPieces:
    def test_gamma1_small(self):
        pres = Presentation((2, 2))
        expected = RationalFunction(P(1, 1), P(1, -1)) * RationalFunction(P(0, 0, 1), P(1, 0, -1))
        assert series_gamma1(pres) == expected
        coeffs = taylor(series_gamma1(Presentation((3, 4, 5))), 10)
        assert coeffs[:3] == [0, 0, 0] and coeffs[3] > 0

    def test_gamma3(self):
        _, both = series_gamma3(Presentation((3, 3, 5)))
        assert both == h_func([(0, 0), (0, 0), (1, 1)])
        _, both = series_gamma3(Presentation((4, 4, 4)))
        assert both == RationalFunction(1)
        up, both = series_gamma3(Presentation((3, 6, 7)))
        assert both == h_func([(0, 0), (1, 1), (2, 2)])
        assert up == h_func([(0, 2), (1, 4), (2, 4)])
        assert taylor(up * 2 - both, 0) == [1]

    def test_gamma30(self):
        pres = Presentation((3, 6, 7))
        reidx = reindex(pres)
        assert len(case_grid(pres, reidx)) == 13
        total = RationalFunction(0)
        for case, _ in case_grid(pres, reidx):
            total = total + case_term(pres, reidx, case)
        assert total == series_gamma30(pres)
        assert taylor(series_gamma30(pres), 0) == [0]


@pytest.mark.parametrize("p", [(2, 2, 2), (2, 3, 7), (3, 4, 5, 6, 7)])
def test_printed_series(p):
    num, den = PRINTED_SERIES[p]
    assert growth_series(Presentation(p)).cross_equal(poly_from_text(num), poly_from_text(den))


def test_printed_small_form():
    s = growth_series(Presentation((2, 2, 2)))
    assert s == RationalFunction(P(1, 1) * P(-1, 0, 2), P(-1, 1) * P(-1, 2) ** 2)


@pytest.mark.parametrize("p", sorted(PRINTED_SERIES))
def test_coefficients_nonnegative_integers(p):
    coeffs = taylor(growth_series(Presentation(p)), 30)
    assert all(isinstance(c, int) and c >= 0 for c in coeffs)
    assert coeffs[0] == 1 and coeffs[1] == 2 * len(p)


@pytest.mark.parametrize("p", [(2, 2), (2, 3), (2, 2, 2), (3, 3, 4), (2, 3, 4, 5), (3, 6, 7)])
def test_class_decomposition(p):
    pres = Presentation(p)
    L = 7
    table = bfs_spheres(pres, L, with_types=True)
    pieces = class_series(pres)
    for tag in TypeTag:
        assert taylor(pieces[tag], L) == list(table.per_type_counts[tag]), tag
    total = sum(pieces.values(), RationalFunction(0))
    assert total == growth_series(pres)
    assert taylor(total, L) == list(table.counts)
