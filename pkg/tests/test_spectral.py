import math
from fractions import Fraction

import pytest

from curvebounds.families import DtkParams, OptbParams, dtk_invariants
from curvebounds.spectral import (
    REAL_TOLERANCE,
    dtk_spectral,
    hwang_to_bound,
    li_yau_bound,
    optb_display_bounds,
    optb_spectral,
    spectral_bounds,
)


def test_li_yau_examples():
    assert li_yau_bound(2, 5) == Fraction(1, 2)
    with pytest.raises(ValueError):
        li_yau_bound(2, 1)


def test_li_yau_double_twist_display():
    for k, l in [(6, 9), (8, -5), (10, 13)]:
        p = DtkParams(k, l)
        m, n = p.m, p.n
        sb = dtk_spectral(p)
        assert sb["Y0"].lambda1_upper == Fraction(min(m, n), (m - 1) * (n - 1) - 1)
        inv = dtk_invariants(p)
        assert sb["X0"].lambda1_upper == Fraction(2 * min(m, n), inv.genus_x - 1)


def test_hwang_to_anchors():
    # 2 arccosh(2) = 2 log(2 + sqrt 3)
    assert abs(hwang_to_bound(2) - 2 * math.log(2 + math.sqrt(3))) < REAL_TOLERANCE
    assert abs(hwang_to_bound(2) - 2.63391579384963) < REAL_TOLERANCE
    assert hwang_to_bound(1) == 0
    with pytest.raises(ValueError):
        hwang_to_bound(0)


def test_hwang_to_monotone():
    vals = [hwang_to_bound(g) for g in range(1, 60)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_double_twist_radius():
    p = DtkParams(6, 9)
    sb = dtk_spectral(p)
    assert sb["X0"].injectivity_radius_upper == hwang_to_bound(2 * min(p.m, p.n))


def test_figure_eight_has_no_bounds():
    sb = dtk_spectral(DtkParams(2, -2))
    assert sb == {"Y0": None, "X0": None}


def test_li_yau_decreasing_in_n():
    m = 3
    vals = [Fraction(min(m, n), (m - 1) * (n - 1) - 1) for n in range(2, 51)]
    lib = [dtk_spectral(DtkParams(2 * m, 2 * n + 1))["Y0"].lambda1_upper for n in range(2, 51)]
    assert lib == vals
    assert all(a >= b for a, b in zip(lib, lib[1:]))
    assert lib[-1] < lib[0]


def test_torus_bundle_radius_constant():
    for n in list(range(7, 60)) + list(range(-60, -6)):
        sb = optb_spectral(OptbParams(n))
        assert sb.injectivity_radius_upper == hwang_to_bound(2)


def test_torus_bundle_display_forms():
    d = optb_display_bounds(10)
    assert d["floor_form"] == Fraction(2, 3)
    assert d["linear_form"] == Fraction(4, 6)
    assert d["from_genus"] == Fraction(2, 2)
    d = optb_display_bounds(4)
    assert d["floor_form"] is None and d["linear_form"] is None


def test_spectral_bounds_record():
    sb = spectral_bounds(3, 7)
    assert sb.lambda1_upper == Fraction(1, 2) and sb.lambda1_decimal == "0.5"
    with pytest.raises(ValueError):
        spectral_bounds(2, 1)
