"""End-to-end acceptance checks; each prints a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline;
they are also written through ``capsys.disabled()`` so a plain run shows them.
"""

import math
import random
from fractions import Fraction
from math import gcd

import pytest

from curvebounds.families import DtkParams, OptbParams, dtk_defining_polynomial, dtk_invariants, optb_invariants
from curvebounds.filling import Slope, bezout_bounds, cr_polynomials, height, normalization_map
from curvebounds.laurent import LaurentPoly2, equal_up_to_unit, substitute_monomial
from curvebounds.polygon import (
    LatticePolygon,
    boundary_lattice_points,
    brute_force_lattice_width,
    interior_lattice_points,
    lattice_width,
    newton_polygon,
    twice_area,
)
from curvebounds.spectral import hwang_to_bound, li_yau_bound, optb_spectral
from curvebounds.tracepoly import closed_form_check, trace_poly


@pytest.fixture
def verdict(capsys):
    def emit(number, title, failures):
        line = f"criterion {number} {'PASS' if not failures else 'FAIL'}: {title}"
        if failures:
            line += f" ({len(failures)} failures, first: {failures[0]})"
        with capsys.disabled():
            print("\n" + line)
        assert not failures, line

    return emit


def test_criterion_1_known_family_values(verdict):
    checks = {
        "J(2,-2) genus X0": (dtk_invariants(DtkParams(2, -2)).genus_x, 1),
        "J(4,4) genus X0": (dtk_invariants(DtkParams(4, 4)).genus_x, 1),
        "J(4,5) genus Y0": (dtk_invariants(DtkParams(4, 5)).genus_y, 1),
        "J(4,-5) genus Y0": (dtk_invariants(DtkParams(4, -5)).genus_y, 1),
        "J(2,-3) genus Y0": (dtk_invariants(DtkParams(2, -3)).genus_y, 0),
        "M_-3 genus": (optb_invariants(OptbParams(-3)).genus_x, 1),
        "M_3 genus": (optb_invariants(OptbParams(3)).genus_x, 0),
        "M_6 genus": (optb_invariants(OptbParams(6)).genus_x, 1),
    }
    for k in range(-14, 15, 2):
        if k and DtkParams(k, k).hyperbolic:
            checks[f"J({k},{k}) genus Y0"] = (dtk_invariants(DtkParams(k, k)).genus_y, 0)
    failures = [f"{name}: got {got}, want {want}" for name, (got, want) in checks.items() if got != want]
    verdict(1, "known family genus values", failures)


def test_criterion_2_gonality_table(verdict):
    failures = []
    for k in range(-12, 13):
        for l in range(-12, 13):
            if abs(k) < 2 or abs(l) < 2 or (k * l) % 2:
                continue
            p = DtkParams(k, l)
            if not p.hyperbolic:
                continue
            inv = dtk_invariants(p)
            m, n = abs(k) // 2, abs(l) // 2
            want_y, want_x = (1, 2) if k == l else (min(m, n), 2 * min(m, n))
            if (inv.gonality_y, inv.gonality_x) != (want_y, want_x):
                failures.append(f"J({k},{l}) gonality {inv.gonality_y},{inv.gonality_x}")
            if k != l and not (min(m, n) <= inv.gonality_x <= 2 * min(m, n)):
                failures.append(f"J({k},{l}) outside sandwich")
            if inv.gonality_y > (inv.genus_y + 3) // 2:
                failures.append(f"J({k},{l}) violates Brill-Noether")
    verdict(2, "double twist gonality table, sandwich and Brill-Noether", failures)


def test_criterion_3_trace_polynomials(verdict):
    failures = []
    for kind in ("f", "g", "h"):
        for k in range(-64, 65):
            x = LaurentPoly2.gens()[0]
            prev, cur, nxt = (trace_poly(kind, j).to_laurent() for j in (k - 1, k, k + 1))
            if nxt + prev != x * cur:
                failures.append(f"{kind}_{k} recurrence")
            if not closed_form_check(kind, k):
                failures.append(f"{kind}_{k} closed form")
    verdict(3, "trace polynomial recurrence and closed forms, |k| <= 64", failures)


def test_criterion_4_normalization_witness(verdict):
    rng = random.Random(20240611)
    pairs = set()
    while len(pairs) < 50:
        p, q = rng.randint(1, 100), rng.randint(1, 100)
        if gcd(p, q) == 1:
            pairs.add((p, q))
    x, y = LaurentPoly2.gens()
    failures = []
    for p, q in sorted(pairs):
        inverse = normalization_map(Slope(p, q)).inverse()
        pulled = substitute_monomial(x**p * y**q - 1, inverse)
        if not equal_up_to_unit(pulled, y - 1):
            failures.append(f"{p}/{q}: {pulled}")
    verdict(4, "normalization map sends x^p y^q - 1 to y - 1", failures)


def test_criterion_5_polygon_oracles(verdict):
    rng = random.Random(5)
    failures = []
    done = 0
    while done < 200:
        pts = [(rng.randint(-10, 10), rng.randint(-10, 10)) for _ in range(rng.randint(3, 9))]
        poly = LatticePolygon.from_points(pts)
        if poly.dimension < 2:
            continue
        done += 1
        pick = Fraction(twice_area(poly), 2) - Fraction(boundary_lattice_points(poly), 2) + 1
        if interior_lattice_points(poly) != pick:
            failures.append(f"Pick mismatch on {poly.vertices}")
        fast, slow = lattice_width(poly), brute_force_lattice_width(poly, 25)
        if fast != slow:
            failures.append(f"width {fast} vs {slow} on {poly.vertices}")
    verdict(5, "Pick and brute-force width agree on 200 random polygons", failures)


def test_criterion_6_family_polygons(verdict):
    failures = []
    for k in range(-10, 11):
        for l in range(-10, 11):
            if k == l or (k * l) % 2:
                continue
            p = DtkParams(k, l)
            if not p.hyperbolic:
                continue
            m, n = p.m, p.n
            eq = dtk_defining_polynomial(p)
            poly = newton_polygon(eq)
            if eq.bidegree() != (m, n):
                failures.append(f"J({k},{l}) bidegree {eq.bidegree()}")
            if interior_lattice_points(poly) < (m - 1) * (n - 1):
                failures.append(f"J({k},{l}) interior count")
            if lattice_width(poly)[0] < min(m, n):
                failures.append(f"J({k},{l}) lattice width")
    verdict(6, "double twist Newton polygons dominate the exact invariants", failures)


def test_criterion_7_bound_shapes(verdict):
    failures = []
    for D in (1, 2, 3):
        for h in range(1, 101):
            slopes = {Slope.of(h, 1), Slope.of(1, h), Slope.of(-h, max(h - 1, 1)), Slope.of(max(h - 1, 0), -h)}
            for slope in sorted(slopes, key=str):
                if height(slope) != h:
                    failures.append(f"{slope} height")
                    continue
                b = bezout_bounds(D, slope)
                if Fraction(b.degree_bound, h) != D:
                    failures.append(f"D={D} {slope}: degree ratio")
                if Fraction(b.genus_bound, h * h) > Fraction(D * D, 2):
                    failures.append(f"D={D} {slope}: genus ratio")
    verdict(7, "degree bound linear and genus bound quadratic in the height", failures)


def test_criterion_8_spectral_anchors(verdict):
    failures = []
    if li_yau_bound(2, 5) != Fraction(1, 2):
        failures.append("li_yau(2,5)")
    if abs(hwang_to_bound(2) - 2 * math.acosh(2)) > 1e-9:
        failures.append("hwang_to(2)")
    bounds = [optb_spectral(OptbParams(n)).lambda1_upper for n in range(7, 101)]
    if any(b > a for a, b in zip(bounds, bounds[1:])):
        failures.append("torus bundle eigenvalue bound increases somewhere")
    if not bounds[-1] < bounds[0] or bounds[-1] * (optb_invariants(OptbParams(100)).genus_x - 1) != 2:
        failures.append("torus bundle eigenvalue bound does not decay like 2/(g-1)")
    verdict(8, "spectral anchors and torus bundle eigenvalue decay", failures)
