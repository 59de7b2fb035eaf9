import pytest
import sympy

from curvebounds.filling import Slope
from curvebounds.laurent import LaurentPoly2
from curvebounds.tracepoly import (
    closed_form_check,
    fib,
    filling_trace_relation,
    g,
    h,
    trace_poly,
)

X = sympy.Symbol("x")
S = sympy.Symbol("s")


def _sympy_coeffs(expr):
    poly = sympy.Poly(sympy.expand(expr), X)
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _fib_oracle(k):
    # f_k(x) = U_{k-1}(x/2) for k >= 1, f_{-k} = -f_k
    if k == 0:
        return ()
    if k < 0:
        return tuple(-c for c in _fib_oracle(-k))
    return _sympy_coeffs(sympy.chebyshevu(k - 1, X / 2))


def test_base_cases():
    assert fib(0).coefficients == ()
    assert fib(1).coefficients == (1,)


def test_fib4():
    assert fib(4).coefficients == (0, -2, 0, 1)
    assert str(fib(4)) == "x^3 - 2x"


def test_fib_minus_one():
    assert fib(-1).coefficients == (-1,)


@pytest.mark.parametrize("k", [-13, -7, -2, 2, 3, 5, 9, 20])
def test_fib_matches_chebyshev_oracle(k):
    assert fib(k).coefficients == _fib_oracle(k)


def test_g_h_definitions():
    assert g(2).coefficients == (-1, 1)
    assert h(2).coefficients == (-2, 0, 1)
    assert h(1).coefficients == (0, 1)
    assert h(0).coefficients == (2,)
    assert trace_poly("h", 2) == h(2)
    with pytest.raises(ValueError):
        trace_poly("q", 1)


@pytest.mark.parametrize("k", range(-64, 65))
def test_recurrence_and_degree(k):
    lhs = fib(k + 1).to_laurent() + fib(k - 1).to_laurent()
    rhs = LaurentPoly2.monomial(1, 0) * fib(k).to_laurent()
    assert lhs == rhs
    assert g(k).to_laurent() == fib(k).to_laurent() - fib(k - 1).to_laurent()
    assert h(k).to_laurent() == fib(k + 1).to_laurent() - fib(k - 1).to_laurent()
    if k != 0:
        f = fib(k)
        assert f.degree == abs(k) - 1
        assert f.coefficients[-1] in (1, -1)


def test_closed_form_examples():
    assert closed_form_check("h", 2)
    assert closed_form_check("f", 1)
    assert closed_form_check("g", 2)


@pytest.mark.parametrize("k", [2, 3, 5, -4])
def test_g_closed_form_against_laurent_division(k):
    quotient = sympy.cancel((S**k + S ** (1 - k)) / (S + 1))
    direct = sympy.expand(g(k)(S + 1 / S))
    assert sympy.simplify(quotient - direct) == 0


@pytest.mark.parametrize("kind", ["f", "g", "h"])
def test_closed_form_all(kind):
    assert all(closed_form_check(kind, k) for k in range(-64, 65))


def test_closed_form_detects_wrong_polynomial(monkeypatch):
    import curvebounds.tracepoly as tp

    real = tp.trace_poly
    monkeypatch.setattr(tp, "trace_poly", lambda kind, k: real(kind, k + 1))
    assert not tp.closed_form_check("h", 3)


@pytest.mark.parametrize(
    "slope, expected",
    [
        (Slope(1, 0), "x - 2"),
        (Slope(1, 1), "x - y"),
        (Slope(2, 1), "x^2 - y - 2"),
    ],
)
def test_filling_trace_relation(slope, expected):
    assert str(filling_trace_relation(slope)) == expected


@pytest.mark.parametrize("p, q", [(1, 0), (0, 1), (1, 1), (2, 1), (3, 2), (-5, 3), (7, 4), (-1, 6)])
def test_eigenvalue_consistency(p, q):
    # x = s + 1/s, y = t + 1/t with s = T^q, t = T^-p, i.e. m^p l^q = 1
    ring = ("T", "_")
    T, _ = LaurentPoly2.gens(ring)
    s, t = T**q, T ** (-p)
    rel = filling_trace_relation(Slope.of(p, q))
    assert rel.compose(s + s**-1, t + t**-1).is_zero()
