"""Fibonacci-type trace polynomials f_k, g_k, h_k and the filling trace relation.

``f_0 = 0``, ``f_1 = 1`` and ``f_{k+1} + f_{k-1} = x f_k`` for every
integer ``k``; ``g_k = f_k - f_{k-1}`` and ``h_k = f_{k+1} - f_{k-1}``.
With ``x = s + 1/s``, ``h_k`` is the trace of the k-th power of a matrix
with eigenvalues ``s, 1/s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import LaurentPoly2

__all__ = ["TracePoly", "fib", "g", "h", "trace_poly", "closed_form_check", "filling_trace_relation"]

KINDS = ("f", "g", "h")


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _sub(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def _shift_sub(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """x*p - q."""
    return _sub((0,) + p if p else (), q)


@lru_cache(maxsize=None)
def _fib_coeffs(k: int) -> tuple[int, ...]:
    # iterate from the base pair toward k; lru_cache is safe under threads
    if k in (0, 1):
        return () if k == 0 else (1,)
    if k > 1:
        prev, cur = _fib_coeffs(k - 2), _fib_coeffs(k - 1)
        return _shift_sub(cur, prev)
    # f_{k} = x f_{k+1} - f_{k+2}
    nxt, nxt2 = _fib_coeffs(k + 1), _fib_coeffs(k + 2)
    return _shift_sub(nxt, nxt2)


def _fib_table(k: int) -> tuple[int, ...]:
    # warm the cache iteratively so deep indices do not recurse
    step = 1 if k >= 0 else -1
    for j in range(0, k + step, step):
        _fib_coeffs(j)
    return _fib_coeffs(k)


@dataclass(frozen=True)
class TracePoly:
    """One-variable integer polynomial tagged with its family and index.

    ``coefficients[i]`` is the coefficient of ``x^i``.
    """

    coefficients: tuple[int, ...]
    kind: str
    index: int

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * value + c
        return acc

    def to_laurent(self, variables: tuple[str, str] = ("x", "y"), slot: int = 0) -> LaurentPoly2:
        """Embed as a polynomial in variable ``slot`` of a two-variable ring."""
        if slot == 0:
            return LaurentPoly2({(i, 0): c for i, c in enumerate(self.coefficients)}, variables)
        return LaurentPoly2({(0, i): c for i, c in enumerate(self.coefficients)}, variables)

    def __str__(self):
        return str(self.to_laurent())


def fib(k: int) -> TracePoly:
    return TracePoly(_fib_table(k), "f", k)


def g(k: int) -> TracePoly:
    return TracePoly(_sub(_fib_table(k), _fib_table(k - 1)), "g", k)


def h(k: int) -> TracePoly:
    return TracePoly(_sub(_fib_table(k + 1), _fib_table(k - 1)), "h", k)


def trace_poly(kind: str, k: int) -> TracePoly:
    try:
        return {"f": fib, "g": g, "h": h}[kind](k)
    except KeyError:
        raise ValueError(f"unknown trace polynomial kind {kind!r}; expected one of f, g, h") from None


def closed_form_check(kind: str, k: int) -> bool:
    """Exact check of the ``x = s + 1/s`` closed form for ``kind`` at index ``k``.

    The denominators ``s - 1/s`` (for f) and ``s + 1`` (for g) are cleared
    and both sides compared as Laurent polynomials in ``s``.
    """
    poly = trace_poly(kind, k)
    ring = ("s", "_")
    s, _ = LaurentPoly2.gens(ring)
    s_inv = s ** -1
    substituted = poly.to_laurent(ring).compose(s + s_inv, LaurentPoly2.constant(1, ring))
    if kind == "f":
        return substituted * (s - s_inv) == s ** k - s ** -k
    if kind == "g":
        return substituted * (s + 1) == s ** k + s ** (1 - k)
    return substituted == s ** k + s ** -k


def filling_trace_relation(r, variables: tuple[str, str] = ("x", "y")) -> LaurentPoly2:
    """``h_p(x) - h_q(y)`` for the slope ``r = p/q``.

    ``x`` and ``y`` stand for the traces of the meridian and longitude of
    the filled cusp.  ``r`` is a :class:`~curvebounds.filling.Slope` or a
    ``(p, q)`` pair.
    """
    p, q = (r.p, r.q) if hasattr(r, "p") else r
    return h(p).to_laurent(variables, 0) - h(q).to_laurent(variables, 1)
