"""Dehn filling slopes, their curves in the eigenvalue plane, and degree bounds."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .invariants import genus_degree_bound
from .laurent import LaurentPoly2, MonomialMap

__all__ = [
    "Slope",
    "parse_slope",
    "height",
    "cr_polynomials",
    "bezout_coefficients",
    "normalization_map",
    "BezoutBounds",
    "bezout_bounds",
]


@dataclass(frozen=True)
class Slope:
    """Reduced slope ``p/q`` with ``q >= 0``; infinity is ``1/0``.

    Use :meth:`of` to build from an arbitrary pair; the constructor only
    accepts pairs already in lowest terms.  ``notice`` records any
    normalization :meth:`of` performed.
    """

    p: int
    q: int
    notice: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if self.q < 0:
            raise ValueError("slope denominator must be non-negative")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"slope {self.p}/{self.q} is not in lowest terms")
        if self.q == 0 and self.p != 1:
            raise ValueError("infinity is represented as 1/0")

    @classmethod
    def of(cls, p: int, q: int = 1) -> Slope:
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a slope")
        d = gcd(p, q)
        rp, rq = p // d, q // d
        if rq < 0 or (rq == 0 and rp < 0):
            rp, rq = -rp, -rq
        notice = None
        if (rp, rq) != (p, q):
            notice = f"{p}/{q} normalized to {rp}/{rq}"
        return cls(rp, rq, notice)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def height(self) -> int:
        return max(abs(self.p), self.q)

    def __str__(self):
        if self.q == 0:
            return "inf"
        return str(self.p) if self.q == 1 else f"{self.p}/{self.q}"


_SLOPE_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def parse_slope(text: str) -> Slope:
    """Parse ``p/q``, ``p`` or ``inf``; non-reduced input is reduced."""
    t = text.strip().lower()
    if t in ("inf", "infinity", "oo", "1/0"):
        return Slope(1, 0)
    m = _SLOPE_RE.match(t)
    if not m:
        raise ValueError(f"cannot parse slope {text!r}; expected p/q, p or inf")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    return Slope.of(p, q)


def height(r: Slope) -> int:
    """Naive height ``max(|p|, |q|)``."""
    return r.height


def cr_polynomials(r: Slope, variables: tuple[str, str] = ("x", "y")) -> tuple[LaurentPoly2, LaurentPoly2]:
    """The two generators ``x^|p| y^q - 1`` and ``x^|p| - y^q``."""
    ap = abs(r.p)
    mono = LaurentPoly2.monomial(ap, r.q, 1, variables)
    return (
        mono - 1,
        LaurentPoly2.monomial(ap, 0, 1, variables) - LaurentPoly2.monomial(0, r.q, 1, variables),
    )


def bezout_coefficients(r: Slope) -> tuple[int, int]:
    """``(a, b)`` with ``a|p| + bq = 1`` and ``a`` minimal non-negative."""
    ap, q = abs(r.p), r.q
    if q == 0:
        return 1, 0
    a = pow(ap, -1, q) if q > 1 else 0
    b = (1 - a * ap) // q
    return a, b


def normalization_map(r: Slope) -> MonomialMap:
    """Unimodular map ``(x, y) -> (x^b y^-a, x^|p| y^q)``.

    Substituting its inverse into ``x^|p| y^q - 1`` gives ``y - 1``, which
    exhibits the curve as a line.
    """
    a, b = bezout_coefficients(r)
    return MonomialMap.from_columns((b, -a), (abs(r.p), r.q))


@dataclass(frozen=True)
class BezoutBounds:
    degree_bound: int
    genus_bound: int
    constant_bound_applies: bool = False


def bezout_bounds(surface_degree: int, r: Slope, geometrically_isolated: bool = False) -> BezoutBounds:
    """Degree and genus bounds for a surface of degree ``D`` cut by the filling slope.

    ``degree_bound = D * h(r)`` and ``genus_bound`` is the smooth plane
    curve genus of that degree.  With ``geometrically_isolated`` the degree
    is also bounded by a constant that cannot be computed from ``D`` and
    ``r`` alone; that is reported as a flag only.
    """
    if surface_degree < 1:
        raise ValueError("surface degree must be positive")
    d = surface_degree * r.height
    return BezoutBounds(d, genus_degree_bound(d), geometrically_isolated)
