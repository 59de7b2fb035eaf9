"""Scalar formulas relating degree, genus and gonality of curves."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

__all__ = [
    "CurveInvariants",
    "MapDegreeBounds",
    "genus_degree_bound",
    "brill_noether",
    "bidegree_gonality",
    "plane_gonality_from_singularity",
    "castelnuovo_severi_threshold",
    "hyperelliptic_genus",
    "map_degree_bounds",
]


@dataclass(frozen=True)
class CurveInvariants:
    """Degree, genus and gonality data for one curve.

    ``genus_is_bound`` marks ``genus`` as an upper bound rather than the
    exact value.  Gonality is stored as an interval; it is exact when the
    ends agree.
    """

    degree: Optional[int] = None
    genus: Optional[int] = None
    genus_is_bound: bool = False
    gonality_lo: Optional[int] = None
    gonality_hi: Optional[int] = None
    bidegree: Optional[tuple[int, int]] = None
    singularities: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if any(s < 2 for s in self.singularities):
            raise ValueError("singularity multiplicities must be at least 2")
        if (
            self.gonality_lo is not None
            and self.gonality_hi is not None
            and self.gonality_lo > self.gonality_hi
        ):
            raise ValueError("empty gonality interval")
        if self.gonality_exact and self.genus is not None and not self.genus_is_bound:
            if self.gonality_lo > brill_noether(self.genus):
                raise ValueError("gonality exceeds the Brill-Noether bound for this genus")

    @property
    def gonality_exact(self) -> bool:
        return self.gonality_lo is not None and self.gonality_lo == self.gonality_hi

    @property
    def gonality(self) -> Optional[int]:
        return self.gonality_lo if self.gonality_exact else None


def genus_degree_bound(d: int, sings: Iterable[int] = ()) -> int:
    """Genus of a degree-``d`` plane curve with ordinary singularities of the given orders.

    ``(d-1)(d-2)/2`` minus ``s(s-1)/2`` per singular point, clamped at 0.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    sings = list(sings)
    if any(s < 2 for s in sings):
        raise ValueError("singularity multiplicities must be at least 2")
    g = (d - 1) * (d - 2) // 2 - sum(s * (s - 1) // 2 for s in sings)
    return max(g, 0)


def brill_noether(g: int) -> int:
    """Upper bound ``floor((g+3)/2)`` on the gonality of a genus-``g`` curve."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    return (g + 3) // 2


def bidegree_gonality(M: int, N: int) -> int:
    """Gonality of a smooth irreducible curve of bidegree ``(M, N)`` in P^1 x P^1."""
    if M < 0 or N < 0:
        raise ValueError("bidegree entries must be non-negative")
    if M == 0 or N == 0:
        return 1
    return min(M, N)


def plane_gonality_from_singularity(d: int, nu: int) -> int:
    """``d - nu`` for a plane curve of degree ``d`` whose worst point has multiplicity ``nu``.

    Exact only when the curve has at most two singular (or infinitely near
    singular) points; the caller is responsible for that hypothesis.
    """
    if nu < 1:
        raise ValueError("multiplicity must be at least 1")
    if nu >= d:
        raise ValueError(f"multiplicity {nu} must be smaller than the degree {d}")
    return d - nu


def castelnuovo_severi_threshold(gX: int, gY: int, k: int) -> int:
    """Largest ``d`` with ``d <= (gX - k*gY)/(k-1)``.

    A degree-``d`` map ``X -> P^1`` with ``d`` at most this value factors
    through a simple degree-``k`` cover ``X -> Y``.
    """
    if k < 2:
        raise ValueError("cover degree must be at least 2")
    return (gX - k * gY) // (k - 1)


def hyperelliptic_genus(dp: int) -> int:
    """Genus of ``w^2 = P(r)`` with ``P`` squarefree of degree ``dp``."""
    if dp < 3:
        raise ValueError("a squarefree right-hand side of degree < 3 gives a rational curve")
    return (dp - 1) // 2


@dataclass(frozen=True)
class MapDegreeBounds:
    """Degrees of the natural maps between the canonical-component curves.

    ``x_to_a`` and ``x_to_y`` are upper bounds; the others are exact.
    """

    y_to_b: int
    x_to_a: int
    e_to_a: int
    x_to_y: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.y_to_b, self.x_to_a, self.e_to_a, self.x_to_y)


def map_degree_bounds(h1_order: int) -> MapDegreeBounds:
    """Bounds from ``|H^1(M; Z/2)|``, which must be a power of two and at least 2."""
    if h1_order < 2 or h1_order & (h1_order - 1):
        raise ValueError(f"|H^1(M;Z/2)| must be a power of 2 (>= 2), got {h1_order}")
    return MapDegreeBounds(y_to_b=1, x_to_a=h1_order // 2, e_to_a=4, x_to_y=h1_order)
