"""Newton polygons of Laurent polynomials and their lattice invariants.

All arithmetic is over the integers.  Polygons are stored as their
extreme points in counterclockwise order; segments and points are
allowed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .laurent import LaurentPoly2

__all__ = [
    "LatticePolygon",
    "convex_hull",
    "newton_polygon",
    "interior_lattice_points",
    "boundary_lattice_points",
    "pick_interior",
    "twice_area",
    "lattice_width",
    "brute_force_lattice_width",
    "norm_curve_test",
    "TWO_DIMENSIONAL",
    "SEGMENT",
    "POINT",
]

Point = tuple[int, int]

TWO_DIMENSIONAL = "two-dimensional"
SEGMENT = "segment"
POINT = "point"


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Extreme points of the hull, counterclockwise from the lowest-leftmost.

    Collinear boundary points are dropped.  Two distinct points give a
    segment, one point gives itself.
    """
    pts = sorted({(int(a), int(b)) for a, b in points})
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


@dataclass(frozen=True)
class LatticePolygon:
    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple((int(a), int(b)) for a, b in self.vertices)
        if not verts:
            raise ValueError("a lattice polygon needs at least one vertex")
        if list(verts) != convex_hull(verts) or len(set(verts)) != len(verts):
            raise ValueError(
                "vertices must be the extreme points in counterclockwise order; "
                "use LatticePolygon.from_points"
            )
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def from_points(cls, points: Iterable[Point]) -> LatticePolygon:
        return cls(tuple(convex_hull(points)))

    @property
    def dimension(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def transform(self, matrix: Sequence[Sequence[int]], shift: Point = (0, 0)) -> LatticePolygon:
        (a, b), (c, d) = matrix
        return LatticePolygon.from_points(
            (a * x + b * y + shift[0], c * x + d * y + shift[1]) for x, y in self.vertices
        )

    def to_json(self) -> str:
        return json.dumps([list(v) for v in self.vertices])

    @classmethod
    def from_json(cls, text: str) -> LatticePolygon:
        return cls(tuple(tuple(v) for v in json.loads(text)))


def newton_polygon(p: LaurentPoly2) -> LatticePolygon:
    if p.is_zero():
        raise ValueError("the zero polynomial has no Newton polygon")
    return LatticePolygon.from_points(p.terms)


def twice_area(poly: LatticePolygon) -> int:
    v = poly.vertices
    if len(v) < 3:
        return 0
    return sum(v[i][0] * v[(i + 1) % len(v)][1] - v[(i + 1) % len(v)][0] * v[i][1] for i in range(len(v)))


def boundary_lattice_points(poly: LatticePolygon) -> int:
    v = poly.vertices
    if len(v) == 1:
        return 1
    if len(v) == 2:
        return gcd(v[1][0] - v[0][0], v[1][1] - v[0][1]) + 1
    return sum(
        gcd(v[(i + 1) % len(v)][0] - v[i][0], v[(i + 1) % len(v)][1] - v[i][1]) for i in range(len(v))
    )


def pick_interior(poly: LatticePolygon) -> int:
    """Interior count from Pick's formula ``A - B/2 + 1`` (two-dimensional only)."""
    if poly.dimension < 2:
        raise ValueError("Pick's formula needs a two-dimensional polygon")
    num = twice_area(poly) - boundary_lattice_points(poly) + 2
    if num % 2:
        raise ArithmeticError("non-integral Pick count; vertices are not a lattice polygon")
    return num // 2


def interior_lattice_points(poly: LatticePolygon) -> int:
    """Number of lattice points strictly inside ``poly`` (bounding-box scan)."""
    v = poly.vertices
    if len(v) < 3:
        return 0
    xs = [a for a, _ in v]
    ys = [b for _, b in v]
    edges = [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]
    count = 0
    for x in range(min(xs) + 1, max(xs)):
        for y in range(min(ys) + 1, max(ys)):
            if all(_cross(a, b, (x, y)) > 0 for a, b in edges):
                count += 1
    return count


def _width_along(verts: Sequence[Point], v: Point) -> int:
    dots = [v[0] * a + v[1] * b for a, b in verts]
    return max(dots) - min(dots)


def _direction_key(v: Point) -> tuple[int, int, int]:
    return (abs(v[0]) + abs(v[1]), v[0], v[1])


def _canonical(v: Point) -> Point:
    if v[0] < 0 or (v[0] == 0 and v[1] < 0):
        return (-v[0], -v[1])
    return v


def _best(candidates: Iterable[tuple[int, Point]]) -> tuple[int, Point]:
    return min(candidates, key=lambda wv: (wv[0],) + _direction_key(wv[1]))


def lattice_width(poly: LatticePolygon) -> tuple[int, Point]:
    """Lattice width and a primitive witness direction.

    The witness ``v`` minimizes ``max <v,p> - min <v,p>`` over the
    vertices; ties go to the smallest ``v`` in graded-lex order, with the
    sign fixed so the first nonzero coordinate is positive.
    """
    verts = poly.vertices
    if len(verts) == 1:
        return 0, (0, 1)
    if len(verts) == 2:
        dx, dy = verts[1][0] - verts[0][0], verts[1][1] - verts[0][1]
        d = gcd(dx, dy)
        return 0, _canonical((dy // d, -dx // d))

    w0 = min(_width_along(verts, (1, 0)), _width_along(verts, (0, 1)))
    xs = [a for a, _ in verts]
    ys = [b for _, b in verts]
    extent = max(max(xs) - min(xs), max(ys) - min(ys))
    bound = 2 * w0 * extent

    # two independent lattice vectors inside the polygon; any v of width
    # <= w0 satisfies |<v,e1>| <= w0 and |<v,e2>| <= w0
    base = verts[0]
    e1, e2 = max(
        ((verts[i], verts[j]) for i in range(1, len(verts)) for j in range(i + 1, len(verts))),
        key=lambda pair: abs(_cross(base, pair[0], pair[1])),
    )
    e1 = (e1[0] - base[0], e1[1] - base[1])
    e2 = (e2[0] - base[0], e2[1] - base[1])

    candidates = [(w0, (1, 0)) if _width_along(verts, (1, 0)) == w0 else (w0, (0, 1))]
    for v1 in range(0, bound + 1):
        lo, hi = -bound, bound
        for e in (e1, e2):
            # |v1*e0 + v2*e1| <= w0, solved for v2
            if e[1] == 0:
                if abs(v1 * e[0]) > w0:
                    lo, hi = 1, 0
                continue
            a, b = -w0 - v1 * e[0], w0 - v1 * e[0]
            if e[1] < 0:
                a, b = -b, -a
                div = -e[1]
            else:
                div = e[1]
            lo = max(lo, -((-a) // div))
            hi = min(hi, b // div)
        if v1 == 0:
            lo = max(lo, 1)
        for v2 in range(lo, hi + 1):
            if gcd(v1, v2) != 1:
                continue
            candidates.append((_width_along(verts, (v1, v2)), (v1, v2)))
    return _best(candidates)


def brute_force_lattice_width(poly: LatticePolygon, radius: int = 25) -> tuple[int, Point]:
    """Reference sweep over every primitive direction with ``|v_i| <= radius``."""
    verts = poly.vertices
    candidates = []
    for v1 in range(0, radius + 1):
        for v2 in range(-radius, radius + 1):
            if (v1 == 0 and v2 <= 0) or gcd(v1, v2) != 1:
                continue
            candidates.append((_width_along(verts, (v1, v2)), (v1, v2)))
    return _best(candidates)


def norm_curve_test(poly: LatticePolygon) -> str:
    """Classify as ``two-dimensional``, ``segment`` or ``point``.

    Only a two-dimensional Newton polygon can come from a norm curve; the
    other two cases have empty interior and hence genus zero.
    """
    return {0: POINT, 1: SEGMENT, 2: TWO_DIMENSIONAL}[poly.dimension]
