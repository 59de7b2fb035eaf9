"""Newton polygons as a cheap source of genus and gonality bounds.

Interior lattice points bound the genus from above; the lattice width
bounds the gonality.  Both numbers are computed exactly.
"""

from curvebounds import (
    brute_force_lattice_width,
    interior_lattice_points,
    lattice_width,
    newton_polygon,
    norm_curve_test,
    parse_poly,
)

samples = [
    "x^3*y^2 - 1",
    "x^3 + y^3 + 1",
    "x^2*y^2 + x^3 + y^3 + x*y + 1",
    "y^2 - x^5 - 1",
    "x^-1 + y^-1 + x + y + x*y",
]

for text in samples:
    p = parse_poly(text)
    poly = newton_polygon(p)
    w, v = lattice_width(poly)
    print(text)
    print("  vertices      ", poly.vertices)
    print("  shape         ", norm_curve_test(poly))
    print("  genus <=      ", interior_lattice_points(poly))
    print(f"  lattice width  {w} along {v}")
    assert (w, v) == brute_force_lattice_width(poly)
    print()

# width is invariant under unimodular changes of coordinates
square = newton_polygon(parse_poly("1 + x + y + x*y"))
sheared = square.transform(((1, 5), (0, 1)), (3, -2))
print("sheared square:", sheared.vertices, "width", lattice_width(sheared)[0])
