"""Exact genus and gonality of canonical components for double twist knots.

Prints a table for small J(k,l) and compares the exact Y0 values with
what the Newton polygon of the defining equation alone would give.
"""

from curvebounds import (
    DtkParams,
    dtk_defining_polynomial,
    dtk_invariants,
    interior_lattice_points,
    lattice_width,
    newton_polygon,
)

print(f"{'knot':>10} {'(m,n)':>7} {'b':>3} {'gY':>4} {'gX':>4} {'gamY':>5} {'gamX':>5} {'int':>4} {'width':>6}")
for k, l in [(2, -2), (2, -3), (4, 5), (4, -5), (3, 4), (4, 4), (6, 6), (6, -7), (8, 9), (10, -12)]:
    p = DtkParams(k, l)
    inv = dtk_invariants(p)
    poly = newton_polygon(dtk_defining_polynomial(p))
    print(
        f"{f'J({k},{l})':>10} {str((p.m, p.n)):>7} {p.b:>3} {inv.genus_y:>4} {inv.genus_x:>4}"
        f" {inv.gonality_y:>5} {inv.gonality_x:>5} {interior_lattice_points(poly):>4}"
        f" {lattice_width(poly)[0]:>6}"
    )

print()
print("defining equation of Y0(6,-7):")
print(" ", dtk_defining_polynomial(DtkParams(6, -7)))
