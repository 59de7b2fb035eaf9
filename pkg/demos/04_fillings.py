"""Dehn filling slopes: normalization maps and Bezout bounds.

A slope p/q adds x^p y^q = 1.  A unimodular monomial change of variables
turns that curve into the line y = 1, and intersecting with a surface of
degree D gives degree and genus bounds that grow with the height.
"""

from curvebounds import (
    bezout_bounds,
    cr_polynomials,
    format_poly,
    normalization_map,
    parse_slope,
    substitute_monomial,
)

for text in ["3/2", "-7/5", "0", "inf", "12/8"]:
    r = parse_slope(text)
    if r.notice:
        print("note:", r.notice)
    gen, _ = cr_polynomials(r)
    phi = normalization_map(r)
    print(f"slope {r}  height {r.height}")
    print("  generator   ", format_poly(gen))
    print("  map columns ", phi.matrix)
    print("  pulled back ", substitute_monomial(gen, phi.inverse()))

print()
print("degree and genus bounds for a degree-3 surface:")
for h in (1, 2, 5, 10, 50, 100):
    b = bezout_bounds(3, parse_slope(f"{h}/1"))
    print(f"  h={h:>3}: degree <= {b.degree_bound:>4}, genus <= {b.genus_bound:>6}, genus/h^2 = {b.genus_bound / h**2:.3f}")
