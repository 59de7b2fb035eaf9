"""Gonality as a spectral invariant.

The gonality of a curve caps both the first Laplace eigenvalue (scaled
by genus) and the injectivity radius of its hyperbolic metric.
"""

from curvebounds import (
    DtkParams,
    OptbParams,
    dtk_spectral,
    optb_display_bounds,
    optb_invariants,
    spectral_bounds,
)

sb = spectral_bounds(2, 5)
print(f"gonality 2, genus 5: lambda_1 <= {sb.lambda1_upper}, inj radius <= {sb.injectivity_radius_upper:.12g}")
print()

print("double twist X0(k,l):")
for k, l in [(6, 9), (8, -11), (12, 13)]:
    x0 = dtk_spectral(DtkParams(k, l))["X0"]
    print(f"  J({k},{l}): genus {x0.genus}, lambda_1 <= {x0.lambda1_upper}, inj <= {x0.injectivity_radius_upper:.6f}")
print()

print(f"torus bundles: hyperelliptic, so inj <= {spectral_bounds(2, 2).injectivity_radius_upper:.6f} for every n > 6")
for n in (7, 8, 10, 20, 50, 100):
    d = optb_display_bounds(n)
    g = optb_invariants(OptbParams(n)).genus_x
    print(f"  n={n:>3}: genus {g:>2}, lambda_1 <= {d['from_genus']}  (closed forms {d['floor_form']}, {d['linear_form']})")
