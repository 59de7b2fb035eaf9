"""Walk through the Fibonacci trace polynomials f_k, g_k and h_k.

Prints the first few of each, checks the three-term recurrence and the
closed forms in s = (eigenvalue), and shows the trace relation that a
Dehn filling slope imposes on a pair of peripheral traces.
"""

from curvebounds import Slope, closed_form_check, filling_trace_relation, trace_poly

print("Trace polynomials, k = 0..6")
for kind in ("f", "g", "h"):
    for k in range(7):
        print(f"  {kind}_{k}(x) = {trace_poly(kind, k)}")
    print()

# x = s + 1/s turns each family into a ratio of powers of s
bad = [(kind, k) for kind in "fgh" for k in range(-40, 41) if not closed_form_check(kind, k)]
print("closed forms verified for |k| <= 40:", "yes" if not bad else bad)

# at x = 2 the eigenvalue is parabolic and f_k collapses to k
print("f_k(2) for k = 0..9:", [trace_poly("f", k)(2) for k in range(10)])
print()

r = Slope.of(3, 2)
print(f"trace relation for slope {r}: {filling_trace_relation(r)} = 0")
