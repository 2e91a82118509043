"""Extracting homogeneous components three ways, and testing polynomial degree.

The interpolation route solves against an exact Vandermonde inverse, the
Stirling route combines pure differences at the origin, and the scaling
route reads off one coefficient of a formal-parameter difference.  All agree
with the coefficient-level split, exactly.
"""

from fractions import Fraction

from polydiff import BlackBoxFn, variables
from polydiff.components import (
    component_by_scaling,
    components_by_interpolation,
    components_by_stirling,
    degree_search,
    degree_test,
    vandermonde_inverse,
)
from polydiff.parser import format_poly

from polydiff.poly import as_vector_poly

x1, x2 = variables(2)
P = 2 + x1 + x1 * x2 + x2**3

print("P =", format_poly(as_vector_poly(P)))
print("degree buckets via the coefficient split:")
for k, part in enumerate(as_vector_poly(P).homogeneous_split()):
    print(f"  P_{k} =", format_poly(part))
print()

alpha = vandermonde_inverse(3)
print("exact inverse Vandermonde on nodes 0..3, row k=1:", alpha.rows[1])
print()

f = BlackBoxFn.from_poly(P)
x = (Fraction(1, 2), Fraction(3))
print(f"component values at x = {x}:")
print("  interpolation:", [v[0] for v in components_by_interpolation(f, 3, x)])
print("  stirling:     ", [v[0] for v in components_by_stirling(f, 3, x)])
print("  scaling:      ", [component_by_scaling(P, k).evaluate(x)[0] for k in range(4)])
print()

print("degree testing by vanishing differences:")
report = degree_test(f, 2)
print("  is deg(P) <= 2?", report.verdict, "- witness value", report.witnesses[0].value[0])
report = degree_test(f, 3)
print("  is deg(P) <= 3?", report.verdict)
least, _ = degree_search(f)
print("  least passing bound:", least)
