"""Forward differences: three equivalent definitions and two closed forms.

Shows the vertex sum, the recursion, and the pure-difference expansion of a
mixed difference agreeing exactly; the Newton expansion reproducing function
values for a map that is not a polynomial; and the Stirling-number closed
form for differences of homogeneous polynomials.
"""

import math
from fractions import Fraction

from polydiff import (
    BlackBoxFn,
    mixed_diff_at,
    newton_expand,
    pure_diff_at,
    symbolic_mixed_diff,
    symbolic_pure_diff,
    variables,
)
from polydiff.combinatorics import stirling2
from polydiff.diffcalc import block_names, mixed_diff_recursive, mixed_from_pure
from polydiff.parser import format_poly
from polydiff.poly import as_vector_poly

x1, x2 = variables(2)
P = x1**2 * x2 - 3 * x2
f = BlackBoxFn.from_poly(P)

x = (Fraction(1, 2), Fraction(2))
hs = [(1, 0), (0, 1), (Fraction(1, 3), Fraction(1, 3))]

print("P =", format_poly(as_vector_poly(P)))
print("three routes to the same order-3 mixed difference at", x)
print("  vertex sum:      ", mixed_diff_at(f, x, hs)[0])
print("  recursion:       ", mixed_diff_recursive(f, x, hs)[0])
print("  via pure diffs:  ", mixed_from_pure(f, x, hs)[0])
print()

print("symbolic mixed difference of x1*x2, one increment block:")
sym = symbolic_mixed_diff(x1 * x2, 1)
print("  ", format_poly(sym, block_names(2, 1)))
print("symbolic pure difference of t^3, order 2 (6 t h^2 + 6 h^3):")
(t,) = variables(1)
sym = symbolic_pure_diff(t**3, 2)
print("  ", format_poly(sym, block_names(1, 1)))
print()

def sawtooth(v):
    # exact but decidedly not a polynomial
    return (abs(v[0]) + Fraction(math.floor(v[0])),)

g = BlackBoxFn(1, 1, sawtooth)
x0, h0, r = (Fraction(-5, 2),), (Fraction(3, 4),), 5
lhs = newton_expand(g, x0, h0, r)
rhs = g((x0[0] + r * h0[0],))
print(f"Newton expansion on a sawtooth map, order {r}: {lhs[0]} == {rhs[0]} ?", lhs == rhs)
print()

print("pure differences of t^3 at the origin: r! * S(3, r) * h^3")
cube = BlackBoxFn.from_poly(t**3)
h = (Fraction(2),)
for r in range(5):
    value = pure_diff_at(cube, (0,), h, r)[0]
    predicted = math.factorial(r) * stirling2(3, r) * h[0] ** 3
    print(f"  r={r}: {value} (formula gives {predicted})")
