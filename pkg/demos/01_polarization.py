"""Recovering symmetric multilinear forms from homogeneous polynomials.

A homogeneous polynomial of degree k is the diagonal P(x) = A(x, ..., x) of a
unique symmetric k-linear form A.  This demo recovers A two ways and shows
the recovery is exact and base-point independent.
"""

from fractions import Fraction

from polydiff import format_poly, polarize_mo, polarize_signs, tensor_eval, tensor_to_poly, variables
from polydiff.poly import as_vector_poly

x1, x2, x3 = variables(3)

P = x1**2 * x2 + 4 * x2 * x3**2

print("P =", format_poly(as_vector_poly(P)))
print()

A = polarize_signs(P)
print("sign-sum polarization:")
for key, value in A.values.items():
    label = ", ".join(f"e{i + 1}" for i in key)
    print(f"  A({label}) = {value[0]}")

print()
print("vertex-sum polarization at two different base points:")
for base in [(0, 0, 0), (7, Fraction(-3, 2), 5)]:
    same = polarize_mo(P, base) == A
    print(f"  base {base}: identical to the sign sum? {same}")

print()
print("round trip: tensor_to_poly(A) == P ?", tensor_to_poly(A) == as_vector_poly(P))

print()
print("multilinear evaluation off the diagonal:")
args = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
print("  A(e1, e2, e3) =", tensor_eval(A, args)[0])
args = [(2, 1, 0), (1, 1, 1), (0, 0, 3)]
print("  A((2,1,0), (1,1,1), (0,0,3)) =", tensor_eval(A, args)[0])
