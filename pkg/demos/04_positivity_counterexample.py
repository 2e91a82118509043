"""A cubic whose pure differences hide its negativity.

Positivity of a polynomial map (every component's symmetric form nonnegative
on the cone, equivalently every monomial coefficient nonnegative) is
equivalent to all *mixed* differences being nonnegative on the cone.  Pure
differences are not enough: this cubic keeps every sampled pure difference
nonnegative on the cone while carrying a -6 coefficient on x1*x2*x3.
"""

from polydiff import is_positive
from polydiff.diffcalc import BlackBoxFn, mixed_diff_at
from polydiff.parser import format_poly
from polydiff.positivity import (
    counterexample_cubic,
    mixed_diff_nonneg_sample,
    pure_diff_nonneg_check,
)
from polydiff.sampling import SamplerConfig
from polydiff.vectors import basis_vec, zero_vec

P = counterexample_cubic()
print("P =", format_poly(P))
print()

print("values on the cone stay nonnegative:")
for point in [(1, 1, 1), (1, 1, 0), (2, 1, 3)]:
    print(f"  P{point} = {P.evaluate(point)[0]}")
print()

ok, certificate = is_positive(P)
print("is_positive:", ok)
failure = certificate.first_failure()
print("  failing component degree:", failure.degree)
print("  tensor witness:", failure.witness_index, "->", failure.witness_value[0])
print()

f = BlackBoxFn.from_poly(P)
basis = [basis_vec(i, 3) for i in range(3)]
print("the same witness as a mixed difference at the origin:")
print("  order-3 mixed difference with basis increments =", mixed_diff_at(f, zero_vec(3), basis)[0])
print()

cfg = SamplerConfig(seed=0, samples=500)
pure = pure_diff_nonneg_check(P, 3, cfg)
print(f"pure differences on the cone, orders 0..3: verdict '{pure.verdict}'")
print(f"  ({pure.samples_used} grid + random evaluations, no negative value found)")
mixed = mixed_diff_nonneg_sample(P, 3, SamplerConfig(seed=0, samples=32))
print(f"mixed differences on the cone: verdict '{mixed.verdict}'")
witness = mixed.witnesses[0]
print("  first witness:", [tuple(map(str, p)) for p in witness.points], "->", witness.value[0])
