"""Rayleigh sums over Bessel zeros: symbolic identities meet computed zeros.

The squared Bessel zeros j_{nu,k}^2 have reciprocal power sums that are
rational functions of the order nu.  The package derives them symbolically
from the closed-form Taylor coefficients and then corroborates them by
actually computing two hundred zeros and summing.
"""

from fractions import Fraction as F

from posroot import bessel_coeffs, bessel_zeros, partial_power_sum_with_tail, power_sums_from_elementary

p = power_sums_from_elementary(bessel_coeffs(None, 4), 4)
print("Rayleigh sums over Q(nu):")
for k in range(1, 5):
    print(f"  sum 1/j^(2*{k}) = {p[k]}")

print("\nfirst zeros of the order-0 Bessel function (computed, verified "
      "by bracketing):")
table = bessel_zeros(0, 200, 160)
for k in range(5):
    print(f"  j_{{0,{k + 1}}} = {table[k]}")

for n in (1, 2):
    s, tail = partial_power_sum_with_tail(table, n, "bessel", 160)
    symbolic = p[n].evaluate({"nu": F(0)})
    print(f"\nn={n}: partial sum over 200 zeros = {float(s):.12f}")
    print(f"      omitted-tail estimate       = {float(tail):.3e}")
    print(f"      symbolic value at nu=0      = {symbolic} = {float(symbolic):.12f}")
