"""Even zeta values from the sinc product, symbolically and numerically.

The reduced sinc product prod (1 - z/n^2) has Taylor coefficients
(-1)^k t^k/(2k+1)! with t standing for pi^2.  Running the power-sum engine
over Q(t) produces sum 1/n^(2k) as an exact rational multiple of t^k --
the even zeta values, with their pi-power structure laid bare.
"""

import mpmath

from posroot import BigFloat, power_sums_from_elementary, sinc_coeffs

K = 7
p = power_sums_from_elementary(sinc_coeffs(K), K)

print("power sums of {1/n^2} over Q(t), t = pi^2:")
for k in range(1, K + 1):
    print(f"  p_{k} = {p[k]}")

with mpmath.workprec(140):
    t = BigFloat(mpmath.pi ** 2, 128)
print("\nnumeric values at t = pi^2 vs direct summation of 1/n^(2k):")
for k in range(1, K + 1):
    value = p[k].evaluate({"t": t})
    with mpmath.workprec(140):
        direct = mpmath.nsum(lambda n: 1 / n ** (2 * k), [1, mpmath.inf])
        print(f"  2k={2 * k}: pipeline {mpmath.nstr(value.value, 25)}   "
              f"direct {mpmath.nstr(direct, 25)}")
