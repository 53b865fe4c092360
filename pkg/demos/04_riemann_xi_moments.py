"""Even moments of the completed zeta function's Fourier kernel.

The completed (symmetrized) zeta function is the Fourier transform of an
explicit theta-type kernel phi(t): even, positive, decaying like
exp(-pi e^(2|t|)).  Its even moments b_{2n} give the Taylor coefficients,
and the ratios b_{2n}/((2n)! b_0) feed the power-sum machinery: p_1 below
is the sum of 1/gamma^2 over all nontrivial zero ordinates.
"""

import mpmath

from posroot import (
    elementary_from_moments,
    packaged_riemann_table,
    partial_power_sum_with_tail,
    power_sums_from_elementary,
    riemann_moments,
    riemann_phi,
)

print("kernel values (always positive, fast decreasing):")
for t in (0, 1, 2, 3):
    print(f"  phi({t}) = {mpmath.nstr(riemann_phi(t, 160).value, 12)}")

mr = riemann_moments(6, 320)
print(f"\nmoments at 320 bits (T = {mr.metadata['T']:.3f}, "
      f"{mr.metadata['nodes']} kernel evaluations):")
for n in range(4):
    print(f"  b_{2 * n} = {mpmath.nstr(mr[n].value, 30)}")

with mpmath.workprec(340):
    oracle = (-mpmath.mpf(1) / 8 * mpmath.pi ** (-mpmath.mpf(1) / 4)
              * mpmath.gamma(mpmath.mpf(1) / 4) * mpmath.zeta(mpmath.mpf(1) / 2))
    print("\nclosed form for b_0:", mpmath.nstr(oracle, 30))
    print("difference:", mpmath.nstr(abs(mr[0].value - oracle), 5))

p = power_sums_from_elementary(elementary_from_moments(mr), 3)
print("\npower sums of {1/gamma^2} from the moments:")
for k in range(1, 4):
    print(f"  p_{k} = {mpmath.nstr(p[k].value, 20)}")

table = packaged_riemann_table(limit=10000, precision=256)
s, tail = partial_power_sum_with_tail(table, 1, "riemann", 256)
print(f"\nzero-table cross-check for p_1 over {len(table)} ordinates:")
print(f"  partial {float(s):.12f} + tail {float(tail):.3e} "
      f"= {float(s) + float(tail):.12f}")
