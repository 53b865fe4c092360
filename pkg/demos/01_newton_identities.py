"""Elementary symmetric values vs power sums, exactly.

For any absolutely summable sequence, the elementary symmetric values e_k
and the power sums p_k determine each other through a triangular recurrence
and, independently, through a closed sum over integer partitions.  Both
work in any coefficient domain; here: plain rationals and a symbolic
parameter.
"""

from fractions import Fraction as F

from posroot import (
    ElementarySequence,
    RationalFunction,
    elementary_from_power_sums,
    enumerate_partitions,
    power_sums_closed_form,
    power_sums_from_elementary,
)

# a finite sequence {1/2, 1/3}: e_1 = 5/6, e_2 = 1/6
e = ElementarySequence([F(1), F(5, 6), F(1, 6), F(0), F(0)])
p = power_sums_from_elementary(e, 4)
print("sequence {1/2, 1/3}")
for k in range(1, 5):
    direct = F(1, 2) ** k + F(1, 3) ** k
    print(f"  p_{k} = {p[k]}  (direct sum {direct}, closed form "
          f"{power_sums_closed_form(e, k)})")

back = elementary_from_power_sums(p, 4)
print("round trip recovers e:", list(back.values) == list(e.values))

print("\npartition counts driving the closed form:")
for k in (4, 6, 10):
    print(f"  k={k}: {len(enumerate_partitions(k))} partitions")

# the same engine over a rational-function field: one symbolic parameter
nu = RationalFunction.variable(("nu",), "nu")
one = RationalFunction.constant(("nu",), 1)
e_sym = ElementarySequence([one, 1 / (4 * (nu + 1)),
                            1 / (32 * (nu + 1) * (nu + 2))])
p_sym = power_sums_from_elementary(e_sym, 2)
print("\nsymbolic run over Q(nu):")
print("  p_1 =", p_sym[1])
print("  p_2 =", p_sym[2])
print("  p_2 at nu=1:", p_sym[2].evaluate({"nu": F(1)}))
