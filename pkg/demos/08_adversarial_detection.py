"""Planted defects and how fast the difference table sees them.

The positivity criterion is two-sided: a sequence that is NOT positive must
eventually produce a negative cell.  On a finite triangle that is an
empirical question, so this experiment plants defects into a truncated
positive base sequence {1/n^2} and reports the smallest j+k at which the
exact rational table goes negative.
"""

import random
from fractions import Fraction as F

from posroot import AdversarialSpec, Defect, adversarial_run, draw_adversarial_spec

base = tuple(F(1, n * n) for n in range(1, 49))

print("single negative defects of shrinking magnitude (lam = 1, grid 24):")
for mag in (F(1, 2), F(1, 4), F(1, 8), F(1, 16), F(1, 32)):
    spec = AdversarialSpec(base=base, defects=(Defect(re=-mag),), lam=F(1))
    _, depth = adversarial_run(spec, 24)
    print(f"  defect -{str(mag):5s} detected at j+k = {depth}")

print("\nconjugate-pair defects (detection not guaranteed on a finite grid):")
for re, im in ((F(3, 10), F(2, 5)), (F(1, 2), F(1, 10)), (F(0), F(1, 2))):
    spec = AdversarialSpec(base=base, defects=(Defect(re=re, im=im),), lam=F(1))
    _, depth = adversarial_run(spec, 24)
    print(f"  defect {re}+-{im}i  -> depth {depth}")

print("\nseeded batch, 20 draws with magnitude in [1/4, 1):")
rng = random.Random(2)
detected = 0
worst = 0
for _ in range(20):
    spec = draw_adversarial_spec(rng)
    _, depth = adversarial_run(spec, 24)
    if depth is not None:
        detected += 1
        worst = max(worst, depth)
print(f"  detected {detected}/20, deepest detection at j+k = {worst}")

control, _ = adversarial_run(draw_adversarial_spec(rng), 24, include_defects=False)
print(f"  defect-free control: {control.verdict}")
