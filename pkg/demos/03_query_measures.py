"""Sensitivity, certificate complexity and decision-tree depth."""

# %%
from bfc import BooleanFunction, tradeoff_report
from bfc.measures import certificate_profile

# address function: x1 picks x2 or x3
addr = BooleanFunction.from_callable(3, lambda p: p[2] if p[0] else p[1])
print("C(f, x) per point", certificate_profile(addr).tolist())

# %%
# The trade-off report evaluates every inequality it has measures for.
report = tradeoff_report(addr)
print(report.measures)
for q in report.inequalities:
    print(f"{q.name:12s} {q.lhs:3d} >= {q.rhs:<3d} slack {q.slack}")

# %%
# Above the caps the expensive measures are skipped, not guessed.
big = BooleanFunction.constant(11, 1)
print(tradeoff_report(big, certificate_cap=10, depth_cap=10).skipped)
