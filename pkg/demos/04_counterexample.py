"""Sensitivity alone does not pair with VC-dimension the way degree does."""

# %%
from bfc import support, tradeoff_report
from bfc.constructions import counterexample_n15
from bfc.measures import one_inclusion_stats

f = counterexample_n15()
print("n", f.n, "|supp|", f.weight())

# %%
# Nine free coordinates minus three disjoint 3-cubes, padded with six zeros.
report = tradeoff_report(f, which=("vc", "s", "deg", "degf2"))
print(report.measures)
print(report.verdict("vc+s>=n"))
print(report.verdict("2vc+s>=n"))

# %%
# Every member keeps at least n - s neighbours inside the support.
print(one_inclusion_stats(support(f)))
