"""Count the functions where the degree trade-offs are tight."""

# %%
import time

from bfc.census import equality_census, verify_exhaustive

# %%
for n in range(1, 5):
    t0 = time.perf_counter()
    row = equality_census(n)
    print(f"n={n}  deg-equality {row.deg_equality_count:5d}  "
          f"F2-equality {row.f2_equality_count:5d}  ({time.perf_counter() - t0:.2f}s)")

# %%
# The equality lists themselves are available for inspection.
row = equality_census(2, keep=True)
print("deg equalities at n=2:", row.deg_equalities)

# %%
# Every inequality in the suite over all 65535 non-zero functions of 4 bits.
report = verify_exhaustive(4)
print("ok" if report.ok else report.first_failure)
print({k: v for k, v in report.passes.items()})
