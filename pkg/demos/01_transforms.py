"""Fourier spectrum and algebraic normal form of small Boolean functions."""

# %%
# A truth table is indexed by bitmask: entry x is f at the point whose
# coordinate j is bit j-1 of x.  Start with the 3-bit majority function.
from bfc import BooleanFunction, anf, check_uncertainty, f2_degree, fourier_degree, wht

maj = BooleanFunction.from_callable(3, lambda p: int(sum(p) >= 2))
print("table", maj.to_bits())

# %%
# Coefficients are unnormalised integers: coeffs[S] = sum_x f(x) (-1)^|S & x|.
spec = wht(maj)
for s, c in enumerate(spec.coeffs):
    print(f"S={s:03b}  {c:+d}/{spec.scale}")
print("Fourier degree", fourier_degree(spec))

# %%
# Over F2 majority is x1x2 + x1x3 + x2x3, so its F2 degree is 2 while the
# real degree is 3.
poly = anf(maj)
print("ANF", poly)
print("F2 degree", f2_degree(poly))

# %%
# |supp f| * |supp fhat| >= 2^n, with equality for subcube indicators.
r = check_uncertainty(maj)
print(r.support_size, "*", r.spectral_support_size, ">= 8:", r.holds)
