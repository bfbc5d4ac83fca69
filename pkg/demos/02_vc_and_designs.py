"""VC-dimension of supports and the parity conditions that force it up."""

# %%
from bfc import (
    BooleanFunction,
    extract_shattered_from_design,
    null_design_check_containment,
    random_low_f2_degree,
    support,
    vc_dimension,
)
from bfc.constructions import paper_example_n4

f = paper_example_n4()
fam = support(f)
print("support masks", fam.members)

# %%
# The witness lists one member per trace on the shattered set T.
d, witness = vc_dimension(fam)
print("VC", d, "on T mask", witness.t_mask)
for trace, member in sorted(witness.realizers.items()):
    print(f"  trace {trace:04b} realised by {member:04b}")

# %%
# Low F2 degree means every small containment count is even.  The support of
# the parity function on 4 bits is such a family with d = 2.
par = BooleanFunction.from_callable(4, lambda p: sum(p) % 2)
print(null_design_check_containment(support(par), 2))

# %%
# ...and from it a shattered 3-set can be pulled out constructively.
w = extract_shattered_from_design(par, 2)
print("extracted T", w.t_mask, "valid:", w.is_valid(support(par)))

# %%
# The same holds for random functions of bounded F2 degree.
n, d = 8, 3
g = random_low_f2_degree(n, n - d - 1, seed=11)
w = extract_shattered_from_design(g, d)
print("n=8 extracted", bin(w.t_mask), "VC", vc_dimension(support(g))[0])
