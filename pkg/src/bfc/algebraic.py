"""Algebraic normal form over F2 and the high-degree monomial witness."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import BooleanFunction, lex_key, popcounts, zeta_subset_f2
from .errors import PreconditionViolated, WitnessNotFound, ZeroFunction


@dataclass(frozen=True, eq=False)
class F2Polynomial:
    """ANF coefficients; bit ``S`` is the coefficient of ``prod_{i in S} x_i``."""

    n: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=np.uint8)
        if coeffs.shape != (1 << self.n,):
            raise PreconditionViolated("coefficient vector length must be 2**n")
        if coeffs.max(initial=0) > 1:
            raise PreconditionViolated("coefficients must be 0 or 1")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    def monomials(self) -> list[int]:
        return [int(s) for s in np.flatnonzero(self.coeffs)]

    def evaluate(self) -> BooleanFunction:
        # the mod-2 zeta transform is its own inverse
        return BooleanFunction(self.n, zeta_subset_f2(self.coeffs))

    def __str__(self):
        terms = []
        for s in self.monomials():
            terms.append("".join(f"x{i + 1}" for i in lex_key(s)) or "1")
        return " + ".join(terms) if terms else "0"


def anf(f: BooleanFunction) -> F2Polynomial:
    return F2Polynomial(f.n, zeta_subset_f2(f.table))


def f2_degree(p: F2Polynomial) -> int:
    nz = p.coeffs != 0
    if not nz.any():
        raise ZeroFunction("the zero polynomial has no degree")
    return int(popcounts(p.n)[nz].max())


def monomial_witness(f: BooleanFunction, vc: int) -> int:
    """Smallest set ``S`` with ``|S| <= vc`` whose complement is an ANF monomial.

    Such an ``S`` certifies ``deg_F2(f) >= n - vc``.  Ties are broken by size,
    then lexicographically by coordinates.
    """
    if f.is_zero():
        raise ZeroFunction("monomial witness needs a non-zero function")
    full = (1 << f.n) - 1
    coeffs = anf(f).coeffs
    sizes = f.n - popcounts(f.n)  # |S| for S = complement of each monomial
    ok = (coeffs == 1) & (sizes <= vc)
    if not ok.any():
        raise WitnessNotFound(
            f"no monomial of degree >= {f.n - vc} in the ANF; vc={vc} is inconsistent"
        )
    best = sizes[ok].min()
    candidates = [full ^ int(m) for m in np.flatnonzero(ok & (sizes == best))]
    return min(candidates, key=lex_key)


def weight_bounded_degree_check(f: BooleanFunction, r: int) -> bool:
    """For ``f`` supported on sets of size ``<= r``, check ``deg_F2(f) >= n - r``."""
    if f.is_zero():
        raise ZeroFunction("weight-bounded degree check needs a non-zero function")
    weights = popcounts(f.n)
    heavy = np.flatnonzero((f.table == 1) & (weights > r))
    if heavy.size:
        raise PreconditionViolated(
            f"support contains mask {int(heavy[0])} of weight > {r}"
        )
    return f2_degree(anf(f)) >= f.n - r
