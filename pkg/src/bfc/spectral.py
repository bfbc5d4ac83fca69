"""Walsh-Hadamard analysis with exact integer spectra.

Coefficients are kept unnormalised: ``coeffs[S] = 2**n * fhat(S)`` where
``fhat(S) = E_x[f(x) * (-1)**|S & x|]``.  Degrees are taken on the 0/1-valued
function, so ``deg(1) = 0`` and the zero function has no degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import BooleanFunction, popcounts
from .errors import PreconditionViolated, ZeroFunction


@dataclass(frozen=True, eq=False)
class FourierSpectrum:
    n: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=np.int64)
        if coeffs.shape != (1 << self.n,):
            raise PreconditionViolated("spectrum length must be 2**n")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def scale(self) -> int:
        return 1 << self.n

    def __getitem__(self, s: int) -> int:
        return int(self.coeffs[s])

    def nonzero(self) -> np.ndarray:
        return np.flatnonzero(self.coeffs)


def fwht(values) -> np.ndarray:
    """Unnormalised fast Walsh-Hadamard transform over int64."""
    a = np.array(values, dtype=np.int64)
    n = len(a).bit_length() - 1
    if len(a) != 1 << n:
        raise PreconditionViolated(f"length {len(a)} is not a power of two")
    for i in range(n):
        h = 1 << i
        v = a.reshape(-1, 2, h)
        lo = v[:, 0, :].copy()
        v[:, 0, :] += v[:, 1, :]
        v[:, 1, :] = lo - v[:, 1, :]
    return a


def wht(f: BooleanFunction) -> FourierSpectrum:
    return FourierSpectrum(f.n, fwht(f.table))


def inverse_wht(spec: FourierSpectrum) -> BooleanFunction:
    """Recover the truth table; fails loudly if the spectrum is not Boolean."""
    raw = fwht(spec.coeffs)
    scale = spec.scale
    if np.any(raw % scale):
        raise PreconditionViolated("inverse transform is not divisible by 2**n")
    table = raw // scale
    if table.min() < 0 or table.max() > 1:
        raise PreconditionViolated("spectrum does not come from a 0/1 function")
    return BooleanFunction(spec.n, table)


def fourier_degree(spec: FourierSpectrum) -> int:
    nz = spec.coeffs != 0
    if not nz.any():
        raise ZeroFunction("the zero function has no Fourier degree")
    return int(popcounts(spec.n)[nz].max())


def degree(f: BooleanFunction) -> int:
    """Shortcut for ``fourier_degree(wht(f))``."""
    return fourier_degree(wht(f))


def spectral_support_size(spec: FourierSpectrum) -> int:
    return int(np.count_nonzero(spec.coeffs))


@dataclass(frozen=True)
class UncertaintyReport:
    support_size: int
    spectral_support_size: int
    lhs_bits: float
    holds: bool
    equality: bool


def check_uncertainty(f: BooleanFunction) -> UncertaintyReport:
    """``log2|supp f| + log2|supp fhat| >= n``, decided as an integer product."""
    if f.is_zero():
        raise ZeroFunction("uncertainty principle needs a non-zero function")
    supp = f.weight()
    ssupp = spectral_support_size(wht(f))
    product = supp * ssupp
    return UncertaintyReport(
        support_size=supp,
        spectral_support_size=ssupp,
        lhs_bits=float(np.log2(supp) + np.log2(ssupp)),
        holds=product >= 1 << f.n,
        equality=product == 1 << f.n,
    )
