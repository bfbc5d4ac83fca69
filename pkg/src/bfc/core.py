"""Exact representations of Boolean functions and set families.

Index convention used everywhere in the package: coordinate ``j`` (1-based)
is bit ``j - 1`` of an integer.  The point ``x`` with ``x_j = 1`` exactly for
``j`` in ``S`` is therefore the integer whose set bits are ``S``; the same
integer also names the subset ``S`` of ``[n]``.  Masks, points and sets are
interchangeable.

Truth tables are ``uint8`` numpy arrays of length ``2**n``; bit ``i`` of the
table is ``f(i)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DimensionCap, FormatError, PreconditionViolated

MAX_DIMENSION = 24


def check_dimension(n: int, cap: int = MAX_DIMENSION, what: str = "n") -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise PreconditionViolated(f"{what} must be a positive integer, got {n!r}")
    if n > cap:
        raise DimensionCap(f"{what}={n} exceeds the configured cap {cap}")


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def popcounts(n: int) -> np.ndarray:
    """Popcount of every mask in ``[0, 2**n)`` as an int64 array."""
    return np.bitwise_count(np.arange(1 << n, dtype=np.uint64)).astype(np.int64)


def lex_key(mask: int) -> tuple[int, ...]:
    """Sort key: sorted coordinates of the set (0-based bit positions)."""
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def size_lex_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Order sets by size first, then lexicographically by coordinates."""
    return popcount(mask), lex_key(mask)


def masks_of_size(n: int, k: int) -> Iterator[int]:
    """All ``k``-subsets of ``[n]`` as masks, in lexicographic order."""
    for combo in itertools.combinations(range(n), k):
        m = 0
        for i in combo:
            m |= 1 << i
        yield m


def submasks(mask: int) -> list[int]:
    """All submasks of ``mask`` in increasing numeric order."""
    out = []
    sub = mask
    while True:
        out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    out.reverse()
    return out


def mask_from_coords(coords: Iterable[int]) -> int:
    """Mask of a set of 1-based coordinates."""
    m = 0
    for j in coords:
        m |= 1 << (j - 1)
    return m


def mask_from_point(point: Sequence[int]) -> int:
    """Mask of a 0/1 tuple ``(x_1, ..., x_n)``."""
    m = 0
    for j, v in enumerate(point):
        if v not in (0, 1):
            raise PreconditionViolated(f"point entries must be 0/1, got {v!r}")
        m |= v << j
    return m


def point_from_mask(mask: int, n: int) -> tuple[int, ...]:
    return tuple((mask >> j) & 1 for j in range(n))


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class BooleanFunction:
    """A function ``{0,1}^n -> {0,1}`` stored as its truth table."""

    n: int
    table: np.ndarray = field(repr=False)

    def __post_init__(self):
        check_dimension(self.n)
        table = np.asarray(self.table)
        if table.shape != (1 << self.n,):
            raise PreconditionViolated(
                f"table must have exactly 2**{self.n} = {1 << self.n} entries, "
                f"got shape {table.shape}"
            )
        if table.size and (table.min() < 0 or table.max() > 1):
            raise PreconditionViolated("table entries must be 0 or 1")
        object.__setattr__(self, "table", _frozen(table.astype(np.uint8, copy=True)))

    @classmethod
    def from_bits(cls, bits: str) -> "BooleanFunction":
        """Build from a '0'/'1' string; character ``i`` is ``f(i)``."""
        n = len(bits).bit_length() - 1
        if len(bits) != 1 << n:
            raise PreconditionViolated(f"length {len(bits)} is not a power of two")
        if set(bits) - {"0", "1"}:
            raise PreconditionViolated("bit string may only contain '0' and '1'")
        return cls(n, np.frombuffer(bits.encode(), dtype=np.uint8) - ord("0"))

    @classmethod
    def from_callable(cls, n: int, fn) -> "BooleanFunction":
        """Tabulate ``fn(point)`` where ``point`` is the 0/1 tuple ``(x_1..x_n)``."""
        check_dimension(n)
        return cls(n, np.array([int(fn(point_from_mask(i, n))) for i in range(1 << n)]))

    @classmethod
    def constant(cls, n: int, value: int) -> "BooleanFunction":
        return cls(n, np.full(1 << n, value, dtype=np.uint8))

    def to_bits(self) -> str:
        return (self.table + ord("0")).tobytes().decode()

    def __call__(self, x: int | Sequence[int]) -> int:
        if not isinstance(x, (int, np.integer)):
            x = mask_from_point(x)
        return int(self.table[x])

    def is_zero(self) -> bool:
        return not self.table.any()

    def weight(self) -> int:
        return int(self.table.sum())

    def __eq__(self, other):
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def __repr__(self):
        bits = self.to_bits()
        if len(bits) > 64:
            bits = bits[:61] + "..."
        return f"BooleanFunction(n={self.n}, table='{bits}')"


@dataclass(frozen=True)
class SetFamily:
    """A family of subsets of ``[n]`` as a strictly increasing mask tuple."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        check_dimension(self.n)
        members = tuple(int(m) for m in self.members)
        limit = 1 << self.n
        for a, b in zip(members, members[1:]):
            if a >= b:
                raise PreconditionViolated("members must be strictly increasing")
        if members and (members[0] < 0 or members[-1] >= limit):
            raise PreconditionViolated(f"member masks must lie in [0, {limit})")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_sets(cls, n: int, masks: Iterable[int]) -> "SetFamily":
        """Sort and deduplicate arbitrary masks."""
        return cls(n, tuple(sorted(set(int(m) for m in masks))))

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.members, dtype=np.int64)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask):
        return mask in set(self.members)


@dataclass(frozen=True)
class PointAssignment:
    """A point ``1_S`` of the cube, named by its mask."""

    n: int
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < 1 << self.n:
            raise PreconditionViolated(f"mask {self.mask} out of range for n={self.n}")

    @property
    def coords(self) -> tuple[int, ...]:
        """1-based coordinates set to 1."""
        return tuple(j + 1 for j in lex_key(self.mask))

    @property
    def point(self) -> tuple[int, ...]:
        return point_from_mask(self.mask, self.n)


def support(f: BooleanFunction) -> SetFamily:
    return SetFamily(f.n, tuple(int(i) for i in np.flatnonzero(f.table)))


def from_support(n: int, members: Iterable[int]) -> BooleanFunction:
    check_dimension(n)
    table = np.zeros(1 << n, dtype=np.uint8)
    for m in members:
        m = int(m)
        if not 0 <= m < 1 << n:
            raise PreconditionViolated(f"mask {m} out of range for n={n}")
        table[m] = 1
    return BooleanFunction(n, table)


def _log2_length(bits: np.ndarray) -> int:
    n = len(bits).bit_length() - 1
    if len(bits) != 1 << n:
        raise PreconditionViolated(f"length {len(bits)} is not a power of two")
    return n


def zeta_subset_f2(bits) -> np.ndarray:
    """``out[S] = XOR of bits[T] over T subset of S``.

    The mod-2 Moebius function is identically 1, so this is an involution.
    """
    a = np.array(bits, dtype=np.uint8) & 1
    n = _log2_length(a)
    for i in range(n):
        h = 1 << i
        v = a.reshape(-1, 2, h)
        v[:, 1, :] ^= v[:, 0, :]
    return a


def superset_parity(bits) -> np.ndarray:
    """``out[A] = XOR of bits[F] over F superset of A``."""
    a = np.array(bits, dtype=np.uint8) & 1
    n = _log2_length(a)
    for i in range(n):
        h = 1 << i
        v = a.reshape(-1, 2, h)
        v[:, 0, :] ^= v[:, 1, :]
    return a


def subset_sums(values) -> np.ndarray:
    """Integer subset-sum transform: ``out[S] = sum of values[T], T subset of S``."""
    a = np.array(values, dtype=np.int64)
    n = _log2_length(a)
    for i in range(n):
        h = 1 << i
        v = a.reshape(-1, 2, h)
        v[:, 1, :] += v[:, 0, :]
    return a


def zeta_superset_parity(family: SetFamily, a: int) -> int:
    """Parity of the number of members containing ``a``."""
    if not 0 <= a < 1 << family.n:
        raise PreconditionViolated(f"mask {a} out of range for n={family.n}")
    arr = family.array
    return int(np.count_nonzero((arr & a) == a) & 1)


# Subcube lattice.  A subcube is a pair (fixed, values) with values a submask
# of fixed; its ternary code has digit 3**(j-1) equal to the value of
# coordinate j when fixed and 2 when free.


def subcube_counts(table: np.ndarray) -> np.ndarray:
    """Number of ones of ``table`` on every subcube, as a flat array of 3**n.

    Entry at ternary code ``sum_j digit_j * 3**(j-1)`` counts ``f = 1`` on the
    subcube whose coordinate ``j`` is fixed to ``digit_j`` (or free when 2).
    """
    table = np.asarray(table)
    n = _log2_length(table)
    # C order: the last axis is coordinate 1, matching the ternary code.
    arr = table.astype(np.int64).reshape((2,) * n)
    for axis in range(n):
        lo = np.take(arr, [0], axis=axis)
        hi = np.take(arr, [1], axis=axis)
        arr = np.concatenate([arr, lo + hi], axis=axis)
    return arr.reshape(-1)


def subcube_code(fixed, values, n: int):
    """Ternary code of subcube(s); works on ints or integer arrays."""
    fixed = np.asarray(fixed, dtype=np.int64)
    values = np.asarray(values, dtype=np.int64)
    code = np.zeros(np.broadcast(fixed, values).shape, dtype=np.int64)
    for j in range(n):
        digit = np.where((fixed >> j) & 1, (values >> j) & 1, 2)
        code = code + digit * 3**j
    return code if code.ndim else int(code)


def subcube_free_counts(n: int) -> np.ndarray:
    """Number of free coordinates of every subcube code."""
    free = np.zeros((3,) * n, dtype=np.int64)
    for axis in range(n):
        shape = [1] * n
        shape[axis] = 3
        free = free + (np.arange(3) == 2).reshape(shape)
    return free.reshape(-1)


# Text formats.  ".bft": line 1 = n, line 2 = 2**n characters '0'/'1'.
# Support format: line 1 = "supp n", then one decimal mask per line.


def dumps(f: BooleanFunction) -> str:
    return f"{f.n}\n{f.to_bits()}\n"


def dumps_support(f: BooleanFunction) -> str:
    lines = [f"supp {f.n}"] + [str(m) for m in support(f).members]
    return "\n".join(lines) + "\n"


def loads(text: str, source: str = "<string>") -> BooleanFunction:
    """Parse either the ``.bft`` format or the support format."""
    lines = [ln.strip() for ln in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise FormatError(f"{source}: empty input")
    head = lines[0].split()
    if head and head[0] == "supp":
        if len(head) != 2 or not head[1].isdigit():
            raise FormatError(f"{source}:1: expected 'supp <n>', got {lines[0]!r}")
        n = int(head[1])
        try:
            check_dimension(n)
        except DimensionCap as exc:
            raise FormatError(f"{source}:1: {exc}") from exc
        masks = []
        for lineno, ln in enumerate(lines[1:], start=2):
            if not ln.isdigit():
                raise FormatError(f"{source}:{lineno}: expected a decimal mask, got {ln!r}")
            m = int(ln)
            if m >= 1 << n:
                raise FormatError(f"{source}:{lineno}: mask {m} out of range for n={n}")
            masks.append(m)
        return from_support(n, masks)
    if len(lines) != 2:
        raise FormatError(f"{source}: expected 2 lines (n, table), got {len(lines)}")
    if not lines[0].isdigit():
        raise FormatError(f"{source}:1: expected decimal n, got {lines[0]!r}")
    n = int(lines[0])
    try:
        check_dimension(n)
    except DimensionCap as exc:
        raise FormatError(f"{source}:1: {exc}") from exc
    bits = lines[1]
    if len(bits) != 1 << n:
        raise FormatError(
            f"{source}:2: expected {1 << n} characters for n={n}, got {len(bits)}"
        )
    for col, ch in enumerate(bits, start=1):
        if ch not in "01":
            raise FormatError(f"{source}:2:{col}: invalid character {ch!r}")
    return BooleanFunction.from_bits(bits)


def read_function(path: str | Path) -> BooleanFunction:
    path = Path(path)
    return loads(path.read_text(), source=str(path))


def write_function(f: BooleanFunction, path: str | Path, fmt: str = "bft") -> None:
    text = dumps(f) if fmt == "bft" else dumps_support(f)
    Path(path).write_text(text)
