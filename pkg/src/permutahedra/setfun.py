"""Set functions on the boolean lattice of [d].

Subsets are plain ints: bit ``i - 1`` is set iff element ``i`` is present.
Elements are 1-based everywhere a user sees them (JSON, reprs) and 0-based
bit positions internally.

Values are :class:`fractions.Fraction`. The zeta transform
``z_I = sum_{J <= I} y_J`` and its Moebius inverse are the bridge between the
Minkowski coefficients ``y`` of a generalized permutahedron and the
right-hand sides ``z`` of its facet description.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

import numpy as np

from . import _kernels

MAX_D = 20


def max_d() -> int:
    return min(MAX_D, int(os.environ.get("GENPERM_MAX_D", MAX_D)))


# ------------------------------------------------------------------ masks

def mask(elements: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based elements."""
    m = 0
    for e in elements:
        if e < 1:
            raise ValueError(f"elements are 1-based, got {e}")
        m |= 1 << (e - 1)
    return m


def elements(m: int) -> list[int]:
    """Sorted 1-based elements of a mask."""
    out = []
    i = 1
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def popcount(m: int) -> int:
    return bin(m).count("1")


def full(d: int) -> int:
    return (1 << d) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(m: int) -> Iterator[int]:
    """All submasks of ``m`` including 0 and ``m``, in decreasing order."""
    s = m
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & m


def supersets(m: int, d: int) -> Iterator[int]:
    """All supersets of ``m`` inside [d], in increasing order."""
    rest = full(d) & ~m
    for s in sorted(submasks(rest)):
        yield m | s


def lex_key(m: int) -> tuple[int, ...]:
    """Sort key placing masks in lexicographic order of their element lists."""
    return tuple(elements(m))


def fmt_mask(m: int) -> str:
    return "{" + ",".join(map(str, elements(m))) + "}"


# -------------------------------------------------------------- rationals

def to_fraction(v) -> Fraction:
    """Parse an int, Fraction, or "p/q" / decimal integer string."""
    if isinstance(v, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, str):
        s = v.strip()
        if "/" in s:
            p, q = s.split("/", 1)
            return Fraction(int(p), int(q))
        return Fraction(int(s))
    raise TypeError(f"expected an integer or 'p/q' string, got {v!r}")


def fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@lru_cache(maxsize=None)
def harmonic(i: int) -> Fraction:
    """h_i = 1 + 1/2 + ... + 1/i, with h_0 = 0."""
    if i < 0:
        raise ValueError("harmonic number index must be nonnegative")
    if i == 0:
        return Fraction(0)
    return harmonic(i - 1) + Fraction(1, i)


# ----------------------------------------------------------- set function

@dataclass(frozen=True)
class SetFunction:
    """Dense map from the 2^d subsets of [d] to rationals."""

    d: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not 1 <= self.d <= MAX_D:
            raise ValueError(f"ground-set size must be in 1..{MAX_D}, got {self.d}")
        if len(self.values) != 1 << self.d:
            raise ValueError(f"expected {1 << self.d} values, got {len(self.values)}")
        if not all(isinstance(v, Fraction) for v in self.values):
            object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    # construction
    @classmethod
    def zero(cls, d: int) -> "SetFunction":
        return cls(d, (Fraction(0),) * (1 << d))

    @classmethod
    def from_sets(cls, d: int, entries: Mapping) -> "SetFunction":
        """Build from ``{(1, 2): 3, (1, 2, 3): "-1/2", ...}``; missing sets are 0.

        Keys may also be int masks.
        """
        vals = [Fraction(0)] * (1 << d)
        for key, v in entries.items():
            m = key if isinstance(key, int) else mask(key)
            if m >> d:
                raise ValueError(f"subset {key} is not inside [{d}]")
            vals[m] = to_fraction(v)
        return cls(d, tuple(vals))

    @classmethod
    def from_function(cls, d: int, f) -> "SetFunction":
        """Tabulate ``f(mask)`` over all subsets."""
        return cls(d, tuple(to_fraction(f(m)) for m in range(1 << d)))

    # access
    def __getitem__(self, key) -> Fraction:
        m = key if isinstance(key, int) else mask(key)
        return self.values[m]

    def __len__(self):
        return len(self.values)

    def support(self) -> list[int]:
        return [m for m, v in enumerate(self.values) if v]

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    # linear structure
    def _check(self, other: "SetFunction"):
        if not isinstance(other, SetFunction):
            return NotImplemented
        if other.d != self.d:
            raise ValueError(f"dimension mismatch: {self.d} vs {other.d}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return SetFunction(self.d, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return SetFunction(self.d, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self):
        return SetFunction(self.d, tuple(-a for a in self.values))

    def __mul__(self, c):
        c = to_fraction(c)
        return SetFunction(self.d, tuple(c * a for a in self.values))

    __rmul__ = __mul__

    def permuted(self, perm) -> "SetFunction":
        """Relabel the ground set: the result takes value f(perm(I)) at I.

        ``perm`` is a sequence of 0-based images, ``perm[i]`` for element i.
        """
        d = self.d
        out = [Fraction(0)] * (1 << d)
        for m in range(1 << d):
            img = 0
            for i in range(d):
                if m >> i & 1:
                    img |= 1 << perm[i]
            out[m] = self.values[img]
        return SetFunction(d, tuple(out))

    def as_int_array(self) -> np.ndarray:
        return np.array([int(v) for v in self.values], dtype=np.int64)

    # JSON
    def to_json(self) -> dict:
        return {"d": self.d, "entries": entries_to_json(self)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "SetFunction":
        return parse_entries(obj["d"], obj.get("entries", []))

    def __repr__(self):
        body = ", ".join(f"{fmt_mask(m)}: {fmt_fraction(v)}" for m, v in enumerate(self.values) if v)
        return f"SetFunction(d={self.d}, {{{body}}})"


def entries_to_json(f: SetFunction) -> list[dict]:
    ms = sorted(f.support(), key=lambda m: (popcount(m), lex_key(m)))
    return [{"set": elements(m), "value": fmt_fraction(f.values[m])} for m in ms]


def parse_entries(d, entries) -> SetFunction:
    if not isinstance(d, int) or isinstance(d, bool):
        raise ValueError(f"'d' must be an integer, got {d!r}")
    if not 1 <= d <= max_d():
        raise ValueError(f"d={d} outside the allowed range 1..{max_d()}")
    vals = [Fraction(0)] * (1 << d)
    seen = set()
    for e in entries:
        s = e["set"]
        if any(not isinstance(x, int) or not 1 <= x <= d for x in s):
            raise ValueError(f"set {s} has elements outside [{d}]")
        if any(a >= b for a, b in zip(s, s[1:])):
            raise ValueError(f"set {s} must be strictly increasing")
        m = mask(s)
        if m in seen:
            raise ValueError(f"set {s} listed twice")
        seen.add(m)
        vals[m] = to_fraction(e["value"])
    return SetFunction(d, tuple(vals))


# ------------------------------------------------------------- transforms

def _yates(f: SetFunction, sign: int) -> SetFunction:
    d = f.d
    if f.is_integral() and _kernels.fits_int64((v.numerator for v in f.values), d):
        out = _kernels.subset_sum(f.as_int_array(), d, sign)
        return SetFunction(d, tuple(Fraction(int(v)) for v in out))
    vals = list(f.values)
    n = 1 << d
    for i in range(d):
        bit = 1 << i
        for m in range(n):
            if m & bit:
                if sign > 0:
                    vals[m] += vals[m ^ bit]
                else:
                    vals[m] -= vals[m ^ bit]
    return SetFunction(d, tuple(vals))


def zeta_transform(y: SetFunction) -> SetFunction:
    """z_I = sum of y_J over J subset of I."""
    if y.values[0] != 0:
        raise ValueError("zeta transform requires the value at the empty set to be 0")
    return _yates(y, 1)


def mobius_transform(z: SetFunction) -> SetFunction:
    """y_I = sum over J subset of I of (-1)^{|I|-|J|} z_J."""
    if z.values[0] != 0:
        raise ValueError("Moebius transform requires the value at the empty set to be 0")
    return _yates(z, -1)
