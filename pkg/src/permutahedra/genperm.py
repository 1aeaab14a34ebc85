"""Generalized permutahedra as signed Minkowski sums of standard simplices.

A representation is a set function ``y`` with ``y_empty = 0`` standing for
``sum_I y_I * Delta_I``. It defines a generalized permutahedron exactly when
every interval sum

    sum_{E <= I <= T} y_I,   |E| = 2, E <= T,

is nonnegative; equivalently when ``z = zeta(y)`` is supermodular. The
polytope itself is ``P(z) = {x : x([d]) = z_[d], x(I) >= z_I}``.

The geometric helpers here (vertices, faces, lattice points) work from ``z``
and are meant as brute-force oracles for the formulas elsewhere.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from . import _kernels
from .setfun import (
    SetFunction,
    elements,
    entries_to_json,
    fmt_fraction,
    fmt_mask,
    full,
    lex_key,
    parse_entries,
    zeta_transform,
)


class InvalidRepresentation(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class InconsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


@dataclass(frozen=True)
class ViolationWitness:
    E: int
    T: int
    value: Fraction

    def to_json(self):
        return {"E": elements(self.E), "T": elements(self.T), "value": fmt_fraction(self.value)}

    def __str__(self):
        return f"E={fmt_mask(self.E)} T={fmt_mask(self.T)} sum={fmt_fraction(self.value)}"


@dataclass(frozen=True)
class SupermodularWitness:
    K: int
    i: int  # 1-based
    j: int

    def to_json(self):
        return {"K": elements(self.K), "i": self.i, "j": self.j}


@dataclass(frozen=True)
class GenPermRep:
    d: int
    y: SetFunction
    validated: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.y.d != self.d:
            raise ValueError(f"y has ground set size {self.y.d}, expected {self.d}")
        if self.y.values[0] != 0:
            raise ValueError("y must vanish at the empty set")

    @classmethod
    def from_sets(cls, d, entries) -> "GenPermRep":
        return cls(d, SetFunction.from_sets(d, entries))

    @classmethod
    def checked(cls, y: SetFunction) -> "GenPermRep":
        """Validate ``y`` and return a rep flagged as validated."""
        rep = cls(y.d, y)
        ok, witness = validate_y(rep)
        if not ok:
            raise InvalidRepresentation(f"not a generalized permutahedron: {witness}", witness)
        return cls(y.d, y, validated=True)

    @cached_property
    def z(self) -> SetFunction:
        return zeta_transform(self.y)

    def is_integral(self) -> bool:
        return self.y.is_integral()

    def __add__(self, other):
        return GenPermRep(self.d, self.y + other.y)

    def __mul__(self, c):
        return GenPermRep(self.d, self.y * c)

    __rmul__ = __mul__

    def to_json(self):
        return {"d": self.d, "y": entries_to_json(self.y)}

    @classmethod
    def from_json(cls, obj) -> "GenPermRep":
        return cls(obj["d"], parse_entries(obj["d"], obj.get("y", [])))


def _as_setfunction(rep) -> SetFunction:
    return rep.y if isinstance(rep, GenPermRep) else rep


# ------------------------------------------------------------- validation

def interval_sums(y: SetFunction, E: int) -> dict[int, Fraction]:
    """Map T -> sum_{E <= I <= T} y_I for every T containing E."""
    d = y.d
    rest = full(d) & ~E
    sums = {E | k: y.values[E | k] for k in _submasks_sorted(rest)}
    for i in range(d):
        bit = 1 << i
        if not rest & bit:
            continue
        for T in sums:
            if T & bit:
                sums[T] += sums[T ^ bit]
    return sums


def _submasks_sorted(m):
    out = [0]
    for i in range(m.bit_length()):
        if m >> i & 1:
            out += [s | (1 << i) for s in out]
    return out


def pairs(d: int):
    """All 2-subsets of [d] as masks, in lexicographic order."""
    return [(1 << i) | (1 << j) for i in range(d) for j in range(i + 1, d)]


def validate_y(rep) -> tuple[bool, ViolationWitness | None]:
    """Check every interval inequality directly on ``y``.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is the
    first violated (E, T), ordering E and then T lexicographically by their
    element lists.
    """
    y = _as_setfunction(rep)
    if y.values[0] != 0:
        raise ValueError("y must vanish at the empty set")
    for E in pairs(y.d):
        sums = interval_sums(y, E)
        bad = [T for T, s in sums.items() if s < 0]
        if bad:
            T = min(bad, key=lex_key)
            return False, ViolationWitness(E, T, sums[T])
    return True, None


def validate_z_supermodular(z: SetFunction) -> tuple[bool, SupermodularWitness | None]:
    """Check z_{K+i} + z_{K+j} <= z_{K+i+j} + z_K for all K and i != j outside K.

    The first violation in (K mask, i, j) order is returned as witness.
    """
    if z.values[0] != 0:
        raise ValueError("z must vanish at the empty set")
    d = z.d
    if z.is_integral() and _kernels.fits_int64((v.numerator for v in z.values), d):
        K, i, j = _kernels.supermodular_violation(z.as_int_array(), d)
        K, i, j = int(K), int(i), int(j)
        if K < 0:
            return True, None
        return False, SupermodularWitness(K, i + 1, j + 1)
    v = z.values
    for K in range(1 << d):
        for i in range(d):
            bi = 1 << i
            if K & bi:
                continue
            for j in range(i + 1, d):
                bj = 1 << j
                if K & bj:
                    continue
                if v[K | bi] + v[K | bj] > v[K | bi | bj] + v[K]:
                    return False, SupermodularWitness(K, i + 1, j + 1)
    return True, None


def equivalence_check(rep) -> bool:
    """Validate through both the interval inequalities and supermodularity of z.

    Raises :class:`InconsistencyError` if the two answers differ, which can
    only mean a bug here.
    """
    y = _as_setfunction(rep)
    direct, _ = validate_y(y)
    via_z, _ = validate_z_supermodular(zeta_transform(y))
    if direct != via_z:
        raise InconsistencyError(
            f"interval test says {direct}, supermodularity says {via_z} for {y!r}")
    return direct


def _require_supermodular(z):
    ok, w = validate_z_supermodular(z)
    if not ok:
        raise InvalidRepresentation(f"z is not supermodular at {w}", w)


def _z_of(obj) -> SetFunction:
    return obj.z if isinstance(obj, GenPermRep) else obj


# --------------------------------------------------------------- geometry

Point = tuple[Fraction, ...]


def greedy_vertex(z: SetFunction, order: Sequence[int]) -> Point:
    """Vertex of P(z) whose prefix sets along ``order`` (0-based) are tight."""
    x = [Fraction(0)] * z.d
    S = 0
    prev = Fraction(0)
    for i in order:
        S |= 1 << i
        cur = z.values[S]
        x[i] = cur - prev
        prev = cur
    return tuple(x)


def vertices(z) -> list[Point]:
    """Vertex set of P(z), sorted; one greedy point per ordering of [d]."""
    z = _z_of(z)
    _require_supermodular(z)
    return sorted({greedy_vertex(z, p) for p in itertools.permutations(range(z.d))})


def face_in_direction(z, u: Sequence, verts: list[Point] | None = None) -> list[Point]:
    """Vertices of P(z) maximizing <u, x>; their hull is the face P^u."""
    z = _z_of(z)
    if len(u) != z.d:
        raise ValueError(f"direction has length {len(u)}, expected {z.d}")
    if not any(u):
        raise ValueError("direction must be nonzero")
    if verts is None:
        verts = vertices(z)
    vals = [sum(ui * xi for ui, xi in zip(u, v)) for v in verts]
    best = max(vals)
    return [v for v, s in zip(verts, vals) if s == best]


def edge_length_normalized(face) -> Fraction:
    """Length of a point or an edge parallel to some e_i - e_j, with |[e_i, e_j]| = 1."""
    pts = sorted(set(tuple(Fraction(c) for c in p) for p in face))
    if not pts:
        raise ValueError("empty face")
    if len(pts) == 1:
        return Fraction(0)
    if len(pts) > 2:
        raise ValueError(f"face with {len(pts)} vertices is not an edge")
    diff = [a - b for a, b in zip(pts[0], pts[1])]
    nz = [c for c in diff if c]
    if len(nz) != 2 or nz[0] != -nz[1]:
        raise ValueError(f"edge direction {diff} is not a multiple of some e_i - e_j")
    return abs(nz[0])


def _int_z(z: SetFunction) -> np.ndarray:
    if not z.is_integral():
        raise InvalidRepresentation("lattice point enumeration needs an integer z")
    if not _kernels.fits_int64((v.numerator for v in z.values), z.d):
        raise OverflowError("z values too large for int64 enumeration")
    return z.as_int_array()


def enumerate_lattice_points(z) -> list[tuple[int, ...]]:
    """All integer points of P(z), sorted lexicographically."""
    z = _z_of(z)
    _require_supermodular(z)
    pts = _kernels.list_points(_int_z(z), z.d)
    return [tuple(int(c) for c in row) for row in pts]


def count_lattice_points(z) -> int:
    """Number of integer points of P(z) without materializing them."""
    z = _z_of(z)
    _require_supermodular(z)
    return int(_kernels.count_points(_int_z(z), z.d))


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull of ``points`` by exact elimination."""
    if not points:
        return -1
    base = points[0]
    rows = [[Fraction(a) - Fraction(b) for a, b in zip(p, base)] for p in points[1:]]
    rank = 0
    ncols = len(base)
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                f = rows[r][col] / p[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], p)]
        rank += 1
    return rank


def dimension(z) -> int:
    return affine_rank(vertices(z))
