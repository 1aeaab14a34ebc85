"""Lattice points and Ehrhart data of generalized permutahedra.

Two independent routes to ``|P ∩ Z^d|`` live side by side:

* :func:`count_lattice_points_formula` evaluates the signed extension of
  Postnikov's dragon-marriage formula directly on the Minkowski coefficients;
* :func:`genperm.count_lattice_points` walks the integer points of ``P(z)``.

The Ehrhart polynomial is interpolated from the walker's counts of ``n P``;
its linear coefficient is compared against :func:`e1`, the harmonic-number
valuation evaluated on ``y``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Iterator

from .genperm import (
    GenPermRep,
    InconsistencyError,
    InvalidRepresentation,
    count_lattice_points,
    dimension,
    validate_y,
)
from .setfun import fmt_fraction, full, harmonic, lex_key, popcount, to_fraction


def generalized_binomial(x, k: int) -> Fraction:
    """C(x, k) = x (x-1) ... (x-k+1) / k!, valid for any rational x."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = to_fraction(x)
    num = Fraction(1)
    for t in range(k):
        num *= x - t
    return num / factorial(k)


# ---------------------------------------------------------------- a-vectors

def _union_ok(assigned: list[tuple[int, int]], J: int, aJ: int) -> bool:
    """Check |union M| >= 1 + sum_M a over every family M containing J."""
    for r in range(len(assigned) + 1):
        for fam in combinations(assigned, r):
            u = J
            s = aJ
            for m, a in fam:
                u |= m
                s += a
            if popcount(u) < 1 + s:
                return False
    return True


def enumerate_a_vectors(d: int, support: Iterable[int]) -> Iterator[dict[int, int]]:
    """Nonnegative integer vectors on ``support`` summing to d-1 that satisfy
    the union condition; each is yielded as ``{mask: a}`` with zeros omitted.

    Families are only checked inside the support of ``a``: a set with a_J = 0
    enlarges the union without adding to the right-hand side.
    """
    order = sorted({m for m in support if m}, key=lambda m: (-popcount(m), lex_key(m)))
    total = d - 1
    assigned: list[tuple[int, int]] = []

    def rec(idx: int, left: int):
        if left == 0:
            yield dict(assigned)
            return
        if idx == len(order):
            return
        J = order[idx]
        # a_J = 0 first, then increasing; a_J <= |J| - 1 from the singleton family
        yield from rec(idx + 1, left)
        for a in range(1, min(left, popcount(J) - 1) + 1):
            if not _union_ok(assigned, J, a):
                break  # condition is monotone in a
            assigned.append((J, a))
            yield from rec(idx + 1, left - a)
            assigned.pop()

    yield from rec(0, total)


def _require_valid_integer(rep: GenPermRep):
    if not rep.is_integral():
        raise InvalidRepresentation("representation must have integer coefficients")
    ok, w = validate_y(rep)
    if not ok:
        raise InvalidRepresentation(f"not a generalized permutahedron: {w}", w)


def count_lattice_points_formula(rep: GenPermRep, all_subsets: bool = False) -> int:
    """Lattice points of sum y_I Delta_I from the Minkowski coefficients alone.

    Sum over a-vectors of C(y_[d] + a_[d], a_[d]) prod_{I != [d]} C(y_I + a_I - 1, a_I).
    Sets with y_I = 0 (other than [d]) only contribute factors C(a_I - 1, a_I),
    which vanish for a_I > 0, so by default the a-vectors are restricted to the
    support of y plus [d]. ``all_subsets=True`` uses every nonempty subset.
    """
    _require_valid_integer(rep)
    d = rep.d
    F = full(d)
    y = rep.y.values
    if all_subsets:
        support = range(1, 1 << d)
    else:
        support = {m for m in range(1, 1 << d) if y[m] and popcount(m) >= 2} | {F}
    total = Fraction(0)
    for a in enumerate_a_vectors(d, support):
        aF = a.get(F, 0)
        term = generalized_binomial(y[F] + aF, aF)
        for m, am in a.items():
            if m != F:
                term *= generalized_binomial(y[m] + am - 1, am)
            if not term:
                break
        total += term
    if total.denominator != 1:
        raise InconsistencyError(f"lattice point count {total} is not an integer")
    return int(total)


# ---------------------------------------------------------------- Ehrhart

@dataclass(frozen=True)
class EhrhartPolynomial:
    """coeffs[k] is the coefficient of n^k."""

    coeffs: tuple[Fraction, ...]

    def __call__(self, n) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def to_json(self):
        return [fmt_fraction(c) for c in self.coeffs]


def interpolate(values) -> tuple[Fraction, ...]:
    """Monomial coefficients of the polynomial through (k, values[k]), k = 0..D."""
    D = len(values) - 1
    coeffs = [Fraction(0)] * (D + 1)
    for i, vi in enumerate(values):
        if not vi:
            continue
        basis = [Fraction(1)]
        denom = 1
        for j in range(D + 1):
            if j == i:
                continue
            # multiply by (n - j)
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= j * basis[t + 1]
            denom *= i - j
        for t, b in enumerate(basis):
            coeffs[t] += vi * b / denom
    return tuple(coeffs)


def dilation_counts(rep: GenPermRep, ns) -> list[int]:
    z = rep.z
    return [count_lattice_points(z * n) for n in ns]


def ehrhart_polynomial(rep: GenPermRep) -> EhrhartPolynomial:
    """Interpolate |nP ∩ Z^d| at n = 0 .. dim P from the lattice-point walker."""
    _require_valid_integer(rep)
    dim = dimension(rep.z)
    counts = dilation_counts(rep, range(dim + 1))
    poly = EhrhartPolynomial(interpolate(counts))
    if poly.coeffs[0] != 1 or poly.coeffs[-1] <= 0:
        raise InconsistencyError(f"implausible Ehrhart polynomial {poly.to_json()}")
    return poly


def e1(rep: GenPermRep) -> Fraction:
    """sum_{|I| >= 2} y_I h_{|I|-1}: the linear Ehrhart coefficient for lattice reps."""
    y = rep.y if isinstance(rep, GenPermRep) else rep
    ok, w = validate_y(y)
    if not ok:
        raise InvalidRepresentation(f"not a generalized permutahedron: {w}", w)
    return sum((v * harmonic(popcount(m) - 1) for m, v in enumerate(y.values)
                if v and popcount(m) >= 2), Fraction(0))
