"""Minkowski linear functionals on generalized permutahedra.

A Minkowski linear functional is determined by its values on the simplices
``Delta_I``. The positive translation-invariant ones form the cone spanned by
the ray functionals ``v_E^T`` (indicator of ``E <= I <= T`` with ``|E| = 2``).
The symmetric ones form a simplicial cone spanned by ``f_1 .. f_{d-1}``.

The linear Ehrhart coefficient is the symmetric functional with value ``h_i``
on ``Delta_{i+1}``; :func:`positivity_certificate` writes it in the ``f_k``
basis and checks every coefficient is nonnegative.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Sequence

from . import _simplex
from .genperm import GenPermRep, InconsistencyError, pairs
from .setfun import (
    SetFunction,
    elements,
    fmt_fraction,
    harmonic,
    is_subset,
    lex_key,
    popcount,
    supersets,
    to_fraction,
)


def _binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


# ------------------------------------------------------------------ types

@dataclass(frozen=True)
class LinearFunctional:
    """Values phi(Delta_I) stored as a set function (the empty set maps to 0)."""

    d: int
    values: SetFunction

    def __post_init__(self):
        if self.values.d != self.d:
            raise ValueError("dimension mismatch")
        if self.values.values[0] != 0:
            raise ValueError("a Minkowski linear functional vanishes on Delta_empty")

    def __call__(self, I) -> Fraction:
        return self.values[I]

    def is_translation_invariant(self) -> bool:
        return all(self.values.values[1 << i] == 0 for i in range(self.d))

    def __add__(self, other):
        return LinearFunctional(self.d, self.values + other.values)

    def __mul__(self, c):
        return LinearFunctional(self.d, self.values * c)

    __rmul__ = __mul__


@dataclass(frozen=True)
class SymmetricFunctional:
    """Entry ``i - 1`` is phi(Delta_{i+1}) for i = 1 .. d-1."""

    d: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("symmetric functionals need d >= 2")
        if len(self.values) != self.d - 1:
            raise ValueError(f"expected {self.d - 1} values, got {len(self.values)}")
        object.__setattr__(self, "values", tuple(to_fraction(v) for v in self.values))

    def extend(self) -> LinearFunctional:
        """The functional on all Delta_I, constant on each cardinality class."""
        vals = self.values
        f = SetFunction.from_function(
            self.d, lambda m: vals[popcount(m) - 2] if popcount(m) >= 2 else 0)
        return LinearFunctional(self.d, f)

    def to_json(self):
        return {"d": self.d, "values": [fmt_fraction(v) for v in self.values]}


@dataclass(frozen=True)
class BasisMatrix:
    d: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __matmul__(self, other: "BasisMatrix") -> "BasisMatrix":
        cols = list(zip(*other.entries))
        return BasisMatrix(self.d, tuple(
            tuple(sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in cols)
            for row in self.entries))

    def apply(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(sum((a * x for a, x in zip(row, v) if a), Fraction(0)) for row in self.entries)

    def is_identity(self) -> bool:
        return all(x == (1 if i == j else 0)
                   for i, row in enumerate(self.entries) for j, x in enumerate(row))


# ------------------------------------------------------------- evaluation

def eval_functional(phi, rep) -> Fraction:
    """phi(sum y_I Delta_I) = sum y_I phi(Delta_I)."""
    if isinstance(phi, SymmetricFunctional):
        phi = phi.extend()
    y = rep.y if isinstance(rep, GenPermRep) else rep
    if phi.d != y.d:
        raise ValueError(f"functional on d={phi.d} applied to a rep with d={y.d}")
    vals = phi.values.values
    return sum((yv * vals[m] for m, yv in enumerate(y.values) if yv and vals[m]), Fraction(0))


def _check_pair(E: int, T: int, d: int):
    if popcount(E) != 2:
        raise ValueError(f"E must have two elements, got {elements(E)}")
    if not is_subset(E, T):
        raise ValueError(f"E={elements(E)} is not inside T={elements(T)}")
    if T >> d:
        raise ValueError(f"T={elements(T)} is not inside [{d}]")


def ray_functional(E: int, T: int, d: int) -> LinearFunctional:
    """v_E^T: 1 on Delta_I when E <= I <= T, else 0."""
    _check_pair(E, T, d)
    return LinearFunctional(d, SetFunction.from_function(
        d, lambda m: 1 if is_subset(E, m) and is_subset(m, T) else 0))


def ray_pairs(d: int) -> list[tuple[int, int]]:
    """All (E, T) with |E| = 2 and E <= T <= [d]; E then T in lexicographic order."""
    return [(E, T) for E in pairs(d) for T in sorted(supersets(E, d), key=lex_key)]


def compatible_direction(E: int, T: int, d: int) -> tuple[int, ...]:
    """A direction u whose face on any generalized permutahedron has length v_E^T.

    u vanishes on E, takes the values d, d+1, ... (increasing in the element)
    outside T and -1, -2, ... on T \\ E, so that every coordinate outside T
    beats u_i = u_j, which beats every coordinate of T \\ E.
    """
    _check_pair(E, T, d)
    if popcount(T) == d == 2:
        raise ValueError("no compatible direction for d = 2: u would be zero")
    u = [0] * d
    up, down = d, -1
    for k in range(d):
        bit = 1 << k
        if not T & bit:
            u[k] = up
            up += 1
        elif not E & bit:
            u[k] = down
            down -= 1
    return tuple(u)


# ------------------------------------------------------- symmetric basis

def f_basis(d: int, k: int) -> SymmetricFunctional:
    """f_k(Delta_{i+1}) = C(i+1, 2) C(d-i-1, k-i)."""
    if not 1 <= k <= d - 1:
        raise ValueError(f"k must lie in 1..{d - 1}, got {k}")
    return SymmetricFunctional(d, tuple(
        Fraction(_binom(i + 1, 2) * _binom(d - i - 1, k - i)) for i in range(1, d)))


def basis_matrix(d: int) -> BasisMatrix:
    """A with columns f_1 .. f_{d-1}: a_ik = C(i+1, 2) C(d-i-1, k-i)."""
    if d < 2:
        raise ValueError("need d >= 2")
    return BasisMatrix(d, tuple(
        tuple(Fraction(_binom(i + 1, 2) * _binom(d - i - 1, k - i)) for k in range(1, d))
        for i in range(1, d)))


def inverse_basis_matrix(d: int, check: bool = False) -> BasisMatrix:
    """B = A^{-1}: b_kj = (-1)^{k+j} C(d-k-1, j-k) / C(j+1, 2).

    With ``check=True`` the exact product A B is formed and must be the
    identity.
    """
    if d < 2:
        raise ValueError("need d >= 2")
    B = BasisMatrix(d, tuple(
        tuple(Fraction((-1) ** (k + j) * _binom(d - k - 1, j - k), _binom(j + 1, 2))
              for j in range(1, d))
        for k in range(1, d)))
    if check and not (basis_matrix(d) @ B).is_identity():
        raise InconsistencyError(f"A B != I for d={d}")
    return B


def combine_f(d: int, c: Sequence) -> SymmetricFunctional:
    """sum_k c_k f_k."""
    c = [to_fraction(x) for x in c]
    if len(c) != d - 1:
        raise ValueError(f"expected {d - 1} coefficients")
    return SymmetricFunctional(d, basis_matrix(d).apply(c))


def decompose_symmetric(phi: SymmetricFunctional) -> tuple[Fraction, ...]:
    """Coordinates of phi in the basis f_1 .. f_{d-1}.

    phi is positive (and symmetric, translation-invariant) iff all are >= 0.
    """
    return inverse_basis_matrix(phi.d).apply(phi.values)


def ehrhart_linear_functional(d: int) -> SymmetricFunctional:
    return SymmetricFunctional(d, tuple(harmonic(i) for i in range(1, d)))


# ------------------------------------------------ positivity certificate

@dataclass(frozen=True)
class Certificate:
    d: int
    c: tuple[Fraction, ...]
    all_nonnegative: bool
    q_identity_verified: bool
    inverse_verified: bool | None = None

    def to_json(self):
        out = {"c": [fmt_fraction(x) for x in self.c],
               "nonnegative": self.all_nonnegative,
               "q_identity": self.q_identity_verified}
        if self.inverse_verified is not None:
            out["inverse"] = self.inverse_verified
        return out


def _ehrhart_coordinates(d: int) -> tuple[Fraction, ...]:
    # c = B h computed over one common denominator: t_j = h_j / C(j+1, 2)
    t = [harmonic(j) / _binom(j + 1, 2) for j in range(1, d)]
    den = lcm(*(x.denominator for x in t))
    num = [x.numerator * (den // x.denominator) for x in t]
    c = []
    for k in range(1, d):
        n = d - k - 1
        s = 0
        for j in range(k, d):
            term = _binom(n, j - k) * num[j - 1]
            s += term if (k + j) % 2 == 0 else -term
        c.append(Fraction(s, den))
    return tuple(c)


def q_identity(d: int) -> bool:
    """For every k, sum_j (-1)^{k+j} C(d-k-1, j-k) t^j equals t^k (1-t)^{d-k-1}.

    The right side is expanded by repeated multiplication with (1 - t), not by
    the binomial theorem.
    """
    powers = [[1]]
    for _ in range(d - 2):
        p = powers[-1]
        powers.append([a - b for a, b in zip(p + [0], [0] + p)])
    for k in range(1, d):
        n = d - k - 1
        lhs = [0] * d
        for j in range(k, d):
            lhs[j] = (-1) ** (k + j) * _binom(n, j - k)
        rhs = [0] * k + powers[n]
        rhs += [0] * (d - len(rhs))
        if lhs != rhs:
            return False
    return True


def positivity_certificate(d: int, check_inverse: bool | None = None) -> Certificate:
    """Write the Ehrhart linear functional in the f_k basis and check the signs.

    ``check_inverse`` forms A B exactly; by default it runs for d <= 50.
    """
    if d < 2:
        raise ValueError("need d >= 2")
    if check_inverse is None:
        check_inverse = d <= 50
    inv = None
    if check_inverse:
        inv = (basis_matrix(d) @ inverse_basis_matrix(d)).is_identity()
    c = _ehrhart_coordinates(d)
    return Certificate(d, c, all(x >= 0 for x in c), q_identity(d), inv)


# ------------------------------------------------- cone of positive functionals

def _cone_system(phi: LinearFunctional):
    d = phi.d
    rows = [m for m in range(1 << d) if popcount(m) >= 2]
    cols = ray_pairs(d)
    A = [[Fraction(1 if is_subset(E, I) and is_subset(I, T) else 0) for E, T in cols] for I in rows]
    b = [phi.values.values[I] for I in rows]
    return rows, cols, A, b


def _solve_cone(phi: LinearFunctional):
    if not phi.is_translation_invariant():
        raise ValueError("functional is not translation-invariant (nonzero on a singleton)")
    rows, cols, A, b = _cone_system(phi)
    x, farkas = _simplex.phase_one(A, b)
    return rows, cols, x, farkas


def decompose_positive(phi: LinearFunctional) -> dict[tuple[int, int], Fraction] | None:
    """Nonnegative coefficients c_E^T with phi = sum c_E^T v_E^T, or None.

    The rays outnumber the dimension for d >= 3, so coefficients are not
    unique; this returns the basic solution reached by an exact simplex with
    Bland's rule, which is deterministic. ``None`` means phi is not positive;
    :func:`nonpositivity_witness` then produces a polytope on which phi < 0.
    """
    rows, cols, x, _ = _solve_cone(phi)
    if x is None:
        return None
    return {col: v for col, v in zip(cols, x) if v}


def nonpositivity_witness(phi: LinearFunctional) -> SetFunction | None:
    """A valid y (a generalized permutahedron) with phi(y) < 0, if one exists.

    This is the Farkas certificate of the phase-one problem: v^T A >= 0 says
    every interval sum of v is nonnegative.
    """
    rows, cols, x, farkas = _solve_cone(phi)
    if x is not None:
        return None
    return SetFunction.from_sets(phi.d, dict(zip(rows, farkas)))


def reconstruct(d: int, coeffs: dict[tuple[int, int], Fraction]) -> LinearFunctional:
    out = LinearFunctional(d, SetFunction.zero(d))
    for (E, T), c in coeffs.items():
        out = out + ray_functional(E, T, d) * c
    return out
