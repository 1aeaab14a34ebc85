"""Matroids given by their bases, beta invariants, and matroid polytopes.

The base polytope of M is sum_A beta~(M/A) Delta_{E-A} and the independent
set polytope, lifted into one more coordinate, is the same sum with
Delta_{(E-A)+{m+1}}. The linear Ehrhart valuation of those two sums gives the
inequalities of :func:`beta_inequality` and :func:`beta_inequality_indep`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .genperm import GenPermRep
from .setfun import SetFunction, elements, full, harmonic, is_subset, mask, popcount


def validate_bases(bases: Iterable[int]) -> bool:
    """Nonempty, equicardinal, and closed under basis exchange."""
    bases = set(bases)
    if not bases:
        return False
    if len({popcount(B) for B in bases}) != 1:
        return False
    for B1 in bases:
        for B2 in bases:
            diff = B1 & ~B2
            while diff:
                x = diff & -diff
                diff ^= x
                other = B2 & ~B1
                ok = False
                while other:
                    y = other & -other
                    other ^= y
                    if (B1 ^ x) | y in bases:
                        ok = True
                        break
                if not ok:
                    return False
    return True


@dataclass(frozen=True)
class Matroid:
    m: int
    bases: frozenset

    def __post_init__(self):
        object.__setattr__(self, "bases", frozenset(self.bases))
        if any(B >> self.m for B in self.bases):
            raise ValueError(f"a basis uses elements outside [{self.m}]")
        if not validate_bases(self.bases):
            raise ValueError("bases violate the basis-exchange axiom")

    @classmethod
    def from_bases(cls, m: int, bases) -> "Matroid":
        return cls(m, frozenset(mask(B) for B in bases))

    @property
    def ground(self) -> int:
        return full(self.m)

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        """Rank of every subset, indexed by mask."""
        bases = list(self.bases)
        return tuple(max(popcount(B & X) for B in bases) for X in range(1 << self.m))

    @property
    def rank_(self) -> int:
        return popcount(next(iter(self.bases)))

    def to_json(self):
        return {"ground": self.m, "bases": sorted(elements(B) for B in self.bases)}

    def __repr__(self):
        return f"Matroid(m={self.m}, rank={self.rank_}, bases={len(self.bases)})"


def rank(M: Matroid, X: int) -> int:
    if X >> M.m:
        raise ValueError("X is not inside the ground set")
    return M.ranks[X]


def _compress(X: int, keep: list[int]) -> int:
    out = 0
    for new, old in enumerate(keep):
        if X >> old & 1:
            out |= 1 << new
    return out


def contraction(M: Matroid, A: int) -> tuple[Matroid, tuple[int, ...]]:
    """M/A on E - A, relabeled 1..m-|A| in the original order.

    Also returns the original 1-based label of each new element.
    """
    if A >> M.m:
        raise ValueError("A is not inside the ground set")
    rA = M.ranks[A]
    keep = [i for i in range(M.m) if not A >> i & 1]
    bases = {_compress(B & ~A, keep) for B in M.bases if popcount(B & A) == rA}
    return Matroid(len(keep), frozenset(bases)), tuple(i + 1 for i in keep)


def beta(M: Matroid) -> int:
    """(-1)^{r(M)} sum_X (-1)^{|X|} r(X)."""
    s = sum(-r if popcount(X) & 1 else r for X, r in enumerate(M.ranks))
    return s if M.rank_ % 2 == 0 else -s


def signed_beta(M: Matroid) -> int:
    b = beta(M)
    return b if M.rank_ % 2 == 1 else -b


def contraction_signed_beta(M: Matroid, A: int) -> int:
    """beta~(M/A) from the rank function of M, keeping the original labels."""
    r = M.ranks
    rA = r[A]
    rest = M.ground & ~A
    s = 0
    X = rest
    while True:
        v = r[X | A] - rA
        s += -v if popcount(X) & 1 else v
        if X == 0:
            break
        X = (X - 1) & rest
    # (-1)^{r+1} * (-1)^r = -1, whatever the rank of M/A
    return -s


def beta_table(M: Matroid) -> dict[int, int]:
    """A -> beta~(M/A) for every A inside E."""
    return {A: contraction_signed_beta(M, A) for A in range(1 << M.m)}


def matroid_polytope_y(M: Matroid) -> GenPermRep:
    """Minkowski coefficients of the base polytope: y_{E-A} = beta~(M/A).

    The A = E term would multiply Delta_empty = {0} and is dropped.
    """
    if M.m == 0:
        raise ValueError("the empty matroid has no polytope in R^d with d >= 1")
    E = M.ground
    vals = [Fraction(0)] * (1 << M.m)
    for A, b in beta_table(M).items():
        if A != E:
            vals[E & ~A] = Fraction(b)
    return GenPermRep(M.m, SetFunction(M.m, tuple(vals)))


def independent_polytope_y(M: Matroid) -> GenPermRep:
    """Coefficients of the independent set polytope lifted to R^{m+1}.

    D_{E-A} = conv(0, e_i : i in E-A) becomes Delta_{(E-A)+{m+1}} under
    e_i -> e_i, 0 -> e_{m+1}.
    """
    d = M.m + 1
    E = M.ground
    extra = 1 << M.m
    vals = [Fraction(0)] * (1 << d)
    for A, b in beta_table(M).items():
        if A != E:
            vals[(E & ~A) | extra] = Fraction(b)
    return GenPermRep(d, SetFunction(d, tuple(vals)))


def base_polytope_z(M: Matroid) -> SetFunction:
    """z_I = r(E) - r(E - I), the facet right-hand sides of the base polytope."""
    r = M.ranks
    E = M.ground
    return SetFunction(M.m, tuple(Fraction(r[E] - r[E & ~I]) for I in range(1 << M.m)))


def beta_inequality(M: Matroid) -> Fraction:
    """sum_A h_{|E-A|-1} beta~(M/A); nonnegative for every matroid."""
    E = M.ground
    return sum((harmonic(popcount(E & ~A) - 1) * b for A, b in beta_table(M).items()
                if A != E and b), Fraction(0))


def beta_inequality_indep(M: Matroid) -> Fraction:
    """sum_A h_{|E-A|} beta~(M/A); nonnegative for every matroid."""
    E = M.ground
    return sum((harmonic(popcount(E & ~A)) * b for A, b in beta_table(M).items() if b),
               Fraction(0))


def independent_sets(M: Matroid) -> list[int]:
    return [X for X in range(1 << M.m) if any(is_subset(X, B) for B in M.bases)]


# --------------------------------------------------------------- builders

def uniform(r: int, n: int) -> Matroid:
    return Matroid(n, frozenset(mask(c) for c in combinations(range(1, n + 1), r)))


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    return Matroid(M1.m + M2.m, frozenset(B1 | (B2 << M1.m) for B1 in M1.bases for B2 in M2.bases))


def _acyclic(edges, n: int) -> bool:
    parent = list(range(n + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def graphic(vertices: int, edges) -> Matroid:
    """Cycle matroid; element k is the k-th listed edge."""
    edges = [tuple(e) for e in edges]
    for u, v in edges:
        if not (1 <= u <= vertices and 1 <= v <= vertices):
            raise ValueError(f"edge {(u, v)} has an endpoint outside 1..{vertices}")
    m = len(edges)
    forests = [X for X in range(1 << m)
               if _acyclic([edges[i] for i in range(m) if X >> i & 1], vertices)]
    r = max(popcount(X) for X in forests)
    return Matroid(m, frozenset(X for X in forests if popcount(X) == r))


def from_json(obj) -> Matroid:
    if "graph" in obj:
        g = obj["graph"]
        return graphic(g["vertices"], g["edges"])
    m = obj["ground"]
    bases = obj["bases"]
    for B in bases:
        if any(not isinstance(e, int) or not 1 <= e <= m for e in B):
            raise ValueError(f"basis {B} has elements outside [{m}]")
    return Matroid.from_bases(m, bases)
