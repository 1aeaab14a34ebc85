"""Solid-angle sums of the regular tetrahedron Delta_4 and of generalized
permutahedra in d = 4.

This is the one floating-point module: the edge angle arccos(1/3)/(2 pi) is
transcendental. Every public value carries an explicit tolerance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from .genperm import GenPermRep, InvalidRepresentation, validate_y
from .setfun import popcount

TOLERANCE = 1e-12


@dataclass(frozen=True)
class AngleConstants:
    """Solid angles of Delta_4 at lattice points in the interior, on a facet,
    on an edge, and at a vertex. The vertex angle is left to the caller; it
    only enters the constant term."""

    alpha: float = 1.0
    beta: float = 0.5
    gamma: float = math.acos(1 / 3) / (2 * math.pi)
    delta: float | None = None


def tetra_linear_coeff() -> float:
    """Linear coefficient of the solid-angle polynomial of Delta_4: (3/pi) arccos(1/3) - 7/6."""
    return 3 / math.pi * math.acos(1 / 3) - 7 / 6


def _binom_poly(shift: int, k: int) -> Polynomial:
    # C(n + shift, k) as a polynomial in n
    p = Polynomial([1.0])
    for t in range(k):
        p = p * Polynomial([shift - t, 1.0])
    return p / math.factorial(k)


def solid_angle_poly_tetra(delta: float, constants: AngleConstants | None = None) -> np.ndarray:
    """Coefficients (constant first) of
    A(n Delta_4) = alpha C(n-1, 3) + 4 beta C(n-1, 2) + 6 gamma (n-1) + 4 delta."""
    if not 0 < delta < 1:
        raise ValueError("vertex solid angle must lie in (0, 1)")
    c = constants or AngleConstants()
    p = (c.alpha * _binom_poly(-1, 3) + 4 * c.beta * _binom_poly(-1, 2)
         + 6 * c.gamma * _binom_poly(-1, 1) + Polynomial([4 * delta]))
    coef = np.zeros(4)
    coef[:len(p.coef)] = p.coef
    return coef


def a1_genperm_d4(rep: GenPermRep) -> float:
    """Linear solid-angle coefficient of a lattice generalized permutahedron in d = 4.

    It is Minkowski additive and vanishes on simplices of dimension < 3, so
    only the 4-element sets contribute, each with the tetrahedron's value.
    """
    if rep.d != 4:
        raise ValueError(f"only d = 4 is supported, got d = {rep.d}")
    if not rep.is_integral():
        raise InvalidRepresentation("representation must have integer coefficients")
    ok, w = validate_y(rep)
    if not ok:
        raise InvalidRepresentation(f"not a generalized permutahedron: {w}", w)
    coeff = tetra_linear_coeff()
    return sum(float(v) * coeff for m, v in enumerate(rep.y.values) if v and popcount(m) == 4)


def q_example() -> GenPermRep:
    """All six edges Delta_{ij} of [4] minus the tetrahedron Delta_[4]."""
    entries = {(i, j): 1 for i in range(1, 5) for j in range(i + 1, 5)}
    entries[(1, 2, 3, 4)] = -1
    return GenPermRep.from_sets(4, entries)
