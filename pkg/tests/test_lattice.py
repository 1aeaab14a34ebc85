import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from permutahedra.genperm import GenPermRep, InvalidRepresentation, count_lattice_points
from permutahedra.lattice import (
    count_lattice_points_formula, e1, ehrhart_polynomial, enumerate_a_vectors,
    generalized_binomial, interpolate,
)
from permutahedra.setfun import SetFunction, mask, popcount
from reps import named, random_valid_integer, random_valid_rational

F = Fraction


@pytest.mark.parametrize("x,k,v", [(5, 2, 10), (-1, 3, -1), (0, 0, 1), (F(1, 2), 2, F(-1, 8)), (3, 5, 0)])
def test_generalized_binomial(x, k, v):
    assert generalized_binomial(x, k) == v


def union_condition_brute(a):
    items = list(a.items())
    for r in range(1, len(items) + 1):
        for fam in combinations(items, r):
            u = 0
            for m, _ in fam:
                u |= m
            if popcount(u) < 1 + sum(x for _, x in fam):
                return False
    return True


def test_a_vector_examples():
    assert list(enumerate_a_vectors(2, [mask([1, 2])])) == [{mask([1, 2]): 1}]
    assert list(enumerate_a_vectors(2, [mask([1]), mask([1, 2])])) == [{mask([1, 2]): 1}]
    sup = [mask(p) for p in ([1, 2], [1, 3], [2, 3], [1, 2, 3])]
    vecs = list(enumerate_a_vectors(3, sup))
    assert {mask([1, 2]): 1, mask([1, 3]): 1} in vecs
    assert {mask([1, 2]): 2} not in vecs


@pytest.mark.parametrize("d", [2, 3, 4])
def test_a_vectors_against_brute(d):
    sets = list(range(1, 1 << d))
    want = []

    def rec(i, left, cur):
        if left == 0:
            if union_condition_brute(cur):
                want.append(dict(cur))
            return
        if i == len(sets):
            return
        rec(i + 1, left, cur)
        for a in range(1, left + 1):
            cur[sets[i]] = a
            rec(i + 1, left - a, cur)
            del cur[sets[i]]

    rec(0, d - 1, {})
    got = list(enumerate_a_vectors(d, sets))
    key = lambda a: sorted(a.items())
    assert sorted(got, key=key) == sorted(want, key=key)


def test_formula_examples():
    assert count_lattice_points_formula(GenPermRep.from_sets(2, {(1, 2): 1})) == 2
    assert count_lattice_points_formula(named("simplex3")) == 3
    assert count_lattice_points_formula(named("hypersimplex23")) == 3
    assert count_lattice_points_formula(named("perm3")) == 7


def test_formula_rejects():
    with pytest.raises(InvalidRepresentation):
        count_lattice_points_formula(GenPermRep.from_sets(3, {(1, 2): 1, (1, 2, 3): -1}))
    with pytest.raises(InvalidRepresentation):
        count_lattice_points_formula(GenPermRep.from_sets(3, {(1, 2): F(1, 2)}))


@pytest.mark.parametrize("seed", range(40))
def test_formula_matches_walker(seed):
    rng = random.Random(seed)
    rep = random_valid_integer(rng, rng.randint(2, 4))
    n = count_lattice_points(rep.z)
    assert count_lattice_points_formula(rep) == n
    assert count_lattice_points_formula(rep, all_subsets=True) == n


def test_interpolate():
    # n^2 + 1 sampled at 0, 1, 2
    assert interpolate([1, 2, 5]) == (1, 0, 1)


def test_ehrhart_examples():
    assert ehrhart_polynomial(named("simplex3")).coeffs == (1, F(3, 2), F(1, 2))
    p = ehrhart_polynomial(named("perm3"))
    assert p.coeffs == (1, 3, 3) and [p(n) for n in range(3)] == [1, 7, 19]
    assert ehrhart_polynomial(named("hypersimplex23")).coeffs == (1, F(3, 2), F(1, 2))
    assert ehrhart_polynomial(named("perm3")).to_json() == ["1", "3", "3"]


def test_e1_examples():
    assert e1(GenPermRep.from_sets(4, {(1, 2, 3, 4): 1})) == F(11, 6)
    assert e1(named("hypersimplex23")) == F(3, 2)
    assert e1(GenPermRep(3, SetFunction.zero(3))) == 0


@pytest.mark.parametrize("seed", range(25))
def test_e1_is_linear_coefficient(seed):
    rng = random.Random(seed)
    d = rng.randint(2, 4)
    rep = random_valid_integer(rng, d)
    p = ehrhart_polynomial(rep)
    assert p.coeffs[1] == e1(rep) >= 0
    # the extra points of n P sit on the later dilates too
    assert p(3) == count_lattice_points(rep.z * 3)


@given(st.integers(0, 2**32))
def test_e1_nonnegative_rational(seed):
    rng = random.Random(seed)
    assert e1(random_valid_rational(rng, rng.randint(2, 7))) >= 0


@given(st.integers(0, 2**32), st.integers(0, 2**32))
def test_e1_additive(s1, s2):
    a = random_valid_rational(random.Random(s1), 4)
    b = random_valid_rational(random.Random(s2), 4)
    assert e1(a + b) == e1(a) + e1(b)
    assert e1(a * 3) == 3 * e1(a)


def test_e1_simplex_harmonic():
    for i in range(1, 7):
        assert e1(GenPermRep.from_sets(i + 1, {tuple(range(1, i + 2)): 1})) == sum(F(1, j) for j in range(1, i + 1))
