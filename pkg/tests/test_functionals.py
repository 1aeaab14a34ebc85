import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from permutahedra import functionals as fn
from permutahedra.genperm import (
    GenPermRep, InconsistencyError, edge_length_normalized, face_in_direction, validate_y, vertices,
)
from permutahedra.setfun import SetFunction, harmonic, mask, popcount
from reps import named, random_valid_integer, random_valid_rational

F = Fraction


def test_eval_examples():
    v = fn.ray_functional(mask([1, 2]), mask([1, 2, 3]), 3)
    assert fn.eval_functional(v, GenPermRep(3, SetFunction.zero(3))) == 0
    assert fn.eval_functional(v, named("hypersimplex23")) == 0
    v = fn.ray_functional(mask([1, 2]), mask([1, 2]), 3)
    assert fn.eval_functional(v, named("perm3")) == 1


def test_ray_values():
    v = fn.ray_functional(mask([1, 2]), mask([1, 2]), 3)
    assert [v(m) for m in range(8)] == [0, 0, 0, 1, 0, 0, 0, 0]
    v = fn.ray_functional(mask([1, 2]), mask([1, 2, 3]), 3)
    assert {m for m in range(8) if v(m)} == {mask([1, 2]), mask([1, 2, 3])}
    assert fn.ray_functional(mask([1, 3]), mask([1, 3]), 3)(mask([2, 3])) == 0
    with pytest.raises(ValueError):
        fn.ray_functional(mask([1]), mask([1, 2]), 3)
    with pytest.raises(ValueError):
        fn.ray_functional(mask([1, 2]), mask([1, 3]), 3)


def test_ray_count():
    # (E, T) pairs: C(d, 2) 2^{d-2}
    for d in range(2, 7):
        assert len(fn.ray_pairs(d)) == d * (d - 1) // 2 * 2 ** (d - 2)


def test_compatible_direction_examples():
    assert fn.compatible_direction(mask([1, 2]), mask([1, 2, 3]), 4) == (0, 0, -1, 4)
    assert fn.compatible_direction(mask([2, 3]), mask([1, 2, 3]), 3) == (-1, 0, 0)
    with pytest.raises(ValueError):
        fn.compatible_direction(mask([1, 2]), mask([1, 2]), 2)


def test_f_basis_examples():
    assert fn.f_basis(3, 1).values == (1, 0)
    assert fn.f_basis(3, 2).values == (1, 3)
    assert fn.f_basis(4, 2).values == (2, 3, 0)


def test_matrices_small():
    A, B = fn.basis_matrix(3), fn.inverse_basis_matrix(3)
    assert A.entries == ((1, 1), (0, 3))
    assert B.entries == ((1, F(-1, 3)), (0, F(1, 3)))
    assert fn.basis_matrix(2).entries == ((1,),)
    assert fn.inverse_basis_matrix(2).entries == ((1,),)


@pytest.mark.parametrize("d", [2, 3, 5, 9, 17])
def test_inverse_against_sympy(d):
    A = sympy.Matrix(fn.basis_matrix(d).entries)
    B = sympy.Matrix(fn.inverse_basis_matrix(d, check=True).entries)
    assert A.inv() == B


def test_decompose_symmetric_examples():
    assert fn.decompose_symmetric(fn.f_basis(3, 2)) == (0, 1)
    assert fn.decompose_symmetric(fn.SymmetricFunctional(3, (1, F(3, 2)))) == (F(1, 2), F(1, 2))
    assert fn.decompose_symmetric(fn.SymmetricFunctional(3, (0, -1))) == (F(1, 3), F(-1, 3))


def test_ehrhart_functional_examples():
    assert fn.ehrhart_linear_functional(3).values == (1, F(3, 2))
    assert fn.ehrhart_linear_functional(4).values == (1, F(3, 2), F(11, 6))
    assert fn.ehrhart_linear_functional(2).values == (1,)


@pytest.mark.parametrize("d", range(2, 13))
def test_certificate_against_generic_solve(d):
    # independent route: solve A c = h with sympy's rational LU
    A = sympy.Matrix(fn.basis_matrix(d).entries)
    h = sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in fn.ehrhart_linear_functional(d).values])
    c = A.LUsolve(h)
    cert = fn.positivity_certificate(d)
    assert [sympy.Rational(x.numerator, x.denominator) for x in cert.c] == list(c)
    assert cert.all_nonnegative and cert.q_identity_verified and cert.inverse_verified


def test_certificate_examples():
    c3 = fn.positivity_certificate(3)
    assert c3.c == (F(1, 2), F(1, 2)) and c3.all_nonnegative and c3.q_identity_verified
    assert c3.to_json() == {"c": ["1/2", "1/2"], "nonnegative": True, "q_identity": True, "inverse": True}
    c2 = fn.positivity_certificate(2)
    assert c2.c == (1,) and c2.all_nonnegative and c2.q_identity_verified
    assert fn.positivity_certificate(20).all_nonnegative
    assert fn.positivity_certificate(80).inverse_verified is None


def test_certificate_matches_matrix_apply():
    for d in (4, 7, 15):
        B = fn.inverse_basis_matrix(d)
        assert fn.positivity_certificate(d).c == B.apply(fn.ehrhart_linear_functional(d).values)


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_orbit_sum_is_f_basis(d):
    # summing v_E^T over all E and all T of size k+1 gives f_k
    for k in range(1, d):
        total = fn.LinearFunctional(d, SetFunction.zero(d))
        for E, T in fn.ray_pairs(d):
            if popcount(T) == k + 1:
                total = total + fn.ray_functional(E, T, d)
        assert total == fn.f_basis(d, k).extend()


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=4, max_size=4))
def test_symmetric_roundtrip(c):
    assert fn.decompose_symmetric(fn.combine_f(5, c)) == tuple(c)


# ---------------------------------------------------- positive cone, exact LP

def test_decompose_positive_ray():
    E, T = mask([1, 2]), mask([1, 2, 3])
    assert fn.decompose_positive(fn.ray_functional(E, T, 3)) == {(E, T): 1}


def test_decompose_positive_single_simplex():
    # phi = 1 on Delta_12 only: this is v_12^12 itself
    phi = fn.LinearFunctional(3, SetFunction.from_sets(3, {(1, 2): 1}))
    coeffs = fn.decompose_positive(phi)
    assert coeffs is not None and fn.reconstruct(3, coeffs) == phi
    assert all(c > 0 for c in coeffs.values())


def test_decompose_positive_ehrhart():
    for d in (3, 4):
        phi = fn.ehrhart_linear_functional(d).extend()
        coeffs = fn.decompose_positive(phi)
        assert coeffs is not None and fn.reconstruct(d, coeffs) == phi


def test_nonpositive_gives_farkas_polytope():
    phi = fn.LinearFunctional(3, SetFunction.from_sets(3, {(1, 2): 1, (1, 2, 3): -1}))
    assert fn.decompose_positive(phi) is None
    y = fn.nonpositivity_witness(phi)
    assert validate_y(y)[0]
    assert fn.eval_functional(phi, y) < 0


@given(st.integers(0, 2**32))
def test_cone_dichotomy(seed):
    rng = random.Random(seed)
    d = rng.randint(3, 4)
    vals = {m: rng.randint(-2, 4) for m in range(1 << d) if popcount(m) >= 2}
    phi = fn.LinearFunctional(d, SetFunction.from_sets(d, vals))
    coeffs = fn.decompose_positive(phi)
    if coeffs is not None:
        assert all(c >= 0 for c in coeffs.values())
        assert fn.reconstruct(d, coeffs) == phi
        # positive on every valid polytope
        rep = random_valid_rational(rng, d)
        assert fn.eval_functional(phi, rep) >= 0
    else:
        y = fn.nonpositivity_witness(phi)
        assert validate_y(y)[0] and fn.eval_functional(phi, y) < 0


def test_translation_variant_rejected():
    phi = fn.LinearFunctional(2, SetFunction.from_sets(2, {(1,): 1}))
    with pytest.raises(ValueError):
        fn.decompose_positive(phi)


# ----------------------------------------------- rays as normalized edge lengths

@pytest.mark.parametrize("seed", range(12))
def test_ray_is_face_length(seed):
    rng = random.Random(seed)
    d = 3 + seed % 3
    rep = random_valid_integer(rng, d)
    verts = vertices(rep.z)
    for E, T in fn.ray_pairs(d):
        u = fn.compatible_direction(E, T, d)
        face = face_in_direction(rep.z, u, verts)
        assert fn.eval_functional(fn.ray_functional(E, T, d), rep) == edge_length_normalized(face)
