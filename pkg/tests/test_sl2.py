import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lorentz_optics import sl2
from lorentz_optics.sl2 import generator, commutator
from conftest import random_sl2c

finite = st.floats(-5, 5, allow_nan=False)
EPS = {(1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1, (2, 1, 3): -1, (3, 2, 1): -1, (1, 3, 2): -1}


def levi(i, j, k):
    return EPS.get((i, j, k), 0)


@pytest.mark.parametrize("rep", [2, 4])
def test_lorentz_algebra_exact(rep):
    g = {n: generator(n, rep) for n in sl2.GENERATOR_NAMES}
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            ref_J = sum(1j * levi(i, j, k) * g[f"J{k}"] for k in (1, 2, 3))
            ref_K = sum(1j * levi(i, j, k) * g[f"K{k}"] for k in (1, 2, 3))
            assert np.array_equal(commutator(g[f"J{i}"], g[f"J{j}"]), ref_J)
            assert np.array_equal(commutator(g[f"J{i}"], g[f"K{j}"]), ref_K)
            assert np.array_equal(commutator(g[f"K{i}"], g[f"K{j}"]), -ref_J)


@pytest.mark.parametrize("rep", [2, 4])
def test_e2_like_algebra(rep):
    N1, N2, J3 = generator("N1", rep), generator("N2", rep), generator("J3", rep)
    assert np.array_equal(commutator(N1, N2), np.zeros_like(N1))
    assert np.array_equal(commutator(J3, N1), 1j * N2)
    assert np.array_equal(commutator(J3, N2), -1j * N1)


def test_j3_four_by_four():
    expected = np.zeros((4, 4), dtype=complex)
    expected[2, 3], expected[3, 2] = -1j, 1j
    assert np.array_equal(generator("J3", 4), expected)


def test_n_generators_four_by_four():
    N1 = np.zeros((4, 4), dtype=complex)
    N1[0, 2] = N1[2, 0] = N1[1, 2] = 1j
    N1[2, 1] = -1j
    N2 = np.zeros((4, 4), dtype=complex)
    N2[0, 3] = N2[3, 0] = N2[1, 3] = 1j
    N2[3, 1] = -1j
    assert np.array_equal(generator("N1", 4), N1)
    assert np.array_equal(generator("N2", 4), N2)


def test_unknown_generator():
    with pytest.raises(ValueError):
        generator("J4")
    with pytest.raises(ValueError):
        generator("J1", rep=3)


def test_elementary2_examples():
    assert np.allclose(sl2.elementary2("boost_z", 0.0), np.eye(2), atol=0)
    assert np.allclose(sl2.elementary2("rot_y", math.pi), [[0, -1], [1, 0]], atol=1e-15)
    with pytest.raises(ValueError):
        sl2.elementary2("rot_y", math.nan)


@given(finite, finite)
def test_boost_additivity(a, b):
    prod = sl2.boost_z(a) @ sl2.boost_z(b)
    assert np.allclose(prod, sl2.boost_z(a + b), rtol=1e-13, atol=1e-14)


@pytest.mark.parametrize("kind", ["rot_z", "rot_y", "boost_z", "boost_x"])
@pytest.mark.parametrize("param", [-2.3, 0.0, 0.4, 3.1])
def test_elementary2_unimodular(kind, param):
    assert abs(np.linalg.det(sl2.elementary2(kind, param)) - 1) < 1e-12


def test_elementary4_examples():
    eta = 0.8
    assert np.allclose(sl2.elementary4("boost_s1", eta) @ [1, 0, 0, 0], [math.cosh(eta), math.sinh(eta), 0, 0])
    P, B = sl2.elementary4("rot_s1", 0.7), sl2.elementary4("boost_s1", eta)
    assert np.allclose(P @ B, B @ P, atol=1e-15)
    assert np.array_equal(sl2.elementary4("rot_s3", 0.0), np.eye(4))


@pytest.mark.parametrize("kind", ["rot_s3", "rot_s1", "boost_s1"])
def test_elementary4_lorentz(kind):
    assert sl2.is_lorentz(sl2.elementary4(kind, 1.3))


def test_dot_conjugate(rng):
    R = sl2.rotation(0.9)
    assert np.allclose(sl2.dot_conjugate(R), R, atol=1e-15)
    assert np.allclose(sl2.dot_conjugate(sl2.boost_z(0.6)), sl2.boost_z(-0.6), atol=1e-15)
    for _ in range(20):
        L = random_sl2c(rng)
        assert np.allclose(sl2.dot_conjugate(sl2.dot_conjugate(L)), L, atol=1e-12)
    with pytest.raises(sl2.NotUnimodularError):
        sl2.dot_conjugate(2 * np.eye(2))


def test_v_from_spinors_examples(rng):
    V = sl2.v_from_spinors(sl2.SpinorPair(1, 0, 1, 0))
    assert np.array_equal(V, [[0, -1], [0, 0]])
    assert np.array_equal(sl2.v_from_spinors(sl2.SpinorPair(0, 0, 0, 0)), np.zeros((2, 2)))
    for _ in range(20):
        L = random_sl2c(rng)
        s = rng.normal(size=4) + 1j * rng.normal(size=4)
        uv = L @ s[:2]
        dots = sl2.dot_conjugate(L) @ s[2:]
        lhs = sl2.v_from_spinors(sl2.SpinorPair(uv[0], uv[1], dots[0], dots[1]))
        rhs = L @ sl2.v_from_spinors(sl2.SpinorPair(*s)) @ L.conj().T
        assert np.allclose(lhs, rhs, atol=1e-12 * max(1, np.abs(rhs).max()))


def test_four_vector_maps(rng):
    assert np.array_equal(sl2.v_from_coords((1, 0, 0, 0)), np.eye(2))
    V = sl2.v_from_coords((2, 1, 1, 0))
    assert np.array_equal(V, [[3, 1], [1, 1]])
    assert sl2.FourVector(2, 1, 1, 0).interval() == pytest.approx(np.linalg.det(V).real)
    for p in rng.normal(size=(20, 4)):
        assert np.allclose(sl2.coords_from_v(sl2.v_from_coords(p)), p, atol=1e-14, rtol=0)
    with pytest.raises(ValueError):
        sl2.coords_from_v([[1, 1j], [1j, 1]])


def test_apply2(rng):
    V = sl2.v_from_coords((1.5, 0.2, -0.3, 0.9))
    assert np.array_equal(sl2.apply2(np.eye(2), V), V)
    eta = 0.7
    W = sl2.apply2(sl2.boost_z(eta), np.eye(2))
    assert np.allclose(W, np.diag([math.exp(eta), math.exp(-eta)]))
    for _ in range(20):
        L = random_sl2c(rng)
        V = sl2.v_from_coords(rng.normal(size=4))
        assert np.linalg.det(sl2.apply2(L, V)) == pytest.approx(np.linalg.det(V), abs=1e-12 * max(1, np.abs(L).max() ** 4))


@pytest.mark.parametrize("theta", [-2.0, 0.3, 1.7])
def test_two_to_four_images(theta):
    c, s = math.cos(theta), math.sin(theta)
    rot44 = np.array([[1, 0, 0, 0], [0, c, -s, 0], [0, s, c, 0], [0, 0, 0, 1]])
    shif44 = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, c, -s], [0, 0, s, c]])
    ch, sh = math.cosh(theta), math.sinh(theta)
    sq44 = np.array([[ch, sh, 0, 0], [sh, ch, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert np.allclose(sl2.two_to_four(sl2.rotation(theta)), rot44, atol=1e-12, rtol=0)
    assert np.allclose(sl2.two_to_four(sl2.phase_shift(theta)), shif44, atol=1e-12, rtol=0)
    assert np.allclose(sl2.two_to_four(sl2.boost_z(theta)), sq44, atol=1e-12, rtol=0)


def test_two_to_four_sign_and_homomorphism(rng):
    for _ in range(30):
        A, B = random_sl2c(rng), random_sl2c(rng)
        MA = sl2.two_to_four(A)
        assert np.allclose(MA, sl2.two_to_four(-A), atol=1e-12)
        assert sl2.is_lorentz(MA, tol=1e-9 * np.abs(MA).max() ** 2)
        ref = sl2.two_to_four(A @ B)
        assert np.allclose(MA @ sl2.two_to_four(B), ref, atol=1e-10 * max(1, np.abs(ref).max()))


@given(st.floats(-3, 3), st.floats(-3, 3))
def test_little_group_fixes_lightlike(u, v):
    k = np.array([1.0, 1.0, 0.0, 0.0])
    F = sl2.little_group_f(u, v)
    assert np.allclose(F @ k, k, atol=1e-12 * max(1, np.abs(F).max()))
    assert np.allclose(sl2.f1(u) @ sl2.f2(v), sl2.f2(v) @ sl2.f1(u), atol=1e-12 * max(1, np.abs(F).max()))
    assert sl2.is_lorentz(sl2.f1(u), tol=1e-9 * max(1, u**4))
    assert sl2.is_lorentz(sl2.f2(v), tol=1e-9 * max(1, v**4))


def test_little_group_identity():
    assert np.array_equal(sl2.little_group_f(0, 0), np.eye(4))
    assert np.allclose(sl2.f1(0.7) @ [1, 1, 0, 0], [1, 1, 0, 0])


def test_f1_is_exponential_of_n1():
    from scipy.linalg import expm

    u = 0.45
    assert np.allclose(expm(-1j * u * generator("N1", 4)).real, sl2.f1(u), atol=1e-12)
    assert np.allclose(expm(-1j * u * generator("N2", 4)).real, sl2.f2(u), atol=1e-12)


@pytest.mark.parametrize("which,target", [("N1fromJ2", "N1"), ("N2fromJ1", "N2")])
def test_contraction_limit(which, target):
    err = np.abs(sl2.contract_generator(which, 10.0) - generator(target, 4)).max()
    assert err < 1e-7
    # error decays like exp(-2 eta)
    e5 = np.abs(sl2.contract_generator(which, 5.0) - generator(target, 4)).max()
    assert e5 == pytest.approx(math.exp(-10), rel=1e-6)


def test_contraction_at_zero_boost():
    assert np.allclose(sl2.contract_generator("N1fromJ2", 0.0), -2 * generator("J2", 4))
    assert np.allclose(sl2.contract_generator_printed("N1fromJ2", 0.0), generator("J2", 4))


def test_printed_contraction_does_not_converge():
    lim = sl2.contract_generator_printed("N1fromJ2", 20.0)
    assert np.abs(lim - generator("N1", 4)).max() == pytest.approx(1.5, abs=1e-6)


def test_boosted_generators_keep_algebra():
    B, Bi = sl2.boost4(2.0), sl2.boost4(-2.0)
    J = [B @ generator(f"J{i}", 4) @ Bi for i in (1, 2, 3)]
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        assert np.allclose(commutator(J[i], J[j]), 1j * J[k], atol=1e-10 * np.abs(J[k]).max())


def test_contraction_rejects_bad_input():
    with pytest.raises(ValueError):
        sl2.contract_generator("N3fromJ3", 1.0)
    with pytest.raises(ValueError):
        sl2.contract_generator("N1fromJ2", -1.0)
