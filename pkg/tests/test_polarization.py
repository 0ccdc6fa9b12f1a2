import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lorentz_optics import polarization as pol
from lorentz_optics import sl2
from conftest import random_sl2c


def test_coherency_examples():
    assert np.array_equal(pol.coherency_from_jones([(1.0, (1, 0))]), [[1, 0], [0, 0]])
    mix = pol.coherency_from_jones([(0.5, (1, 0)), (0.5, (0, 1))])
    assert np.allclose(mix, 0.5 * np.eye(2))
    C = pol.coherency_from_jones([(1.0, np.array([1, 1]) / math.sqrt(2))])
    assert np.allclose(C, 0.5 * np.ones((2, 2)))
    assert abs(np.linalg.det(C)) < 1e-15


def test_coherency_rejects_negative_weight():
    with pytest.raises(ValueError):
        pol.coherency_from_jones([(-0.1, (1, 0)), (1.1, (0, 1))])


@pytest.mark.parametrize(
    "C,S",
    [
        ([[1, 0], [0, 0]], [1, 1, 0, 0]),
        ([[0.5, 0], [0, 0.5]], [1, 0, 0, 0]),
        ([[0.5, 0.5], [0.5, 0.5]], [1, 0, 1, 0]),
    ],
)
def test_stokes_examples(C, S):
    assert np.allclose(pol.stokes_from_coherency(np.array(C, dtype=complex)), S)


def test_circular_sign():
    # (1, i)/sqrt(2): S3 = i(C01 - C10) with C = psi psi^dagger
    C = pol.coherency_from_jones([(1.0, np.array([1, 1j]) / math.sqrt(2))])
    assert np.allclose(pol.stokes_from_coherency(C), [1, 0, 0, 1])


def test_round_trip(rng):
    for _ in range(50):
        psi = rng.normal(size=(3, 2)) + 1j * rng.normal(size=(3, 2))
        w = rng.uniform(size=3)
        C = pol.coherency_from_jones(zip(w / w.sum(), psi))
        assert np.abs(pol.coherency_from_stokes(pol.stokes_from_coherency(C)) - C).max() <= 1e-14 * max(1, np.abs(C).max())
        assert np.allclose(C, C.conj().T, atol=1e-12)
        assert np.linalg.det(C).real >= -1e-12


def test_invariant_mass(rng):
    assert pol.invariant_mass_sq([1, 1, 0, 0]) == 0
    assert pol.invariant_mass_sq([1, 0, 0, 0]) == 1
    C = pol.coherency_from_jones([(0.3, (1, 0.2j)), (0.7, (0.4, -1))])
    S = pol.stokes_from_coherency(C)
    m2 = pol.invariant_mass_sq(S)
    assert m2 == pytest.approx(4 * np.linalg.det(C).real, abs=1e-14)
    for _ in range(50):
        G = random_sl2c(rng)
        S2 = sl2.two_to_four(G) @ S
        S3 = pol.stokes_from_coherency(pol.transform_coherency(G, C))
        assert np.allclose(S2, S3, atol=1e-10 * max(1, np.abs(S3).max()))
        assert pol.invariant_mass_sq(S3) == pytest.approx(m2, abs=1e-10 * max(1, S3[0] ** 2))


def test_classify():
    st1 = pol.classify([1, 1, 0, 0])
    assert st1.kind == "pure" and (st1.s0, st1.s) == (1, 1)
    assert pol.classify([1, 0, 0, 0]).kind == "random"
    S = pol.stokes_from_coherency(np.diag([0.75, 0.25]).astype(complex))
    st3 = pol.classify(S)
    assert st3.kind == "partial"
    assert st3.cos_chi == pytest.approx(0.5)
    assert st3.eta == pytest.approx(0.5 * math.log(3))
    with pytest.raises(ValueError):
        pol.classify([0, 0, 0, 0])
    with pytest.raises(ValueError):
        pol.classify([-1, 0, 0, 0])


def test_purity(rng):
    assert pol.purity(np.array([[1, 0], [0, 0]])) == 1
    assert pol.purity(0.5 * np.eye(2)) == pytest.approx(0.5)
    C = pol.coherency_from_jones([(0.2, (1, 1j)), (0.8, (0.3, 1))])
    R = sl2.rotation(1.1)
    assert pol.purity(pol.transform_coherency(R, C)) == pytest.approx(pol.purity(C), abs=1e-14)
    with pytest.raises(ValueError):
        pol.purity(np.zeros((2, 2)))


def test_beam_split_equal_intensity():
    # R(theta) is a half-angle rotation: an equal split needs theta = -pi/2
    out = pol.mueller_of(pol.BeamSplit(-math.pi / 2)).jones @ [1, 0]
    assert abs(out[0]) ** 2 == pytest.approx(abs(out[1]) ** 2)
    out = pol.mueller_of(pol.BeamSplit(-math.pi / 4)).jones @ [1, 0]
    assert abs(out[0]) ** 2 != pytest.approx(abs(out[1]) ** 2)


def test_attenuate():
    res = pol.mueller_of(pol.Attenuate(0.2, 0.9))
    eta = 0.7
    assert res.common_factor == pytest.approx(math.exp(-0.55))
    assert np.allclose(res.jones, np.diag([math.exp(eta / 2), math.exp(-eta / 2)]))
    jones_full = np.diag([math.exp(-0.2), math.exp(-0.9)])
    assert np.allclose(res.common_factor * res.jones, jones_full)


def test_phase_shift_zero():
    res = pol.mueller_of(pol.PhaseShift(0.0))
    assert np.allclose(res.jones, np.eye(2)) and np.allclose(res.mueller, np.eye(4))
    assert res.common_factor == 1


def test_mueller_is_two_to_four():
    for el in (pol.BeamSplit(0.8), pol.PhaseShift(-1.2), pol.Attenuate(0.1, 0.5)):
        res = pol.mueller_of(el)
        assert np.allclose(res.mueller, sl2.two_to_four(res.jones))


def test_decohered_rotation_limits():
    for theta in (-1.0, 0.3, 2.0):
        assert np.allclose(pol.decohered_rotation(pol.DecoherenceParams(theta, 0.0)), sl2.rotation4(theta), atol=1e-12, rtol=0)
    assert np.allclose(
        pol.decohered_rotation(pol.DecoherenceParams(0.6, 1.0)), sl2.f1(-2 * math.tan(0.3)), atol=1e-12, rtol=0
    )


def test_decohered_rotation_triple_product():
    p = pol.DecoherenceParams(math.pi / 3, 0.5)
    triple = pol.boosted_rotation(p.boosted_angle, p.eta)
    assert np.abs(pol.decohered_rotation(p) - triple).max() <= 1e-12


@given(st.floats(-2.5, 2.5), st.floats(0, 1))
def test_decohered_rotation_is_lorentz(theta, alpha):
    M = pol.decohered_rotation(pol.DecoherenceParams(theta, alpha))
    assert sl2.is_lorentz(M, tol=1e-9 * max(1, np.abs(M).max() ** 2))
    assert np.allclose(M @ [1, alpha, 0, 0], [1, alpha, 0, 0], atol=1e-10 * max(1, np.abs(M).max()))


def test_decoherence_alpha_range():
    for a in (-0.1, 1.5):
        with pytest.raises(ValueError):
            pol.DecoherenceParams(0.3, a)
