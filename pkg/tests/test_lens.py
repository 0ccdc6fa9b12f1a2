import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lorentz_optics import lens
from lorentz_optics.lens import Gap, Lens, compose


def test_element_matrices():
    assert np.array_equal(lens.element_matrix(Lens(2.0)), [[1, 0], [-0.5, 1]])
    assert np.array_equal(lens.element_matrix(Gap(0.0)), np.eye(2))
    assert np.allclose(compose([Gap(1.5), Gap(2.0)]), lens.element_matrix(Gap(3.5)))


@pytest.mark.parametrize("bad", [0.0, math.inf, math.nan])
def test_lens_validation(bad):
    with pytest.raises(ValueError):
        Lens(bad)


def test_gap_validation():
    with pytest.raises(ValueError):
        Gap(-1.0)
    with pytest.raises(ValueError):
        compose([])


@pytest.mark.parametrize("z,f", [(0.5, 1.0), (2.0, 1.5), (3.0, -2.0)])
def test_one_lens_product(z, f):
    expected = [[1 - z / f, 2 * z - z * z / f], [-1 / f, 1 - z / f]]
    assert np.allclose(compose([Gap(z), Lens(f), Gap(z)]), expected)


@given(st.floats(0.2, 10), st.floats(0.1, 5))
def test_focal_condition(z1, f):
    if abs(z1 - f) < 1e-3:
        return
    z2 = 1.0 / (1.0 / f - 1.0 / z1)
    if z2 < 0:
        return
    M = compose([Gap(z1), Lens(f), Gap(z2)])
    assert abs(M[0, 1]) <= 1e-12 * max(1.0, z1, z2, z1 * z2 / f)
    assert np.linalg.det(M) == pytest.approx(1, abs=1e-12 * max(1.0, np.abs(M).max() ** 2))


def test_det_through_compositions(rng):
    for _ in range(100):
        system = []
        for _ in range(rng.integers(1, 8)):
            system.append(Lens(rng.uniform(0.2, 3) * rng.choice([-1, 1])) if rng.random() < 0.5 else Gap(rng.uniform(0, 3)))
        M = compose(system)
        assert np.linalg.det(M) == pytest.approx(1, abs=1e-12 * max(1, np.abs(M).max() ** 2))


def test_core_examples():
    assert np.array_equal(lens.one_lens_core(1.0), [[0, -1], [1, 0]])
    assert np.array_equal(lens.one_lens_core(2.0), [[1, 0], [2, 1]])
    for x in (-1.0, 0.5, 3.0):
        assert np.linalg.det(lens.one_lens_core(x)) == pytest.approx(1)


@pytest.mark.parametrize("z,f", [(0.8, 2.0), (1.5, 0.5), (2.0, -1.0)])
def test_core_is_rescaled_one_lens_product(z, f):
    M = compose([Gap(z), Lens(f), Gap(z)])
    D = np.diag([1 / math.sqrt(z), math.sqrt(z)])
    assert np.allclose(-D @ M @ np.linalg.inv(D), lens.one_lens_core(z / f), atol=1e-12)


def test_classify_examples():
    e = lens.classify_core(lens.one_lens_core(1.0))
    assert isinstance(e, lens.Elliptic)
    assert e.eta == pytest.approx(0) and e.phi == pytest.approx(math.pi)
    h = lens.classify_core(lens.one_lens_core(3.0))
    assert isinstance(h, lens.Hyperbolic)
    assert h.eta == pytest.approx(0.5 * math.log(3)) and h.chi == pytest.approx(2 * math.acosh(2))
    assert isinstance(lens.classify_core(lens.one_lens_core(2.0)), lens.Parabolic)
    assert isinstance(lens.classify_core(lens.one_lens_core(0.0)), lens.Parabolic)


def test_classify_errors():
    with pytest.raises(ValueError):
        lens.classify_core(np.array([[2.0, 0.0], [0.0, 0.5]]))
    with pytest.raises(ValueError):
        lens.classify_core(np.array([[1.0, 1.0], [1.0, 1.0]]))


@given(st.floats(-4, 6).filter(lambda x: abs(x) > 1e-6 and abs(x - 2) > 1e-6))
def test_classify_reconstructs(x):
    M = lens.one_lens_core(x)
    form = lens.classify_core(M)
    assert np.allclose(form.matrix(), M, atol=1e-10 * max(1, abs(x)))


@pytest.mark.parametrize("x", [-1.3, -0.2, 0.0, 0.5, 1.0, 1.7, 2.0, 2.5, 4.0])
@pytest.mark.parametrize("n", [1, 2, 7, 16, 64])
def test_cavity_closed_form(x, n):
    res = lens.cavity_cycles(x, n)
    ref = np.linalg.matrix_power(lens.one_lens_core(x), 2 * n)
    assert np.abs(res.matrix - ref).max() <= 1e-9 * max(1, np.abs(ref).max())
    assert res.stable == (0 < x < 2)


def test_cavity_examples():
    res = lens.cavity_cycles(1.0, 1)
    assert np.allclose(res.matrix, -np.eye(2)) and res.stable
    form = lens.classify_core(lens.one_lens_core(2.5))
    growth = [np.abs(lens.cavity_cycles(2.5, n).matrix).max() for n in (10, 11)]
    assert growth[1] / growth[0] == pytest.approx(math.exp(form.chi), rel=1e-6)
    assert not lens.cavity_cycles(2.5, 3).stable


def test_stability_boundary():
    rows = lens.cavity_sweep(np.array([-1e-9, 0.0, 1e-9, 1.0, 2 - 1e-9, 2.0, 2 + 1e-9]), 4)
    assert [r[2] for r in rows] == [False, False, True, True, True, False, False]


def test_sweep_matches_closed_form():
    xs = np.linspace(-1, 3, 17)
    for row in lens.cavity_sweep(xs, 5):
        res = lens.cavity_cycles(row[0], 5)
        assert row[3] == pytest.approx(np.trace(res.matrix), abs=1e-9 * max(1, row[4]))


def test_parabolic_power():
    P = lens.classify_core(np.array([[1.0, 0.0], [2.0, 1.0]]))
    assert np.array_equal(lens.core_power(P, 5), [[1, 0], [10, 1]])
    N = lens.classify_core(-np.array([[1.0, 3.0], [0.0, 1.0]]))
    assert np.allclose(lens.core_power(N, 3), np.linalg.matrix_power(-np.array([[1.0, 3.0], [0.0, 1.0]]), 3))
