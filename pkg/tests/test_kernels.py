import os
import subprocess
import sys

import numpy as np
import pytest

from lorentz_optics import _kernels_py, kernels, lens, multilayer

compiled = pytest.mark.skipif(kernels.compiled is None, reason="compiled kernels not built")


def rel(a, b):
    return np.max(np.abs(a - b) / np.maximum(1.0, np.abs(b)))


@compiled
@pytest.mark.parametrize("n", [0, 1, 2, 7, 64, 129])
def test_parity(n, rng):
    xs = rng.uniform(-1, 3, 200)
    p1, p2 = rng.uniform(-7, 7, (2, 200))
    mats = rng.normal(size=(50, 2, 2)) + 1j * rng.normal(size=(50, 2, 2))
    mats /= np.sqrt(np.linalg.det(mats))[:, None, None]
    c = kernels.compiled
    assert rel(c.core_power(xs, n), _kernels_py.core_power(xs, n)) < 1e-12
    assert rel(c.layer_power(0.6, p1, p2, n), _kernels_py.layer_power(0.6, p1, p2, n)) < 1e-11
    assert rel(c.matpow(mats, n), _kernels_py.matpow(mats, n)) < 1e-11


@pytest.mark.parametrize("impl", [_kernels_py, kernels])
def test_against_matrix_power(impl, rng):
    xs = np.array([-0.5, 0.3, 1.0, 2.0, 2.7])
    out = impl.core_power(xs, 9)
    for x, P in zip(xs, out):
        assert np.allclose(P, np.linalg.matrix_power(lens.one_lens_core(x), 9))
    p1, p2 = rng.uniform(-3, 3, (2, 6))
    out = impl.layer_power(0.4, p1, p2, 5)
    for a, b, P in zip(p1, p2, out):
        ref = np.linalg.matrix_power(multilayer.cycle_matrix(multilayer.LayerCycle(0.4, a, b)), 5)
        assert np.allclose(P, ref, atol=1e-12)


@pytest.mark.parametrize("impl", [_kernels_py, kernels])
def test_errors(impl):
    with pytest.raises(ValueError):
        impl.core_power([1.0], -1)
    with pytest.raises(ValueError):
        impl.layer_power(0.1, [1.0, 2.0], [1.0], 2)


def test_pure_python_switch():
    code = "import lorentz_optics.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, LORENTZ_OPTICS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
