"""Vectorised numpy implementations of the batch kernels.

Semantics match the compiled ``_kernels`` extension exactly; this module is
used when the extension is not built or when ``LORENTZ_OPTICS_PURE_PYTHON``
is set.
"""

import numpy as np


def _batch_power(mats, n):
    if n < 0:
        raise ValueError("power must be non-negative")
    result = np.broadcast_to(np.eye(2, dtype=mats.dtype), mats.shape).copy()
    base = mats.copy()
    while n:
        if n & 1:
            result = np.matmul(result, base)
        n >>= 1
        if n:
            base = np.matmul(base, base)
    return result


def matpow(mats, n):
    """Raise every ``(2, 2)`` complex matrix in a ``(m, 2, 2)`` stack to ``n``."""
    mats = np.ascontiguousarray(mats, dtype=complex)
    return _batch_power(mats, int(n))


def core_power(xs, n):
    """``C(x)^n`` for each ``x``, ``C(x) = [[x - 1, x - 2], [x, x - 1]]``."""
    xs = np.ascontiguousarray(xs, dtype=float)
    mats = np.empty((xs.size, 2, 2))
    mats[:, 0, 0] = xs - 1.0
    mats[:, 0, 1] = xs - 2.0
    mats[:, 1, 0] = xs
    mats[:, 1, 1] = xs - 1.0
    return _batch_power(mats, int(n))


def layer_power(eta, phi1, phi2, n):
    """``W^n`` of the two-medium cycle for each paired ``(phi1[i], phi2[i])``.

    ``W = X(eta) P(phi1) X(-eta) P(phi2)`` with ``X`` the boundary matrix and
    ``P`` the phase matrix.
    """
    phi1 = np.ascontiguousarray(phi1, dtype=float)
    phi2 = np.ascontiguousarray(phi2, dtype=float)
    if phi1.shape != phi2.shape:
        raise ValueError("phi1 and phi2 must have the same shape")
    ch, sh = np.cosh(0.5 * eta), np.sinh(0.5 * eta)
    m = phi1.size
    bnd = np.array([[ch, sh], [sh, ch]], dtype=complex)
    bnd_inv = np.array([[ch, -sh], [-sh, ch]], dtype=complex)
    p1 = np.zeros((m, 2, 2), dtype=complex)
    p1[:, 0, 0] = np.exp(-0.5j * phi1)
    p1[:, 1, 1] = np.exp(0.5j * phi1)
    p2 = np.zeros((m, 2, 2), dtype=complex)
    p2[:, 0, 0] = np.exp(-0.5j * phi2)
    p2[:, 1, 1] = np.exp(0.5j * phi2)
    W = bnd @ p1 @ bnd_inv @ p2
    return _batch_power(W, int(n))
