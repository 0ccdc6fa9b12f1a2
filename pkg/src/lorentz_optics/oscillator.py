"""Lorentz-squeezed ground state of the covariant harmonic oscillator.

The squeezed Gaussian is

    psi_eta(z, t) = exp(-(exp(-2 eta) u**2 + exp(2 eta) v**2) / 2) / sqrt(pi)

in light-cone variables ``u = (z + t)/sqrt(2)``, ``v = (z - t)/sqrt(2)``.  It
expands in paired Hermite functions as ``sum_k c_k phi_k(z) phi_k(t)`` with
``c_k = tanh(eta)**k / cosh(eta)``.

Integrals use Gauss-Hermite quadrature in the light-cone variables, where
every integrand here is a Gaussian times a polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.hermite import hermgauss

__all__ = [
    "SqueezedState",
    "lightcone",
    "lightcone_boost",
    "psi",
    "hermite_function",
    "hermite_functions",
    "expansion_coeff",
    "expansion_coeffs",
    "reconstruct",
    "truncation_residual",
    "quadrature_norm",
    "quadrature_overlap",
    "quadrature_residual",
    "hermite_gram",
    "QUAD_ORDER",
]

QUAD_ORDER = 64
_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class SqueezedState:
    eta: float

    def __post_init__(self):
        if not math.isfinite(self.eta):
            raise ValueError("eta must be finite")

    def __call__(self, z, t):
        return psi(self, z, t)


def _eta(state) -> float:
    return state.eta if isinstance(state, SqueezedState) else float(state)


def lightcone(z, t):
    return (z + t) / _SQRT2, (z - t) / _SQRT2


def lightcone_boost(eta: float, u, v):
    """``(e^eta u, e^-eta v)``; the product ``u v`` is preserved."""
    return math.exp(eta) * u, math.exp(-eta) * v


def psi(state, z, t):
    """Squeezed wave function at ``(z, t)``; ``state`` is a :class:`SqueezedState` or a rapidity."""
    eta = _eta(state)
    u, v = lightcone(np.asarray(z, float), np.asarray(t, float))
    out = np.exp(-0.5 * (math.exp(-2 * eta) * u**2 + math.exp(2 * eta) * v**2)) / math.sqrt(math.pi)
    return out if out.ndim else float(out)


def _hermite_poly(kmax: int, x) -> np.ndarray:
    """Normalised polynomials ``h_k`` with ``phi_k = h_k exp(-x^2/2)``, stacked on axis 0."""
    x = np.asarray(x, float)
    h = np.empty((kmax + 1,) + x.shape)
    h[0] = math.pi**-0.25
    if kmax >= 1:
        h[1] = _SQRT2 * x * h[0]
    for k in range(1, kmax):
        h[k + 1] = math.sqrt(2.0 / (k + 1)) * x * h[k] - math.sqrt(k / (k + 1)) * h[k - 1]
    return h


def hermite_functions(kmax: int, x) -> np.ndarray:
    """``phi_0 .. phi_kmax`` at ``x``, shape ``(kmax + 1,) + x.shape``."""
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    x = np.asarray(x, float)
    return _hermite_poly(kmax, x) * np.exp(-0.5 * x**2)


def hermite_function(k: int, x):
    out = hermite_functions(k, x)[k]
    return out if out.ndim else float(out)


def expansion_coeff(eta: float, k: int) -> float:
    if eta < 0:
        raise ValueError("eta must be >= 0")
    if k < 0:
        raise ValueError("k must be >= 0")
    return math.tanh(eta) ** k / math.cosh(eta)


def expansion_coeffs(eta: float, kmax: int) -> np.ndarray:
    if eta < 0:
        raise ValueError("eta must be >= 0")
    return math.tanh(eta) ** np.arange(kmax + 1) / math.cosh(eta)


def reconstruct(eta: float, kmax: int, z, t):
    """Partial sum ``sum_{k <= kmax} c_k phi_k(z) phi_k(t)``."""
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    c = expansion_coeffs(eta, kmax)
    fz = hermite_functions(kmax, z)
    ft = hermite_functions(kmax, t)
    out = np.tensordot(c, fz * ft, axes=1)
    return out if np.ndim(out) else float(out)


def truncation_residual(eta: float, kmax: int) -> float:
    """Exact L2 norm of ``psi - reconstruct(eta, kmax)``: ``tanh(eta)**(kmax + 1)``."""
    if eta < 0:
        raise ValueError("eta must be >= 0")
    return math.tanh(eta) ** (kmax + 1)


def _lightcone_nodes(a_u: float, a_v: float, order: int):
    """Nodes and weights for ``int int f(u, v) exp(-a_u u^2 - a_v v^2) du dv``."""
    x, w = hermgauss(order)
    u = x / math.sqrt(a_u)
    v = x / math.sqrt(a_v)
    U, V = np.meshgrid(u, v, indexing="ij")
    W = np.outer(w, w) / math.sqrt(a_u * a_v)
    return U, V, W


def quadrature_norm(eta: float, order: int = QUAD_ORDER) -> float:
    """``int int psi^2 dz dt`` by quadrature (the light-cone map has unit Jacobian)."""
    a_u, a_v = math.exp(-2 * eta), math.exp(2 * eta)
    U, V, W = _lightcone_nodes(a_u, a_v, order)
    Z = (U + V) / _SQRT2
    T = (U - V) / _SQRT2
    f = psi(eta, Z, T) ** 2 * np.exp(a_u * U**2 + a_v * V**2)
    return float(np.sum(f * W))


def quadrature_overlap(eta: float, kmax: int, order: int = QUAD_ORDER) -> np.ndarray:
    """``<phi_k(z) phi_k(t), psi_eta>`` for ``k = 0 .. kmax``."""
    a_u = 0.5 * (1.0 + math.exp(-2 * eta))
    a_v = 0.5 * (1.0 + math.exp(2 * eta))
    U, V, W = _lightcone_nodes(a_u, a_v, order)
    Z = (U + V) / _SQRT2
    T = (U - V) / _SQRT2
    hz = _hermite_poly(kmax, Z)
    ht = _hermite_poly(kmax, T)
    return np.sum(hz * ht * W, axis=(1, 2)) / math.sqrt(math.pi)


def quadrature_residual(eta: float, kmax: int, order: int = QUAD_ORDER) -> float:
    """L2 residual of the truncated expansion from quadrature norm and overlaps."""
    c = expansion_coeffs(eta, kmax)
    o = quadrature_overlap(eta, kmax, order)
    r2 = quadrature_norm(eta, order) - 2.0 * float(c @ o) + float(c @ c)
    return math.sqrt(max(r2, 0.0))


def hermite_gram(kmax: int, order: int = QUAD_ORDER) -> np.ndarray:
    """Quadrature Gram matrix ``<phi_j, phi_k>`` for ``j, k <= kmax``."""
    x, w = hermgauss(order)
    h = _hermite_poly(kmax, x)
    return (h * w) @ h.T
