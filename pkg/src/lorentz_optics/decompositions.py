"""Factorisations of real unimodular (Sp(2)) matrices.

All rotation factors use the half-angle convention
``R(a) = [[cos(a/2), -sin(a/2)], [sin(a/2), cos(a/2)]]``, which has period
``4 pi``.  Angles therefore live in ``(-2 pi, 2 pi]``; where a joint
``2 pi`` shift of two angles leaves a product unchanged the leading angle is
brought into ``(-pi, pi]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .lens import Gap, Lens, OpticalElement, compose

__all__ = [
    "rot",
    "squeeze",
    "shear_generators",
    "sp2_generators",
    "BargmannFactors",
    "bargmann",
    "symmetric_orthogonal",
    "IwasawaFactors",
    "iwasawa",
    "iwasawa_constraint",
    "CONJUGATOR",
    "CONJUGATOR_INV",
    "conjugate_real",
    "conjugate_complex",
    "SynthesisError",
    "three_lens_synthesis",
    "synthesis_residual",
]

def rot(a: float) -> np.ndarray:
    c, s = math.cos(0.5 * a), math.sin(0.5 * a)
    return np.array([[c, -s], [s, c]])


def squeeze(gamma: float) -> np.ndarray:
    return np.diag([math.exp(0.5 * gamma), math.exp(-0.5 * gamma)])


def _wrap_4pi(a: float) -> float:
    """Map an angle into ``(-2 pi, 2 pi]``."""
    a = math.fmod(a, 4 * math.pi)
    if a > 2 * math.pi:
        a -= 4 * math.pi
    elif a <= -2 * math.pi:
        a += 4 * math.pi
    return a


def _require_sp2(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M)
    if np.iscomplexobj(M):
        if np.max(np.abs(M.imag)) > 0:
            raise ValueError("matrix must be real")
        M = M.real
    M = np.asarray(M, dtype=float)
    if M.shape != (2, 2) or not np.all(np.isfinite(M)):
        raise ValueError("expected a finite 2x2 matrix")
    det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    if abs(det - 1.0) > 1e-9 * max(1.0, float(np.max(np.abs(M))) ** 2):
        raise ValueError(f"matrix has determinant {det}, expected 1")
    return M


# ---------------------------------------------------------------------------
# generators

def shear_generators() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Generators of the translation (``X1``), lens (``X2``) and squeeze (``X3``)
    one-parameter groups, normalised so that

    ``[X1, X2] = i X3``, ``[X1, X3] = -i X1``, ``[X2, X3] = i X2``.

    ``exp(-i u X1)`` is the gap matrix ``[[1, u], [0, 1]]`` and
    ``exp(-i u X2)`` the lens matrix ``[[1, 0], [u/2, 1]]``.
    """
    X1 = np.array([[0, 1j], [0, 0]])
    X2 = np.array([[0, 0], [0.5j, 0]])
    X3 = np.array([[0.5j, 0], [0, -0.5j]])
    return X1, X2, X3


def sp2_generators() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Purely imaginary generators ``(B1, B2, J)`` of Sp(2)."""
    B1 = 0.5 * np.array([[1j, 0], [0, -1j]])
    B2 = 0.5 * np.array([[0, 1j], [1j, 0]])
    J = 0.5 * np.array([[0, -1j], [1j, 0]])
    return B1, B2, J


# ---------------------------------------------------------------------------
# Bargmann (rotation - squeeze - rotation)

@dataclass(frozen=True)
class BargmannFactors:
    alpha: float
    gamma: float
    beta: float

    def matrix(self) -> np.ndarray:
        return rot(self.alpha) @ squeeze(self.gamma) @ rot(self.beta)


def bargmann(M: np.ndarray) -> BargmannFactors:
    """Write ``M = R(alpha) diag(e^(gamma/2), e^(-gamma/2)) R(beta)``, ``gamma >= 0``.

    ``gamma`` is twice the log of the largest singular value.  A pure
    rotation returns ``gamma = 0``, ``beta = 0`` and its whole angle in
    ``alpha``.
    """
    M = _require_sp2(M)
    U, s, Vt = np.linalg.svd(M)
    if s[0] - 1.0 <= 1e-13:
        return BargmannFactors(_wrap_4pi(2.0 * math.atan2(M[1, 0], M[0, 0])), 0.0, 0.0)
    if np.linalg.det(U) < 0:
        U[:, 1] *= -1
        Vt[1, :] *= -1
    alpha = 2.0 * math.atan2(U[1, 0], U[0, 0])
    beta = 2.0 * math.atan2(Vt[1, 0], Vt[0, 0])
    # R(a +- 2pi) = -R(a); shifting both angles leaves the product alone
    if alpha > math.pi:
        alpha -= 2 * math.pi
        beta -= 2 * math.pi
    elif alpha <= -math.pi:
        alpha += 2 * math.pi
        beta += 2 * math.pi
    gamma = 2.0 * math.log(s[0])
    return BargmannFactors(alpha, gamma, _wrap_4pi(beta))


def symmetric_orthogonal(M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Polar split ``M = S @ O`` with ``S`` symmetric positive definite, ``O`` a rotation."""
    f = bargmann(M)
    S = rot(f.alpha) @ squeeze(f.gamma) @ rot(-f.alpha)
    S = 0.5 * (S + S.T)
    return S, rot(f.alpha + f.beta)


# ---------------------------------------------------------------------------
# Iwasawa (K A N)

@dataclass(frozen=True)
class IwasawaFactors:
    """``M = R(theta) @ diag(a, 1/a) @ [[1, n], [0, 1]]`` with ``a > 0``."""

    theta: float
    a: float
    n: float

    @property
    def K(self) -> np.ndarray:
        return rot(self.theta)

    @property
    def A(self) -> np.ndarray:
        return np.diag([self.a, 1.0 / self.a])

    @property
    def N(self) -> np.ndarray:
        return np.array([[1.0, self.n], [0.0, 1.0]])

    def matrix(self) -> np.ndarray:
        return self.K @ self.A @ self.N


def iwasawa(M: np.ndarray) -> IwasawaFactors:
    """Gram-Schmidt on the columns of ``M``."""
    M = _require_sp2(M)
    col0, col1 = M[:, 0], M[:, 1]
    a = math.hypot(col0[0], col0[1])
    e0 = col0 / a
    r01 = e0[0] * col1[0] + e0[1] * col1[1]
    theta = 2.0 * math.atan2(e0[1], e0[0])
    return IwasawaFactors(theta, a, r01 / a)


def iwasawa_constraint(theta: float) -> tuple[float, np.ndarray]:
    """Rapidity solving ``sinh(eta) = cosh(eta) sin(2 theta)`` and the resulting matrix.

    The matrix
    ``R(theta + pi/4) diag(e^eta, e^-eta) R(theta - pi/4)`` (full-angle
    rotations) collapses to ``[[1, 0], [2 sinh(eta), 1]]``.  Requires
    ``cos(2 theta) > 0``; when ``cos(2 theta) < 0`` the diagonal would be -1.
    """
    s2, c2 = math.sin(2 * theta), math.cos(2 * theta)
    if not abs(s2) < 1.0 or not c2 > 0.0:
        raise ValueError(f"no finite rapidity with unit diagonal for theta={theta}")
    eta = math.atanh(s2)
    ch, sh = math.cosh(eta), math.sinh(eta)
    M = np.array(
        [
            [ch * c2, sh - ch * s2],
            [sh + ch * s2, ch * c2],
        ]
    )
    return eta, M


# ---------------------------------------------------------------------------
# SU(1,1) <-> Sp(2)

_E = np.exp(1j * math.pi / 4)
CONJUGATOR = np.array([[_E, _E], [-np.conj(_E), np.conj(_E)]]) / math.sqrt(2)
CONJUGATOR_INV = np.array([[np.conj(_E), -_E], [np.conj(_E), _E]]) / math.sqrt(2)


def conjugate_real(W: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """``C W C^-1``: phase matrices become rotations, x-boosts become squeezes."""
    V = CONJUGATOR @ np.asarray(W, dtype=complex) @ CONJUGATOR_INV
    if np.max(np.abs(V.imag)) > tol * max(1.0, float(np.max(np.abs(V)))):
        raise ValueError("input is not in the conjugate of Sp(2) (imaginary residue)")
    return V.real.copy()


def conjugate_complex(V: np.ndarray) -> np.ndarray:
    """Inverse of :func:`conjugate_real`: ``C^-1 V C``."""
    return CONJUGATOR_INV @ np.asarray(V, dtype=complex) @ CONJUGATOR


# ---------------------------------------------------------------------------
# three-lens synthesis

class SynthesisError(RuntimeError):
    def __init__(self, message: str, best_residual: float):
        super().__init__(f"{message} (best residual {best_residual:.3g})")
        self.best_residual = best_residual


def _lens(p: float) -> list[OpticalElement]:
    """Lens with power ``p`` (matrix ``[[1, 0], [p, 1]]``).

    A power too small to invert is dropped; its omission costs at most ``|p|``
    in the composed matrix.
    """
    if p == 0.0 or not math.isfinite(p):
        return []
    f = -1.0 / p
    return [Lens(f)] if math.isfinite(f) else []


def _two_gap_form(M: np.ndarray, z: float) -> list[OpticalElement]:
    # M = L(a) T(z) L(b) T(z) L(c); the middle block fixes M[0, 1]
    A, B, D = M[0, 0], M[0, 1], M[1, 1]
    b = (B / z - 2.0) / z
    k = 1.0 + z * b
    c = (A - k) / B
    a = (D - k) / B
    return _lens(c) + [Gap(z)] + _lens(b) + [Gap(z)] + _lens(a)


def _candidates(M: np.ndarray):
    A, B, C, D = M[0, 0], M[0, 1], M[1, 0], M[1, 1]
    if B >= 0:
        yield [Gap(B)]
    if C != 0:
        yield _lens(C)
    if B > 0:
        # L(p) T(B) L(q)
        yield _lens((A - 1.0) / B) + [Gap(B)] + _lens((D - 1.0) / B)
    scales = (1.0, 0.5, 2.0, 0.1, 10.0)
    if B != 0:
        for s in scales:
            yield _two_gap_form(M, s * abs(B))
    # shift M[0, 1] away from zero with a leading gap: M = M' T(z0)
    for s in scales:
        z0 = s * max(1.0, abs(B)) / max(abs(A), 1e-300)
        Mp = M @ np.array([[1.0, -z0], [0.0, 1.0]])
        Bp = Mp[0, 1]
        if Bp > 0:
            yield [Gap(z0)] + _lens((Mp[0, 0] - 1.0) / Bp) + [Gap(Bp)] + _lens((Mp[1, 1] - 1.0) / Bp)
        elif Bp != 0:
            yield [Gap(z0)] + _two_gap_form(Mp, abs(Bp))


def three_lens_synthesis(M: np.ndarray, tol: float = 1e-8) -> list[OpticalElement]:
    """Thin lenses and non-negative gaps realising ``M`` with at most three lenses.

    Candidates are tried from the simplest (a single gap or lens) to the
    five-element ``lens-gap-lens-gap-lens`` form; the first whose composed
    matrix is within ``tol`` of ``M`` is returned.

    Raises
    ------
    SynthesisError
        If no candidate reaches ``tol``; carries the best residual seen.
    """
    M = _require_sp2(M)
    best = math.inf
    with np.errstate(all="ignore"):
        for system in _candidates(M):
            if not system or any(not math.isfinite(getattr(e, "f", getattr(e, "z", 0.0))) for e in system):
                continue
            if sum(isinstance(e, Lens) for e in system) > 3 or len(system) > 6:
                continue
            residual = float(np.max(np.abs(compose(system) - M)))
            if residual <= tol:
                return system
            if math.isfinite(residual):
                best = min(best, residual)
    raise SynthesisError("no three-lens realisation found", best)


def synthesis_residual(system: Sequence[OpticalElement], M: np.ndarray) -> float:
    return float(np.max(np.abs(compose(system) - np.asarray(M, dtype=float))))
