"""Two-by-two and four-by-four representations of the Lorentz group.

Matrices are plain numpy arrays: ``(2, 2)`` complex for SL(2,C) elements and
``(4, 4)`` real for Lorentz transformations acting on four-vectors ordered as
``(t, z, x, y)``, which is the same ordering as the Stokes vector
``(S0, S1, S2, S3)``.

The Pauli matrices follow the optics convention in which ``sigma_3`` is the
imaginary one::

    sigma_1 = [[1, 0], [0, -1]]
    sigma_2 = [[0, 1], [1, 0]]
    sigma_3 = [[0, -i], [i, 0]]

so that a two-by-two ``sigma_1`` acts along the ``z`` (``S1``) axis of the
four-by-four picture.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

__all__ = [
    "SIGMA",
    "MINKOWSKI",
    "NotUnimodularError",
    "SpinorPair",
    "FourVector",
    "GENERATOR_NAMES",
    "generator",
    "commutator",
    "phase_shift",
    "rotation",
    "boost_z",
    "boost_x",
    "elementary2",
    "rotation4",
    "phase_shift4",
    "boost4",
    "elementary4",
    "dot_conjugate",
    "v_from_spinors",
    "v_from_coords",
    "coords_from_v",
    "apply2",
    "two_to_four",
    "f1",
    "f2",
    "little_group_f",
    "contract_generator",
    "contract_generator_printed",
    "is_lorentz",
]

#: Tolerance for pure two-by-two algebra.
TOL2 = 1e-12
#: Tolerance for chains of four-by-four products.
TOL4 = 1e-10

SIGMA = (
    np.array([[1, 0], [0, -1]], dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
)

MINKOWSKI = np.diag([1.0, -1.0, -1.0, -1.0])


class NotUnimodularError(ValueError):
    """Raised when an operation requires ``det L = 1`` and gets something else."""


class SpinorPair(NamedTuple):
    """Undotted spinor ``(u, v)`` and dotted spinor ``(udot, vdot)``."""

    u: complex
    v: complex
    udot: complex
    vdot: complex


class FourVector(NamedTuple):
    t: float
    z: float
    x: float
    y: float

    def interval(self) -> float:
        return self.t**2 - self.z**2 - self.x**2 - self.y**2


def _require_unimodular(L: np.ndarray, what: str = "matrix") -> None:
    L = np.asarray(L)
    det = L[0, 0] * L[1, 1] - L[0, 1] * L[1, 0]
    scale = max(1.0, float(np.max(np.abs(L))) ** 2)
    if not np.isfinite(det) or abs(det - 1.0) > 1e-9 * scale:
        raise NotUnimodularError(f"{what} has determinant {det}, expected 1")


# ---------------------------------------------------------------------------
# generators

_Z4 = np.zeros((4, 4), dtype=complex)


def _m4(entries: dict[tuple[int, int], complex]) -> np.ndarray:
    m = _Z4.copy()
    for (i, j), val in entries.items():
        m[i, j] = val
    return m


_GEN4 = {
    "J1": _m4({(1, 3): 1j, (3, 1): -1j}),
    "J2": _m4({(1, 2): -1j, (2, 1): 1j}),
    "J3": _m4({(2, 3): -1j, (3, 2): 1j}),
    "K1": _m4({(0, 2): 1j, (2, 0): 1j}),
    "K2": _m4({(0, 3): 1j, (3, 0): 1j}),
    "K3": _m4({(0, 1): 1j, (1, 0): 1j}),
}
_GEN2 = {}
for _i, _s in enumerate(SIGMA, start=1):
    _GEN2[f"J{_i}"] = _s / 2
    _GEN2[f"K{_i}"] = 1j * _s / 2
for _g in (_GEN2, _GEN4):
    _g["N1"] = _g["K1"] - _g["J2"]
    _g["N2"] = _g["K2"] + _g["J1"]

GENERATOR_NAMES = ("J1", "J2", "J3", "K1", "K2", "K3", "N1", "N2")


def generator(name: str, rep: int = 2) -> np.ndarray:
    """Return a Lie-algebra generator.

    Parameters
    ----------
    name : str
        One of ``J1, J2, J3`` (rotations), ``K1, K2, K3`` (boosts) or
        ``N1, N2`` (the translation-like generators ``K1 - J2`` and
        ``K2 + J1`` of the massless little group).
    rep : {2, 4}
        Two-by-two (``J = sigma/2``, ``K = i sigma/2``) or four-by-four
        representation.

    Returns
    -------
    numpy.ndarray
        Complex matrix; a fresh copy each call.
    """
    table = {2: _GEN2, 4: _GEN4}.get(rep)
    if table is None:
        raise ValueError(f"rep must be 2 or 4, got {rep!r}")
    try:
        return table[name].copy()
    except KeyError:
        raise ValueError(f"unknown generator {name!r}") from None


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


# ---------------------------------------------------------------------------
# one-parameter subgroups, two-by-two

def phase_shift(phi: float) -> np.ndarray:
    """``P(phi) = diag(exp(-i phi/2), exp(i phi/2))``."""
    h = 0.5 * phi
    return np.array([[np.exp(-1j * h), 0], [0, np.exp(1j * h)]], dtype=complex)


def rotation(theta: float) -> np.ndarray:
    """Half-angle rotation ``R(theta)``; period ``4 pi``, ``R(2 pi) = -I``."""
    c, s = np.cos(0.5 * theta), np.sin(0.5 * theta)
    return np.array([[c, -s], [s, c]], dtype=complex)


def boost_z(eta: float) -> np.ndarray:
    """Squeeze ``B(eta) = diag(exp(eta/2), exp(-eta/2))``."""
    h = 0.5 * eta
    return np.array([[np.exp(h), 0], [0, np.exp(-h)]], dtype=complex)


def boost_x(chi: float) -> np.ndarray:
    """``X(chi) = [[cosh(chi/2), sinh(chi/2)], [sinh(chi/2), cosh(chi/2)]]``."""
    c, s = np.cosh(0.5 * chi), np.sinh(0.5 * chi)
    return np.array([[c, s], [s, c]], dtype=complex)


_ELEMENTARY2 = {
    "rot_z": phase_shift,
    "rot_y": rotation,
    "boost_z": boost_z,
    "boost_x": boost_x,
}


def elementary2(kind: str, param: float) -> np.ndarray:
    """Dispatch to one of ``rot_z`` (phase), ``rot_y``, ``boost_z``, ``boost_x``."""
    if not np.isfinite(param):
        raise ValueError(f"parameter must be finite, got {param!r}")
    try:
        return _ELEMENTARY2[kind](param)
    except KeyError:
        raise ValueError(f"unknown two-by-two element {kind!r}") from None


# ---------------------------------------------------------------------------
# one-parameter subgroups, four-by-four

def rotation4(theta: float) -> np.ndarray:
    """Rotation of ``(S1, S2)`` about the ``S3`` axis, image of :func:`rotation`."""
    c, s = np.cos(theta), np.sin(theta)
    m = np.eye(4)
    m[1, 1] = m[2, 2] = c
    m[1, 2], m[2, 1] = -s, s
    return m


def phase_shift4(phi: float) -> np.ndarray:
    """Rotation of ``(S2, S3)`` about the ``S1`` axis, image of :func:`phase_shift`."""
    c, s = np.cos(phi), np.sin(phi)
    m = np.eye(4)
    m[2, 2] = m[3, 3] = c
    m[2, 3], m[3, 2] = -s, s
    return m


def boost4(eta: float) -> np.ndarray:
    """Boost along ``S1`` (the ``z`` axis), image of :func:`boost_z`."""
    m = np.eye(4)
    m[0, 0] = m[1, 1] = np.cosh(eta)
    m[0, 1] = m[1, 0] = np.sinh(eta)
    return m


_ELEMENTARY4 = {
    "rot_s3": rotation4,
    "rot_s1": phase_shift4,
    "boost_s1": boost4,
}


def elementary4(kind: str, param: float) -> np.ndarray:
    if not np.isfinite(param):
        raise ValueError(f"parameter must be finite, got {param!r}")
    try:
        return _ELEMENTARY4[kind](param)
    except KeyError:
        raise ValueError(f"unknown four-by-four element {kind!r}") from None


# ---------------------------------------------------------------------------
# spinors and four-vectors

def dot_conjugate(L: np.ndarray) -> np.ndarray:
    """Dotted-representation partner ``(L^dagger)^-1``.

    Rotations are unitary and come back unchanged; boosts flip sign.
    """
    L = np.asarray(L, dtype=complex)
    _require_unimodular(L, "L")
    a, b, c, d = L[0, 0], L[0, 1], L[1, 0], L[1, 1]
    # inverse of L^dagger for det 1 is [[conj d, -conj c], [-conj b, conj a]]
    return np.array([[np.conj(d), -np.conj(c)], [-np.conj(b), np.conj(a)]])


def v_from_spinors(s: SpinorPair) -> np.ndarray:
    """Rank-one matrix ``(u, v)^T (vdot, -udot)``; always has ``det = 0``."""
    u, v, ud, vd = (complex(x) for x in s)
    return np.array([[u * vd, -u * ud], [v * vd, -v * ud]], dtype=complex)


def v_from_coords(p) -> np.ndarray:
    """Hermitian matrix ``[[t + z, x - iy], [x + iy, t - z]]`` of a four-vector."""
    t, z, x, y = (float(q) for q in p)
    return np.array([[t + z, x - 1j * y], [x + 1j * y, t - z]], dtype=complex)


def coords_from_v(V: np.ndarray) -> FourVector:
    V = np.asarray(V, dtype=complex)
    if np.max(np.abs(V - V.conj().T)) > TOL2 * max(1.0, float(np.max(np.abs(V)))):
        raise ValueError("V is not Hermitian")
    a, d = V[0, 0].real, V[1, 1].real
    off = 0.5 * (V[1, 0] + np.conj(V[0, 1]))
    return FourVector(0.5 * (a + d), 0.5 * (a - d), off.real, off.imag)


def apply2(L: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Lorentz action ``L V L^dagger`` on a Hermitian two-by-two matrix."""
    L = np.asarray(L, dtype=complex)
    return L @ np.asarray(V, dtype=complex) @ L.conj().T


_BASIS4 = np.eye(4)


def two_to_four(L: np.ndarray) -> np.ndarray:
    """Four-by-four Lorentz matrix induced by an SL(2,C) element.

    Column ``k`` is the image of the ``k``-th basis four-vector under
    ``V -> L V L^dagger``.  ``L`` and ``-L`` give the same result.
    """
    L = np.asarray(L, dtype=complex)
    _require_unimodular(L, "L")
    cols = [coords_from_v(apply2(L, v_from_coords(e))) for e in _BASIS4]
    return np.array(cols, dtype=float).T


def is_lorentz(M: np.ndarray, tol: float = TOL4) -> bool:
    M = np.asarray(M, dtype=float)
    return bool(np.max(np.abs(M.T @ MINKOWSKI @ M - MINKOWSKI)) <= tol)


# ---------------------------------------------------------------------------
# little group of the light-like vector (1, 1, 0, 0)

def f1(u: float) -> np.ndarray:
    h = 0.5 * u * u
    return np.array(
        [
            [1 + h, -h, u, 0],
            [h, 1 - h, u, 0],
            [u, -u, 1, 0],
            [0, 0, 0, 1],
        ],
        dtype=float,
    )


def f2(v: float) -> np.ndarray:
    h = 0.5 * v * v
    return np.array(
        [
            [1 + h, -h, 0, v],
            [h, 1 - h, 0, v],
            [0, 0, 1, 0],
            [v, -v, 0, 1],
        ],
        dtype=float,
    )


def little_group_f(u: float, v: float) -> np.ndarray:
    """Two-parameter element ``F1(u) F2(v)`` fixing ``(1, 1, 0, 0)``."""
    return f1(u) @ f2(v)


# ---------------------------------------------------------------------------
# contraction of O(3) to E(2)

_CONTRACTIONS = {
    # which: (generator contracted, overall sign)
    "N1fromJ2": ("J2", -1.0),
    "N2fromJ1": ("J1", 1.0),
}


def contract_generator(which: str, eta: float) -> np.ndarray:
    """Boosted, rescaled transverse rotation generator.

    Returns ``s * 2 exp(-eta) B(eta) J B(eta)^-1`` with ``s = -1`` for
    ``N1fromJ2`` and ``s = +1`` for ``N2fromJ1``.  The error relative to
    ``N1`` (``N2``) decays as ``exp(-2 eta)``.
    """
    if eta < 0:
        raise ValueError("eta must be non-negative")
    try:
        name, sign = _CONTRACTIONS[which]
    except KeyError:
        raise ValueError(f"unknown contraction {which!r}") from None
    B, Binv = boost4(eta), boost4(-eta)
    return sign * 2.0 * np.exp(-eta) * (B @ generator(name, 4) @ Binv)


def contract_generator_printed(which: str, eta: float) -> np.ndarray:
    """``exp(-eta) B^-1 J B`` (negated for ``N2fromJ1``) taken literally.

    Kept for comparison with :func:`contract_generator`; its large-``eta``
    limit has entries of magnitude 1/2 and is not ``N1``/``N2``.
    """
    name = _CONTRACTIONS[which][0]
    sign = 1.0 if which == "N1fromJ2" else -1.0
    return sign * np.exp(-eta) * (boost4(-eta) @ generator(name, 4) @ boost4(eta))
