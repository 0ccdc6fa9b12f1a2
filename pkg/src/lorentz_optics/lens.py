"""Paraxial ray-transfer (ABCD) optics, the one-lens core matrix and laser cavities.

Systems are ordered lists of :class:`Lens` and :class:`Gap` elements; the
first element is the first one the ray meets, so ``compose([e1, e2])`` is
``M(e2) @ M(e1)``.

The core matrix ``[[x - 1, x - 2], [x, x - 1]]`` (``x = z/f``) has equal
diagonal entries and is classified as a boosted rotation, a boosted boost or
a parabolic (triangular) element::

    elliptic    [[cos(phi/2),          -exp(-eta) sin(phi/2)],
                 [exp(eta) sin(phi/2),  cos(phi/2)         ]]  = B(-eta) R(phi) B(eta)
    hyperbolic  [[cosh(chi/2),          exp(-eta) sinh(chi/2)],
                 [exp(eta) sinh(chi/2), cosh(chi/2)          ]] = B(-eta) X(chi) B(eta)

Hyperbolic and parabolic forms carry an overall ``sign`` so that negative
traces are covered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

import numpy as np

from . import kernels

__all__ = [
    "Lens",
    "Gap",
    "OpticalElement",
    "element_matrix",
    "compose",
    "one_lens_core",
    "Elliptic",
    "Hyperbolic",
    "Parabolic",
    "CoreForm",
    "classify_core",
    "core_power",
    "CavityResult",
    "cavity_cycles",
    "cavity_sweep",
]

PARABOLIC_TOL = 1e-10


@dataclass(frozen=True)
class Lens:
    f: float

    def __post_init__(self):
        if self.f == 0 or not math.isfinite(self.f):
            raise ValueError(f"focal length must be finite and non-zero, got {self.f}")


@dataclass(frozen=True)
class Gap:
    z: float

    def __post_init__(self):
        if not (math.isfinite(self.z) and self.z >= 0):
            raise ValueError(f"gap length must be finite and >= 0, got {self.z}")


OpticalElement = Union[Lens, Gap]


def element_matrix(e: OpticalElement) -> np.ndarray:
    if isinstance(e, Lens):
        return np.array([[1.0, 0.0], [-1.0 / e.f, 1.0]])
    if isinstance(e, Gap):
        return np.array([[1.0, e.z], [0.0, 1.0]])
    raise TypeError(f"not an optical element: {e!r}")


def compose(system: Sequence[OpticalElement]) -> np.ndarray:
    """Ray matrix of an ordered system; the first element acts first."""
    if len(system) == 0:
        raise ValueError("system must contain at least one element")
    M = np.eye(2)
    for e in system:
        M = element_matrix(e) @ M
    return M


def one_lens_core(x: float) -> np.ndarray:
    return np.array([[x - 1.0, x - 2.0], [x, x - 1.0]])


# ---------------------------------------------------------------------------
# classification of equal-diagonal unimodular matrices

@dataclass(frozen=True)
class Elliptic:
    eta: float
    phi: float

    def matrix(self) -> np.ndarray:
        return _elliptic(self.eta, self.phi)


@dataclass(frozen=True)
class Hyperbolic:
    eta: float
    chi: float
    sign: float = 1.0

    def matrix(self) -> np.ndarray:
        return self.sign * _hyperbolic(self.eta, self.chi)


@dataclass(frozen=True)
class Parabolic:
    lower_triangular: bool
    upper: float = 0.0
    lower: float = 0.0
    sign: float = 1.0

    def matrix(self) -> np.ndarray:
        return self.sign * np.array([[1.0, self.upper], [self.lower, 1.0]])


CoreForm = Union[Elliptic, Hyperbolic, Parabolic]


def _elliptic(eta: float, phi: float) -> np.ndarray:
    c, s = math.cos(0.5 * phi), math.sin(0.5 * phi)
    return np.array([[c, -math.exp(-eta) * s], [math.exp(eta) * s, c]])


def _hyperbolic(eta: float, chi: float) -> np.ndarray:
    c, s = math.cosh(0.5 * chi), math.sinh(0.5 * chi)
    return np.array([[c, math.exp(-eta) * s], [math.exp(eta) * s, c]])


def classify_core(M: np.ndarray) -> CoreForm:
    """Classify a unimodular matrix with equal diagonal entries by its trace.

    ``|tr M| < 2`` is elliptic (stable), ``|tr M| > 2`` hyperbolic, and a
    trace within ``1e-10`` of ``+-2`` (or an exactly vanishing off-diagonal
    entry) parabolic.  ``phi`` is returned in ``(-2 pi, 2 pi]`` because the
    half-angle rotation has period ``4 pi``.
    """
    M = np.asarray(M, dtype=float)
    a, b, c, d = M[0, 0], M[0, 1], M[1, 0], M[1, 1]
    if abs(a - d) > PARABOLIC_TOL * max(1.0, abs(a), abs(d)):
        raise ValueError("diagonal entries differ; not a boosted core form")
    if abs(a * d - b * c - 1.0) > 1e-9 * max(1.0, float(np.max(np.abs(M))) ** 2):
        raise ValueError("matrix is not unimodular")
    half = 0.5 * (a + d)
    if b == 0.0 or c == 0.0 or abs(abs(half) - 1.0) <= 0.5 * PARABOLIC_TOL:
        sign = 1.0 if half >= 0 else -1.0
        return Parabolic(abs(b) <= abs(c), sign * b, sign * c, sign)
    if abs(half) < 1.0:
        # b*c = a^2 - 1 < 0
        eta = 0.5 * math.log(-c / b)
        s_half = math.copysign(math.sqrt(-b * c), c)
        return Elliptic(eta, 2.0 * math.atan2(s_half, half))
    sign = 1.0 if half > 0 else -1.0
    eta = 0.5 * math.log(c / b)
    # exp(eta) sinh(chi/2) = sign * c
    return Hyperbolic(eta, 2.0 * math.asinh(sign * c * math.exp(-eta)), sign)


def core_power(form: CoreForm, n: int) -> np.ndarray:
    """Closed form of ``M^n`` for a classified core: the angle scales by ``n``."""
    if isinstance(form, Elliptic):
        return _elliptic(form.eta, n * form.phi)
    if isinstance(form, Hyperbolic):
        return form.sign**n * _hyperbolic(form.eta, n * form.chi)
    if isinstance(form, Parabolic):
        return form.sign**n * np.array([[1.0, n * form.upper], [n * form.lower, 1.0]])
    raise TypeError(f"not a core form: {form!r}")


# ---------------------------------------------------------------------------
# laser cavity

class CavityResult(NamedTuple):
    matrix: np.ndarray
    stable: bool
    form: CoreForm


def cavity_cycles(x: float, n: int) -> CavityResult:
    """``C^(2n)`` for ``n`` round trips starting at the cavity midpoint.

    One round trip is ``C^2`` of the core ``C = one_lens_core(x)``.  The
    cavity is stable exactly when the core is elliptic, i.e. ``0 < x < 2``.
    """
    if not math.isfinite(x):
        raise ValueError("x must be finite")
    if n < 1:
        raise ValueError("number of cycles must be >= 1")
    form = classify_core(one_lens_core(x))
    return CavityResult(core_power(form, 2 * n), isinstance(form, Elliptic), form)


def cavity_sweep(xs, n: int) -> list[tuple[float, int, bool, float, float]]:
    """Rows ``(x, n, stable, trace, entry_max)`` of ``C^(2n)`` over an x-grid."""
    xs = np.asarray(xs, dtype=float)
    powers = kernels.core_power(xs, 2 * n)
    rows = []
    for x, P in zip(xs, powers):
        stable = abs(x - 1.0) < 1.0
        rows.append((float(x), n, bool(stable), float(P[0, 0] + P[1, 1]), float(np.max(np.abs(P)))))
    return rows
