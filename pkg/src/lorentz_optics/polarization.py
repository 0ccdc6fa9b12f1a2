"""Two-beam polarization and interferometer calculus.

Jones vectors are length-2 complex arrays.  The coherency (density) matrix of
an ensemble is ``C = sum_i w_i psi_i psi_i^dagger`` so that an optical element
``G`` acts as ``C -> G C G^dagger``.  The Stokes vector is the four-vector
whose Hermitian matrix is ``2 C``::

    C = 1/2 [[S0 + S1, S2 - i S3],
             [S2 + i S3, S0 - S1]]

which makes ``M^2 = S0^2 - S1^2 - S2^2 - S3^2 = 4 det C`` and the Mueller
matrix of ``G`` equal to :func:`~lorentz_optics.sl2.two_to_four` of ``G``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

import numpy as np

from .sl2 import (
    boost4,
    boost_z,
    phase_shift,
    rotation,
    rotation4,
    two_to_four,
)

__all__ = [
    "coherency_from_jones",
    "stokes_from_coherency",
    "coherency_from_stokes",
    "transform_coherency",
    "invariant_mass_sq",
    "purity",
    "PolarizationState",
    "classify",
    "BeamSplit",
    "PhaseShift",
    "Attenuate",
    "MuellerResult",
    "mueller_of",
    "DecoherenceParams",
    "decohered_rotation",
]

CLASSIFY_EPS = 1e-9


def coherency_from_jones(ensemble: Iterable[tuple[float, Iterable[complex]]]) -> np.ndarray:
    """Coherency matrix of a weighted ensemble of Jones vectors.

    Parameters
    ----------
    ensemble : iterable of (weight, jones)
        Non-negative weights summing to one, each paired with a two-component
        complex Jones vector.

    Returns
    -------
    numpy.ndarray
        ``(2, 2)`` complex Hermitian positive semidefinite matrix.
    """
    C = np.zeros((2, 2), dtype=complex)
    total = 0.0
    for weight, psi in ensemble:
        weight = float(weight)
        if weight < 0 or not math.isfinite(weight):
            raise ValueError(f"weights must be finite and non-negative, got {weight}")
        psi = np.asarray(psi, dtype=complex).reshape(2)
        C += weight * np.outer(psi, psi.conj())
        total += weight
    if abs(total - 1.0) > 1e-12:
        raise ValueError(f"weights must sum to 1, got {total!r}")
    return C


def stokes_from_coherency(C: np.ndarray) -> np.ndarray:
    C = np.asarray(C, dtype=complex)
    s0 = (C[0, 0] + C[1, 1]).real
    s1 = (C[0, 0] - C[1, 1]).real
    s2 = (C[0, 1] + C[1, 0]).real
    s3 = (1j * (C[0, 1] - C[1, 0])).real
    return np.array([s0, s1, s2, s3])


def coherency_from_stokes(S) -> np.ndarray:
    s0, s1, s2, s3 = (float(x) for x in S)
    return 0.5 * np.array(
        [[s0 + s1, s2 - 1j * s3], [s2 + 1j * s3, s0 - s1]], dtype=complex
    )


def transform_coherency(G: np.ndarray, C: np.ndarray) -> np.ndarray:
    G = np.asarray(G, dtype=complex)
    return G @ np.asarray(C, dtype=complex) @ G.conj().T


def invariant_mass_sq(S) -> float:
    s0, s1, s2, s3 = (float(x) for x in S)
    return s0 * s0 - s1 * s1 - s2 * s2 - s3 * s3


def purity(C: np.ndarray) -> float:
    """``tr(rho^2)`` of the trace-normalised matrix; 1 for pure, 1/2 for random."""
    C = np.asarray(C, dtype=complex)
    tr = (C[0, 0] + C[1, 1]).real
    if tr <= 0:
        raise ValueError("coherency matrix must have positive trace")
    rho = C / tr
    return float(np.trace(rho @ rho).real)


@dataclass(frozen=True)
class PolarizationState:
    """Classification of a Stokes vector on the Poincare sphere.

    ``s0`` and ``s`` are the outer and inner radii.  For partial states
    ``cos_chi = s / s0`` and ``eta`` is the boost parameter that squeezes
    ``(1, 0, 0, 0)`` into the direction of this state; ``eta`` is ``inf``
    when ``cos_chi`` rounds to one.
    """

    kind: str  # "pure" | "partial" | "random"
    s0: float
    s: float
    cos_chi: float | None = None
    eta: float | None = None


def classify(S, eps: float = CLASSIFY_EPS) -> PolarizationState:
    s0, s1, s2, s3 = (float(x) for x in S)
    if not s0 > 0:
        raise ValueError(f"S0 must be positive, got {s0}")
    s = math.sqrt(s1 * s1 + s2 * s2 + s3 * s3)
    if invariant_mass_sq(S) < eps * s0 * s0:
        return PolarizationState("pure", s0, s)
    if s < eps * s0:
        return PolarizationState("random", s0, s)
    cos_chi = s / s0
    if cos_chi >= 1.0:
        eta = math.inf
    else:
        eta = 0.5 * math.log((1 + cos_chi) / (1 - cos_chi))
    return PolarizationState("partial", s0, s, cos_chi, eta)


# ---------------------------------------------------------------------------
# interferometer elements

@dataclass(frozen=True)
class BeamSplit:
    theta: float


@dataclass(frozen=True)
class PhaseShift:
    phi: float


@dataclass(frozen=True)
class Attenuate:
    eta1: float
    eta2: float


Element = Union[BeamSplit, PhaseShift, Attenuate]


class MuellerResult(NamedTuple):
    jones: np.ndarray
    mueller: np.ndarray
    common_factor: float


def mueller_of(element: Element) -> MuellerResult:
    """Jones matrix, Mueller matrix and scalar prefactor of an element.

    For :class:`Attenuate` the Jones matrix ``diag(exp(-eta1), exp(-eta2))``
    is split into ``exp(-(eta1 + eta2)/2)`` times the unimodular squeeze with
    ``eta = eta2 - eta1``; the returned Jones matrix is the squeeze.
    """
    factor = 1.0
    if isinstance(element, BeamSplit):
        G = rotation(element.theta)
    elif isinstance(element, PhaseShift):
        G = phase_shift(element.phi)
    elif isinstance(element, Attenuate):
        G = boost_z(element.eta2 - element.eta1)
        factor = math.exp(-0.5 * (element.eta1 + element.eta2))
    else:
        raise TypeError(f"not an interferometer element: {element!r}")
    return MuellerResult(G, two_to_four(G), factor)


# ---------------------------------------------------------------------------
# decoherence interpolation between O(3)-like and E(2)-like little groups

@dataclass(frozen=True)
class DecoherenceParams:
    theta: float
    alpha: float

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")

    @property
    def u(self) -> float:
        return -2.0 * math.tan(0.5 * self.theta)

    @property
    def w(self) -> float:
        t = math.tan(0.5 * self.theta)
        return 1.0 / (1.0 + (1.0 - self.alpha**2) * t * t)

    @property
    def eta(self) -> float:
        """Boost rapidity ``artanh(alpha)``; infinite at ``alpha = 1``."""
        return math.atanh(self.alpha) if self.alpha < 1 else math.inf

    @property
    def boosted_angle(self) -> float:
        """Angle ``theta'`` with ``B(eta) R(theta') B(-eta)`` equal to the closed form.

        ``tan(theta'/2) = sqrt(1 - alpha^2) tan(theta/2)``; zero at ``alpha = 1``.
        """
        t = math.tan(0.5 * self.theta)
        return 2.0 * math.atan(math.sqrt(1.0 - self.alpha**2) * t)


def decohered_rotation(p: DecoherenceParams) -> np.ndarray:
    """Closed-form boosted rotation in the ``(alpha, u, w)`` parametrisation.

    ``alpha = 0`` gives :func:`~lorentz_optics.sl2.rotation4` of ``theta``;
    ``alpha = 1`` gives ``F1(u)``.  For ``alpha < 1`` the matrix equals
    ``B(eta) R(theta') B(-eta)`` with ``theta' = p.boosted_angle``.
    """
    a, u, w = p.alpha, p.u, p.w
    q = 0.5 * u * u * w
    return np.array(
        [
            [1 + a * a * q, -a * q, a * u * w, 0],
            [a * q, 1 - q, u * w, 0],
            [a * u * w, -u * w, 1 - (1 - a * a) * q, 0],
            [0, 0, 0, 1],
        ],
        dtype=float,
    )


def boosted_rotation(theta: float, eta: float) -> np.ndarray:
    """Literal triple product ``B(eta) R(theta) B(-eta)`` in four dimensions."""
    return boost4(eta) @ rotation4(theta) @ boost4(-eta)
