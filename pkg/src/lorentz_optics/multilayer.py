"""Periodic two-medium multilayers in the S-matrix picture.

One cycle is ``W = B(eta) P(phi1) B(-eta) P(phi2)`` with the boundary matrix
``B(eta) = [[cosh(eta/2), sinh(eta/2)], [sinh(eta/2), cosh(eta/2)]]`` and the
phase matrix ``P(phi) = diag(exp(-i phi/2), exp(i phi/2))``.  Conjugating
with :data:`~lorentz_optics.decompositions.CONJUGATOR` makes ``W`` real, where
its powers have a closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, NamedTuple

import numpy as np

from . import kernels
from .decompositions import CONJUGATOR, CONJUGATOR_INV, conjugate_real, rot
from .lens import Elliptic, Hyperbolic, Parabolic, classify_core, core_power

__all__ = [
    "LayerCycle",
    "boundary_matrix",
    "phase_matrix",
    "cycle_matrix",
    "real_cycle",
    "StackForm",
    "stack_form",
    "stack_closed_form",
    "ResonanceError",
    "SResult",
    "s_matrix_apply",
    "eta_from_reflectance",
    "parse_layer_spec",
    "layer_sweep",
]


def _wrap(a: float) -> float:
    a = math.fmod(a, 4 * math.pi)
    if a > 2 * math.pi:
        a -= 4 * math.pi
    elif a <= -2 * math.pi:
        a += 4 * math.pi
    return a


@dataclass(frozen=True)
class LayerCycle:
    eta: float
    phi1: float
    phi2: float

    def __post_init__(self):
        for name in ("eta", "phi1", "phi2"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    def wrapped(self) -> tuple[float, float]:
        """Phases wrapped to ``(-2 pi, 2 pi]``, for reporting only."""
        return _wrap(self.phi1), _wrap(self.phi2)


def boundary_matrix(eta: float) -> np.ndarray:
    c, s = math.cosh(0.5 * eta), math.sinh(0.5 * eta)
    return np.array([[c, s], [s, c]], dtype=complex)


def phase_matrix(phi: float) -> np.ndarray:
    return np.diag([np.exp(-0.5j * phi), np.exp(0.5j * phi)])


def cycle_matrix(c: LayerCycle) -> np.ndarray:
    return (
        boundary_matrix(c.eta)
        @ phase_matrix(c.phi1)
        @ boundary_matrix(-c.eta)
        @ phase_matrix(c.phi2)
    )


def real_cycle(c: LayerCycle) -> np.ndarray:
    """The real Sp(2) image ``C W C^-1`` of one cycle."""
    return conjugate_real(cycle_matrix(c))


@dataclass(frozen=True)
class StackForm:
    """Boosted form of the real one-cycle matrix ``V``.

    ``V = R(tilt) @ core @ R(-tilt)`` where ``core`` has equal diagonal
    entries and is ``B(-mu) R(angle) B(mu)`` (elliptic) or
    ``sign * B(-mu) X(angle) B(mu)`` (hyperbolic) with
    ``B(mu) = diag(exp(mu/2), exp(-mu/2))``.  The tilt rotation is needed
    because the trailing phase factor leaves ``V`` with unequal diagonal.
    ``brute_force`` marks parabolic cycles, whose powers are computed
    directly.
    """

    mu: float
    kind: Literal["elliptic", "hyperbolic", "parabolic"]
    angle: float
    tilt: float = 0.0
    sign: float = 1.0
    brute_force: bool = False

    @property
    def growth_per_cycle(self) -> float:
        """Magnitude of the dominant eigenvalue of one cycle."""
        if self.kind == "hyperbolic":
            return math.exp(0.5 * abs(self.angle))
        return 1.0


def _balance(V: np.ndarray) -> float:
    """Angle ``beta`` for which ``R(-beta) V R(beta)`` has equal diagonal entries."""
    p = 0.5 * (V[0, 0] - V[1, 1])
    q = 0.5 * (V[0, 1] + V[1, 0])
    if p == 0.0:
        return 0.0
    return math.atan2(-p, q)


def _core_form(V: np.ndarray):
    beta = _balance(V)
    core = rot(-beta) @ V @ rot(beta)
    core[1, 1] = core[0, 0] = 0.5 * (core[0, 0] + core[1, 1])
    return beta, classify_core(core)


def stack_form(c: LayerCycle) -> StackForm:
    beta, form = _core_form(real_cycle(c))
    if isinstance(form, Elliptic):
        return StackForm(form.eta, "elliptic", form.phi, beta)
    if isinstance(form, Hyperbolic):
        return StackForm(form.eta, "hyperbolic", form.chi, beta, form.sign)
    return StackForm(0.0, "parabolic", 0.0, beta, form.sign, brute_force=True)


def stack_closed_form(c: LayerCycle, n: int) -> tuple[np.ndarray, StackForm]:
    """``W^n`` for ``n`` cycles via the boosted real form, plus that form.

    Parabolic cycles fall back to a direct matrix power and set
    ``brute_force`` on the returned form.
    """
    if n < 1:
        raise ValueError("number of cycles must be >= 1")
    V = real_cycle(c)
    beta, form = _core_form(V)
    if isinstance(form, Parabolic):
        sf = StackForm(0.0, "parabolic", 0.0, beta, form.sign, brute_force=True)
        return np.linalg.matrix_power(cycle_matrix(c), n), sf
    if isinstance(form, Elliptic):
        sf = StackForm(form.eta, "elliptic", form.phi, beta)
    else:
        sf = StackForm(form.eta, "hyperbolic", form.chi, beta, form.sign)
    Vn = rot(beta) @ core_power(form, n) @ rot(-beta)
    return CONJUGATOR_INV @ Vn @ CONJUGATOR, sf


class ResonanceError(ArithmeticError):
    """The ``A`` entry of the S matrix vanishes; reflection and transmission diverge."""


class SResult(NamedTuple):
    psi1: complex
    psi2: complex
    r: complex
    t: complex


def s_matrix_apply(W: np.ndarray, psi3: complex = 1.0) -> SResult:
    """Incoming and reflected amplitudes for transmitted amplitude ``psi3``.

    ``(psi1, psi2) = W @ (psi3, 0)``, ``r = C/A`` and ``t = 1/A``.
    """
    W = np.asarray(W, dtype=complex)
    A, C = W[0, 0], W[1, 0]
    if A == 0:
        raise ResonanceError("S matrix has A = 0 (resonant divergence)")
    return SResult(complex(A * psi3), complex(C * psi3), complex(C / A), complex(1.0 / A))


def eta_from_reflectance(rho: float) -> float:
    """Boundary parameter ``eta = ln((1 + rho) / (1 - rho))`` from amplitude reflectance.

    This mapping is a convention of this package; ``|rho| < 1`` is required.
    """
    if not abs(rho) < 1.0:
        raise ValueError("amplitude reflectance must satisfy |rho| < 1")
    return math.log((1.0 + rho) / (1.0 - rho))


def parse_layer_spec(lines: Iterable[str]) -> list[tuple[LayerCycle, int]]:
    """Parse ``eta phi1 phi2 N`` lines; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"line {lineno}: expected 'eta phi1 phi2 N', got {raw.strip()!r}")
        try:
            eta, phi1, phi2 = (float(p) for p in parts[:3])
            n = int(parts[3])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if n < 1:
            raise ValueError(f"line {lineno}: N must be >= 1")
        out.append((LayerCycle(eta, phi1, phi2), n))
    return out


def layer_sweep(eta: float, phi1s, phi2s, n: int) -> list[tuple[float, float, int, float, float, float, float]]:
    """Rows ``(phi1, phi2, N, re_r, im_r, abs_r2, abs_t2)`` over the grid ``phi1s x phi2s``.

    Rows are ordered with ``phi1`` outermost.
    """
    if n < 1:
        raise ValueError("number of cycles must be >= 1")
    g1, g2 = np.meshgrid(np.asarray(phi1s, float), np.asarray(phi2s, float), indexing="ij")
    g1, g2 = g1.ravel(), g2.ravel()
    powers = kernels.layer_power(eta, g1, g2, n)
    A, C = powers[:, 0, 0], powers[:, 1, 0]
    rows = []
    for p1, p2, a, c in zip(g1, g2, A, C):
        if a == 0:
            raise ResonanceError(f"A = 0 at phi1={p1}, phi2={p2}")
        r = c / a
        rows.append((float(p1), float(p2), n, float(r.real), float(r.imag), float(abs(r) ** 2), float(1.0 / abs(a) ** 2)))
    return rows
