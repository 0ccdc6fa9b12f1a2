"""Invariant suite run by ``lorentz-optics check --all``.

Each check returns a :class:`CheckResult` with the worst error observed and
the tolerance it is held to.  Random inputs come from a fixed seed so the
report is reproducible.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

import numpy as np

from . import decompositions as dec
from . import lens, multilayer, oscillator, polarization, sl2

__all__ = ["CheckResult", "CHECKS", "run_checks"]

SEED = 20240611


class CheckResult(NamedTuple):
    name: str
    error: float
    tol: float

    @property
    def passed(self) -> bool:
        return bool(self.error <= self.tol)


def _random_sl2c(rng: np.random.Generator) -> np.ndarray:
    M = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    return M / np.sqrt(np.linalg.det(M))


def _random_sp2(rng: np.random.Generator) -> np.ndarray:
    M = rng.normal(size=(2, 2))
    d = np.linalg.det(M)
    if d < 0:
        M[:, 0] *= -1
        d = -d
    return M / math.sqrt(d)


def _commutators(rng) -> float:
    err = 0.0
    for rep in (2, 4):
        g = {n: sl2.generator(n, rep) for n in sl2.GENERATOR_NAMES}
        for i, j, k in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
            Ji, Jj, Jk = g[f"J{i}"], g[f"J{j}"], g[f"J{k}"]
            Ki, Kj, Kk = g[f"K{i}"], g[f"K{j}"], g[f"K{k}"]
            err = max(
                err,
                np.abs(sl2.commutator(Ji, Jj) - 1j * Jk).max(),
                np.abs(sl2.commutator(Ji, Kj) - 1j * Kk).max(),
                np.abs(sl2.commutator(Ki, Kj) + 1j * Jk).max(),
            )
    return float(err)


def _homomorphism(rng) -> float:
    err = 0.0
    for _ in range(50):
        A, B = _random_sl2c(rng), _random_sl2c(rng)
        MA, MB = sl2.two_to_four(A), sl2.two_to_four(B)
        ref = sl2.two_to_four(A @ B)
        err = max(err, np.abs(MA @ MB - ref).max() / max(1.0, np.abs(ref).max()))
    return float(err)


def _stokes(rng) -> float:
    err = 0.0
    for _ in range(50):
        psi = rng.normal(size=(3, 2)) + 1j * rng.normal(size=(3, 2))
        w = rng.uniform(size=3)
        C = polarization.coherency_from_jones(zip(w / w.sum(), psi))
        S = polarization.stokes_from_coherency(C)
        m2 = polarization.invariant_mass_sq(S)
        G = _random_sl2c(rng)
        S2 = polarization.stokes_from_coherency(polarization.transform_coherency(G, C))
        err = max(
            err,
            np.abs(polarization.coherency_from_stokes(S) - C).max(),
            abs(m2 - 4 * np.linalg.det(C).real),
            abs(polarization.invariant_mass_sq(S2) - m2) / max(1.0, S2[0] ** 2),
        )
    return float(err)


def _little_group(rng) -> float:
    k = np.array([1.0, 1.0, 0.0, 0.0])
    err = 0.0
    for theta in np.linspace(-3.0, 3.0, 13):
        for alpha in (0.0, 0.3, 0.7, 0.95):
            p = polarization.DecoherenceParams(theta, alpha)
            closed = polarization.decohered_rotation(p)
            triple = polarization.boosted_rotation(p.boosted_angle, p.eta)
            err = max(err, np.abs(closed - triple).max() / max(1.0, np.abs(triple).max()))
        u = -2 * math.tan(theta / 2)
        F = sl2.little_group_f(u, 0.5 * u)
        err = max(err, np.abs(F @ k - k).max() / max(1.0, np.abs(F).max()))
    return float(err)


def _contraction(rng) -> float:
    e1 = np.abs(sl2.contract_generator("N1fromJ2", 10.0) - sl2.generator("N1", 4)).max()
    e2 = np.abs(sl2.contract_generator("N2fromJ1", 10.0) - sl2.generator("N2", 4)).max()
    return float(max(e1, e2))


def _cavity(rng) -> float:
    err = 0.0
    for x in np.linspace(-1.5, 3.5, 41):
        for n in (1, 4, 16, 32):
            res = lens.cavity_cycles(float(x), n)
            ref = np.linalg.matrix_power(lens.one_lens_core(float(x)), 2 * n)
            err = max(err, np.abs(res.matrix - ref).max() / max(1.0, np.abs(ref).max()))
    return float(err)


def _decompositions(rng) -> float:
    err = 0.0
    for _ in range(100):
        M = _random_sp2(rng)
        S, O = dec.symmetric_orthogonal(M)
        err = max(
            err,
            np.abs(dec.bargmann(M).matrix() - M).max(),
            np.abs(S @ O - M).max(),
            np.abs(dec.iwasawa(M).matrix() - M).max(),
        )
    _, C = dec.iwasawa_constraint(math.pi / 6)
    err = max(err, np.abs(C - np.array([[1.0, 0.0], [2 * math.sqrt(3), 1.0]])).max())
    return float(err)


def _multilayer(rng) -> float:
    err = 0.0
    for _ in range(40):
        c = multilayer.LayerCycle(rng.uniform(-2, 2), *rng.uniform(-6, 6, size=2))
        W = multilayer.cycle_matrix(c)
        for n in (1, 8, 64):
            Wn, _ = multilayer.stack_closed_form(c, n)
            ref = np.linalg.matrix_power(W, n)
            err = max(err, np.abs(Wn - ref).max() / max(1.0, np.abs(ref).max()))
    return float(err)


def _oscillator(rng) -> float:
    err = 0.0
    for eta in (0.0, 0.5, 1.0, 1.5):
        err = max(
            err,
            abs(oscillator.quadrature_norm(eta) - 1.0),
            np.abs(oscillator.quadrature_overlap(eta, 10) - oscillator.expansion_coeffs(eta, 10)).max(),
        )
    return float(err)


def _synthesis(rng) -> float:
    err = 0.0
    for _ in range(50):
        M = _random_sp2(rng)
        system = dec.three_lens_synthesis(M)
        if sum(isinstance(e, lens.Lens) for e in system) > 3:
            return math.inf
        err = max(err, dec.synthesis_residual(system, M))
    return float(err)


CHECKS: dict[str, tuple[Callable[[np.random.Generator], float], float]] = {
    "commutators": (_commutators, 0.0),
    "homomorphism": (_homomorphism, 1e-10),
    "stokes-coherency": (_stokes, 1e-10),
    "little-group": (_little_group, 1e-12),
    "contraction": (_contraction, 1e-7),
    "cavity": (_cavity, 1e-9),
    "decompositions": (_decompositions, 1e-10),
    "multilayer": (_multilayer, 1e-9),
    "oscillator": (_oscillator, 1e-6),
    "synthesis": (_synthesis, 1e-8),
}


def run_checks(names=None) -> list[CheckResult]:
    names = list(CHECKS) if names is None else list(names)
    out = []
    for name in names:
        fn, tol = CHECKS[name]
        rng = np.random.default_rng(SEED)
        try:
            error = fn(rng)
        except Exception:  # a raising check is a failing check
            error = math.inf
        out.append(CheckResult(name, error, tol))
    return out
