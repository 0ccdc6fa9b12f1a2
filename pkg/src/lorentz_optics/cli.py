"""Command-line interface.

``parse`` turns an argument list into a :class:`CommandPlan`; ``execute``
runs a plan and returns the process exit code (0 success, 1 domain error,
2 usage error).  Single results are written as JSON and grids as CSV; floats
are printed with 17 significant digits so output is byte-stable.

Relative ``--output`` paths are resolved against ``$LORENTZ_OPTICS_OUTDIR``
when that variable is set.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from . import checks, lens, multilayer, oscillator, polarization
from . import decompositions as dec

__all__ = ["UsageError", "CommandPlan", "Table", "parse", "execute", "main", "OUTDIR_ENV"]

OUTDIR_ENV = "LORENTZ_OPTICS_OUTDIR"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CommandPlan:
    command: str
    params: dict[str, Any] = field(default_factory=dict)
    fmt: str | None = None
    output: str | None = None


@dataclass
class Table:
    header: list[str]
    rows: list[tuple]


# ---------------------------------------------------------------------------
# argument types

def _finite(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return x


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return n


def _nonneg_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return n


def _floats(count: int | None):
    def conv(text: str) -> tuple[float, ...]:
        vals = tuple(_finite(p.strip()) for p in text.split(","))
        if count is not None and len(vals) != count:
            raise argparse.ArgumentTypeError(f"expected {count} comma-separated numbers, got {len(vals)}")
        return vals

    return conv


def _grid(text: str) -> tuple[float, float, int]:
    """``start:stop:count`` (inclusive linspace)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"grid must be start:stop:count, got {text!r}")
    return _finite(parts[0]), _finite(parts[1]), _positive_int(parts[2])


def _system(text: str) -> tuple[tuple[str, float], ...]:
    """``lens:F,gap:Z,...`` in the order the ray meets the elements."""
    items = []
    for part in text.split(","):
        kind, _, value = part.strip().partition(":")
        kind = kind.lower()
        if kind not in ("lens", "gap") or not value:
            raise argparse.ArgumentTypeError(f"element must be lens:F or gap:Z, got {part!r}")
        items.append((kind, _finite(value)))
    return tuple(items)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand from resetting a value given before it
    common.add_argument("--format", choices=("json", "csv"), dest="fmt", default=argparse.SUPPRESS, help="output format")
    common.add_argument("--output", "-o", default=argparse.SUPPRESS, help="output file (default: standard output)")

    p = _Parser(prog="lorentz-optics", description="Lorentz-group numerics for two-by-two optics.", parents=[common])
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    # polar
    polar = sub.add_parser("polar", help="Jones/Stokes/Mueller calculus").add_subparsers(
        dest="action", required=True, parser_class=_Parser
    )
    s = polar.add_parser("stokes", parents=[common], help="Stokes vector of a (mixed) Jones ensemble")
    s.add_argument("--jones", type=_floats(4), action="append", required=True, metavar="RE1,IM1,RE2,IM2")
    s.add_argument("--weights", type=_floats(None), metavar="W1,W2,...")
    s = polar.add_parser("classify", parents=[common], help="pure/partial/random classification")
    s.add_argument("--stokes", type=_floats(4), required=True, metavar="S0,S1,S2,S3")
    s = polar.add_parser("mueller", parents=[common], help="Jones and Mueller matrices of an element")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--beamsplit", type=_finite, metavar="THETA")
    g.add_argument("--phase", type=_finite, metavar="PHI")
    g.add_argument("--attenuate", type=_floats(2), metavar="ETA1,ETA2")
    s = polar.add_parser("decohere", parents=[common], help="decoherence-interpolated rotation")
    s.add_argument("--theta", type=_finite, required=True)
    s.add_argument("--alpha", type=_finite, required=True)

    # lens
    ln = sub.add_parser("lens", help="ray-transfer matrices").add_subparsers(dest="action", required=True, parser_class=_Parser)
    s = ln.add_parser("compose", parents=[common], help="matrix of a lens/gap system")
    s.add_argument("--system", type=_system, required=True, metavar="lens:F,gap:Z,...")
    s = ln.add_parser("core", parents=[common], help="one-lens core matrix and its class")
    s.add_argument("--x", type=_finite, required=True)

    # cavity
    s = sub.add_parser("cavity", parents=[common], help="laser cavity round trips")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--x", type=_finite)
    g.add_argument("--x-grid", type=_grid, metavar="START:STOP:COUNT")
    s.add_argument("--cycles", type=_positive_int, default=1)

    # layers
    ly = sub.add_parser("layers", help="periodic multilayers").add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in ("single", "sweep"):
        s = ly.add_parser(name, parents=[common])
        g = s.add_mutually_exclusive_group(required=True)
        g.add_argument("--eta", type=_finite)
        g.add_argument("--reflectance", type=_finite, metavar="RHO")
        s.add_argument("--n", type=_positive_int, default=1, help="number of cycles")
        if name == "single":
            s.add_argument("--phi1", type=_finite, required=True)
            s.add_argument("--phi2", type=_finite, required=True)
            s.add_argument("--psi3", type=_floats(2), default=(1.0, 0.0), metavar="RE,IM")
        else:
            s.add_argument("--phi1-grid", type=_grid, required=True, metavar="START:STOP:COUNT")
            s.add_argument("--phi2-grid", type=_grid, required=True, metavar="START:STOP:COUNT")
    s = ly.add_parser("file", parents=[common], help="evaluate 'eta phi1 phi2 N' lines")
    s.add_argument("path")

    # decomp
    dc = sub.add_parser("decomp", help="matrix decompositions").add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in ("bargmann", "polar", "iwasawa", "synth"):
        s = dc.add_parser(name, parents=[common])
        s.add_argument("--m", type=_floats(4), required=True, metavar="A,B,C,D")
    s = dc.add_parser("constraint", parents=[common])
    s.add_argument("--theta", type=_finite, required=True)

    # osc
    oc = sub.add_parser("osc", help="squeezed oscillator").add_subparsers(dest="action", required=True, parser_class=_Parser)
    s = oc.add_parser("psi", parents=[common], help="wave function on a (z, t) grid")
    s.add_argument("--eta", type=_finite, required=True)
    s.add_argument("--z-grid", type=_grid, default=(-4.0, 4.0, 41), metavar="START:STOP:COUNT")
    s.add_argument("--t-grid", type=_grid, default=(-4.0, 4.0, 41), metavar="START:STOP:COUNT")
    s = oc.add_parser("coeffs", parents=[common], help="expansion coefficients")
    s.add_argument("--eta", type=_finite, required=True)
    s.add_argument("--kmax", type=_nonneg_int, default=10)
    s.add_argument("--verify", action="store_true", help="also report quadrature overlaps")

    # check
    s = sub.add_parser("check", parents=[common], help="run the invariant suite")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--all", action="store_true")
    g.add_argument("--only", choices=sorted(checks.CHECKS), action="append")
    return p


_PARSER = None


def parse(argv: Sequence[str]) -> CommandPlan:
    """Validate ``argv`` into a plan; raises :class:`UsageError` on bad input."""
    global _PARSER
    if _PARSER is None:
        _PARSER = _build_parser()
    ns = vars(_PARSER.parse_args(list(argv)))
    cmd = ns.pop("cmd")
    action = ns.pop("action", None)
    fmt = ns.pop("fmt", None)
    output = ns.pop("output", None)
    name = f"{cmd}.{action}" if action else cmd
    return CommandPlan(name, ns, fmt, output)


# ---------------------------------------------------------------------------
# output

def _num(x) -> str:
    x = float(x)
    if not math.isfinite(x):
        return "null"
    if x == 0.0:
        x = 0.0  # drop the sign of -0.0
    return format(x, ".17g")


def _to_json(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return f"[{_num(obj.real)}, {_num(obj.imag)}]"
    if isinstance(obj, str):
        import json

        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        return _to_json(obj.tolist())
    if isinstance(obj, dict):
        return "{" + ", ".join(f'"{k}": {_to_json(v)}' for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _csv_cell(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        x = float(v)
        return format(0.0 if x == 0.0 else x, ".17g")
    return str(v)


def render(result, fmt: str) -> str:
    if fmt == "csv":
        if not isinstance(result, Table):
            raise UsageError("this command produces a single record; use --format json")
        lines = [",".join(result.header)]
        lines += [",".join(_csv_cell(v) for v in row) for row in result.rows]
        return "\n".join(lines) + "\n"
    if isinstance(result, Table):
        result = [dict(zip(result.header, row)) for row in result.rows]
    return _to_json(result) + "\n"


def _resolve_output(path: str) -> str:
    outdir = os.environ.get(OUTDIR_ENV)
    if outdir and not os.path.isabs(path):
        return os.path.join(outdir, path)
    return path


# ---------------------------------------------------------------------------
# commands

def _mat(m) -> np.ndarray:
    return np.array(m, dtype=float).reshape(2, 2)


def _linspace(g) -> np.ndarray:
    return np.linspace(g[0], g[1], g[2])


def _form_dict(form) -> dict:
    if isinstance(form, lens.Elliptic):
        return {"kind": "elliptic", "eta": form.eta, "phi": form.phi}
    if isinstance(form, lens.Hyperbolic):
        return {"kind": "hyperbolic", "eta": form.eta, "chi": form.chi, "sign": form.sign}
    return {"kind": "parabolic", "upper": form.upper, "lower": form.lower, "sign": form.sign}


def _eta(p) -> float:
    if p.get("eta") is not None:
        return p["eta"]
    return multilayer.eta_from_reflectance(p["reflectance"])


def _polar_stokes(p):
    kets = [np.array([a + 1j * b, c + 1j * d]) for a, b, c, d in p["jones"]]
    weights = p["weights"] or (1.0 / len(kets),) * len(kets)
    if len(weights) != len(kets):
        raise UsageError("--weights must have one entry per --jones")
    C = polarization.coherency_from_jones(zip(weights, kets))
    return polarization.stokes_from_coherency(C)


def _polar_classify(p):
    st = polarization.classify(p["stokes"])
    return {"kind": st.kind, "s0": st.s0, "s": st.s, "cos_chi": st.cos_chi, "eta": st.eta,
            "invariant_mass_sq": polarization.invariant_mass_sq(p["stokes"])}


def _polar_mueller(p):
    if p["beamsplit"] is not None:
        el = polarization.BeamSplit(p["beamsplit"])
    elif p["phase"] is not None:
        el = polarization.PhaseShift(p["phase"])
    else:
        el = polarization.Attenuate(*p["attenuate"])
    res = polarization.mueller_of(el)
    return {"jones": res.jones, "mueller": res.mueller, "common_factor": res.common_factor}


def _polar_decohere(p):
    params = polarization.DecoherenceParams(p["theta"], p["alpha"])
    return {"theta": params.theta, "alpha": params.alpha, "matrix": polarization.decohered_rotation(params)}


def _lens_compose(p):
    system = [lens.Lens(v) if k == "lens" else lens.Gap(v) for k, v in p["system"]]
    M = lens.compose(system)
    return {"matrix": M, "det": float(np.linalg.det(M))}


def _lens_core(p):
    M = lens.one_lens_core(p["x"])
    return {"x": p["x"], "matrix": M, "form": _form_dict(lens.classify_core(M))}


def _cavity(p):
    n = p["cycles"]
    if p["x_grid"] is not None:
        rows = lens.cavity_sweep(_linspace(p["x_grid"]), n)
        return Table(["x", "cycles", "stable", "trace", "entry_max"], rows)
    res = lens.cavity_cycles(p["x"], n)
    return {"x": p["x"], "cycles": n, "stable": res.stable, "form": _form_dict(res.form), "matrix": res.matrix}


def _layers_single(p):
    c = multilayer.LayerCycle(_eta(p), p["phi1"], p["phi2"])
    W, form = multilayer.stack_closed_form(c, p["n"])
    s = multilayer.s_matrix_apply(W, complex(*p["psi3"]))
    return {
        "eta": c.eta, "phi1": c.phi1, "phi2": c.phi2, "n": p["n"],
        "matrix": W, "psi1": s.psi1, "psi2": s.psi2, "r": s.r, "t": s.t,
        "abs_r2": abs(s.r) ** 2, "abs_t2": abs(s.t) ** 2,
        "form": {"kind": form.kind, "mu": form.mu, "angle": form.angle, "tilt": form.tilt,
                 "sign": form.sign, "brute_force": form.brute_force},
    }


_SWEEP_HEADER = ["phi1", "phi2", "N", "re_r", "im_r", "abs_r2", "abs_t2"]


def _layers_sweep(p):
    rows = multilayer.layer_sweep(_eta(p), _linspace(p["phi1_grid"]), _linspace(p["phi2_grid"]), p["n"])
    return Table(list(_SWEEP_HEADER), rows)


def _layers_file(p):
    try:
        with open(p["path"]) as fh:
            items = multilayer.parse_layer_spec(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {p['path']}: {exc.strerror}") from None
    rows = []
    for c, n in items:
        W, _ = multilayer.stack_closed_form(c, n)
        s = multilayer.s_matrix_apply(W)
        rows.append((c.eta, c.phi1, c.phi2, n, s.r.real, s.r.imag, abs(s.r) ** 2, abs(s.t) ** 2))
    return Table(["eta"] + _SWEEP_HEADER, rows)


def _decomp(p, action):
    M = _mat(p["m"])
    if action == "bargmann":
        f = dec.bargmann(M)
        return {"bargmann": {"alpha": f.alpha, "gamma": f.gamma, "beta": f.beta},
                "residual": float(np.abs(f.matrix() - M).max())}
    if action == "polar":
        S, O = dec.symmetric_orthogonal(M)
        return {"symmetric": S, "orthogonal": O, "residual": float(np.abs(S @ O - M).max())}
    if action == "iwasawa":
        f = dec.iwasawa(M)
        return {"iwasawa": {"theta": f.theta, "a": f.a, "n": f.n},
                "residual": float(np.abs(f.matrix() - M).max())}
    system = dec.three_lens_synthesis(M)
    return {"system": [{"lens": e.f} if isinstance(e, lens.Lens) else {"gap": e.z} for e in system],
            "residual": dec.synthesis_residual(system, M)}


def _decomp_constraint(p):
    eta, M = dec.iwasawa_constraint(p["theta"])
    return {"theta": p["theta"], "eta": eta, "matrix": M}


def _osc_psi(p):
    z, t = _linspace(p["z_grid"]), _linspace(p["t_grid"])
    Z, T = np.meshgrid(z, t, indexing="ij")
    vals = oscillator.psi(p["eta"], Z, T)
    return Table(["z", "t", "psi"], list(zip(Z.ravel(), T.ravel(), vals.ravel())))


def _osc_coeffs(p):
    out = {"eta": p["eta"], "coeffs": oscillator.expansion_coeffs(p["eta"], p["kmax"])}
    if p["verify"]:
        out["overlaps"] = oscillator.quadrature_overlap(p["eta"], p["kmax"])
        out["truncation_residual"] = oscillator.truncation_residual(p["eta"], p["kmax"])
    return out


def _check(p):
    results = checks.run_checks(None if p["all"] else p["only"])
    return Table(["check", "error", "tol", "passed"], [(r.name, r.error, r.tol, r.passed) for r in results])


_DISPATCH = {
    "polar.stokes": _polar_stokes,
    "polar.classify": _polar_classify,
    "polar.mueller": _polar_mueller,
    "polar.decohere": _polar_decohere,
    "lens.compose": _lens_compose,
    "lens.core": _lens_core,
    "cavity": _cavity,
    "layers.single": _layers_single,
    "layers.sweep": _layers_sweep,
    "layers.file": _layers_file,
    "decomp.bargmann": lambda p: _decomp(p, "bargmann"),
    "decomp.polar": lambda p: _decomp(p, "polar"),
    "decomp.iwasawa": lambda p: _decomp(p, "iwasawa"),
    "decomp.synth": lambda p: _decomp(p, "synth"),
    "decomp.constraint": _decomp_constraint,
    "osc.psi": _osc_psi,
    "osc.coeffs": _osc_coeffs,
    "check": _check,
}

_DOMAIN_ERRORS = (ValueError, ArithmeticError, dec.SynthesisError)


def execute(plan: CommandPlan, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        result = _DISPATCH[plan.command](plan.params)
        fmt = plan.fmt or ("csv" if isinstance(result, Table) else "json")
        text = render(result, fmt)
    except UsageError as exc:
        print(exc, file=stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if plan.output:
        path = _resolve_output(plan.output)
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if plan.command == "check" and not all(row[3] for row in result.rows):
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    try:
        plan = parse(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    return execute(plan)


if __name__ == "__main__":
    sys.exit(main())
