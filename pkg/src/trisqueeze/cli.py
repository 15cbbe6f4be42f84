"""Command-line surface: plot-ready CSV/JSON sweeps and grids.

Subcommands
    coeffs        transform coefficient table as JSON
    squeeze-sweep CSV r1,r2,r3,c1,c2,Sx,Sy
    g2-sweep      CSV r1,r2,r3,n1,n2,n3,g2_mode
    cs-sweep      CSV r1,r2,r3,j,k,V
    wigner-grid   CSV x,y,w plus a JSON sidecar of the Gaussian-kernel data
    origin-sweep  CSV r1,r2,r3,w00
    oracle-verify JSON report of engine-vs-oracle agreement

Output contract: CSV uses '.' decimals, 17 significant digits, '\\n' line
endings and exactly the headers above; identical invocations produce
byte-identical files.  Exit codes: 0 success, 1 computation error (the
message names the violated guard), 2 usage error.  The environment variable
TRISQUEEZE_OUTDIR redirects relative output paths.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from pathlib import Path

import numpy as np

from .fock_oracle import (
    FockCutoff,
    SqueezePropagator,
    TruncatedState,
    TruncationLeakageError,
    oracle_expectation,
    oracle_wigner,
    quadrature_stats,
    reduced_density,
    truncation_report,
)
from .ladder import InputState
from .moments import (
    QuadratureSelector,
    UndefinedMomentError,
    cauchy_schwarz,
    cross_correlation,
    g2,
    intensity_correlation,
    mean_photon,
    quadrature_variances,
    squeezing,
)
from .quasiprob import (
    PFunctionSingularError,
    WindowSelectionError,
    wigner_aux,
    wigner_closed,
    wigner_numeric,
)
from .symplectic import SqueezeParams, bogoliubov_coeffs

OUTDIR_ENV = "TRISQUEEZE_OUTDIR"


class UsageError(Exception):
    pass


def _fmt(value) -> str:
    return format(float(value), ".17g")


def _parse_axis(spec, what):
    """A scalar or an inclusive "start:stop:count" sweep."""
    text = str(spec)
    if ":" not in text:
        try:
            return [float(text)]
        except ValueError:
            raise UsageError(f"{what}: cannot parse {spec!r} as a number")
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"{what}: sweep must be start:stop:count, got {spec!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError:
        raise UsageError(f"{what}: sweep must be start:stop:count, got {spec!r}")
    if count < 2:
        raise UsageError(f"{what}: sweep count must be >= 2, got {count}")
    return [float(v) for v in np.linspace(start, stop, count)]


def _parse_params(args):
    """List of (r1, r2, r3) tuples from --r or --r1/--r2/--r3."""
    have_sym = args.r is not None
    have_asym = [args.r1 is not None, args.r2 is not None, args.r3 is not None]
    if have_sym and any(have_asym):
        raise UsageError("give either --r (symmetric) or --r1/--r2/--r3, not both")
    if have_sym:
        return [(v, v, v) for v in _parse_axis(args.r, "--r")]
    if not all(have_asym):
        missing = [f"--r{i+1}" for i, ok in enumerate(have_asym) if not ok]
        raise UsageError(f"asymmetric runs need all of --r1/--r2/--r3 (missing {', '.join(missing)})")
    axes = [
        _parse_axis(args.r1, "--r1"),
        _parse_axis(args.r2, "--r2"),
        _parse_axis(args.r3, "--r3"),
    ]
    return list(itertools.product(*axes))


def _parse_state(spec):
    text = str(spec)
    if text.startswith("n="):
        try:
            values = [int(v) for v in text[2:].split(",")]
        except ValueError:
            raise UsageError(f"--state: cannot parse occupations in {spec!r}")
        if len(values) != 3:
            raise UsageError("--state n= needs exactly three occupations")
        try:
            return InputState.number(*values)
        except ValueError as exc:
            raise UsageError(f"--state: {exc}")
    if text.startswith("alpha="):
        parts = text[6:].split(",")
        if len(parts) != 3:
            raise UsageError("--state alpha= needs exactly three amplitudes")
        try:
            values = [complex(p.replace("i", "j")) for p in parts]
        except ValueError:
            raise UsageError(f"--state: cannot parse amplitudes in {spec!r}")
        try:
            return InputState.coherent(*values)
        except ValueError as exc:
            raise UsageError(f"--state: {exc}")
    raise UsageError("--state must be n=n1,n2,n3 or alpha=a1,a2,a3")


def _resolve_out(path):
    out = Path(path)
    outdir = os.environ.get(OUTDIR_ENV)
    if outdir and not out.is_absolute():
        out = Path(outdir) / out
    return out


def _emit(args, text):
    if args.out is None:
        sys.stdout.write(text)
        return
    out = _resolve_out(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8", newline="")


def _csv(header, rows):
    lines = [header]
    lines.extend(",".join(cells) for cells in rows)
    return "\n".join(lines) + "\n"


def _json_text(payload):
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def cmd_coeffs(args):
    (triple,) = _require_scalar_params(args)
    coeffs = bogoliubov_coeffs(SqueezeParams(*triple))
    _emit(args, _json_text(coeffs.to_json_dict()))


def _require_scalar_params(args):
    triples = _parse_params(args)
    if len(triples) != 1:
        raise UsageError("this subcommand takes scalar couplings, not sweeps")
    return triples


def cmd_squeeze_sweep(args):
    state = _parse_state(args.state)
    sel = QuadratureSelector(args.c1, args.c2)
    rows = []
    for triple in _parse_params(args):
        coeffs = bogoliubov_coeffs(SqueezeParams(*triple))
        sx, sy = squeezing(coeffs, sel, state)
        rows.append(
            tuple(_fmt(v) for v in triple)
            + (str(args.c1), str(args.c2), _fmt(sx), _fmt(sy))
        )
    _emit(args, _csv("r1,r2,r3,c1,c2,Sx,Sy", rows))


def cmd_g2_sweep(args):
    state = _parse_state(args.state)
    if not state.is_number_state:
        raise UsageError("g2-sweep encodes the state in its n1,n2,n3 columns; use --state n=")
    ns = state.occupations()
    rows = []
    for triple in _parse_params(args):
        coeffs = bogoliubov_coeffs(SqueezeParams(*triple))
        value = g2(coeffs, state, args.mode)
        rows.append(
            tuple(_fmt(v) for v in triple)
            + tuple(str(n) for n in ns)
            + (_fmt(value),)
        )
    _emit(args, _csv("r1,r2,r3,n1,n2,n3,g2_mode", rows))


def cmd_cs_sweep(args):
    state = _parse_state(args.state)
    if args.j == args.k:
        raise UsageError("--j and --k must name distinct modes")
    rows = []
    for triple in _parse_params(args):
        coeffs = bogoliubov_coeffs(SqueezeParams(*triple))
        value = cauchy_schwarz(coeffs, state, args.j, args.k)
        rows.append(
            tuple(_fmt(v) for v in triple)
            + (str(args.j), str(args.k), _fmt(value))
        )
    _emit(args, _csv("r1,r2,r3,j,k,V", rows))


def cmd_origin_sweep(args):
    state = _parse_state(args.state)
    if not state.is_number_state:
        raise UsageError("origin-sweep needs a number state (--state n=)")
    ns = state.occupations()
    if not (ns[1] == 0 and (ns[0] == 0 or ns[2] == 0)):
        raise UsageError("origin-sweep supports the closed-form patterns n=0,0,n3 and n=n1,0,0")
    rows = []
    for triple in _parse_params(args):
        coeffs = bogoliubov_coeffs(SqueezeParams(*triple))
        value = wigner_closed(coeffs, ns, 0j, args.s)
        rows.append(tuple(_fmt(v) for v in triple) + (_fmt(value),))
    _emit(args, _csv("r1,r2,r3,w00", rows))


def _aux_payload(coeffs, ns, s):
    n1, n2, n3 = ns
    slot = None
    if n2 == 0 and n3 == 0 and n1 > 0:
        slot = "mode1"
    elif n1 == 0 and n2 == 0 and n3 > 0:
        slot = "mode3"
    aux = wigner_aux(coeffs, s, slot=slot)
    return {
        "lambda1": aux.lambda1,
        "lambda2": aux.lambda2,
        "b": aux.b,
        "kernel_det": aux.kernel_det,
        "theta_plus": aux.theta_plus,
        "theta_minus": aux.theta_minus,
        "eta_plus": aux.eta_plus,
        "eta_minus": aux.eta_minus,
        "s": aux.s,
        "slot": aux.slot,
    }


def _grid_metadata(xs, ys, s):
    return {
        "x": {"min": float(xs[0]), "max": float(xs[-1]), "count": int(xs.size)},
        "y": {"min": float(ys[0]), "max": float(ys[-1]), "count": int(ys.size)},
        "s": int(s),
    }


def cmd_wigner_grid(args):
    if args.out is None:
        raise UsageError("wigner-grid writes a data file plus a sidecar; --out is required")
    state = _parse_state(args.state)
    if not state.is_number_state:
        raise UsageError("quasiprobability grids are defined for number states (--state n=)")
    ns = state.occupations()
    (triple,) = _require_scalar_params(args)
    coeffs = bogoliubov_coeffs(SqueezeParams(*triple))
    xs = np.asarray(_parse_axis(args.x, "--x"))
    ys = np.asarray(_parse_axis(args.y, "--y"))
    if xs.size < 2 or ys.size < 2:
        raise UsageError("--x and --y must be sweeps (start:stop:count)")

    method = args.method
    if method == "auto":
        method = "closed" if wigner_closed(coeffs, ns, 0j, args.s) is not None else "numeric"
    if method == "closed":
        values = wigner_closed(coeffs, ns, xs[:, None] + 1j * ys[None, :], args.s)
        if values is None:
            raise UsageError(
                "no closed form for this occupation pattern; use --method numeric"
            )
    else:
        values = wigner_numeric(coeffs, ns, xs, ys, args.s).values

    rows = [
        (_fmt(xs[i]), _fmt(ys[j]), _fmt(values[i, j]))
        for i in range(xs.size)
        for j in range(ys.size)
    ]
    payload = _grid_metadata(xs, ys, args.s)
    payload["method"] = method
    payload["aux"] = _aux_payload(coeffs, ns, args.s)
    if args.format == "json":
        payload["values"] = [float(v) for v in values.reshape(-1)]
        _emit(args, _json_text(payload))
        return
    _emit(args, _csv("x,y,w", rows))
    out = _resolve_out(args.out)
    sidecar = out.with_suffix(".aux.json")
    sidecar.write_text(_json_text(payload), encoding="utf-8", newline="")


def cmd_oracle_verify(args):
    state = _parse_state(args.state)
    (triple,) = _require_scalar_params(args)
    params = SqueezeParams(*triple)
    cutoff = FockCutoff(args.cutoff)
    coeffs = bogoliubov_coeffs(params)

    propagator = SqueezePropagator(params, cutoff)
    evolved = propagator.apply(TruncatedState.from_input_state(state, cutoff))
    report = truncation_report(evolved)
    if not report.ok(args.max_leakage):
        raise TruncationLeakageError(report)

    quantities = []

    def record(name, analytic, oracle):
        analytic = float(analytic)
        oracle = float(oracle)
        rel = abs(analytic - oracle) / max(abs(oracle), 1e-12)
        quantities.append(
            {"name": name, "analytic": analytic, "oracle": oracle, "rel_error": rel}
        )

    for mode in (1, 2, 3):
        mono = [0] * 6
        mono[mode - 1] = 1
        mono[mode + 2] = 1
        record(f"mean_n{mode}", mean_photon(coeffs, state, mode),
               oracle_expectation(evolved, mono).real)
        mono4 = [0] * 6
        mono4[mode - 1] = 2
        mono4[mode + 2] = 2
        record(f"intensity_{mode}", intensity_correlation(coeffs, state, mode),
               oracle_expectation(evolved, mono4).real)
        mean_o = oracle_expectation(evolved, mono).real
        inten_o = oracle_expectation(evolved, mono4).real
        record(f"g2_{mode}", g2(coeffs, state, mode), inten_o / mean_o ** 2 - 1.0)
    for j, k in ((1, 2), (1, 3), (2, 3)):
        mono = [0] * 6
        mono[j - 1] = 1
        mono[j + 2] = 1
        mono[k - 1] = 1
        mono[k + 2] = 1
        cross_o = oracle_expectation(evolved, mono).real
        record(f"cross_n{j}n{k}", cross_correlation(coeffs, state, j, k), cross_o)
        inten_j = oracle_expectation(
            evolved, [2 if m == j - 1 else 0 for m in range(3)] + [2 if m == j - 1 else 0 for m in range(3)]
        ).real
        inten_k = oracle_expectation(
            evolved, [2 if m == k - 1 else 0 for m in range(3)] + [2 if m == k - 1 else 0 for m in range(3)]
        ).real
        record(
            f"v_{j}{k}",
            cauchy_schwarz(coeffs, state, j, k),
            (inten_j * inten_k) ** 0.5 / cross_o - 1.0,
        )
    for c1, c2 in ((0, 0), (1, 0), (1, 1)):
        sel = QuadratureSelector(c1, c2)
        var_x, var_y = quadrature_variances(coeffs, sel, state)
        _, ovar_x, _, ovar_y = quadrature_stats(evolved, c1, c2)
        record(f"var_x_c{c1}{c2}", var_x, ovar_x)
        record(f"var_y_c{c1}{c2}", var_y, ovar_y)
    if state.is_number_state:
        ns = state.occupations()
        rho1 = reduced_density(evolved, 1)
        closed = wigner_closed(coeffs, ns, 0j, 0)
        if closed is not None:
            record("wigner_origin", closed, oracle_wigner(rho1, 0j, 0))
            z = 0.5 + 0.3j
            record("wigner_point", float(wigner_closed(coeffs, ns, z, 0)),
                   oracle_wigner(rho1, z, 0))
            record("husimi_point", float(wigner_closed(coeffs, ns, z, -1)),
                   oracle_wigner(rho1, z, -1))

    payload = {
        "params": {"r1": params.r1, "r2": params.r2, "r3": params.r3},
        "cutoff": cutoff.n_max,
        "state": args.state,
        "leakage": {
            "norm_defect": report.norm_defect,
            "top_shell": list(report.top_shell),
        },
        "quantities": quantities,
        "max_rel_error": max(q["rel_error"] for q in quantities),
    }
    _emit(args, _json_text(payload))


def _add_param_flags(sub):
    sub.add_argument("--r", help="symmetric coupling, scalar or start:stop:count")
    sub.add_argument("--r1", help="pair (1,2) coupling, scalar or sweep")
    sub.add_argument("--r2", help="pair (1,3) coupling, scalar or sweep")
    sub.add_argument("--r3", help="pair (2,3) coupling, scalar or sweep")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="trisqueeze",
        description="Nonclassicality diagnostics of the three-mode squeeze operator",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    sub = subparsers.add_parser("coeffs", help="emit the transform coefficient table as JSON")
    _add_param_flags(sub)
    sub.add_argument("--out")
    sub.set_defaults(func=cmd_coeffs)

    sub = subparsers.add_parser("squeeze-sweep", help="quadrature squeezing sweep CSV")
    _add_param_flags(sub)
    sub.add_argument("--c1", type=int, choices=(0, 1), required=True)
    sub.add_argument("--c2", type=int, choices=(0, 1), required=True)
    sub.add_argument("--state", required=True)
    sub.add_argument("--out")
    sub.set_defaults(func=cmd_squeeze_sweep)

    sub = subparsers.add_parser("g2-sweep", help="second-order correlation sweep CSV")
    _add_param_flags(sub)
    sub.add_argument("--state", required=True)
    sub.add_argument("--mode", type=int, choices=(1, 2, 3), required=True)
    sub.add_argument("--out")
    sub.set_defaults(func=cmd_g2_sweep)

    sub = subparsers.add_parser("cs-sweep", help="Cauchy-Schwarz ratio sweep CSV")
    _add_param_flags(sub)
    sub.add_argument("--state", required=True)
    sub.add_argument("--j", type=int, choices=(1, 2, 3), required=True)
    sub.add_argument("--k", type=int, choices=(1, 2, 3), required=True)
    sub.add_argument("--out")
    sub.set_defaults(func=cmd_cs_sweep)

    sub = subparsers.add_parser("wigner-grid", help="quasiprobability grid CSV + aux sidecar")
    _add_param_flags(sub)
    sub.add_argument("--state", required=True)
    sub.add_argument("--s", type=int, choices=(-1, 0), default=0)
    sub.add_argument("--x", default="-4:4:101")
    sub.add_argument("--y", default="-4:4:101")
    sub.add_argument("--method", choices=("auto", "closed", "numeric"), default="auto")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out")
    sub.set_defaults(func=cmd_wigner_grid)

    sub = subparsers.add_parser("origin-sweep", help="phase-space-origin sweep CSV")
    _add_param_flags(sub)
    sub.add_argument("--state", required=True)
    sub.add_argument("--s", type=int, choices=(-1, 0), default=0)
    sub.add_argument("--out")
    sub.set_defaults(func=cmd_origin_sweep)

    sub = subparsers.add_parser("oracle-verify", help="engine-vs-oracle verification JSON")
    _add_param_flags(sub)
    sub.add_argument("--state", required=True)
    sub.add_argument("--cutoff", type=int, default=14)
    sub.add_argument("--max-leakage", type=float, default=1e-8)
    sub.add_argument("--out")
    sub.set_defaults(func=cmd_oracle_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (
        UndefinedMomentError,
        TruncationLeakageError,
        WindowSelectionError,
        PFunctionSingularError,
        ValueError,
        ArithmeticError,
    ) as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
