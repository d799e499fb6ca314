"""Command-line interface.

One executable, seven subcommands:

    freq        closed-form frequency for either regime
    lindstedt   run the expansion engine, optionally dumping exact series
    simulate    fixed-step integration, CSV output (tau, x, p, C)
    separatrix  double-well report: bounds, turning points, periods
    isochron    amplitude-independence couplings
    sweep       CSV sweep of frequencies or bounds over parameter grids
    validate    run the acceptance suite

Exit codes: 0 success, 1 domain error (stable error name on stderr),
2 usage error.  Output is deterministic: repeated identical invocations
produce byte-identical stdout.

Any subcommand accepts ``--config FILE`` where FILE holds ``key=value``
lines (long option names without dashes); explicit flags win over the file.
"""

from __future__ import annotations

import argparse
import math
import sys
import warnings

from . import dynamics, lindstedt, model, separatrix, validation
from .errors import PerturbationRangeWarning, QuarticError
from .render import format_float, render_csv, render_json

__all__ = ["main", "build_parser"]

SCHEMA = 1

_GRID_NAMES = ("lambda", "m", "omega", "hbar", "A")


class _UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# parser construction
# ---------------------------------------------------------------------------

def _add_physical(sp, with_amplitude=True):
    sp.add_argument("-m", "--mass", type=float, default=1.0, dest="m",
                    help="mass (natural units, > 0)")
    sp.add_argument("-w", "--omega", type=float, default=1.0,
                    help="linear angular frequency (> 0)")
    sp.add_argument("-l", "--lambda", type=float, default=0.0, dest="lam",
                    help="quartic coupling")
    sp.add_argument("--hbar", type=float, default=1.0,
                    help="quantum scale (> 0, classical maps ignore it)")
    if with_amplitude:
        sp.add_argument("-A", "--amplitude", type=float, default=1.0,
                        help="oscillation amplitude (> 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quartic",
        description="Quartic-oscillator frequency analysis, expansion engine, "
                    "and separatrix bounds.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("freq", help="closed-form frequency (orders 1 and 2)")
    _add_physical(sp)
    sp.add_argument("--regime", choices=["classical", "quantum"],
                    default="classical")
    sp.add_argument("--order", type=int, choices=[1, 2], default=1)
    sp.add_argument("--truncation", choices=["exact", "first-order-hbar"],
                    default="exact",
                    help="how the reported quantum b is formed")
    sp.set_defaults(handler=_cmd_freq)

    sp = sub.add_parser("lindstedt", help="run the expansion engine")
    sp.add_argument("--order", type=int, default=2)
    sp.add_argument("--order-cap", type=int, default=lindstedt.DEFAULT_ORDER_CAP)
    sp.add_argument("--dump", action="store_true",
                    help="emit the exact series as JSON instead of a table")
    sp.add_argument("--b", type=float, default=None,
                    help="evaluate Omega at this coupling")
    sp.add_argument("-A", "--amplitude", type=float, default=1.0)
    sp.set_defaults(handler=_cmd_lindstedt)

    sp = sub.add_parser("simulate", help="fixed-step integration, CSV output")
    sp.add_argument("--s1", type=float, default=1.0,
                    help="linear coefficient of x'' + s1 x + s3 x^3 = 0")
    sp.add_argument("--s3", type=float, default=0.0, help="cubic coefficient")
    sp.add_argument("-A", "--amplitude", type=float, default=1.0)
    sp.add_argument("--dt", type=float, default=1e-3)
    sp.add_argument("--steps", type=int, default=10000)
    sp.add_argument("--method", choices=["rk4", "leapfrog"], default="rk4")
    sp.add_argument("--initial-momentum", type=float, default=0.0)
    sp.set_defaults(handler=_cmd_simulate)

    sp = sub.add_parser("separatrix", help="double-well bounds and periods")
    sp.add_argument("--well", choices=["inverted", "double"], required=True)
    sp.add_argument("-b", "--b", type=float, required=True, dest="b",
                    help="reduced nonlinearity (> 0)")
    sp.add_argument("-E", "--energy", type=float, default=None,
                    help="energy level (double well: required, > 0; inverted "
                         "well: fixed to the special value 1/(4b))")
    sp.add_argument("-A", "--amplitude", type=float, default=None,
                    help="report the transit period up to this amplitude")
    sp.set_defaults(handler=_cmd_separatrix)

    sp = sub.add_parser("isochron", help="amplitude-independence couplings")
    _add_physical(sp)
    sp.add_argument("--regime", choices=["classical", "quantum"], required=True)
    sp.add_argument("--order", type=int, choices=[1, 2], default=1)
    sp.add_argument("--paper-literal", action="store_true",
                    help="include the published (uncorrected) feasibility "
                         "expression for comparison")
    sp.set_defaults(handler=_cmd_isochron)

    sp = sub.add_parser("sweep", help="CSV sweep over one or two grids")
    _add_physical(sp)
    sp.add_argument("--target", choices=["freq", "bound"], default="freq")
    sp.add_argument("--grid", action="append", required=True,
                    metavar="NAME=START:STOP:COUNT",
                    help=f"grid over one of {', '.join(_GRID_NAMES)}; may be "
                         "given twice for a Cartesian product")
    sp.add_argument("--order", type=int, choices=[1, 2], default=1)
    sp.set_defaults(handler=_cmd_sweep)

    sp = sub.add_parser("validate", help="run the acceptance suite")
    sp.add_argument("--json", action="store_true", dest="as_json")
    sp.set_defaults(handler=_cmd_validate)

    return parser


# ---------------------------------------------------------------------------
# handlers
# ---------------------------------------------------------------------------

def _params(args, regime: model.Regime) -> model.PhysicalParams:
    return model.PhysicalParams(
        m=args.m, omega=args.omega, lam=args.lam, hbar=args.hbar, regime=regime,
    )


def _inputs_block(args, order=None) -> dict:
    block = {
        "m": args.m,
        "omega": args.omega,
        "lambda": args.lam,
        "hbar": args.hbar,
    }
    if hasattr(args, "amplitude"):
        block["amplitude"] = args.amplitude
    if order is not None:
        block["order"] = order
    return block


def _cmd_freq(args) -> int:
    regime = model.Regime(args.regime)
    params = _params(args, regime)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", PerturbationRangeWarning)
        if regime is model.Regime.CLASSICAL:
            reduced = model.reduce_classical(params)
            omega = model.frequency_classical(params, args.amplitude, args.order)
        else:
            reduced = model.reduce_quantum(params, model.Truncation(args.truncation))
            omega = model.frequency_quantum(params, args.amplitude, args.order)
    doc = {
        "schema": SCHEMA,
        "command": "freq",
        "regime": regime.value,
        "inputs": _inputs_block(args, order=args.order),
        "reduced": {
            "eps1": reduced.eps1,
            "eps2": reduced.eps2,
            "b": reduced.b,
            "shape": reduced.shape.value,
            "truncation": reduced.truncation.value,
        },
        "Omega": omega,
        "warnings": sorted(str(w.message) for w in caught),
    }
    print(render_json(doc))
    return 0


def _poly_json(poly) -> list:
    return [[p, c.numerator, c.denominator] for p, c in poly.items()]


def _cmd_lindstedt(args) -> int:
    sol = lindstedt.expand(args.order, order_cap=args.order_cap)
    evaluation = None
    if args.b is not None:
        evaluation = {
            "b": args.b,
            "amplitude": args.amplitude,
            "Omega": lindstedt.omega_value(sol, args.b, args.amplitude),
        }
    if args.dump:
        doc = {
            "schema": SCHEMA,
            "command": "lindstedt",
            "order": sol.order,
            "omega_corrections": [
                {"k": k, "polynomial": _poly_json(sol.omega_correction(k)),
                 "text": str(sol.omega_correction(k))}
                for k in range(1, sol.order + 1)
            ],
            "displacement_corrections": [
                {"k": k, "series": sol.displacement(k).to_json_obj(),
                 "text": str(sol.displacement(k))}
                for k in range(sol.order + 1)
            ],
        }
        if evaluation is not None:
            doc["evaluation"] = evaluation
        print(render_json(doc))
        return 0
    lines = [
        f"Lindstedt expansion of Omega^2 x'' + x + b x^3 = 0 to order {sol.order}",
        " k  Omega_k",
    ]
    for k in range(1, sol.order + 1):
        lines.append(f" {k}  {sol.omega_correction(k)}")
    for k in range(sol.order + 1):
        lines.append(f"x_{k}(T) = {sol.displacement(k)}")
    if evaluation is not None:
        lines.append(
            f"Omega(b={format_float(evaluation['b'])}, "
            f"A={format_float(evaluation['amplitude'])}) = "
            f"{format_float(evaluation['Omega'])}"
        )
    print("\n".join(lines))
    return 0


def _cmd_simulate(args) -> int:
    traj = dynamics.integrate(
        args.s1, args.s3, args.amplitude, args.dt, args.steps,
        method=dynamics.Method(args.method),
        initial_momentum=args.initial_momentum,
    )
    conserved = traj.conserved()
    write = sys.stdout.write
    write("tau,x,p,C\n")
    for i in range(len(traj)):
        write(
            f"{format_float(traj.tau[i])},{format_float(traj.x[i])},"
            f"{format_float(traj.p[i])},{format_float(conserved[i])}\n"
        )
    return 0


def _cmd_separatrix(args) -> int:
    if args.b <= 0:
        raise _UsageError("-b must be positive")
    doc = {"schema": SCHEMA, "command": "separatrix"}
    if args.well == "inverted":
        energy = 1.0 / (4.0 * args.b)
        if args.energy is not None and args.energy != energy:
            raise _UsageError(
                "the inverted-well report is defined at the special energy "
                f"E = 1/(4b) = {format_float(energy)}; omit --energy or pass "
                "that value"
            )
        bound = separatrix.inverted_amplitude_bound(args.b)
        doc["well"] = "inverted-double-well"
        doc["inputs"] = {"b": args.b, "E": energy}
        doc["bound"] = {
            "A_max": bound.A_max,
            "constant": separatrix.BOUND_CONSTANT,
            "formula_id": bound.formula_id,
        }
        if args.amplitude is not None:
            closed = separatrix.inverted_special_period(args.b, args.amplitude)
            quad = separatrix.special_period_quadrature(args.b, args.amplitude)
            doc["period"] = {
                "amplitude": args.amplitude,
                "closed_form": closed,
                "quadrature": quad,
                "difference": closed - quad,
            }
        doc["published_forms"] = {
            "bound_constant_printed": 0.46211715726,
            "note": "the published closed form carries a leading minus sign; "
                    "the magnitude is reported",
        }
    else:
        if args.energy is None or args.energy <= 0:
            raise _UsageError("the double-well report requires --energy > 0")
        tp = separatrix.dw_turning_points(args.b, args.energy)
        bound = separatrix.dw_amplitude_bound(args.b, args.energy)
        pub_roots = separatrix.published_turning_points(args.b, args.energy)
        amplitude = args.amplitude
        if amplitude is None:
            amplitude = math.sqrt(tp.k_plus)
        doc["well"] = "double-well"
        doc["inputs"] = {"b": args.b, "E": args.energy}
        doc["turning_points"] = {
            "k_plus": tp.k_plus,
            "k_minus": tp.k_minus,
            "radicand_residual": tp.radicand_residual,
        }
        doc["bound"] = {
            "A_max": bound.A_max,
            "formula_id": bound.formula_id,
        }
        doc["period"] = {
            "amplitude": amplitude,
            "round_trip": separatrix.dw_period(args.b, args.energy, amplitude),
        }
        doc["published_forms"] = {
            "turning_point_roots": list(pub_roots),
            "radicand_at_published_root": separatrix.dw_radicand(
                args.b, args.energy, pub_roots[0]
            ),
            "A_max": bound.published_A_max,
            "note": "published roots do not annihilate the radicand; the "
                    "corrected roots are used everywhere above",
        }
    print(render_json(doc))
    return 0


def _cmd_isochron(args) -> int:
    regime = model.Regime(args.regime)
    doc = {
        "schema": SCHEMA,
        "command": "isochron",
        "regime": regime.value,
        "order": args.order,
        "inputs": _inputs_block(args),
    }
    if regime is model.Regime.CLASSICAL:
        if args.order == 1:
            raise _UsageError(
                "no classical first-order isochronicity exists (the "
                "amplitude term cannot cancel); use --order 2"
            )
        params = _params(args, regime)
        lam = model.isochronicity_second_order_classical(params, args.amplitude)
        check = model.PhysicalParams(
            m=args.m, omega=args.omega, lam=lam, hbar=args.hbar, regime=regime,
        )
        doc["lambda_star"] = lam
        doc["verified_omega"] = model.frequency_classical(check, args.amplitude, 2)
    else:
        params = _params(args, regime)
        if args.order == 1:
            lam = model.isochronicity_first_order_quantum(params)
            check = model.PhysicalParams(
                m=args.m, omega=args.omega, lam=lam, hbar=args.hbar, regime=regime,
            )
            doc["lambda_star"] = lam
            doc["verified_omega"] = model.frequency_quantum(check, args.amplitude, 1)
        else:
            report = model.isochronicity_second_order_quantum(params, args.amplitude)
            doc["roots"] = list(report.lambda_roots)
            doc["discriminant"] = report.discriminant
            doc["feasible"] = report.feasible
            doc["residuals"] = [
                model.second_order_condition_residual(params, args.amplitude, r)
                for r in report.lambda_roots
            ]
            if args.paper_literal:
                doc["published_feasibility_margin"] = (
                    model.published_feasibility_margin(params, args.amplitude)
                )
                doc["published_note"] = (
                    "published expression omits the square on its first "
                    "group; diagnostic only, decisions use the true "
                    "discriminant"
                )
    print(render_json(doc))
    return 0


def _parse_grid(text: str):
    try:
        name, span = text.split("=", 1)
        start_s, stop_s, count_s = span.split(":")
        start, stop, count = float(start_s), float(stop_s), int(count_s)
    except ValueError:
        raise _UsageError(
            f"grid {text!r} is not of the form NAME=START:STOP:COUNT"
        ) from None
    if name not in _GRID_NAMES:
        raise _UsageError(f"grid name {name!r} not one of {_GRID_NAMES}")
    if count < 0:
        raise _UsageError("grid COUNT must be nonnegative")
    if count == 0:
        values = []
    elif count == 1:
        values = [start]
    else:
        step = (stop - start) / (count - 1)
        values = [start + i * step for i in range(count)]
    return name, values


def _sweep_row(args, target, overrides):
    def value(name, default):
        return overrides.get(name, default)

    m = value("m", args.m)
    omega = value("omega", args.omega)
    lam = value("lambda", args.lam)
    hbar = value("hbar", args.hbar)
    amplitude = value("A", args.amplitude)
    pc = model.PhysicalParams(m=m, omega=omega, lam=lam, hbar=hbar,
                              regime=model.Regime.CLASSICAL)
    pq = model.PhysicalParams(m=m, omega=omega, lam=lam, hbar=hbar,
                              regime=model.Regime.QUANTUM)
    if target == "freq":
        return (
            model.frequency_classical(pc, amplitude, args.order),
            model.frequency_quantum(pq, amplitude, args.order),
        )
    return (
        separatrix.amplitude_bound_physical(pc).A_max,
        separatrix.amplitude_bound_physical(pq).A_max,
    )


def _cmd_sweep(args) -> int:
    if len(args.grid) > 2:
        raise _UsageError("at most two --grid specifications are supported")
    grids = [_parse_grid(g) for g in args.grid]
    names = [g[0] for g in grids]
    if len(set(names)) != len(names):
        raise _UsageError("grid names must be distinct")
    value_columns = (
        ["Omega_CM", "Omega_QM"] if args.target == "freq"
        else ["A_max_CM", "A_max_QM"]
    )
    header = names + value_columns + ["error"]

    points = [[(names[0], v)] for v in grids[0][1]]
    if len(grids) == 2:
        points = [
            row + [(names[1], v)] for row in points for v in grids[1][1]
        ]

    rows = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", PerturbationRangeWarning)
        for point in points:
            overrides = dict(point)
            try:
                values = _sweep_row(args, args.target, overrides)
                rows.append([v for _, v in point] + list(values) + [""])
            except QuarticError as exc:
                rows.append(
                    [v for _, v in point]
                    + [None] * len(value_columns)
                    + [type(exc).__name__]
                )
    sys.stdout.write(render_csv(header, rows))
    return 0


def _cmd_validate(args) -> int:
    results = validation.run_suite()
    if args.as_json:
        print(render_json(validation.results_document(results)))
    else:
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            print(f"[{mark}] {r.cid:2d} {r.title}: {r.detail}")
        passed = sum(1 for r in results if r.passed)
        print(f"{passed}/{len(results)} criteria passed")
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _apply_config(argv: list) -> list:
    """Expand ``--config FILE`` into option tokens; explicit flags win."""
    if "--config" not in argv:
        return argv
    idx = argv.index("--config")
    if idx == 0:
        raise _UsageError("--config must follow a subcommand")
    if idx + 1 >= len(argv):
        raise _UsageError("--config requires a file path")
    path = argv[idx + 1]
    rest = argv[:idx] + argv[idx + 2:]
    tokens: list = []
    try:
        with open(path, "r", encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise _UsageError(f"config line {line!r} is not key=value")
                key, value = (part.strip() for part in line.split("=", 1))
                if value.lower() == "true":
                    tokens.append(f"--{key}")
                elif value.lower() == "false":
                    continue
                else:
                    tokens.extend([f"--{key}", value])
    except OSError as exc:
        raise _UsageError(f"cannot read config file {path!r}: {exc}") from None
    return [rest[0]] + tokens + rest[1:]


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        argv = _apply_config(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except QuarticError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
