"""Command-line interface: ``relbell {sweep,verify,critical-beta,optimize}``.

Exit codes: 0 success, 2 configuration error, 3 compute or oracle failure,
4 no crossing found by ``critical-beta``.
"""

import argparse
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass, replace

import numpy as np

from . import oracle
from .chsh import canonical_axes, chsh_value, critical_beta, frame_omega, horodecki_max, optimize_axes
from .config import DEFAULT
from .errors import ConvergenceError, DomainError, NoCrossingError, RelbellError
from .lorentz import beta_from_rapidity
from .observables import TSIRELSON, covariant_correlation_matrix, czachor_chsh
from .spinstate import BellKind, boosted_bell_analytic

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_COMPUTE = 3
EXIT_NO_CROSSING = 4

SWEEP_COLUMNS = ("beta", "alpha", "delta", "omega_rad", "chsh_covariant", "chsh_czachor")


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class SweepConfig:
    beta_min: float
    beta_max: float
    beta_steps: int
    deltas: tuple
    state: BellKind
    observables: frozenset
    output: str
    format: str = "csv"

    def __post_init__(self):
        if self.beta_steps < 2:
            raise ConfigError("--beta-steps must be at least 2")
        if not 0.0 <= self.beta_min < self.beta_max < 1.0:
            raise ConfigError("need 0 <= beta-min < beta-max < 1")
        if not self.deltas or any(not d >= 0 for d in self.deltas):
            raise ConfigError("--delta values must be >= 0")
        if self.observables == {"czachor"} and self.state is not BellKind.PSI_MINUS:
            raise ConfigError("the Czachor curve is only available for the psi- state")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.format!r}")


def fmt(x):
    """17 significant digits, round-trip safe; empty for a missing value."""
    if x is None:
        return ""
    return f"{x:.17g}"


def sweep_rows(config):
    want_cov = "covariant" in config.observables
    want_cz = "czachor" in config.observables and config.state is BellKind.PSI_MINUS
    setting = canonical_axes(config.state)
    betas = np.linspace(config.beta_min, config.beta_max, config.beta_steps)
    rows = []
    for beta in betas:
        beta = float(beta)
        for delta in sorted(config.deltas):
            omega = frame_omega(beta, delta)
            cov = chsh_value(config.state, setting, omega, beta, delta).value if want_cov else None
            cz = czachor_chsh(beta, delta) if want_cz else None
            rows.append((beta, math.atanh(beta), float(delta), omega, cov, cz))
    return rows


def render(rows, format):
    if format == "csv":
        lines = [",".join(SWEEP_COLUMNS)]
        lines += [",".join(fmt(v) for v in row) for row in rows]
        return "\n".join(lines) + "\n"
    records = [dict(zip(SWEEP_COLUMNS, row)) for row in rows]
    return json.dumps({"columns": list(SWEEP_COLUMNS), "rows": records}, indent=2) + "\n"


def write_atomic(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".relbell-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _observables(choice):
    return frozenset({"covariant", "czachor"} if choice == "both" else {choice})


def cmd_sweep(args):
    if args.alpha_min is not None or args.alpha_max is not None:
        if args.alpha_min is None or args.alpha_max is None:
            raise ConfigError("--alpha-min and --alpha-max must be given together")
        try:
            beta_min, beta_max = beta_from_rapidity(args.alpha_min), beta_from_rapidity(args.alpha_max)
        except DomainError as e:
            raise ConfigError(str(e)) from None
    else:
        beta_min, beta_max = args.beta_min, args.beta_max
    config = SweepConfig(
        beta_min=beta_min,
        beta_max=beta_max,
        beta_steps=args.beta_steps,
        deltas=tuple(args.delta),
        state=BellKind.parse(args.state),
        observables=_observables(args.observable),
        output=args.output,
        format=args.format,
    )
    write_atomic(config.output, render(sweep_rows(config), config.format))
    return EXIT_OK


def _summary(results):
    rows = []
    for family, reports in results.items():
        failed = [r for r in reports if not r.passed]
        worst = max((r.abs_error for r in reports), default=0.0)
        tol = reports[0].tolerance if reports else float("nan")
        rows.append((family, len(reports), len(failed), worst, tol, failed))
    return rows


def cmd_verify(args):
    tolerances = DEFAULT
    if args.tolerance is not None:
        # the dual-path Czachor check follows the override too
        tolerances = replace(DEFAULT.with_oracle_tolerance(args.tolerance), construction=args.tolerance)
    results = oracle.run_suite(args.grid, tolerances)
    summary = _summary(results)
    ok = all(n_fail == 0 for _, _, n_fail, _, _, _ in summary)

    out = sys.stdout
    out.write(f"{'oracle':<16}{'checks':>8}{'failed':>8}{'max abs err':>14}{'tolerance':>12}  verdict\n")
    for family, n, n_fail, worst, tol, failed in summary:
        out.write(f"{family:<16}{n:>8}{n_fail:>8}{worst:>14.3e}{tol:>12.1e}  {'PASS' if not n_fail else 'FAIL'}\n")
        for r in failed[: args.show_failures]:
            out.write(f"    {r.quantity}: error {r.abs_error:.3e}\n")
    out.write(f"overall: {'PASS' if ok else 'FAIL'}\n")

    if args.output:
        report = {
            "grid": args.grid,
            "passed": ok,
            "families": {
                family: {
                    "checks": n,
                    "failed": n_fail,
                    "max_abs_error": worst,
                    "tolerance": tol,
                    "failures": [r.as_dict() for r in failed],
                }
                for family, n, n_fail, worst, tol, failed in summary
            },
        }
        write_atomic(args.output, json.dumps(report, indent=2) + "\n")
    return EXIT_OK if ok else EXIT_COMPUTE


def cmd_critical_beta(args):
    if not args.delta >= 0:
        raise ConfigError("--delta must be >= 0")
    try:
        beta_c = critical_beta(args.delta)
    except NoCrossingError as e:
        if args.format == "json":
            print(json.dumps({"delta": args.delta, "crossing": False, "message": str(e)}))
        else:
            print(f"no crossing: {e}")
        return EXIT_NO_CROSSING
    c = czachor_chsh(beta_c, args.delta)
    residual = abs(c) - 2.0
    if args.format == "json":
        print(json.dumps({"delta": args.delta, "crossing": True, "beta_c": beta_c, "chsh": c, "residual": residual}))
    else:
        print(f"delta     = {args.delta}")
        print(f"beta_c    = {beta_c:.10f}")
        print(f"|C| - 2   = {residual:.3e}")
    return EXIT_OK


def cmd_optimize(args):
    kind = BellKind.parse(args.state)
    setting, value = optimize_axes(kind, args.omega)
    bound = horodecki_max(covariant_correlation_matrix(boosted_bell_analytic(kind, args.omega), args.omega))
    agree = bool(abs(value - bound) <= DEFAULT.consistency and value <= TSIRELSON + DEFAULT.consistency)
    if args.format == "json":
        print(json.dumps({
            "state": kind.value, "omega": args.omega, "value": value,
            "horodecki_bound": bound, "agree": agree, "axes": setting.as_dict(),
        }))
    else:
        print(f"state {kind.value}, omega = {args.omega}")
        for name, axis in setting.as_dict().items():
            print(f"  {name} = ({', '.join(f'{c:+.12f}' for c in axis)})")
        print(f"CHSH value      = {value:.15f}")
        print(f"Horodecki bound = {bound:.15f}")
    return EXIT_OK if agree else EXIT_COMPUTE


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser():
    p = _Parser(prog="relbell", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sweep", help="CHSH values over a grid of boost speeds")
    s.add_argument("--beta-min", type=float, default=0.0)
    s.add_argument("--beta-max", type=float, default=0.99)
    s.add_argument("--beta-steps", type=int, default=100)
    s.add_argument("--alpha-min", type=float, help="boost rapidity; replaces --beta-min")
    s.add_argument("--alpha-max", type=float, help="boost rapidity; replaces --beta-max")
    s.add_argument("--delta", type=float, nargs="+", default=[1.0], help="particle rapidity (one or more)")
    s.add_argument("--state", default="psi-", choices=[k.value for k in BellKind])
    s.add_argument("--observable", default="both", choices=["covariant", "czachor", "both"])
    s.add_argument("--output", default="-", help="output path, '-' for stdout")
    s.add_argument("--format", default="csv", choices=["csv", "json"])
    s.set_defaults(func=cmd_sweep)

    v = sub.add_parser("verify", help="run the brute-force oracle suite")
    v.add_argument("--grid", default="default", choices=sorted(oracle.GRIDS))
    v.add_argument("--tolerance", type=float, help="override every oracle tolerance")
    v.add_argument("--output", help="write the JSON report here")
    v.add_argument("--show-failures", type=int, default=5)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("critical-beta", help="boost speed where the Czachor CHSH value reaches 2")
    c.add_argument("--delta", type=float, required=True)
    c.add_argument("--format", default="text", choices=["text", "json"])
    c.set_defaults(func=cmd_critical_beta)

    o = sub.add_parser("optimize", help="numerically maximize CHSH over measurement axes")
    o.add_argument("--state", default="psi-", choices=[k.value for k in BellKind])
    o.add_argument("--omega", type=float, default=0.0, help="Wigner angle in radians")
    o.add_argument("--format", default="text", choices=["text", "json"])
    o.set_defaults(func=cmd_optimize)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, DomainError) as e:
        print(f"relbell: config error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except ConvergenceError as e:
        print(f"relbell: did not converge: {e}", file=sys.stderr)
        return EXIT_COMPUTE
    except RelbellError as e:
        print(f"relbell: compute error: {e}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
