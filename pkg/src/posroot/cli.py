"""Command-line front end.

One verb per capability: ``certify`` (bounded positivity certificates in
moment, derivative, or shifted-even mode), ``moments`` (arbitrary-precision
even moments of the xi / Bessel-K kernels), ``powersums`` (power sums of a
catalog function, symbolic where possible), ``scan-phi`` (grid
nonnegativity scan of a character kernel), ``zeros`` (compute Bessel zeros
or validate a zero table), and ``adversarial`` (seeded planted-defect
detection experiments).

Reports serialize bit-stably: sorted keys, canonical scalar strings (``p/q``
for rationals, hex-float plus precision tag for floats), no wall-clock
fields unless a timestamp is passed explicitly.  Two runs with the same
config and seed produce byte-identical files.

Exit codes: 0 certificate PASS, 2 FAIL, 3 INDETERMINATE, 1 usage or
pipeline error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .catalog import (
    FunctionKind,
    FunctionSpec,
    GridConfig,
    QuadConfig,
    besselk_moments,
    dirichlet_moments,
    phi_nonneg_scan,
    riemann_moments,
)
from .characters import kronecker_character
from .criterion import (
    CertificateReport,
    LambdaPolicy,
    RhoPolicy,
    adversarial_run,
    certify_derivative,
    certify_moment,
    certify_shifted_even,
    draw_adversarial_spec,
    serialize_scalar,
)
from .scalars import DEFAULT_PRECISION_BITS, ScalarError
from .symfun import power_sums_from_elementary
from .zeros import bessel_zeros, load_zero_table, packaged_riemann_table

__all__ = ["main", "run", "ConfigError", "emit_report"]

EXIT_PASS = 0
EXIT_ERROR = 1
EXIT_FAIL = 2
EXIT_INDETERMINATE = 3


class ConfigError(ScalarError):
    """Invalid command-line configuration."""


def _default_precision() -> int:
    env = os.environ.get("POSROOT_PRECISION_BITS")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise ConfigError(f"POSROOT_PRECISION_BITS={env!r} is not an integer") from exc
    return DEFAULT_PRECISION_BITS


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="posroot",
        description="power sums of zeros and bounded positivity certificates",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_mode=True):
        p.add_argument("--function", required=True,
                       choices=[k.value for k in FunctionKind])
        p.add_argument("--nu", default=None, help="Bessel order (rational)")
        p.add_argument("--q", default=None, help="base q in (0,1) (rational)")
        p.add_argument("--a", default=None, help="Bessel-K argument a > 0")
        p.add_argument("--discriminant", type=int, default=None,
                       help="fundamental discriminant for dirichlet-xi")
        p.add_argument("--symbolic", action="store_true",
                       help="keep parameters symbolic (rational-function mode)")
        p.add_argument("--precision", type=int, default=None, help="bits")
        p.add_argument("--quad-T", type=float, default=None)
        p.add_argument("--quad-levels", type=int, default=12)
        p.add_argument("--quad-ns-max", type=int, default=200000)
        p.add_argument("--output", default=None, help="report path (default stdout)")
        p.add_argument("--format", default="json", choices=["json", "csv", "both"])
        p.add_argument("--timestamp", default=None,
                       help="optional timestamp echoed into the report "
                            "(omitted by default so reports stay byte-stable)")

    pc = sub.add_parser("certify", help="run a bounded positivity certificate")
    common(pc)
    pc.add_argument("--mode", default="moment",
                    choices=["moment", "derivative", "shifted-even"])
    pc.add_argument("--grid", type=int, default=16, help="triangle bound B (default 16)")
    pc.add_argument("--shift", default="0", help="shift c for shifted-even mode")
    pc.add_argument("--lambda-policy", dest="lambda_policy", default="auto",
                    choices=["auto", "explicit", "zero-table", "coefficient-bound"])
    pc.add_argument("--lambda", dest="lambda_value", default=None,
                    help="explicit scaling bound (rational)")
    pc.add_argument("--rho-policy", dest="rho_policy", default="auto",
                    choices=["auto", "explicit", "zero-table",
                             "coefficient-bound", "first-root"])
    pc.add_argument("--rho", dest="rho_value", default=None,
                    help="explicit root bound (rational)")
    pc.add_argument("--zeros", default=None, help="zero-table file")

    pm = sub.add_parser("moments", help="compute even kernel moments")
    common(pm)
    pm.add_argument("--orders", type=int, required=True, help="highest n of b_{2n}")

    pp = sub.add_parser("powersums", help="power sums of a catalog function")
    common(pp)
    pp.add_argument("--count", type=int, required=True)

    ps = sub.add_parser("scan-phi", help="kernel nonnegativity grid scan")
    ps.add_argument("--discriminant", type=int, required=True)
    ps.add_argument("--t-max", type=float, default=6.0)
    ps.add_argument("--points", type=int, default=10001)
    ps.add_argument("--precision", type=int, default=None)
    ps.add_argument("--output", default=None)
    ps.add_argument("--timestamp", default=None)

    pz = sub.add_parser("zeros", help="compute Bessel zeros or validate a table")
    pz.add_argument("--nu", default=None)
    pz.add_argument("--count", type=int, default=None)
    pz.add_argument("--table", default=None, help="validate this file instead")
    pz.add_argument("--limit", type=int, default=None)
    pz.add_argument("--precision", type=int, default=None)
    pz.add_argument("--output", default=None)
    pz.add_argument("--timestamp", default=None)

    pa = sub.add_parser("adversarial", help="seeded planted-defect experiments")
    pa.add_argument("--seed", type=int, default=0)
    pa.add_argument("--draws", type=int, default=100)
    pa.add_argument("--grid", type=int, default=24)
    pa.add_argument("--base-count", type=int, default=48)
    pa.add_argument("--complex", action="store_true",
                    help="draw conjugate-pair defects instead of negative reals")
    pa.add_argument("--output", default=None)
    pa.add_argument("--timestamp", default=None)

    return ap


def _parse_fraction(text, name):
    if text is None:
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"--{name} {text!r} is not a rational number") from exc


def _build_spec(args) -> FunctionSpec:
    kind = FunctionKind(args.function)
    precision = args.precision or _default_precision()
    if precision < 64:
        raise ConfigError(f"precision {precision} below the 64-bit minimum")
    quad = QuadConfig(T=args.quad_T, levels=args.quad_levels, N_s_max=args.quad_ns_max)
    params = {}
    if args.nu is not None:
        params["nu"] = _parse_fraction(args.nu, "nu")
    if args.q is not None:
        params["q"] = _parse_fraction(args.q, "q")
    if args.a is not None:
        params["a"] = _parse_fraction(args.a, "a")
    if args.discriminant is not None:
        params["chi"] = kronecker_character(args.discriminant)
    if kind is FunctionKind.DIRICHLET_XI and "chi" not in params:
        raise ConfigError("dirichlet-xi needs --discriminant")
    if kind is FunctionKind.BESSEL_K and "a" not in params:
        raise ConfigError("bessel-k needs --a")
    if kind is FunctionKind.BESSEL and "nu" not in params and not args.symbolic:
        raise ConfigError("bessel needs --nu (or --symbolic)")
    if kind in (FunctionKind.QBESSEL, FunctionKind.RAMANUJAN_AQ) \
            and "q" not in params and not args.symbolic:
        raise ConfigError(f"{kind.value} needs --q (or --symbolic)")
    if kind is FunctionKind.QBESSEL and "nu" not in params and not args.symbolic:
        raise ConfigError("qbessel needs --nu (or --symbolic)")
    if args.symbolic:
        mode = "ratfunc"
    elif kind in (FunctionKind.SINC, FunctionKind.BESSEL, FunctionKind.QBESSEL,
                  FunctionKind.RAMANUJAN_AQ):
        mode = "ratfunc" if kind is FunctionKind.SINC else "exact"
    else:
        mode = "float"
    return FunctionSpec(kind, params=params, mode=mode, precision=precision, quad=quad)


def _config_echo(args) -> dict:
    # the output path is where the report lands, not part of the computation
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in ("command", "output"):
            continue
        out[k] = v if isinstance(v, (int, float, str, bool)) or v is None else str(v)
    return out


def _resolve_lambda_policy(args, spec) -> LambdaPolicy:
    pol = args.lambda_policy
    if pol == "explicit" or args.lambda_value is not None:
        value = _parse_fraction(args.lambda_value, "lambda")
        if value is None:
            raise ConfigError("--lambda-policy explicit needs --lambda")
        return LambdaPolicy(kind="explicit", value=value)
    if pol == "zero-table" or (pol == "auto" and spec.kind in
                               (FunctionKind.BESSEL, FunctionKind.RIEMANN_XI)):
        table = _zero_table_for(args, spec)
        return LambdaPolicy(kind="zero-table", table=table)
    if pol == "auto" and spec.kind is FunctionKind.SINC:
        return LambdaPolicy(kind="explicit", value=Fraction(1))
    return LambdaPolicy(kind="coefficient-bound")


def _resolve_rho_policy(args, spec, mode) -> RhoPolicy:
    pol = args.rho_policy
    if pol == "explicit" or args.rho_value is not None:
        value = _parse_fraction(args.rho_value, "rho")
        if value is None:
            raise ConfigError("--rho-policy explicit needs --rho")
        return RhoPolicy(kind="explicit", value=value)
    if pol == "zero-table" or (pol == "auto" and mode == "derivative" and spec.kind in
                               (FunctionKind.BESSEL, FunctionKind.RIEMANN_XI)):
        table = _zero_table_for(args, spec)
        return RhoPolicy(kind="zero-table", table=table)
    if pol == "first-root" or (pol == "auto" and mode == "shifted-even"):
        return RhoPolicy(kind="first-root")
    if pol == "auto" and spec.kind is FunctionKind.SINC:
        return RhoPolicy(kind="explicit", value=Fraction(1023, 1024))
    return RhoPolicy(kind="coefficient-bound")


def _zero_table_for(args, spec):
    if getattr(args, "zeros", None):
        return load_zero_table(args.zeros, precision=spec.precision)
    if spec.kind is FunctionKind.BESSEL:
        return bessel_zeros(spec.params["nu"], 1, spec.precision)
    if spec.kind is FunctionKind.RIEMANN_XI:
        return packaged_riemann_table(limit=1000, precision=spec.precision)
    raise ConfigError(f"no zero-table source for {spec.kind.value}; pass --zeros")


def emit_report(payload: dict, fmt: str, path, csv_text: str = "") -> list[str]:
    """Write (or print) the report; returns the list of files written."""
    if fmt == "csv" and not csv_text:
        # commands without a cell triangle fall back to their JSON payload
        fmt = "json"
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    written = []
    if path is None:
        if fmt in ("json", "both"):
            sys.stdout.write(text)
        if fmt in ("csv", "both") and csv_text:
            sys.stdout.write(csv_text)
        return written
    if fmt in ("json", "both"):
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        written.append(path)
    if fmt in ("csv", "both") and csv_text:
        csv_path = path + ".csv" if not path.endswith(".json") else path[:-5] + ".csv"
        with open(csv_path, "w", encoding="utf-8") as f:
            f.write(csv_text)
        written.append(csv_path)
    return written


def _report_exit(report: CertificateReport) -> int:
    return {"BOUNDED-PASS": EXIT_PASS, "FAIL": EXIT_FAIL,
            "INDETERMINATE": EXIT_INDETERMINATE}[report.verdict]


def _cmd_certify(args) -> int:
    if args.grid < 0:
        raise ConfigError(f"--grid {args.grid} must be nonnegative")
    spec = _build_spec(args)
    if args.mode == "moment":
        report = certify_moment(spec, args.grid, _resolve_lambda_policy(args, spec))
    elif args.mode == "derivative":
        report = certify_derivative(spec, args.grid,
                                    _resolve_rho_policy(args, spec, args.mode))
    else:
        shift = _parse_fraction(args.shift, "shift")
        report = certify_shifted_even(spec, shift, args.grid,
                                      _resolve_rho_policy(args, spec, args.mode))
    report.metadata["config_echo"] = _config_echo(args)
    report.metadata["timestamp"] = args.timestamp
    emit_report(report.as_dict(), args.format, args.output, report.to_csv())
    return _report_exit(report)


def _cmd_moments(args) -> int:
    spec = _build_spec(args)
    if spec.kind is FunctionKind.RIEMANN_XI:
        mr = riemann_moments(args.orders, spec.precision, spec.quad)
    elif spec.kind is FunctionKind.DIRICHLET_XI:
        mr = dirichlet_moments(spec.params["chi"], args.orders, spec.precision, spec.quad)
    elif spec.kind is FunctionKind.BESSEL_K:
        mr = besselk_moments(spec.params["a"], args.orders, spec.precision, spec.quad)
    else:
        raise ConfigError(f"{spec.kind.value} has closed-form coefficients; "
                          "moments applies to riemann-xi, dirichlet-xi, bessel-k")
    payload = {
        "schema": 1,
        "function": spec.label,
        "moments": [serialize_scalar(v) for v in mr.values],
        "moments_decimal": [str(v) for v in mr.values],
        "errors": [serialize_scalar(e) for e in mr.errors],
        "metadata": {**mr.metadata, "config_echo": _config_echo(args),
                     "timestamp": args.timestamp},
    }
    emit_report(payload, args.format, args.output)
    return EXIT_PASS


def _cmd_powersums(args) -> int:
    spec = _build_spec(args)
    e = spec.elementary(args.count)
    p = power_sums_from_elementary(e, args.count)
    payload = {
        "schema": 1,
        "function": spec.label,
        "power_sums": {str(k): serialize_scalar(p[k]) for k in range(1, args.count + 1)},
        "domain": p.domain,
        "metadata": {"config_echo": _config_echo(args), "timestamp": args.timestamp},
    }
    emit_report(payload, args.format, args.output)
    return EXIT_PASS


def _cmd_scan_phi(args) -> int:
    chi = kronecker_character(args.discriminant)
    precision = args.precision or _default_precision()
    if precision < 64:
        raise ConfigError(f"precision {precision} below the 64-bit minimum")
    report = phi_nonneg_scan(chi, GridConfig(t_max=args.t_max, points=args.points),
                             precision=precision)
    payload = {
        "schema": 1,
        "scan": report.as_dict(),
        "metadata": {"config_echo": _config_echo(args), "timestamp": args.timestamp},
    }
    emit_report(payload, "json", args.output)
    return EXIT_PASS if report.passed else EXIT_FAIL


def _cmd_zeros(args) -> int:
    precision = args.precision or _default_precision()
    if precision < 64:
        raise ConfigError(f"precision {precision} below the 64-bit minimum")
    if args.table:
        table = load_zero_table(args.table, limit=args.limit, precision=precision)
        payload = {
            "schema": 1,
            "source": table.source,
            "count": len(table),
            "first": str(table.first),
            "last": str(table[len(table) - 1]),
            "metadata": {"config_echo": _config_echo(args), "timestamp": args.timestamp},
        }
        emit_report(payload, "json", args.output)
        return EXIT_PASS
    if args.nu is None or args.count is None:
        raise ConfigError("zeros needs either --table or both --nu and --count")
    table = bessel_zeros(_parse_fraction(args.nu, "nu"), args.count, precision)
    payload = {
        "schema": 1,
        "source": table.source,
        "function": "bessel",
        "nu": str(args.nu),
        "zeros": [str(z) for z in table.ordinates],
        "metadata": {"config_echo": _config_echo(args), "timestamp": args.timestamp},
    }
    emit_report(payload, "json", args.output)
    return EXIT_PASS


def _cmd_adversarial(args) -> int:
    import random

    rng = random.Random(args.seed)
    runs = []
    detected = 0
    for i in range(args.draws):
        spec = draw_adversarial_spec(rng, base_count=args.base_count,
                                     complex_defect=args.complex)
        report, depth = adversarial_run(spec, args.grid)
        runs.append({
            "draw": i,
            "label": spec.label,
            "verdict": report.verdict,
            "detection_depth": depth,
        })
        if depth is not None:
            detected += 1
    payload = {
        "schema": 1,
        "seed": args.seed,
        "draws": args.draws,
        "grid_bound": args.grid,
        "detected": detected,
        "runs": runs,
        "metadata": {"config_echo": _config_echo(args), "timestamp": args.timestamp},
    }
    emit_report(payload, "json", args.output)
    return EXIT_PASS


def run(args) -> int:
    try:
        if args.command == "certify":
            return _cmd_certify(args)
        if args.command == "moments":
            return _cmd_moments(args)
        if args.command == "powersums":
            return _cmd_powersums(args)
        if args.command == "scan-phi":
            return _cmd_scan_phi(args)
        if args.command == "zeros":
            return _cmd_zeros(args)
        if args.command == "adversarial":
            return _cmd_adversarial(args)
        raise ConfigError(f"unknown command {args.command!r}")
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ScalarError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
