"""
Command-line entry point.

    cubicshapes family      --a 2 --b 1 --t 10
    cubicshapes certify     --a 2 --b 1 --t 10
    cubicshapes shape       --a 2 --b 1 --t 10 --eps 1e-6
    cubicshapes sweep-t     --a 2 --b 1 --t 1e3,1e6,1e12 --out run.csv
    cubicshapes sweep-alpha --alpha 1/6,1/10 --c 9/10 --t "10^12..10^48 step ^12"
    cubicshapes limit-curve --alpha 1/6,1/10,1/100

A ``--config`` file of ``key=value`` lines supplies defaults for any flag;
flags given on the command line win.
"""

import argparse
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from fractions import Fraction
import re
import sys

from .exactnum import DEFAULT_PRECISION
from .orders import (CubicOrder, DEFAULT_C, FamilyParams, irreducible_witness,
                     unit_norm_check)
from .polycubic import refine_root
from .regshape import CertStatus, limit_shape
from .report import emit_csv, emit_json, emit_svg, format_decimal
from .sweeps import (SweepConfig, alpha_sweep, cusp_escape_table, sweep_point,
                     t_sweep_fixed_ab)

__all__ = ["RunConfig", "parse_args", "parse_t_grid", "parse_rational", "main"]

SUBCOMMANDS = ("family", "certify", "shape", "sweep-t", "sweep-alpha", "limit-curve")
CONFIG_KEYS = {"a", "b", "t", "alpha", "c", "eps", "precision_bits", "out", "svg",
               "json", "strict", "workers"}

_RATIONAL = re.compile(r"^\s*(-?\d+)\s*/\s*(\d+)\s*$")
_GEOMETRIC = re.compile(r"^\s*10\^(\d+)\s*\.\.\s*10\^(\d+)\s+step\s+\^(\d+)\s*$")
_POWER = re.compile(r"^\s*10\^(\d+)\s*$")


class UsageError(ValueError):
    pass


def parse_rational(text):
    """'p/q' -> Fraction; integers are accepted as p/1."""
    m = _RATIONAL.match(text)
    if m:
        if int(m.group(2)) == 0:
            raise UsageError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), int(m.group(2)))
    if re.match(r"^\s*-?\d+\s*$", text):
        return Fraction(int(text))
    raise UsageError(f"malformed rational {text!r} (expected p/q)")


def _parse_number(text):
    try:
        return Fraction(Decimal(text.strip()))
    except (InvalidOperation, ValueError):
        raise UsageError(f"malformed number {text!r}") from None


def _parse_int(text):
    m = _POWER.match(text)
    if m:
        return 10 ** int(m.group(1))
    x = _parse_number(text)
    if x.denominator != 1:
        raise UsageError(f"{text!r} is not an integer")
    return int(x)


def parse_t_grid(text):
    """Explicit list ``1e12,1e24`` or geometric ``10^a..10^b step ^s``."""
    m = _GEOMETRIC.match(text)
    if m:
        lo, hi, step = (int(g) for g in m.groups())
        if step == 0 or hi < lo:
            raise UsageError(f"bad geometric grid {text!r}")
        grid = [10 ** e for e in range(lo, hi + 1, step)]
    else:
        grid = [_parse_int(part) for part in text.split(",") if part.strip()]
    if any(y <= x for x, y in zip(grid, grid[1:])):
        raise UsageError("t grid must be strictly increasing")
    return grid


@dataclass
class RunConfig:
    subcommand: str
    a: int = None
    b: int = 1
    t_grid: list = field(default_factory=list)
    alphas: list = field(default_factory=list)
    c: Fraction = DEFAULT_C
    eps: Fraction = Fraction(1, 10 ** 6)
    precision_bits: int = DEFAULT_PRECISION
    out: str = None
    svg: str = None
    json: str = None
    strict: bool = False
    workers: int = None


def _read_config(path):
    values = {}
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    with fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, val = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in CONFIG_KEYS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = val
    return values


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="cubicshapes",
        description="Shapes of unit lattices of cubic orders with linear units.")
    sub = parser.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")
    sub.required = True
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config")
        p.add_argument("--a")
        p.add_argument("--b")
        p.add_argument("--t", help="single t, list 1e3,1e6 or '10^a..10^b step ^s'")
        p.add_argument("--alpha", help="comma-separated p/q values")
        p.add_argument("--c", help="schedule constant p/q")
        p.add_argument("--eps", help="target width of the reduced shape")
        p.add_argument("--precision-bits", dest="precision_bits")
        p.add_argument("--out")
        p.add_argument("--svg")
        p.add_argument("--json", nargs="?", const="-")
        p.add_argument("--strict", action="store_const", const="true")
        p.add_argument("--workers")
    return parser


def _to_config(sub, raw):
    cfg = RunConfig(sub)
    if raw.get("a") is not None:
        cfg.a = _parse_int(raw["a"])
        if cfg.a <= 0:
            raise UsageError("--a must be positive")
    if raw.get("b") is not None:
        cfg.b = _parse_int(raw["b"])
    if raw.get("t") is not None:
        cfg.t_grid = parse_t_grid(raw["t"])
    if raw.get("alpha") is not None:
        cfg.alphas = [parse_rational(s) for s in raw["alpha"].split(",") if s.strip()]
        for alpha in cfg.alphas:
            if not 0 < alpha < Fraction(1, 4):
                raise UsageError(f"alpha {alpha} outside (0, 1/4)")
    if raw.get("c") is not None:
        cfg.c = parse_rational(raw["c"])
        if not 0 < cfg.c <= 1:
            raise UsageError("--c must lie in (0, 1]")
    if raw.get("eps") is not None:
        cfg.eps = _parse_number(raw["eps"])
        if cfg.eps <= 0:
            raise UsageError("--eps must be positive")
    if raw.get("precision_bits") is not None:
        cfg.precision_bits = _parse_int(raw["precision_bits"])
        if cfg.precision_bits < 16:
            raise UsageError("--precision-bits must be at least 16")
    if raw.get("workers") is not None:
        cfg.workers = _parse_int(raw["workers"])
    cfg.out = raw.get("out")
    cfg.svg = raw.get("svg")
    cfg.json = raw.get("json")
    cfg.strict = str(raw.get("strict", "")).lower() in ("1", "true", "yes")

    single = sub in ("family", "certify", "shape")
    if sub in ("family", "certify", "shape", "sweep-t"):
        if cfg.a is None:
            raise UsageError(f"{sub} requires --a")
        if not cfg.t_grid:
            raise UsageError(f"{sub} requires --t")
        if single and len(cfg.t_grid) != 1:
            raise UsageError(f"{sub} takes a single --t")
        try:
            FamilyParams(cfg.a, cfg.b, 0)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if sub == "sweep-alpha":
        if not cfg.alphas:
            raise UsageError("sweep-alpha requires --alpha")
        if not cfg.t_grid:
            raise UsageError("sweep-alpha requires --t")
    if sub == "limit-curve" and not cfg.alphas:
        raise UsageError("limit-curve requires --alpha")
    return cfg


def parse_args(argv=None):
    """Parse and validate ``argv``; exits with status 2 on a usage error."""
    parser = _build_parser()
    ns = parser.parse_args(argv)
    raw = {k: v for k, v in vars(ns).items() if k not in ("subcommand", "config")}
    try:
        if ns.config:
            for key, val in _read_config(ns.config).items():
                if raw.get(key) is None:
                    raw[key] = val
        return _to_config(ns.subcommand, raw)
    except UsageError as exc:
        parser.error(str(exc))


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def _fmt(x):
    return format_decimal(x, digits=12)


def _interval(iv):
    return f"[{format_decimal(iv.lo, 'down', 12)}, {format_decimal(iv.hi, 'up', 12)}]"


def _cmd_family(cfg, out):
    a, b, t = cfg.a, cfg.b, cfg.t_grid[0]
    order = CubicOrder.from_params(FamilyParams(a, b, t))
    f = order.poly
    print(f"f = {f}", file=out)
    print(f"disc = {order.disc}", file=out)
    if b == 1:
        irr, f1, fm1 = irreducible_witness(f, a, t)
        print(f"irreducible = {irr}  f(1) = {f1}  f(-1) = {fm1}", file=out)
    n1, n2 = unit_norm_check(order)
    print(f"N(theta) = {n1}  N({a}*theta - {b}) = {n2}", file=out)
    for i in range(3):
        lo, hi = refine_root(f, order.conjugate(i), Fraction(1, 10 ** 15) *
                             max(1, abs(order.conjugate(i)[0])))
        print(f"theta^({i + 1}) in [{_fmt(lo)}, {_fmt(hi)}]", file=out)
    return 0


def _single_record(cfg):
    return sweep_point(cfg.a, cfg.b, cfg.t_grid[0], epsilon=cfg.eps, prec=cfg.precision_bits)


def _cmd_certify(cfg, out):
    rec = _single_record(cfg)
    if rec.error:
        print(f"error: {rec.error}", file=out)
        return 1
    print(f"disc = {rec.disc}", file=out)
    print(f"R' in {_interval(rec.regulator)}", file=out)
    print(f"R'/log^2(D/4) in {_interval(rec.cusick_ratio)}", file=out)
    print(f"certificate = {rec.cert}", file=out)
    _write_outputs(cfg, [rec], out)
    return 1 if (cfg.strict and rec.cert is not CertStatus.CERTIFIED) else 0


def _cmd_shape(cfg, out):
    rec = _single_record(cfg)
    if rec.error or rec.reduced is None:
        print(f"error: {rec.error or 'certificate inconclusive'}", file=out)
        return 1
    print(f"certificate = {rec.cert}", file=out)
    print(f"tau = {_fmt(rec.tau.x.mid)} + {_fmt(rec.tau.y.mid)} i", file=out)
    print(f"reduced = {_fmt(rec.reduced.x.mid)} + {_fmt(rec.reduced.y.mid)} i"
          f"  (width <= {float(rec.reduced.width()):.3g})", file=out)
    print(f"g = {list(rec.g)}", file=out)
    _write_outputs(cfg, [rec], out)
    return 0


def _write_outputs(cfg, records, out, limit_points=()):
    if cfg.out:
        emit_csv(records, cfg.out)
    if cfg.json:
        text = emit_json(records, cfg.json)
        if cfg.json == "-":
            out.write(text)
    if cfg.svg:
        emit_svg(records, limit_points, cfg.svg)


def _sweep_status(cfg, records):
    bad = [r for r in records if r.error or r.cert is not CertStatus.CERTIFIED]
    return 1 if (cfg.strict and bad) else 0


def _print_records(records, out):
    for r in records:
        alpha = "-" if r.alpha is None else str(r.alpha)
        red = "-" if r.reduced is None else f"{float(r.reduced.x):.6f}+{float(r.reduced.y):.6f}i"
        dist = "-" if r.dist_to_limit is None else f"{float(r.dist_to_limit):.6f}"
        print(f"alpha={alpha} t={r.t} a={r.a} cert={r.cert} shape={red} dist={dist}"
              + (f" [{r.error}]" if r.error else ""), file=out)


def _cmd_sweep_t(cfg, out):
    records = t_sweep_fixed_ab(cfg.a, cfg.b, cfg.t_grid, cfg.eps, cfg.precision_bits,
                               workers=cfg.workers)
    _print_records(records, out)
    _write_outputs(cfg, records, out)
    return _sweep_status(cfg, records)


def _cmd_sweep_alpha(cfg, out):
    config = SweepConfig(alphas=cfg.alphas, c=cfg.c, t_grid=cfg.t_grid,
                         epsilon=cfg.eps, precision=cfg.precision_bits)
    records = alpha_sweep(config, workers=cfg.workers)
    _print_records(records, out)
    curve = [limit_shape(a)[1].tau for a in sorted(cfg.alphas, reverse=True)]
    _write_outputs(cfg, records, out, curve)
    return _sweep_status(cfg, records)


def _cmd_limit_curve(cfg, out):
    rows = cusp_escape_table(cfg.alphas)
    lines = ["alpha,alpha_prime,red_x,red_y_over_sqrt3,red_y,g11,g12,g21,g22"]
    for r in rows:
        lines.append(f"{r.alpha},{r.alpha_prime},{r.reduced.x},{r.reduced.s},"
                     f"{format_decimal(r.reduced.im_interval(128).mid, digits=15)},"
                     + ",".join(str(v) for v in r.g))
    for line in lines:
        print(line, file=out)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write("\n".join(lines) + "\n")
    if cfg.svg:
        emit_svg([], [r.reduced for r in sorted(rows, key=lambda r: -r.alpha)], cfg.svg)
    return 0


_COMMANDS = {
    "family": _cmd_family,
    "certify": _cmd_certify,
    "shape": _cmd_shape,
    "sweep-t": _cmd_sweep_t,
    "sweep-alpha": _cmd_sweep_alpha,
    "limit-curve": _cmd_limit_curve,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    cfg = parse_args(argv)
    try:
        return _COMMANDS[cfg.subcommand](cfg, out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
