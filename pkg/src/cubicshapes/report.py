"""CSV, JSON and SVG output for sweep records."""

import csv
from decimal import (Decimal, Context, ROUND_CEILING, ROUND_FLOOR,
                     ROUND_HALF_EVEN)
from fractions import Fraction
import io
import json
import math

__all__ = [
    "CSV_COLUMNS",
    "DIGITS",
    "record_row",
    "emit_csv",
    "emit_json",
    "read_csv",
    "emit_svg",
    "format_decimal",
]

CSV_COLUMNS = (
    "alpha_num", "alpha_den", "t", "a_t", "k", "disc",
    "eps1_lo", "eps1_hi", "eps2_lo", "eps2_hi", "delta1_lo", "delta1_hi",
    "reg_lo", "reg_hi", "cusick_ratio_hi", "cert",
    "tau_x", "tau_y", "red_x", "red_y", "g11", "g12", "g21", "g22",
    "dist_to_limit",
    # extension: pair member b and record status
    "b", "status",
)

DIGITS = 30

_MODES = {"down": ROUND_FLOOR, "up": ROUND_CEILING, "nearest": ROUND_HALF_EVEN}


def format_decimal(x, mode="nearest", digits=DIGITS):
    """Rational -> decimal string with ``digits`` significant digits."""
    if x is None:
        return ""
    x = Fraction(x)
    ctx = Context(prec=digits, rounding=_MODES[mode])
    d = ctx.divide(Decimal(x.numerator), Decimal(x.denominator))
    return format(d, "E") if d else "0"


def _lo(iv):
    return format_decimal(iv.lo, "down") if iv is not None else ""


def _hi(iv):
    return format_decimal(iv.hi, "up") if iv is not None else ""


def _mid(iv):
    return format_decimal(iv.mid) if iv is not None else ""


def record_row(rec):
    """Column name -> string for one record."""
    alpha = rec.alpha
    g = rec.g or (None,) * 4
    status = "ok" if rec.error is None else rec.error
    if rec.flags:
        status = ";".join([status] + list(rec.flags))
    row = {
        "alpha_num": "" if alpha is None else str(alpha.numerator),
        "alpha_den": "" if alpha is None else str(alpha.denominator),
        "t": str(rec.t),
        "a_t": str(rec.a),
        "k": "" if rec.k is None else str(rec.k),
        "disc": "" if rec.disc is None else str(rec.disc),
        "eps1_lo": _lo(rec.eps1), "eps1_hi": _hi(rec.eps1),
        "eps2_lo": _lo(rec.eps2), "eps2_hi": _hi(rec.eps2),
        "delta1_lo": _lo(rec.delta1), "delta1_hi": _hi(rec.delta1),
        "reg_lo": _lo(rec.regulator), "reg_hi": _hi(rec.regulator),
        "cusick_ratio_hi": _hi(rec.cusick_ratio),
        "cert": "" if rec.cert is None else str(rec.cert),
        "tau_x": _mid(rec.tau.x) if rec.tau else "",
        "tau_y": _mid(rec.tau.y) if rec.tau else "",
        "red_x": _mid(rec.reduced.x) if rec.reduced else "",
        "red_y": _mid(rec.reduced.y) if rec.reduced else "",
        "g11": "" if g[0] is None else str(g[0]),
        "g12": "" if g[1] is None else str(g[1]),
        "g21": "" if g[2] is None else str(g[2]),
        "g22": "" if g[3] is None else str(g[3]),
        "dist_to_limit": _mid(rec.dist_to_limit),
        "b": str(rec.b),
        "status": status,
    }
    return row


def _open(path):
    try:
        return open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc


def emit_csv(records, path):
    """Header plus one row per record; UTF-8 with LF line endings."""
    with _open(path) as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for rec in records:
            writer.writerow(record_row(rec))


def emit_json(records, path):
    """Same schema as the CSV, one object per record."""
    rows = [record_row(r) for r in records]
    text = json.dumps(rows, indent=1) + "\n"
    if path == "-":
        return text
    with _open(path) as fh:
        fh.write(text)
    return text


_INT_COLUMNS = {"alpha_num", "alpha_den", "t", "a_t", "k", "disc",
                "g11", "g12", "g21", "g22", "b"}
_TEXT_COLUMNS = {"cert", "status"}


def read_csv(path):
    """Parse a file written by :func:`emit_csv` into typed values.

    Integers come back as ``int``, decimals as ``Decimal`` and empty
    cells as ``None``.
    """
    out = []
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            typed = {}
            for key, val in row.items():
                if val == "":
                    typed[key] = None
                elif key in _INT_COLUMNS:
                    typed[key] = int(val)
                elif key in _TEXT_COLUMNS:
                    typed[key] = val
                else:
                    typed[key] = Decimal(val)
            out.append(typed)
    return out


# --------------------------------------------------------------------------
# SVG
# --------------------------------------------------------------------------

_W, _H, _PAD = 640, 640, 40
_X_RANGE = (-0.75, 0.75)
_LOG_ABOVE = 4.0


def _warp(y):
    # linear up to 4, logarithmic above
    if y <= _LOG_ABOVE:
        return y
    return _LOG_ABOVE + _LOG_ABOVE * math.log(y / _LOG_ABOVE)


def _mapper(y_top):
    top = _warp(y_top)

    def sx(x):
        return _PAD + (x - _X_RANGE[0]) / (_X_RANGE[1] - _X_RANGE[0]) * (_W - 2 * _PAD)

    def sy(y):
        return _H - _PAD - _warp(y) / top * (_H - 2 * _PAD)

    return sx, sy


def _point_xy(p):
    if hasattr(p, "as_complex"):
        z = p.as_complex()
    else:
        z = complex(p)
    return z.real, z.imag


def emit_svg(records, limit_points=(), path=None):
    """Scatter of reduced shapes and the limit curve in the fundamental domain.

    ``limit_points`` are points of H (ExactPoint or complex) joined by a
    polyline.  The y axis is linear up to 4 and logarithmic above.
    Returns the SVG text and writes it to ``path`` if given.
    """
    shapes = [_point_xy(r.reduced) for r in records if getattr(r, "reduced", None) is not None]
    curve = [_point_xy(p) for p in limit_points]
    y_top = max([2.0] + [y for _, y in shapes + curve]) * 1.15
    sx, sy = _mapper(y_top)
    out = io.StringIO()
    out.write(f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
              f'viewBox="0 0 {_W} {_H}">\n')
    out.write('<rect width="100%" height="100%" fill="white"/>\n')
    # fundamental domain outline
    arc = []
    for i in range(61):
        ang = math.pi / 3 + i * (math.pi / 3) / 60
        arc.append(f"{sx(math.cos(ang)):.3f},{sy(math.sin(ang)):.3f}")
    out.write(f'<polyline id="arc" points="{" ".join(arc)}" fill="none" stroke="black"/>\n')
    corner_y = math.sqrt(3) / 2
    for x in (-0.5, 0.5):
        out.write(f'<line class="edge" x1="{sx(x):.3f}" y1="{sy(corner_y):.3f}" '
                  f'x2="{sx(x):.3f}" y2="{sy(y_top):.3f}" stroke="black"/>\n')
    out.write(f'<line class="axis" x1="{sx(_X_RANGE[0]):.3f}" y1="{sy(0):.3f}" '
              f'x2="{sx(_X_RANGE[1]):.3f}" y2="{sy(0):.3f}" stroke="gray"/>\n')
    if curve:
        pts = " ".join(f"{sx(x):.3f},{sy(y):.3f}" for x, y in curve)
        out.write(f'<polyline id="limit-curve" points="{pts}" fill="none" stroke="red"/>\n')
        for x, y in curve:
            out.write(f'<circle class="limit" cx="{sx(x):.3f}" cy="{sy(y):.3f}" r="3" fill="red"/>\n')
    for x, y in shapes:
        out.write(f'<circle class="shape" cx="{sx(x):.3f}" cy="{sy(y):.3f}" r="3" fill="blue"/>\n')
    out.write("</svg>\n")
    text = out.getvalue()
    if path is not None:
        with _open(path) as fh:
            fh.write(text)
    return text
