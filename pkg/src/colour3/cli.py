"""Command-line front end.

Commands:
  series   zero-momentum coupling series with error estimates
  eval     one coefficient at a momentum pair, closed form or recursion
  graphs   ribbon graph classes at one order with amplitudes and resum
  verify   run the library's invariant checks and report pass/fail

Configuration: flags > config file (COLOUR3_CONFIG, flat key=value) >
defaults.  Exit codes: 0 success, 1 verification failure, 2 usage or
configuration error.  All numbers are printed with 12 significant
digits; JSON output stores the same rounded values so files round-trip.
"""

import argparse
import json
import math
import os
import sys

import numpy as np

from . import __version__, closedforms, polylog, recursion, ribbon
from .cheb import MomentumGrid
from .quad import integrate_with_error, make_rule

DEFAULTS = {
    "grid_size": 22,
    "panels": 12,
    "points": 24,
    "max_order": 4,
    "format": "json",
}

_INT_KEYS = ("grid_size", "panels", "points", "max_order")


class UsageError(Exception):
    pass


def _fmt(x):
    """12 significant digits."""
    return float(f"{float(x):.12g}")


def _load_config_file(path):
    out = {}
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise UsageError(
                        f"{path}:{lineno}: expected key=value, got {line!r}")
                key, _, value = line.partition("=")
                out[key.strip().replace("-", "_")] = value.strip()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from None
    return out


def _resolve_config(args):
    cfg = dict(DEFAULTS)
    path = os.environ.get("COLOUR3_CONFIG")
    if path:
        for key, value in _load_config_file(path).items():
            if key not in DEFAULTS:
                raise UsageError(f"unknown config key {key!r}")
            cfg[key] = value
    for key in DEFAULTS:
        flag = getattr(args, key, None)
        if flag is not None:
            cfg[key] = flag
    for key in _INT_KEYS:
        try:
            cfg[key] = int(cfg[key])
        except (TypeError, ValueError):
            raise UsageError(f"{key} must be an integer, got {cfg[key]!r}")
        low = 0 if key == "max_order" else 1
        if cfg[key] < low:
            raise UsageError(f"{key} must be >= {low}, got {cfg[key]}")
    if cfg["max_order"] > 4:
        raise UsageError(f"max_order must be <= 4, got {cfg['max_order']}")
    if cfg["format"] not in ("json", "csv"):
        raise UsageError(f"format must be json or csv, got {cfg['format']!r}")
    return cfg


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _meta(cfg):
    return {
        "grid": {"size": cfg["grid_size"]},
        "quadrature": {"panels": cfg["panels"], "points": cfg["points"]},
        "version": __version__,
    }


# ---------------------------------------------------------------------------
# series

def cmd_series(args):
    cfg = _resolve_config(args)
    coeffs, errors = recursion.g00_series_with_errors(
        cfg["max_order"], cfg["grid_size"], cfg["panels"], cfg["points"])
    if not all(math.isfinite(c) for c in coeffs):
        raise ArithmeticError(f"series evaluation diverged: {coeffs}")
    rows = [{"order": n, "value": _fmt(c), "error": _fmt(e)}
            for n, (c, e) in enumerate(zip(coeffs, errors))]
    payload = {"meta": _meta(cfg), "coefficients": rows, "diagnostics": {}}
    if cfg["format"] == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = ["order,value,error"]
        lines += [f"{r['order']},{r['value']:.12g},{r['error']:.12g}"
                  for r in rows]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# eval

_CLOSED = {0: closedforms.g0, 1: closedforms.g2, 2: closedforms.g4,
           3: closedforms.g6}


def _eval_closed(order, p1, p2):
    if order not in _CLOSED:
        raise UsageError(
            f"closed forms are available for orders 0..3, got {order}")
    return _CLOSED[order](p1, p2)


def _eval_recursion(order, p1, p2, cfg):
    coeffs = recursion.compute_orders(
        order, cfg["grid_size"], cfg["panels"], cfg["points"])
    coef = coeffs[order]
    if p1 == p2:
        return recursion.diagonal(coef, p1)
    return float(coef(p1, p2))


def cmd_eval(args):
    cfg = _resolve_config(args)
    if args.order is None:
        raise UsageError("eval requires --order")
    order = args.order
    if order < 0 or order > 4:
        raise UsageError(f"order must be in 0..4, got {order}")
    p1, p2 = args.p1, args.p2
    if p1 < 0 or p2 < 0:
        raise UsageError(f"momenta must be nonnegative, got ({p1}, {p2})")
    source = args.source
    result = {"meta": _meta(cfg), "order": order, "p1": _fmt(p1),
              "p2": _fmt(p2), "source": source}
    lines = []
    if source in ("closed", "both"):
        v = _eval_closed(order, p1, p2)
        result["closed"] = _fmt(v)
        lines.append(f"closed    {v:.12g}")
    if source in ("recursion", "both"):
        v = _eval_recursion(order, p1, p2, cfg)
        result["recursion"] = _fmt(v)
        lines.append(f"recursion {v:.12g}")
    if source == "both":
        d = result["recursion"] - result["closed"]
        result["discrepancy"] = _fmt(d)
        lines.append(f"discrepancy {d:.12g}")
    if cfg["format"] == "json":
        text = json.dumps(result, indent=2) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# graphs

def cmd_graphs(args):
    cfg = _resolve_config(args)
    order = args.order
    if order is None:
        raise UsageError("graphs requires --order")
    if order not in (1, 2):
        raise UsageError(f"graph enumeration covers orders 1 and 2, got {order}")
    p1, p2 = args.p1, args.p2
    rule = make_rule(cfg["panels"], cfg["points"])
    classes = ribbon.enumerate_2pt(order)
    rows = []
    for i, c in enumerate(classes):
        amp = ribbon.amplitude(c.representative, [p1, p2], rule=rule)
        row = {"index": i, "s": c.s, "amplitude": _fmt(amp),
               "graph": c.representative.to_dict()}
        if order == 2 and p1 != p2:
            # pair each class with its closed form by numeric proximity
            k = min(range(1, 5),
                    key=lambda j: abs(ribbon.amplitude_closed(j, p1, p2) - amp))
            row["closed_amplitude"] = _fmt(ribbon.amplitude_closed(k, p1, p2))
        rows.append(row)
    total = sum(c.s * ribbon.amplitude(c.representative, [p1, p2], rule=rule)
                for c in classes)
    closed = closedforms.g2(p1, p2) if order == 1 else closedforms.g4(p1, p2)
    payload = {
        "meta": _meta(cfg), "order": order, "p1": _fmt(p1), "p2": _fmt(p2),
        "classes": rows, "total": _fmt(total), "closed": _fmt(closed),
        "discrepancy": _fmt(total - closed),
    }
    if cfg["format"] == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = ["index,s,amplitude"]
        lines += [f"{r['index']},{r['s']},{r['amplitude']:.12g}" for r in rows]
        lines.append(f"total,,{payload['total']:.12g}")
        lines.append(f"closed,,{payload['closed']:.12g}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# verify

def _check(name, ok, detail, results):
    results.append((name, bool(ok), detail))


def _verify_polylog(results):
    xs = np.linspace(0.0, 50.0, 251)
    worst = 0.0
    for x in xs:
        r = polylog.li2(-x) + 0.5 * math.log1p(x) ** 2 + polylog.li2(x / (1 + x))
        worst = max(worst, abs(r))
    _check("polylog.dilog_reflection", worst < 1e-12, f"max |res| {worst:.2e}",
           results)
    worst1 = worst2 = 0.0
    for x in xs[1:]:
        x = float(x)
        r1 = (polylog.li3(-x) - polylog.li3(-1.0 / x)
              + math.log(x) ** 3 / 6.0 + math.pi ** 2 / 6.0 * math.log(x))
        L = math.log1p(x)
        r2 = (polylog.li3(-x) + polylog.li3(x / (1 + x))
              + polylog.li3(1.0 / (1 + x)) - polylog.zeta3()
              - L ** 3 / 3.0 + 0.5 * math.log(x) * L * L
              + math.pi ** 2 / 6.0 * L)
        worst1 = max(worst1, abs(r1))
        worst2 = max(worst2, abs(r2))
    _check("polylog.trilog_inversion", worst1 < 1e-11,
           f"max |res| {worst1:.2e}", results)
    _check("polylog.trilog_landen", worst2 < 1e-11,
           f"max |res| {worst2:.2e}", results)
    consts = abs(polylog.zeta3() - 1.2020569031595943) < 1e-12 \
        and abs(polylog.li2(-1.0) + math.pi ** 2 / 12.0) < 1e-12 \
        and abs(polylog.li3(-1.0) + 0.75 * polylog.zeta3()) < 1e-12
    _check("polylog.constants", consts, "zeta3, li2(-1), li3(-1)", results)


def _verify_quadrature(results, cfg):
    rule = make_rule(cfg["panels"], cfg["points"])
    # int_0^inf log(1+q)/(1+q)^3 dq = 1/4; not polynomial under the
    # compactification, so an under-resolved rule is actually flagged
    val, err = integrate_with_error(
        rule, lambda q: np.log1p(q) / (1.0 + q) ** 3)
    ok = abs(val - 0.25) < 1e-10 and err < 1e-10
    _check("quad.doubling", ok,
           f"int log(1+q)(1+q)^-3 = {val:.12g}, est {err:.2e}", results)


def _verify_recursion(results, cfg, colour_factor):
    coeffs = recursion.compute_orders(
        3, cfg["grid_size"], cfg["panels"], cfg["points"],
        colour_factor=colour_factor)
    rng = np.random.default_rng(2026)
    pairs = rng.uniform(0.0, 5.0, (12, 2))
    tols = {1: 1e-8, 2: 1e-6, 3: 5e-5}
    fns = {1: closedforms.g2, 2: closedforms.g4, 3: closedforms.g6}
    for n in (1, 2, 3):
        worst = max(abs(float(coeffs[n](a, b)) - fns[n](a, b))
                    for a, b in pairs)
        _check(f"recursion.order{n}_oracle", worst < tols[n],
               f"max |err| {worst:.2e} (tol {tols[n]:.0e})", results)
    worst = max(abs(recursion.diagonal(coeffs[3], p) - closedforms.gp6_diag(p))
                for p in (0.0, 0.5, 1.0, 2.0, 5.0))
    _check("recursion.diagonal_order3", worst < 1e-5,
           f"max |err| {worst:.2e}", results)


def _verify_residual(results, cfg):
    rule = make_rule(cfg["panels"], cfg["points"])
    coeffs = recursion.compute_orders(
        3, cfg["grid_size"], cfg["panels"], cfg["points"])
    ok = True
    details = []
    for n in (1, 2):
        r1 = abs(recursion.closed_equation_residual(
            coeffs[:n + 1], 0.05, 1.3, 0.4, rule))
        r2 = abs(recursion.closed_equation_residual(
            coeffs[:n + 1], 0.1, 1.3, 0.4, rule))
        slope = math.log(r2 / r1) / math.log(2.0)
        details.append(f"n={n}: {slope:.3f}")
        ok = ok and abs(slope - (2 * n + 2)) < 0.2
    _check("recursion.residual_scaling", ok, "; ".join(details), results)


def _verify_graphs(results, cfg):
    rule = make_rule(cfg["panels"], cfg["points"])
    c1 = ribbon.enumerate_2pt(1)
    ok1 = len(c1) == 1 and c1[0].s == 2
    _check("ribbon.order1_classes", ok1,
           f"{len(c1)} class(es), s = {[c.s for c in c1]}", results)
    c2 = ribbon.enumerate_2pt(2)
    mult = sorted(c.s for c in c2)
    _check("ribbon.order2_classes", mult == [2, 4, 4, 4],
           f"multiplicities {mult}", results)
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(5):
        a, b = rng.uniform(0.0, 5.0, 2)
        worst = max(worst, abs(ribbon.resum(c2, [a, b], rule=rule)
                               - closedforms.g4(a, b)))
    _check("ribbon.resum_order2", worst < 1e-7, f"max |err| {worst:.2e}",
           results)


def cmd_verify(args):
    cfg = _resolve_config(args)
    skip = set(args.skip or [])
    results = []
    suites = {
        "polylog": lambda: _verify_polylog(results),
        "quad": lambda: _verify_quadrature(results, cfg),
        "recursion": lambda: _verify_recursion(results, cfg,
                                               args.colour_factor),
        "residual": lambda: _verify_residual(results, cfg),
        "ribbon": lambda: _verify_graphs(results, cfg),
    }
    for name, fn in suites.items():
        if name in skip:
            continue
        try:
            fn()
        except Exception as exc:  # a crashed suite is a failure, not an abort
            _check(f"{name}.exception", False, f"{type(exc).__name__}: {exc}",
                   results)
    lines = []
    for name, ok, detail in results:
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name:32s} {detail}")
    n_fail = sum(1 for _, ok, _ in results if not ok)
    lines.append(f"{len(results) - n_fail}/{len(results)} checks passed")
    _emit("\n".join(lines) + "\n", args.out)
    return 1 if n_fail else 0


# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="colour3",
        description="Perturbative planar 2-point function of the 3-colour "
                    "scalar matrix model.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--grid-size", dest="grid_size", type=int)
        p.add_argument("--panels", type=int)
        p.add_argument("--points", type=int)
        p.add_argument("--format", choices=("json", "csv"))
        p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("series", help="zero-momentum coupling series")
    common(p)
    p.add_argument("--max-order", dest="max_order", type=int)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("eval", help="evaluate one coefficient")
    common(p)
    p.add_argument("--p1", type=float, required=True)
    p.add_argument("--p2", type=float, required=True)
    p.add_argument("--order", type=int)
    p.add_argument("--source", choices=("closed", "recursion", "both"),
                   default="closed")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("graphs", help="ribbon graph classes at one order")
    common(p)
    p.add_argument("--p1", type=float, required=True)
    p.add_argument("--p2", type=float, required=True)
    p.add_argument("--order", type=int)
    p.set_defaults(func=cmd_graphs)

    p = sub.add_parser("verify", help="run the invariant checks")
    common(p)
    p.add_argument("--max-order", dest="max_order", type=int)
    p.add_argument("--skip", action="append", metavar="SUITE",
                   help="suite name to skip (repeatable)")
    p.add_argument("--colour-factor", dest="colour_factor", type=float,
                   default=3.0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
