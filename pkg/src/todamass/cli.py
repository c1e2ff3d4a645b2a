"""Command-line interface.

Subcommands mirror the library surface: gamma (enumerate the quantized
mass set), pi-check (Pohozaev residual of a symbolic pair), mk
(non-singularity certificate), forbidden (forbidden-set enumeration from
a vortex config file), compact (compactness verdict), liouville (rational
map mass report).  Output formats are table, csv, and json; json
documents carry a schema_version field.  Exit status is 0 on success, 1
on a domain error (diagnostic on stderr naming the error), 2 on usage
errors.  Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from fractions import Fraction
from typing import Optional

from .errors import TodamassError
from .forbidden import VortexConfig, check_compactness, gamma_i
from .gamma import enumerate_gamma, is_special
from .liouville import (
    RationalMap,
    boundary_log_slope,
    ramification,
    total_mass_report,
)
from .massalgebra import MassExpr, as_rational, cartan
from .pohozaev import MassPair, pi_residual
from .rigidity import mk_matrix, mk_nonsingular_certificate

SCHEMA_VERSION = 1
FORMATS = ("table", "csv", "json")
FORMAT_ENV_VAR = "TODAMASS_FORMAT"
FOUR_PI = 4.0 * math.pi


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _json_float(x: float) -> float:
    return float(f"{x:.12g}")


def _fmt_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _fmt_float(value)
    return str(value)


def _emit(fmt: str, payload: dict, columns: list[str], rows: list[list]) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        return
    text_rows = [[_cell(v) for v in row] for row in rows]
    if fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(text_rows)
        return
    widths = [
        max(len(col), *(len(r[i]) for r in text_rows)) if text_rows else len(col)
        for i, col in enumerate(columns)
    ]
    header = "  ".join(col.ljust(w) for col, w in zip(columns, widths)).rstrip()
    rule = "  ".join("-" * w for w in widths).rstrip()
    sys.stdout.write(header + "\n" + rule + "\n")
    for row in text_rows:
        sys.stdout.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _parse_complex(token: str) -> complex:
    try:
        return complex(token.strip().replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse complex number {token!r}")


def _parse_coeffs(text: str) -> list[complex]:
    return [_parse_complex(tok) for tok in text.split(",")]


def _parse_mass_expr(text: str) -> MassExpr:
    try:
        return MassExpr.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _parse_mu(text: str):
    try:
        return as_rational(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"cannot parse rational {text!r}: {exc}")


def _load_config(path: str) -> VortexConfig:
    with open(path, "r", encoding="utf-8") as handle:
        return VortexConfig.from_dict(json.load(handle))


def _run_gamma(args) -> tuple[dict, list[str], list[list]]:
    K = cartan(args.algebra)
    gs = enumerate_gamma(K)
    evaluate = args.mu1 is not None
    pairs = []
    columns = ["index", "s1", "s2", "special"]
    if evaluate:
        columns += ["s1_value", "s2_value"]
    rows = []
    for idx, p in enumerate(gs.pairs):
        entry = {
            "s1": p.s1.canonical(),
            "s2": p.s2.canonical(),
            "special": is_special(p, K),
        }
        row = [idx, entry["s1"], entry["s2"], entry["special"]]
        if evaluate:
            v1 = p.s1.eval(args.mu1, args.mu2)
            v2 = p.s2.eval(args.mu1, args.mu2)
            entry["s1_value"] = _fmt_rational(v1)
            entry["s2_value"] = _fmt_rational(v2)
            row += [entry["s1_value"], entry["s2_value"]]
        pairs.append(entry)
        rows.append(row)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "gamma",
        "algebra": K.label,
        "count": len(pairs),
        "orbit_size": gs.orbit_size,
    }
    if evaluate:
        payload["mu1"] = _fmt_rational(args.mu1)
        payload["mu2"] = _fmt_rational(args.mu2)
    payload["pairs"] = pairs
    return payload, columns, rows


def _run_pi_check(args) -> tuple[dict, list[str], list[list]]:
    K = cartan(args.algebra)
    pair = MassPair(args.s1, args.s2)
    residual = pi_residual(pair, K)
    coeffs = residual.coefficients()
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "pi-check",
        "algebra": K.label,
        "s1": pair.s1.canonical(),
        "s2": pair.s2.canonical(),
        "residual": {name: _fmt_rational(q) for name, q in coeffs.items()},
        "satisfied": residual.is_zero(),
    }
    columns = ["term", "coefficient"]
    rows: list[list] = [[name, _fmt_rational(q)] for name, q in coeffs.items()]
    rows.append(["satisfied", residual.is_zero()])
    return payload, columns, rows


def _run_mk(args) -> tuple[dict, list[str], list[list]]:
    K = cartan(args.algebra)
    certificate = mk_nonsingular_certificate(K)
    entries = []
    rows = []
    for inp, det in certificate:
        matrix = mk_matrix(inp, K)
        entries.append(
            {
                "l11": inp.l11,
                "l12": inp.l12,
                "l21": inp.l21,
                "l22": inp.l22,
                "matrix": [[matrix.a, matrix.b], [matrix.c, matrix.d]],
                "det": det,
            }
        )
        rows.append(
            [inp.l11, inp.l12, inp.l21, inp.l22,
             matrix.a, matrix.b, matrix.c, matrix.d, det]
        )
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "mk",
        "algebra": K.label,
        "count": len(entries),
        "all_nonsingular": True,
        "certificate": entries,
    }
    columns = ["l11", "l12", "l21", "l22", "m11", "m12", "m21", "m22", "det"]
    return payload, columns, rows


def _provenance_jsonable(prov) -> dict:
    return {"terms": [[t, j] for t, j in prov.terms], "n": prov.n}


def _provenance_text(prov) -> str:
    parts = [f"v{t}:g{j}" for t, j in prov.terms]
    parts.append(f"n={prov.n}")
    return "+".join(parts)


def _run_forbidden(args) -> tuple[dict, list[str], list[list]]:
    config = _load_config(args.config)
    fs = gamma_i(
        config, args.component, args.cutoff, max_vortices=args.max_vortices
    )
    values = []
    rows = []
    for fv in fs.values:
        values.append(
            {
                "value": _json_float(fv.value),
                "sum_over_4pi": None if fv.exact is None else _fmt_rational(fv.exact),
                "provenances": [_provenance_jsonable(p) for p in fv.provenances],
            }
        )
        rows.append(
            [
                fv.value,
                "" if fv.exact is None else _fmt_rational(fv.exact),
                len(fv.provenances),
                _provenance_text(fv.provenances[0]),
            ]
        )
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "forbidden",
        "algebra": fs.algebra,
        "component": fs.component,
        "cutoff": _json_float(fs.cutoff),
        "count": len(values),
        "values": values,
    }
    columns = ["value", "sum_over_4pi", "provenance_count", "first_provenance"]
    return payload, columns, rows


def _run_compact(args) -> tuple[dict, list[str], list[list]]:
    config = _load_config(args.config)
    verdict = check_compactness(
        config, args.rho1, args.rho2, args.tol, max_vortices=args.max_vortices
    )
    nearest_json: list[Optional[dict]] = []
    rows = []
    for component, entry in zip((1, 2), verdict.nearest_forbidden):
        if entry is None:
            nearest_json.append(None)
            rows.append([component, verdict.rho[component - 1], "", ""])
        else:
            nearest_json.append(
                {
                    "value": _json_float(entry.value),
                    "distance": _json_float(entry.distance),
                }
            )
            rows.append(
                [component, verdict.rho[component - 1], entry.value, entry.distance]
            )
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "compact",
        "algebra": config.algebra,
        "regime": verdict.regime.value,
        "compact_criterion_met": verdict.compact_criterion_met,
        "rho": [_json_float(r) for r in verdict.rho],
        "tol": _json_float(verdict.tol),
        "nearest_forbidden": nearest_json,
    }
    columns = ["component", "rho", "nearest_value", "distance"]
    rows.append(["met", verdict.compact_criterion_met, "", ""])
    rows.append(["regime", verdict.regime.value, "", ""])
    return payload, columns, rows


def _run_liouville(args) -> tuple[dict, list[str], list[list]]:
    f = RationalMap(args.numerator, args.denominator)
    report = total_mass_report(f, args.rel_tol)
    profile = ramification(f, args.ram_tol)
    slope = boundary_log_slope(f)
    degree = f.degree
    m = report.value / FOUR_PI
    is_even = abs(m - 2.0 * round(m / 2.0)) <= 10.0 * args.rel_tol * m
    identity_rel_error = abs(report.value / (8.0 * math.pi * degree) - 1.0)
    vortices = [
        {
            "location": [_json_float(loc.real), _json_float(loc.imag)],
            "alpha": alpha,
        }
        for loc, alpha in profile.finite_points
    ]
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "liouville",
        "degree": degree,
        "mass": _json_float(report.value),
        "mass_error_estimate": _json_float(report.error_estimate),
        "mass_over_4pi": _json_float(m),
        "vortices": vortices,
        "alpha_infinity": profile.alpha_infinity,
        "checks": {
            "mass_identity_rel_error": _json_float(identity_rel_error),
            "mass_over_4pi_is_even_integer": is_even,
            "branching_bookkeeping_exact": profile.total_branching == 2 * degree,
            "boundary_log_slope": _json_float(slope),
            "boundary_log_slope_target": -2 * profile.alpha_infinity,
        },
    }
    columns = ["quantity", "value"]
    rows = [
        ["degree", degree],
        ["mass", report.value],
        ["mass_error_estimate", report.error_estimate],
        ["mass_over_4pi", m],
        ["alpha_infinity", profile.alpha_infinity],
        ["vortex_count", len(vortices)],
    ]
    for idx, entry in enumerate(vortices):
        rows.append(
            [
                f"vortex_{idx}",
                f"({entry['location'][0]:.12g}, {entry['location'][1]:.12g}) "
                f"alpha={entry['alpha']}",
            ]
        )
    rows += [
        ["mass_identity_rel_error", identity_rel_error],
        ["mass_over_4pi_is_even_integer", is_even],
        ["branching_bookkeeping_exact", profile.total_branching == 2 * degree],
        ["boundary_log_slope", slope],
        ["boundary_log_slope_target", -2 * profile.alpha_infinity],
    ]
    return payload, columns, rows


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="todamass",
        description="Quantized local masses of rank-2 Toda systems and "
        "Liouville developing-map mass checks.",
    )
    default_format = os.environ.get(FORMAT_ENV_VAR, "table")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            default=default_format,
            help=f"output format: table, csv, or json (default from "
            f"${FORMAT_ENV_VAR} or 'table')",
        )

    p_gamma = sub.add_parser("gamma", help="enumerate the quantized mass set")
    p_gamma.add_argument("--algebra", required=True, choices=["A2", "B2", "G2"])
    p_gamma.add_argument("--mu1", type=_parse_mu, default=None,
                         help="optional exact weight, e.g. 3/2 or 1.5")
    p_gamma.add_argument("--mu2", type=_parse_mu, default=None)
    add_format(p_gamma)
    p_gamma.set_defaults(handler=_run_gamma)

    p_pi = sub.add_parser("pi-check", help="Pohozaev residual of a mass pair")
    p_pi.add_argument("--algebra", required=True, choices=["A2", "B2", "G2"])
    p_pi.add_argument("--s1", required=True, type=_parse_mass_expr,
                      help="mass expression, e.g. '2*mu1 + 0*mu2 + 0'")
    p_pi.add_argument("--s2", required=True, type=_parse_mass_expr)
    add_format(p_pi)
    p_pi.set_defaults(handler=_run_pi_check)

    p_mk = sub.add_parser("mk", help="non-singularity certificate")
    p_mk.add_argument("--algebra", required=True, choices=["A2", "B2", "G2"])
    add_format(p_mk)
    p_mk.set_defaults(handler=_run_mk)

    p_forbidden = sub.add_parser("forbidden", help="enumerate a forbidden set")
    p_forbidden.add_argument("--config", required=True,
                             help="JSON vortex configuration file")
    p_forbidden.add_argument("--component", required=True, type=int, choices=[1, 2])
    p_forbidden.add_argument("--cutoff", required=True, type=float)
    p_forbidden.add_argument("--max-vortices", type=int, default=16)
    add_format(p_forbidden)
    p_forbidden.set_defaults(handler=_run_forbidden)

    p_compact = sub.add_parser("compact", help="compactness criterion verdict")
    p_compact.add_argument("--config", required=True)
    p_compact.add_argument("--rho1", required=True, type=float)
    p_compact.add_argument("--rho2", required=True, type=float)
    p_compact.add_argument("--tol", type=float, default=1e-6)
    p_compact.add_argument("--max-vortices", type=int, default=16)
    add_format(p_compact)
    p_compact.set_defaults(handler=_run_compact)

    p_liouville = sub.add_parser("liouville", help="rational-map mass report")
    p_liouville.add_argument(
        "--numerator", required=True, type=_parse_coeffs,
        help="comma-separated complex coefficients, constant term first "
        "(use a+bi for complex entries)",
    )
    p_liouville.add_argument(
        "--denominator", type=_parse_coeffs, default=[complex(1.0)],
    )
    p_liouville.add_argument("--rel-tol", type=float, default=1e-6)
    p_liouville.add_argument("--ram-tol", type=float, default=1e-7,
                             help="root clustering tolerance")
    add_format(p_liouville)
    p_liouville.set_defaults(handler=_run_liouville)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format not in FORMATS:
        parser.error(
            f"invalid format {args.format!r} (choose from {', '.join(FORMATS)})"
        )
    try:
        payload, columns, rows = args.handler(args)
    except TodamassError as exc:
        sys.stderr.write(f"error[{type(exc).__name__}]: {exc}\n")
        return 1
    except (ValueError, KeyError, OSError) as exc:
        sys.stderr.write(f"error[{type(exc).__name__}]: {exc}\n")
        return 1
    _emit(args.format, payload, columns, rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
