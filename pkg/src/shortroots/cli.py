"""Batch command line interface.

Subcommands: info, verify, table1, antichains, nullcone-char.  All accept
--json; exit codes are 0 (all good), 1 (a verification check failed) and
2 (usage or validation error).  Output is ASCII and byte-identical
across runs; timings are opt-in because they would break that.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import re
import sys
import time
from fractions import Fraction

from . import checks
from .antichains import antichain_report
from .config import current_limits
from .errors import NotFiniteType, SizeLimitExceeded, UnsupportedRootSystem
from .gradedchar import QPoly, hilbert_check
from .littleadjoint import little_adjoint_dims
from .reduction import dimension_ledger, simple_reduction, summary_row
from .rootsystem import RootSystem, Weight, build, dual_coxeter_of_dual

SCHEMA_VERSION = 1

_TYPE_RE = re.compile(r"^([A-Ga-g])(\d+)$")


def parse_system(text: str) -> RootSystem:
    m = _TYPE_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse root system type {text!r} (expected e.g. C4, G2)")
    return build(m.group(1).upper(), int(m.group(2)))


def jsonable(value):
    """Exactness-preserving JSON encoding: rationals become num/den pairs,
    polynomials become degree maps with their truncation."""
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, QPoly):
        return {
            "truncation": value.truncation,
            "coeffs": {str(k): v for k, v in value.terms()},
        }
    if isinstance(value, Weight):
        return {"fund": [jsonable(c) for c in value.fund]}
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {k: jsonable(v) for k, v in dataclasses.asdict(value).items()}
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def _system_block(rs: RootSystem) -> dict:
    return {"family": rs.spec.family, "rank": rs.rank}


def _emit(payload: dict, as_json: bool, text_lines) -> None:
    if as_json:
        print(json.dumps(jsonable(payload), indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_info(args) -> int:
    rs = parse_system(args.system)
    info = {
        "schemaVersion": SCHEMA_VERSION,
        "system": _system_block(rs),
        "roots": len(rs.roots),
        "positive_roots": rs.num_positive,
        "short_positive_roots": len(rs.short_positives),
        "coxeter_number": rs.coxeter_number,
        "dual_coxeter_number": rs.dual_coxeter_number,
        "dual_coxeter_of_dual": dual_coxeter_of_dual(rs),
        "exponents": list(rs.exponents),
        "weyl_order": rs.weyl_order,
        "theta": list(rs.theta.coeffs),
        "theta_s": list(rs.theta_short.coeffs),
        "ht_theta": rs.theta.height,
        "ht_theta_s": rs.theta_short.height,
        "simple_root_numbering": "Bourbaki",
    }
    lines = [
        f"system        {rs.spec}",
        f"roots         {info['roots']} ({rs.num_positive} positive, "
        f"{len(rs.short_positives)} short positive)",
        f"h             {rs.coxeter_number}",
        f"h_dual        {rs.dual_coxeter_number}",
        f"exponents     {' '.join(str(m) for m in rs.exponents)}",
        f"|W|           {rs.weyl_order}",
        f"theta         {rs.theta}  (ht {rs.theta.height})",
        f"theta_s       {rs.theta_short}  (ht {rs.theta_short.height})",
        "numbering     Bourbaki",
    ]
    if rs.is_multiply_laced:
        red = simple_reduction(rs)
        ledger = dimension_ledger(rs)
        dims = little_adjoint_dims(rs)
        info["little_adjoint"] = {
            "dim": dims.dim,
            "zero_multiplicity": dims.zero_mult,
            "short_root_count": dims.short_count,
        }
        info["reduction"] = {
            "sub_type": str(red.sub_spec),
            "sub_coxeter_number": red.sub_coxeter_number,
            "transition_factor": red.transition_factor,
        }
        info["dimension_ledger"] = dataclasses.asdict(ledger)
        lines += [
            f"dim V         {dims.dim}  (zero weight multiplicity {dims.zero_mult})",
            f"reduction     {red.sub_spec}  (h_s {red.sub_coxeter_number}, "
            f"factor {red.transition_factor})",
            f"nullcone dims {ledger.module_nullcone_dim} vs "
            f"{ledger.reduction_nullcone_dim} (ratio {ledger.transition_factor})",
        ]
    _emit(info, args.json, lines)
    return 0


def cmd_verify(args) -> int:
    rs = parse_system(args.system)
    limits = current_limits()
    only = None
    if args.check:
        unknown = [c for c in args.check if c not in checks.CHECK_IDS]
        if unknown:
            raise ValueError(
                f"unknown check id(s) {', '.join(unknown)}; valid ids: "
                + ", ".join(checks.CHECK_IDS)
            )
        only = sorted(set(args.check))
    started = time.perf_counter()
    results = checks.run_all(rs, limits, only)
    elapsed = time.perf_counter() - started
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in results:
        counts[r["status"]] += 1
    payload = {
        "schemaVersion": SCHEMA_VERSION,
        "system": _system_block(rs),
        "checks": results,
        "summary": counts,
    }
    if args.timings:
        payload["elapsed_seconds"] = round(elapsed, 3)
    lines = []
    for r in results:
        mark = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[r["status"]]
        extra = ""
        if r["status"] == "skipped":
            extra = "  (" + r["details"].get("reason", "") + ")"
        elif r["status"] == "fail":
            extra = "  " + json.dumps(jsonable(r["details"]), sort_keys=True)
        lines.append(f"{mark} {r['id']}{extra}")
    lines.append(
        f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped"
    )
    if args.timings:
        lines.append(f"elapsed {elapsed:.3f}s")
    _emit(payload, args.json, lines)
    return 1 if counts["fail"] else 0


_TABLE_SYSTEMS = [f"C{n}" for n in range(2, 7)] + [f"B{n}" for n in range(2, 7)] + ["F4", "G2"]


def cmd_table1(args) -> int:
    rows = []
    for name in _TABLE_SYSTEMS:
        rs = parse_system(name)
        row = dataclasses.asdict(summary_row(rs))
        if name == "B2":
            row["isomorphic_to"] = "C2"
        elif name == "C2":
            row["isomorphic_to"] = "B2"
        rows.append(row)
    payload = {"schemaVersion": SCHEMA_VERSION, "rows": rows}
    header = f"{'system':<8}{'dim':>5}{'h':>5}  {'reduction':<10}{'h_s':>4}{'orbits':>7}  ambient"
    lines = [header, "-" * len(header)]
    for row in rows:
        iso = f"  (= {row['isomorphic_to']})" if "isomorphic_to" in row else ""
        lines.append(
            f"{row['system']:<8}{row['module_dim']:>5}{row['coxeter_number']:>5}  "
            f"{row['sub_type']:<10}{row['sub_coxeter_number']:>4}{row['orbit_count']:>7}  "
            f"{row['ambient_algebra']}{iso}"
        )
    _emit(payload, args.json, lines)
    return 0


def cmd_antichains(args) -> int:
    rs = parse_system(args.system)
    report = antichain_report(rs)
    payload = {
        "schemaVersion": SCHEMA_VERSION,
        "system": _system_block(rs),
        "brute_force": report.brute_force_count,
        "formula": report.formula_count,
        "alt_formula": report.alt_formula_count,
        "consistent": report.consistent,
    }
    alt = "-" if report.alt_formula_count is None else str(report.alt_formula_count)
    lines = [
        f"antichains in the short positive root poset of {rs.spec}",
        f"brute force  {report.brute_force_count}",
        f"formula      {report.formula_count}",
        f"alt formula  {alt}",
        f"consistent   {'yes' if report.consistent else 'NO'}",
    ]
    _emit(payload, args.json, lines)
    return 0 if report.consistent else 1


def cmd_nullcone_char(args) -> int:
    rs = parse_system(args.system)
    limits = current_limits()
    degree = args.max_degree if args.max_degree is not None else limits.max_series_degree
    report = hilbert_check(rs, degree, limits.max_weyl_order)
    entries = [
        {"weight": [int(c) for c in w.fund], "multiplicity": jsonable(report.character.entries[w])}
        for w in report.character.weights()
    ]
    payload = {
        "schemaVersion": SCHEMA_VERSION,
        "system": _system_block(rs),
        "truncation": degree,
        "entries": entries,
        "hilbert_ok": report.ok,
        "first_mismatch": report.first_mismatch,
        "dimension_series": [report.dimension_series.coeff(k) for k in range(degree + 1)],
    }
    lines = [f"graded nullcone character of {rs.spec} up to degree {degree}"]
    for w in report.character.weights():
        label = ",".join(str(int(c)) for c in w.fund)
        lines.append(f"  [{label}]  {report.character.entries[w]}")
    lines.append(f"hilbert check  {'pass' if report.ok else 'FAIL at degree ' + str(report.first_mismatch)}")
    _emit(payload, args.json, lines)
    return 0 if report.ok else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shortroots",
        description="exact root system combinatorics and verification suites",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="constants of one system")
    p_info.add_argument("system", help="type and rank, e.g. C4 or G2")
    p_info.add_argument("--json", action="store_true")
    p_info.set_defaults(func=cmd_info)

    p_verify = sub.add_parser("verify", help="run the verification catalog")
    p_verify.add_argument("system")
    p_verify.add_argument("--check", action="append", metavar="ID",
                          help="restrict to one check id (repeatable)")
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--timings", action="store_true",
                          help="include wall time (breaks byte-determinism)")
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table1", help="summary table of the four families")
    p_table.add_argument("--json", action="store_true")
    p_table.set_defaults(func=cmd_table1)

    p_anti = sub.add_parser("antichains", help="antichain counts for one system")
    p_anti.add_argument("system")
    p_anti.add_argument("--json", action="store_true")
    p_anti.set_defaults(func=cmd_antichains)

    p_null = sub.add_parser("nullcone-char", help="graded nullcone character")
    p_null.add_argument("system")
    p_null.add_argument("--max-degree", type=int, default=None)
    p_null.add_argument("--json", action="store_true")
    p_null.set_defaults(func=cmd_nullcone_char)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, NotFiniteType, UnsupportedRootSystem) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeLimitExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
