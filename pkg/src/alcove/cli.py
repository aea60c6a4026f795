"""Command-line front end.

Every command builds a report dict {schema_version, command, inputs, results,
provenance} and writes it as JSON (default) or, for tabular results, CSV.
Output is byte-deterministic: fixed ordering, floats at 12 significant
digits, exact rationals as p/q and weights as "s,t".
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .bounds import CASE_BY_ID, case_reports
from .catdata import (in_root_lattice, qdim, qdim_numerator, twist_arg,
                      twist_is_third_root, twist_is_trivial)
from .characters import weyl_dimension
from .etale import FILTERS, SWEEP_LEVELS, scan_level, sweep_claim
from .fusion import tensor_product
from .lie import AlgebraId, enumerate_alcove, format_weight, get_algebra, in_alcove, parse_weight
from .qnum import PRECISIONS

SCHEMA_VERSION = "1"
DEFAULT_SCAN_CAP = 200
CONVENTIONS = {
    "sl3_aux_x": "ceil((l+m)/2)-1",
    "level_bound": "ceil of the supremum of P/c - h over the stated region",
    "survivors": "candidates passing necessary conditions only",
}

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

# levels whose survivor sets must be nonempty; sl2 28 must retain (10)
KNOWN_SURVIVORS = (
    ("sl2", 28, (10,)),
    ("sl3", 5, None), ("sl3", 9, None), ("sl3", 21, None),
    ("so5", 2, None), ("so5", 3, None), ("so5", 7, None), ("so5", 12, None),
    ("g2", 3, None), ("g2", 4, None),
)


class UsageError(Exception):
    pass


# --- serialisation ----------------------------------------------------------

def _plain(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, AlgebraId):
        return obj.value
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if hasattr(obj, "__float__"):
        return float(f"{float(obj):.12g}")
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _cell(v):
    if isinstance(v, dict):
        return ";".join(f"{k}={_cell(x)}" for k, x in v.items())
    if isinstance(v, list):
        return ";".join(_cell(x) for x in v)
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(report: dict, fmt: str) -> str:
    report = _plain(report)
    if fmt == "json":
        return json.dumps(report, indent=2, ensure_ascii=True) + "\n"
    rows = report["results"]
    if isinstance(rows, dict):
        rows = rows.get("rows")
    if not isinstance(rows, list):
        raise UsageError(f"{report['command']} has no tabular results; use --format json")
    buf = io.StringIO()
    if rows:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _cell(v) for k, v in r.items()})
    return buf.getvalue()


def _report(command, inputs, results, precision):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "provenance": {"engine": f"alcove {__version__}", "precision": precision,
                       "conventions": CONVENTIONS},
    }


# --- argument helpers -------------------------------------------------------

def _weight(alg, level, text):
    try:
        w = parse_weight(text)
    except ValueError as e:
        raise UsageError(str(e)) from None
    rank = 1 if alg is AlgebraId.A1 else 2
    if len(w) != rank:
        raise UsageError(f"{alg.value} weights have {rank} coordinate(s), got {text!r}")
    if not in_alcove(alg, level, w):
        raise UsageError(f"weight {text} is not in the level-{level} alcove of {alg.value}")
    return w


def _levels(text):
    if ".." in text:
        a, _, b = text.partition("..")
    else:
        a = b = text
    try:
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"bad level range {text!r}; expected A..B") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"empty or invalid level range {text!r}")
    return lo, hi


def _resolve_precision(flag):
    value = flag or os.environ.get("ALCOVE_PRECISION") or "double"
    if value not in PRECISIONS:
        raise UsageError(f"precision must be one of {PRECISIONS}, got {value!r}")
    return value


def _resolve_parallel(flag):
    raw = flag if flag is not None else os.environ.get("ALCOVE_PARALLEL", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"parallelism must be an integer, got {raw!r}") from None
    if n < 1:
        raise UsageError("parallelism must be >= 1")
    return n


def _need_level(args):
    if args.level is None:
        raise UsageError("--level is required")
    if args.level < 1:
        raise UsageError("level must be >= 1")
    return args.level


# --- commands ---------------------------------------------------------------

def cmd_alcove(args, precision):
    alg, k = get_algebra(args.algebra), _need_level(args)
    rows = [{"weight": format_weight(w)} for w in enumerate_alcove(alg, k)]
    return _report("alcove", {"algebra": alg.value, "level": k},
                   {"count": len(rows), "rows": rows}, precision), EXIT_OK


def cmd_dims(args, precision):
    alg, k = get_algebra(args.algebra), _need_level(args)
    rows = []
    for w in enumerate_alcove(alg, k):
        rows.append({
            "weight": format_weight(w),
            "dim": weyl_dimension(alg, w),
            "qdim": qdim(alg, k, w, precision).value,
            "dim_prime": qdim_numerator(alg, k, w, precision).value,
            "twist": twist_arg(alg, k, w),
            "twist_trivial": twist_is_trivial(alg, k, w),
        })
    return _report("dims", {"algebra": alg.value, "level": k}, {"rows": rows}, precision), EXIT_OK


def cmd_twists(args, precision):
    alg, k = get_algebra(args.algebra), _need_level(args)
    rows = []
    for w in enumerate_alcove(alg, k):
        rows.append({
            "weight": format_weight(w),
            "twist": twist_arg(alg, k, w),
            "twist_trivial": twist_is_trivial(alg, k, w),
            "twist_third_root": twist_is_third_root(alg, k, w),
            "in_root_lattice": in_root_lattice(alg, w),
        })
    return _report("twists", {"algebra": alg.value, "level": k}, {"rows": rows}, precision), EXIT_OK


def cmd_fusion(args, precision):
    alg, k = get_algebra(args.algebra), _need_level(args)
    lam, gam = _weight(alg, k, args.lam), _weight(alg, k, args.gam)
    prod = tensor_product(alg, k, lam, gam)
    rows = [{"weight": format_weight(w), "multiplicity": n} for w, n in sorted(prod.items())]
    lhs = qdim(alg, k, lam, precision).value * qdim(alg, k, gam, precision).value
    rhs = sum(n * qdim(alg, k, w, precision).value for w, n in prod.items())
    residual = abs(float(lhs) - float(rhs)) / abs(float(lhs))
    return _report("fusion", {"algebra": alg.value, "level": k, "lam": format_weight(lam),
                              "gam": format_weight(gam)},
                   {"rows": rows, "dim_residual": residual}, precision), EXIT_OK


def _scan_one(task):
    alg, k, filters, precision = task
    out = []
    for c in scan_level(alg, k, filters, precision):
        out.append({
            "level": k,
            "weight": format_weight(c.weight),
            "norm": c.norm,
            "twist_trivial": c.twist_trivial,
            "in_root_lattice": c.in_root_lattice,
            "sources": [format_weight(s) for s, _ in c.tests],
            "simple_free_summands": [format_weight(w) for _, ws in c.tests for w in ws],
        })
    return out


def cmd_scan(args, precision):
    alg = get_algebra(args.algebra)
    if args.levels is not None:
        lo, hi = _levels(args.levels)
    else:
        lo = hi = _need_level(args)
    cap = int(os.environ.get("ALCOVE_SCAN_CAP", DEFAULT_SCAN_CAP))
    if hi - lo + 1 > cap and not args.force:
        raise UsageError(f"range {lo}..{hi} has {hi - lo + 1} levels, above the safety cap "
                         f"{cap}; pass --force to run it anyway")
    filters = tuple(f for f in args.filters.split(",") if f)
    bad = [f for f in filters if f not in FILTERS]
    if bad:
        raise UsageError(f"unknown filters {bad}; choose from {FILTERS}")
    filters = tuple(f for f in FILTERS if f in filters)
    workers = _resolve_parallel(args.parallel)
    tasks = [(alg, k, filters, precision) for k in range(lo, hi + 1)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_level = list(pool.map(_scan_one, tasks))
    else:
        per_level = [_scan_one(t) for t in tasks]
    rows = [r for chunk in per_level for r in chunk]
    summary = [{"level": k, "survivors": [r["weight"] for r in chunk]}
               for k, chunk in zip(range(lo, hi + 1), per_level)]
    return _report("scan", {"algebra": alg.value, "levels": f"{lo}..{hi}", "filters": list(filters)},
                   {"per_level": summary, "rows": rows}, precision), EXIT_OK


def _bound_rows(case_id=None):
    rows = []
    for r in case_reports():
        if case_id is not None and r.case_id != case_id:
            continue
        rows.append({
            "case_id": r.case_id, "section": r.section, "algebra": r.algebra,
            "variable": r.variable, "inequality": f"{r.lhs} {r.relation} {r.rhs}",
            "max_param": r.max_param, "reference_max_param": r.reference_max_param,
            "max_param_matches": r.max_param_matches, "fails_below_max": r.fails_below_max,
            "region": r.region, "region_constants": r.region_constants,
            "level_sup": r.level_sup, "level_bound": r.level_bound,
            "max_admissible_level": r.max_admissible_level,
            "maximiser": format_weight(r.maximiser),
            "reference_level_bound": f"{r.reference_level_relation} {r.reference_level_bound}",
            "level_bound_matches": r.level_bound_matches,
            "chained_region_constants": r.chained_region_constants,
            "chained_level_bound": r.chained_level_bound,
        })
    return rows


def cmd_bounds(args, precision):
    if args.case is not None and args.case not in CASE_BY_ID:
        raise UsageError(f"unknown case {args.case!r}; choose from {sorted(CASE_BY_ID)}")
    return _report("bounds", {"case": args.case}, {"rows": _bound_rows(args.case)}, precision), EXIT_OK


def verify_rows(precision="double"):
    rows = []
    reports = case_reports()
    for r in reports:
        if r.reference_max_param is not None:
            rows.append({"check": "max_param", "case": r.case_id,
                         "expected": r.reference_max_param, "computed": r.max_param,
                         "match": r.max_param_matches})
    seen = set()
    for r in reports:
        if r.section in seen:
            continue
        seen.add(r.section)
        rows.append({"check": "level_bound", "case": r.section,
                     "expected": f"{r.reference_level_relation} {r.reference_level_bound}",
                     "computed": r.level_bound, "match": r.level_bound_matches})
    for claim_id in SWEEP_LEVELS:
        s = sweep_claim(claim_id)
        fails = [f"k={k}:" + ",".join(f"{n}={v}" for n, v in p) for k, p in s.failures]
        rows.append({"check": "containment", "case": f"{claim_id} (k<={s.max_level}, "
                                                     f"{s.instances} instances)",
                     "expected": "no failures", "computed": "; ".join(fails) or "no failures",
                     "match": s.ok})
    for alg, k, must in KNOWN_SURVIVORS:
        got = [c.weight for c in scan_level(alg, k, precision=precision)]
        ok = (must in got) if must is not None else bool(got)
        rows.append({"check": "survivors", "case": f"{alg} k={k}",
                     "expected": format_weight(must) if must else "nonempty",
                     "computed": " ".join(format_weight(w) for w in got) or "none",
                     "match": ok})
    return rows


def cmd_verify_paper(args, precision):
    rows = verify_rows(precision)
    mismatches = [r for r in rows if not r["match"]]
    for r in mismatches:
        print(f"MISMATCH {r['check']} {r['case']}: expected {r['expected']}, computed {r['computed']}",
              file=sys.stderr)
    status = EXIT_MISMATCH if mismatches else EXIT_OK
    return _report("verify-paper", {}, {"verified": not mismatches, "mismatches": len(mismatches),
                                        "rows": rows}, precision), status


COMMANDS = {
    "alcove": cmd_alcove, "dims": cmd_dims, "twists": cmd_twists, "fusion": cmd_fusion,
    "scan": cmd_scan, "bounds": cmd_bounds, "verify-paper": cmd_verify_paper,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--precision", choices=PRECISIONS, default=None,
                        help="q-number arithmetic (env ALCOVE_PRECISION, default double)")
    common.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")

    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--algebra", choices=[a.value for a in AlgebraId], required=True)
    alg.add_argument("--level", type=int)

    p = argparse.ArgumentParser(prog="alcove", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"alcove {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("alcove", parents=[common, alg], help="list alcove weights")
    sub.add_parser("dims", parents=[common, alg], help="classical and quantum dimensions")
    sub.add_parser("twists", parents=[common, alg], help="twists and lattice data")
    f = sub.add_parser("fusion", parents=[common, alg], help="decompose lam (x) gam")
    f.add_argument("lam")
    f.add_argument("gam")
    s = sub.add_parser("scan", parents=[common, alg], help="candidate minimal summands per level")
    s.add_argument("--levels", metavar="A..B")
    s.add_argument("--parallel", metavar="N", help="worker processes (env ALCOVE_PARALLEL)")
    s.add_argument("--filters", default=",".join(FILTERS),
                   help="comma-separated subset of " + ",".join(FILTERS))
    s.add_argument("--force", action="store_true", help="allow ranges above the safety cap")
    b = sub.add_parser("bounds", parents=[common], help="case inequalities and level bounds")
    b.add_argument("--case")
    sub.add_parser("verify-paper", parents=[common], help="compare bounds, claims and survivors with the reference table")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        precision = _resolve_precision(args.precision)
        report, status = COMMANDS[args.command](args, precision)
        text = render(report, args.format)
    except UsageError as e:
        print(f"alcove: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (RuntimeError, AssertionError) as e:
        print(f"alcove: internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status
