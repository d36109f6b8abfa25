"""Command-line interface.

Output is JSON by default (``--csv`` and ``--plain`` are alternatives).
Exact counts are always written as decimal strings.

Exit codes: 0 success, 2 regime/validation error, 3 budget exceeded,
4 verification failure, 5 parse/IO error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence

from . import closedform as cf
from . import oeis
from .asymptotics import growth_report
from .errors import (
    AlignmentAmbiguous,
    BudgetExceeded,
    ParseError,
    TilingError,
)
from .oracle import count_3d, count_tilings_bt, transfer_matrix_count, transfer_matrix_series
from .verify import FAIL, Verifier

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_VERIFY, EXIT_IO = 0, 2, 3, 4, 5


def _int_range(text: str) -> List[int]:
    """``"3"`` -> [3], ``"2..4"`` -> [2, 3, 4], ``"2,5"`` -> [2, 5]."""
    out: List[int] = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _record(command, params, provenance, result, rows, plain):
    return {
        "command": command,
        "parameters": {k: str(v) for k, v in params.items()},
        "provenance": provenance,
        "result": result,
        "_rows": rows,
        "_plain": plain,
    }


def _emit(rec: dict, fmt: str, out) -> None:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(rec["_rows"])
        out.write(buf.getvalue())
    elif fmt == "plain":
        out.write(rec["_plain"] + "\n")
    else:
        payload = {k: v for k, v in rec.items() if not k.startswith("_")}
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


# subcommands -----------------------------------------------------------------

def cmd_count(args):
    m, n, k = args.m, args.n, args.k
    method = args.method
    if method == "auto":
        method = "closed"
        if args.mixed and cf.regime_of(m, k) != cf.MAIN:
            method = "tm"
        elif cf.regime_of(m, k) == cf.WIDE:
            method = "tm"
    if method == "closed":
        gf = cf.gf_mixed(m, k) if args.mixed else cf.gf_for_regime(m, k)
        value = gf.series(n)[n]
        provenance = "closed-form"
    elif method == "bt":
        value = count_tilings_bt(m, n, k, mixed=args.mixed)
        provenance = "backtracking"
    elif method == "tm":
        value = transfer_matrix_count(m, n, k, mixed=args.mixed)
        provenance = "transfer-matrix"
    else:
        value = count_3d(m, n, k).total
        provenance = "3d"
    params = {"m": m, "n": n, "k": k, "mixed": args.mixed, "method": method}
    return _record("count", params, provenance, {"count": str(value)},
                   [["count"], [str(value)]], str(value))


_SERIES_KINDS = {
    "plain": lambda m, k: cf.gf_for_regime(m, k),
    "faultfree": cf.gf_faultfree,
    "mixed": cf.gf_mixed,
    "brick": cf.gf_brick3d,
}


def cmd_series(args):
    m, k, order = args.m, args.k, args.order
    if args.method == "closed":
        coeffs = _SERIES_KINDS[args.kind](m, k).series(order)
        provenance = "closed-form"
    else:
        if args.kind == "brick":
            coeffs = [count_3d(m, n, k).total for n in range(order + 1)]
            provenance = "3d"
        else:
            coeffs = transfer_matrix_series(m, order, k, mixed=args.kind == "mixed",
                                            faultfree=args.kind == "faultfree")
            provenance = "transfer-matrix"
    strs = [str(c) for c in coeffs]
    rows = [["n", "coefficient"]] + [[str(i), c] for i, c in enumerate(strs)]
    params = {"m": m, "k": k, "order": order, "kind": args.kind, "method": args.method}
    return _record("series", params, provenance, {"coefficients": strs}, rows, ",".join(strs))


_REFINE_KINDS = {
    "vertical": cf.gf_vertical,
    "mixed": cf.gf_mixed_refined,
    "brick": cf.gf_brick3d_refined,
}


def cmd_refine(args):
    series = _REFINE_KINDS[args.kind](args.m, args.k).expand(args.order)
    rows = [[str(v) for v in row] for row in series.rows()]
    params = {"m": args.m, "k": args.k, "order": args.order, "kind": args.kind}
    result = {"columns": ["n", "r", "s", "coefficient"], "rows": rows}
    plain = "\n".join(" ".join(r) for r in rows)
    return _record("refine", params, "closed-form", result, [result["columns"]] + rows, plain)


def cmd_verify(args):
    ks = _int_range(args.k)
    pairs = []
    for k in ks:
        ms = range(1, 2 * k) if args.m == "auto" else _int_range(args.m)
        pairs.extend((k, m) for m in ms)
    verifier = Verifier(args.nmax, perturb=args.perturb, max_3d_n=args.max_3d_n)
    checks = verifier.run(pairs)
    failed = [c for c in checks if c.status == FAIL]
    result = {
        "pass": not failed,
        "counts": {s: str(sum(1 for c in checks if c.status == s)) for s in ("pass", "fail", "skip")},
        "checks": [c.as_dict() for c in checks],
    }
    rows = [["check", "k", "m", "status", "detail"]] + [
        [c.name, str(c.k), str(c.m), c.status, c.detail] for c in checks]
    plain = "\n".join(f"{c.status.upper():4} k={c.k} m={c.m} {c.name} {c.detail}" for c in checks)
    params = {"k": args.k, "m": args.m, "nmax": args.nmax}
    rec = _record("verify", params, "closed-form|backtracking|transfer-matrix|3d", result, rows, plain)
    if failed:
        rec["_failed"] = [c.as_dict() for c in failed]
    return rec


def cmd_asympt(args):
    m, k = args.m, args.k
    gf = _SERIES_KINDS[args.kind](m, k)
    n_max = args.nmax if args.nmax is not None else 20 * k
    report = growth_report(gf, k, n_max)
    result = report.as_dict()
    rows = [["key", "value"]] + [[key, json.dumps(val) if isinstance(val, list) else val]
                                 for key, val in sorted(result.items())]
    plain = f"per_k_growth={result['per_k_growth']} per_column_growth={result['per_column_growth']}"
    params = {"m": m, "k": k, "kind": args.kind, "nmax": n_max}
    return _record("asympt", params, "closed-form", result, rows, plain)


def cmd_oeis_verify(args):
    m, k = args.m, args.k
    if args.fetch:
        ref = oeis.fetch_bfile(args.id)
    elif args.bfile:
        ref = oeis.read_bfile(args.bfile, args.id)
    else:
        path = oeis.fixture_path(args.id)
        ref = oeis.read_bfile(path, args.id)
        ref = oeis.RefSequence(ref.id, ref.entries, f"fixture:{path.name}")
    last = max(idx for idx, _ in ref.entries) if ref.entries else 0
    order = k * (last + 3)
    computed = cf.gf_for_regime(m, k).series(order)
    report = oeis.compare(ref, computed, k, shift=args.shift, min_compared=args.min_compared)
    result = report.as_dict()
    rows = [["index", "n", "status", "expected", "computed"]] + [
        [v["index"], v["n"], v["status"], v["expected"] or "", v["computed"] or ""] for v in result["verdicts"]]
    plain = f"{report.id} {'PASS' if report.passed else 'FAIL'} offset={report.aligned_offset} compared={report.compared}"
    params = {"id": args.id, "m": m, "k": k, "source": ref.source or args.id}
    rec = _record("oeis-verify", params, "closed-form", result, rows, plain)
    if not report.passed:
        rec["_failed"] = [v for v in result["verdicts"] if v["status"] == "mismatch"] or ["too few terms compared"]
    return rec


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    g.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="CSV output")
    g.add_argument("--plain", dest="fmt", action="store_const", const="plain", help="bare text output")
    g.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output (default)")
    fmt.set_defaults(fmt="json")

    p = argparse.ArgumentParser(prog="tilegf", description="Exact counts of k x 1 strip tilings.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[fmt], help="count tilings of one m x n board")
    c.add_argument("m", type=int)
    c.add_argument("n", type=int)
    c.add_argument("k", type=int)
    c.add_argument("--mixed", action="store_true", help="also allow k x k tiles")
    c.add_argument("--method", choices=["auto", "closed", "bt", "tm", "3d"], default="auto",
                   help="closed form, backtracking, transfer matrix, or 3D bricks in an m x n x k box")
    c.set_defaults(func=cmd_count)

    s = sub.add_parser("series", parents=[fmt], help="coefficients c_0..c_N of a generating function")
    s.add_argument("m", type=int)
    s.add_argument("k", type=int)
    s.add_argument("--order", type=int, default=20)
    s.add_argument("--kind", choices=sorted(_SERIES_KINDS), default="plain")
    s.add_argument("--method", choices=["closed", "oracle"], default="closed")
    s.set_defaults(func=cmd_series)

    r = sub.add_parser("refine", parents=[fmt], help="refined (n, r, s) coefficients")
    r.add_argument("m", type=int)
    r.add_argument("k", type=int)
    r.add_argument("--order", type=int, default=12)
    r.add_argument("--kind", choices=sorted(_REFINE_KINDS), default="vertical")
    r.set_defaults(func=cmd_refine)

    v = sub.add_parser("verify", parents=[fmt], help="cross-check closed forms against the oracles")
    v.add_argument("--k", default="2..3", help="tile lengths, e.g. 2..3 or 2,4")
    v.add_argument("--m", default="auto", help="heights, or 'auto' for 1..2k-1")
    v.add_argument("--nmax", type=int, default=12)
    v.add_argument("--max-3d-n", type=int, default=None, help="cap n for the 3D brick oracle")
    v.add_argument("--perturb", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("asympt", parents=[fmt], help="growth rate from the dominant root")
    a.add_argument("m", type=int)
    a.add_argument("k", type=int)
    a.add_argument("--kind", choices=sorted(_SERIES_KINDS), default="plain")
    a.add_argument("--nmax", type=int, default=None, help="empirical-ratio index (default 20k)")
    a.set_defaults(func=cmd_asympt)

    o = sub.add_parser(
        "oeis-verify", parents=[fmt], help="compare against an OEIS b-file",
        epilog=("--fetch downloads " + oeis.BFILE_URL.format(id="A<digits>", digits="<digits>")
                + " into $OEIS_CACHE_DIR (default ~/.cache/tilegf/oeis). Without --bfile or"
                " --fetch the bundled fixture is used."))
    o.add_argument("id")
    o.add_argument("m", type=int)
    o.add_argument("k", type=int)
    src = o.add_mutually_exclusive_group()
    src.add_argument("--bfile", help="local b-file path")
    src.add_argument("--fetch", action="store_true", help="download (and cache) the b-file")
    o.add_argument("--shift", type=int, default=None, help="b-file index i maps to n = k*(i+shift); auto-detected if omitted")
    o.add_argument("--min-compared", type=int, default=oeis.DEFAULT_MIN_COMPARED)
    o.set_defaults(func=cmd_oeis_verify)
    return p


def _error(exc: BaseException, code: int, err) -> int:
    err.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}, sort_keys=True) + "\n")
    return code


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        rec = args.func(args)
    except BudgetExceeded as exc:
        return _error(exc, EXIT_BUDGET, err)
    except AlignmentAmbiguous as exc:
        return _error(exc, EXIT_VERIFY, err)
    except (ParseError, OSError) as exc:
        return _error(exc, EXIT_IO, err)
    except (TilingError, ValueError) as exc:
        # RegimeMismatch, OddArea, NoRootInUnitInterval and plain bad input
        return _error(exc, EXIT_USAGE, err)
    _emit(rec, args.fmt, out)
    if "_failed" in rec:
        err.write(json.dumps({"error": "VerificationFailed", "failures": rec["_failed"][:5]}, sort_keys=True) + "\n")
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
