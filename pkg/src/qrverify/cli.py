"""Command line front end: ``verify``, ``table`` and ``classnum``.

Exit codes: 0 all checks pass, 1 a mathematical claim failed, 2 bad usage.
Records and tables go to stdout; progress and failure notes to stderr.
"""

import argparse
import json
import logging
import sys

from .arith import is_prime, primes_in_range
from .classnum import class_number_dirichlet, class_number_forms_oracle
from .residues import compute_S_T
from .verify import CLAIMS, DEFAULT_SEED, SCHEMA, BPolicy, RunConfig, b_values, run_verify

log = logging.getLogger("qrverify")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dumps(obj):
    return json.dumps(obj, separators=(",", ":"))


def _join(values):
    return ";".join(str(v) for v in values)


def _fmt_detail(detail):
    if not detail:
        return ""
    parts = []
    for k, v in detail.items():
        parts.append(f"{k}={_join(v) if isinstance(v, list) else v}")
    return " ".join(parts)


def _parse_b(text):
    try:
        return BPolicy.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parse_claims(text):
    claims = tuple(c for c in text.split(",") if c)
    unknown = [c for c in claims if c not in CLAIMS]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown claims: {','.join(unknown)}")
    return claims


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qrverify",
        description="Verify identities about quadratic residues modulo primes.",
    )
    parser.add_argument("--quiet", action="store_true", help="no progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check claims for every prime in a range")
    v.add_argument("--min-p", type=int, default=5)
    v.add_argument("--max-p", type=int, default=300)
    v.add_argument(
        "--b",
        type=_parse_b,
        default=BPolicy(),
        help="auto | all | sample:K | list:v1,v2,... (default auto)",
    )
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--format", choices=("json", "csv", "tsv"), default="json")
    v.add_argument("--claims", type=_parse_claims, default=CLAIMS)
    v.add_argument(
        "--timing",
        action="store_true",
        help="fill elapsed_ms (output is then no longer reproducible)",
    )
    v.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)

    t = sub.add_parser("table", help="S and T for each shift b at one prime")
    t.add_argument("p", type=int)
    t.add_argument("--b", type=_parse_b, default=BPolicy(kind="all"))
    t.add_argument("--seed", type=int, default=DEFAULT_SEED)
    t.add_argument("--format", choices=("text", "json", "csv", "tsv"), default="text")
    t.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)

    c = sub.add_parser("classnum", help="h(-p) by two routes for p = 3 (mod 4)")
    c.add_argument("--min-p", type=int, default=7)
    c.add_argument("--max-p", type=int, default=1000)
    c.add_argument("--format", choices=("text", "json", "csv", "tsv"), default="text")
    c.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)
    return parser


def cmd_verify(args, out):
    config = RunConfig(
        min_p=args.min_p,
        max_p=args.max_p,
        b_policy=args.b,
        seed=args.seed,
        jobs=args.jobs,
        claims=args.claims,
        timing=args.timing,
    )
    try:
        config.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    claims = [c for c in CLAIMS if c in config.claims]
    header = {
        "min_p": config.min_p,
        "max_p": config.max_p,
        "b": str(config.b_policy),
        "seed": config.seed,
        "claims": claims,
    }
    sep = "," if args.format == "csv" else "\t"
    if args.format == "json":
        out.write(_dumps({"schema": SCHEMA, "header": header}) + "\n")
    else:
        out.write(f"# {SCHEMA} " + " ".join(f"{k}={_join(v) if isinstance(v, list) else v}"
                                            for k, v in header.items()) + "\n")
        out.write(sep.join(("p", "claim", "status", "detail", "elapsed_ms")) + "\n")

    primes = checked = failures = 0
    for record in run_verify(config):
        primes += 1
        for claim in record["claims"]:
            checked += 1
            if claim["status"] == "fail":
                failures += 1
                log.error("FAIL p=%d %s %s", record["p"], claim["id"],
                          _dumps(claim.get("detail")))
        log.info("p=%d done", record["p"])
        if args.format == "json":
            out.write(_dumps(record) + "\n")
        else:
            ms = "" if record["elapsed_ms"] is None else str(record["elapsed_ms"])
            for claim in record["claims"]:
                row = (str(record["p"]), claim["id"], claim["status"],
                       _fmt_detail(claim.get("detail")), ms)
                out.write(sep.join(row) + "\n")
        out.flush()

    summary = {"primes": primes, "checks": checked, "failures": failures}
    if args.format == "json":
        out.write(_dumps({"schema": SCHEMA, "summary": summary}) + "\n")
    else:
        out.write("# summary " + " ".join(f"{k}={v}" for k, v in summary.items()) + "\n")
    return EXIT_FAIL if failures else EXIT_OK


def _braces(values):
    return "{" + ",".join(map(str, values)) + "}"


def table_rows(p, bs):
    """``[{b, S, T}, ...]`` for the given shifts, in order."""
    rows = []
    for b in bs:
        report = compute_S_T(p, b)
        rows.append({"b": report.b, "S": report.S, "T": report.T})
    return rows


def cmd_table(args, out):
    p = args.p
    if p <= 3 or not is_prime(p):
        raise UsageError(f"p must be a prime > 3, got {p}")
    rows = table_rows(p, b_values(p, args.b, args.seed))
    if args.format == "json":
        out.write(_dumps({"p": p, "rows": rows}) + "\n")
    elif args.format == "text":
        cells = [("b", "S", "T")] + [
            (str(r["b"]), _braces(r["S"]), _braces(r["T"])) for r in rows
        ]
        width = max(len(c) for row in cells for c in row)
        out.write(f"p = {p}\n")
        for i in range(3):
            out.write(" | ".join(row[i].rjust(width) for row in cells) + "\n")
    else:
        sep = "," if args.format == "csv" else "\t"
        out.write(sep.join(("p", "b", "S", "T")) + "\n")
        for r in rows:
            out.write(sep.join((str(p), str(r["b"]), _join(r["S"]), _join(r["T"]))) + "\n")
    return EXIT_OK


def cmd_classnum(args, out):
    if args.min_p < 2 or args.min_p > args.max_p:
        raise UsageError(f"need 2 <= min_p <= max_p, got {args.min_p}..{args.max_p}")
    rows = []
    failures = 0
    for p in primes_in_range(args.min_p, args.max_p):
        if p % 4 != 3 or p == 3:
            continue
        res = class_number_dirichlet(p)
        forms = class_number_forms_oracle(p)
        ok = res.h == forms and res.weighted_sum == -p * res.h
        if not ok:
            failures += 1
            log.error("FAIL p=%d dirichlet h=%d forms=%d", p, res.h, forms)
        rows.append({"p": int(p), "h": res.h, "weighted_sum": res.weighted_sum,
                     "forms_count": forms, "status": "pass" if ok else "fail"})
    keys = ("p", "h", "weighted_sum", "forms_count", "status")
    if args.format == "json":
        out.write(_dumps({"rows": rows}) + "\n")
    else:
        sep = {"csv": ",", "tsv": "\t", "text": " "}[args.format]
        lines = [keys] + [tuple(str(r[k]) for k in keys) for r in rows]
        if args.format == "text":
            width = [max(len(line[i]) for line in lines) for i in range(len(keys))]
            lines = [tuple(c.rjust(w) for c, w in zip(line, width)) for line in lines]
        for line in lines:
            out.write(sep.join(line) + "\n")
    return EXIT_FAIL if failures else EXIT_OK


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    logging.basicConfig(
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    commands = {"verify": cmd_verify, "table": cmd_table, "classnum": cmd_classnum}
    try:
        return commands[args.command](args, out)
    except UsageError as exc:
        print(f"qrverify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
