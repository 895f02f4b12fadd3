"""Command-line front end: gen, verify, search, prove, seq.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification/proof failure, 2 usage or domain error.  All potentially
large integers are serialized as decimal strings, and output is
byte-identical across runs for identical arguments.
"""

import argparse
import csv
import json
import os
import sys
from typing import Optional

from .certify import DomainError, verify_four
from .family import ConstructionError, TripleCandidate, make_companion, make_main
from .search import ORACLE_MAX_BOUND, brute_oracle, search_triples
from .sequences import sequence_values
from .symbolic import prove_identities

SCHEMA_VERSION = "1"
INDEX_CAP = 10_000  # sequence indices accepted on the command line

CSV_COLUMNS = ["n", "variant", "a", "r", "b", "c", "s", "admissible"]


def _opt_str(v) -> Optional[str]:
    return None if v is None else str(v)


def _triple_record(cand: TripleCandidate) -> dict:
    cert = cand.certificate()
    return {
        "n": str(cand.n),
        "variant": cand.variant,
        "a": str(cand.a),
        "r": str(cand.r),
        "b": str(cand.b),
        "c": str(cand.c),
        "s": _opt_str(cand.s),
        "admissible": cand.admissible,
        "certificate": None if cert is None else {
            "ab": str(cert.r_ab), "ac": str(cert.r_ac),
            "bc": str(cert.r_bc), "abc": str(cert.r_abc),
        },
    }


def _search_record(a: int, b: int, c: int, cert) -> dict:
    return {
        "n": None,
        "variant": "external",
        "a": str(a),
        "r": str(cert.r_ab),
        "b": str(b),
        "c": str(c),
        "s": str(cert.r_abc),
        "admissible": True,
        "certificate": {
            "ab": str(cert.r_ab), "ac": str(cert.r_ac),
            "bc": str(cert.r_bc), "abc": str(cert.r_abc),
        },
    }


def _emit_json(command: str, payload: dict) -> None:
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "payload": payload}
    print(json.dumps(doc, indent=2))


def _emit_csv(records: list) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow(["" if rec[col] is None else rec[col]
                         for col in CSV_COLUMNS])


def _bold(s: str) -> str:
    if os.environ.get("FOURSQ_COLOR") == "1":
        return f"\x1b[1m{s}\x1b[0m"
    return s


def _emit_table(records: list) -> None:
    rows = [[("" if rec[col] is None else str(rec[col])) for col in CSV_COLUMNS]
            for rec in records]
    widths = [max(len(CSV_COLUMNS[i]), *(len(r[i]) for r in rows)) if rows
              else len(CSV_COLUMNS[i]) for i in range(len(CSV_COLUMNS))]
    print(_bold("  ".join(h.ljust(w) for h, w in zip(CSV_COLUMNS, widths))))
    for r in rows:
        print("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())


def _check_index(n: int, what: str) -> None:
    if abs(n) > INDEX_CAP:
        raise DomainError(f"{what} {n} exceeds the CLI index cap {INDEX_CAP}")


def _cmd_gen(args) -> int:
    _check_index(args.start, "index")
    _check_index(args.stop, "index")
    if args.start > args.stop:
        raise DomainError(f"empty index range {args.start}..{args.stop}")
    variants = ["main", "companion"] if args.variant == "both" else [args.variant]
    records = []
    for n in range(args.start, args.stop + 1):
        for variant in variants:
            cand = make_main(n) if variant == "main" else make_companion(n)
            records.append(_triple_record(cand))
    if args.format == "json":
        _emit_json("gen", {"records": records})
    elif args.format == "csv":
        _emit_csv(records)
    else:
        _emit_table(records)
    return 0


def _cmd_verify(args) -> int:
    a, b, c = int(args.a), int(args.b), int(args.c)
    outcome = verify_four(a, b, c)
    if args.format == "json":
        payload = {
            "a": str(a), "b": str(b), "c": str(c),
            "ok": outcome.ok,
            "certificate": None if outcome.certificate is None else {
                "ab": str(outcome.certificate.r_ab),
                "ac": str(outcome.certificate.r_ac),
                "bc": str(outcome.certificate.r_bc),
                "abc": str(outcome.certificate.r_abc),
            },
            "first_failure": outcome.first_failure,
            "failing_value": _opt_str(outcome.failing_value),
        }
        _emit_json("verify", payload)
    else:
        if outcome.ok:
            cert = outcome.certificate
            print(f"ok ({a},{b},{c}): roots ab={cert.r_ab} ac={cert.r_ac} "
                  f"bc={cert.r_bc} abc={cert.r_abc}")
        else:
            print(f"fail ({a},{b},{c}): {outcome.first_failure}+1="
                  f"{outcome.failing_value} not square")
    return 0 if outcome.ok else 1


def _cmd_search(args) -> int:
    jobs = args.jobs if args.jobs is not None else int(os.environ.get("FOURSQ_JOBS", "1"))
    result = search_triples(args.max, jobs=jobs, force_pure=args.pure)
    records = [_search_record(a, b, c, cert) for a, b, c, cert in result.triples]
    if args.format == "json":
        _emit_json("search", {
            "bound": result.bound,
            "count": len(records),
            "triples": records,
            "stats": {
                "pairs_scanned": result.stats.pairs_scanned,
                "candidates_tested": result.stats.candidates_tested,
            },
        })
    elif args.format == "csv":
        _emit_csv(records)
    else:
        _emit_table(records)
    print(f"search --max {result.bound}: {len(records)} triples, "
          f"{result.stats.pairs_scanned} pairs scanned, "
          f"{result.stats.candidates_tested} candidates tested, "
          f"{result.stats.elapsed:.3f}s", file=sys.stderr)
    if args.oracle:
        reference = brute_oracle(args.max)
        if reference.triples != result.triples:
            got = {t[:3] for t in result.triples}
            want = {t[:3] for t in reference.triples}
            print(f"oracle mismatch: missing={sorted(want - got)} "
                  f"extra={sorted(got - want)}", file=sys.stderr)
            return 1
        print("oracle agrees", file=sys.stderr)
    return 0


def _cmd_prove(args) -> int:
    report = prove_identities()
    if args.format == "json":
        _emit_json("prove", {
            "identities": [
                {"name": it.name, "description": it.description,
                 "passed": it.passed, "note": it.note}
                for it in report.items
            ],
            "core_ok": report.core_ok,
        })
    else:
        print(_bold(f"{'name':5} {'status':7} description"))
        for it in report.items:
            status = "pass" if it.passed else "FAIL"
            note = f"  [{it.note}]" if it.note else ""
            print(f"{it.name:5} {status:7} {it.description}{note}")
            if it.residual is not None:
                print(f"      residual: {it.residual.lift()!r}")
        core_names = {f"I{k}" for k in range(1, 9)}
        core = sum(1 for it in report.items
                   if it.name in core_names and it.passed)
        print(f"core identities: {core}/8 pass")
    return 0 if report.core_ok else 1


def _cmd_seq(args) -> int:
    name = args.name.upper()
    _check_index(args.start, "index")
    _check_index(args.stop, "index")
    if args.start > args.stop:
        raise DomainError(f"empty index range {args.start}..{args.stop}")
    values = sequence_values(name, args.start, args.stop)
    print(" ".join(str(v) for v in values))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foursq",
        description="Four-square triples: generate family members, verify, "
                    "search exhaustively, and machine-check the identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="evaluate the families over an index range")
    p.add_argument("start", type=int)
    p.add_argument("stop", type=int)
    p.add_argument("variant", nargs="?", choices=["main", "companion", "both"],
                   default="main")
    p.add_argument("--format", choices=["json", "csv", "table"], default="table")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="check the four square conditions")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="exhaustive census up to a bound")
    p.add_argument("--max", type=int, required=True, help="upper bound for c")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default $FOURSQ_JOBS or 1)")
    p.add_argument("--oracle", action="store_true",
                   help=f"cross-check against the brute-force reference "
                        f"(bound <= {ORACLE_MAX_BOUND})")
    p.add_argument("--pure", action="store_true",
                   help="force the pure-Python path even if the kernel is built")
    p.add_argument("--format", choices=["json", "csv", "table"], default="table")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("prove", help="machine-check the family identities")
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.set_defaults(func=_cmd_prove)

    p = sub.add_parser("seq", help="print P, A or R over an index range")
    p.add_argument("name", choices=["P", "A", "R", "p", "a", "r"])
    p.add_argument("start", type=int)
    p.add_argument("stop", type=int)
    p.set_defaults(func=_cmd_seq)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
