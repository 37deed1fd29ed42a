"""Command-line front end.

Exit codes: 0 ran to completion (discrepancies with printed values are findings, not
failures), 1 usage or argument error, 2 internal consistency failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ConsistencyError
from .lincomp import DEFAULT_M_CAP
from .report import CHECKS, analyze, parametric_sequence, rows_to_csv, run_scan, summarize, to_json
from .seqgen import BinarySequence
from .verify import verify_paper

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2
DEFAULT_P_MAX = 500


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _check_list(text: str) -> list[str]:
    items = [x.strip() for x in text.split(",") if x.strip()]
    bad = [x for x in items if x not in CHECKS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown checks {bad}; choose from {','.join(CHECKS)}")
    return items


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cyclo2p", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("generate", help="print one period of the sequence")
    gen.add_argument("--p", type=int, required=True)
    gen.add_argument("--g", type=int)

    ana = sub.add_parser("analyze", help="full report for one sequence")
    src = ana.add_mutually_exclusive_group(required=True)
    src.add_argument("--p", type=int)
    src.add_argument("--bits", help="raw period as a 0/1 string, s_0 first")
    src.add_argument("--bits-file", type=Path, help="file holding the 0/1 string")
    ana.add_argument("--g", type=int)
    ana.add_argument("--r", type=int, help="field characteristic for linear complexity")
    ana.add_argument("--m-cap", type=int, default=DEFAULT_M_CAP)
    ana.add_argument("--lemmas", action="store_true", help="include lemma checks")
    ana.add_argument("--format", choices=("json", "text"), default="json")

    scan = sub.add_parser("scan", help="sweep a prime range")
    scan.add_argument("--p-min", type=int, default=3)
    scan.add_argument("--p-max", type=int, default=50)
    scan.add_argument("--r", type=_int_list, default=[5, 7, 11, 13])
    scan.add_argument("--checks", type=_check_list, default=list(CHECKS))
    scan.add_argument("--m-cap", type=int, default=DEFAULT_M_CAP)
    scan.add_argument("--out", type=Path)
    scan.add_argument("--format", choices=("json", "csv"), default="json")
    scan.add_argument("--jobs", type=int, default=1, help="worker processes")
    scan.add_argument(
        "--figures", action="store_true", help="also write PNG figures next to --out"
    )
    scan.add_argument("--allow-large", action="store_true", help=f"permit p-max above {DEFAULT_P_MAX}")

    ver = sub.add_parser("verify-paper", help="replay the worked examples")
    ver.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _text_report(doc: dict) -> str:
    lines = []
    seq = doc["sequence"]
    head = f"p={seq['p']} g={seq['g']} " if "p" in seq else ""
    lines.append(f"{head}N={seq['N']} weight={seq['weight']}")
    lines.append(f"bits: {seq['bits']}")
    ac = doc["autocorr"]
    lines.append(f"autocorrelation spectrum: {ac['spectrum']}")
    if "predicted" in ac:
        lines.append(f"  predicted: {ac['predicted']}  matches: {ac['matches']}")
    if "linear" in doc:
        lin = doc["linear"]
        lines.append(
            f"linear complexity over F_{lin['r']} (m={lin['m']}): {lin['lc']} "
            f"[bm={lin['methods']['bm']} gcd={lin['methods']['gcd']} roots={lin['methods']['roots']}]"
        )
        lines.append(f"  predicted: {lin['predicted']}  matches: {lin['matches_theorem']}")
    ad = doc["adic"]
    lines.append(
        f"2-adic complexity: {ad['phi2_floor']} (max {ad['predicted']}); "
        f"gcd={ad['gcd_total']} [2^p-1: {ad['gcd_minus']}, 2^p+1: {ad['gcd_plus']}]"
    )
    if "lemmas" in doc:
        lines.append(f"lemmas: {doc['lemmas']}")
    return "\n".join(lines) + "\n"


def _cmd_generate(args) -> int:
    print(parametric_sequence(args.p, args.g))
    return EXIT_OK


def _cmd_analyze(args) -> int:
    if args.p is not None:
        seq = parametric_sequence(args.p, args.g)
    else:
        if args.g is not None:
            raise ValueError("--g only applies with --p")
        text = args.bits if args.bits is not None else args.bits_file.read_text()
        seq = BinarySequence.from_string(text)
    doc = analyze(seq, r=args.r, m_cap=args.m_cap, lemmas=args.lemmas)
    sys.stdout.write(to_json(doc) if args.format == "json" else _text_report(doc))
    return EXIT_OK


def _cmd_scan(args) -> int:
    if args.p_max > DEFAULT_P_MAX and not args.allow_large:
        raise ValueError(f"--p-max above {DEFAULT_P_MAX} needs --allow-large")
    if args.jobs < 1:
        raise ValueError("--jobs must be >= 1")
    if args.figures and args.out is None:
        raise ValueError("--figures needs --out")
    rows = run_scan(args.p_min, args.p_max, args.r, args.checks, args.m_cap, args.jobs)
    summary = summarize(rows)
    if args.format == "json":
        config = {
            "p_min": args.p_min,
            "p_max": args.p_max,
            "r": args.r,
            "checks": args.checks,
            "m_cap": args.m_cap,
        }
        payload = to_json({"config": config, "rows": rows, "summary": summary})
    else:
        payload = rows_to_csv(rows)
    if args.out is None:
        sys.stdout.write(payload)
        return EXIT_OK
    try:
        args.out.write_text(payload)
    except OSError as exc:
        raise ValueError(f"cannot write {args.out}: {exc}")
    written = [args.out]
    if args.figures:
        from .plotting import render_scan_figures

        written += render_scan_figures(rows, args.out)
    print(to_json({"rows": len(rows), "summary": summary, "written": [str(w) for w in written]}), end="")
    return EXIT_OK


def _cmd_verify(args) -> int:
    outcome = verify_paper()
    sys.stdout.write(to_json(outcome.to_dict()) if args.format == "json" else outcome.to_text())
    return EXIT_OK


COMMANDS = {
    "generate": _cmd_generate,
    "analyze": _cmd_analyze,
    "scan": _cmd_scan,
    "verify-paper": _cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
