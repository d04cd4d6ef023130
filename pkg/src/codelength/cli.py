"""Command line front end.

Exit codes: 0 success (``defines``: UNIQUE), 1 an identity or bound check
failed, 2 bad input, 3 ``defines`` found no word, 4 ``defines`` found
several words, 5 search budget exceeded or inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .antidictionary import ForbiddenSystem, minimal_forbidden_words
from .automaton import classify
from .extremal import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    InconclusiveError,
    codelength_table,
    rows_to_tsv,
)
from .rauzy import rauzy_graph, to_dot, verify_identities
from .words import WordError, as_alphabet, canonicalize, fibonacci_number, fibonacci_string

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_NONE = 3
EXIT_MULTIPLE = 4
EXIT_BUDGET = 5

GRAPH_COMMANDS = {"rauzy"}


class UsageError(Exception):
    pass


def dump_json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _word(raw: str, alphabet: str | None):
    if alphabet is not None:
        alphabet = as_alphabet(alphabet)
        missing = sorted(set(raw) - set(alphabet.symbols))
        if missing:
            raise WordError(f"symbols {''.join(missing)!r} are not in --alphabet {alphabet.symbols!r}")
    return canonicalize(raw, alphabet)


def cmd_maw(args, out) -> int:
    w = _word(args.word, args.alphabet)
    S = minimal_forbidden_words(w)
    if args.format == "json":
        out.write(dump_json({"word": w.period, "alphabet": w.alphabet.symbols, "forbidden": list(S), "k": len(S)}))
    elif args.format == "tsv":
        out.write("length\tword\n")
        for s in S:
            out.write(f"{len(s)}\t{s}\n")
    else:
        out.write(" ".join(S) + "\n")
        out.write(f"k={len(S)}\n")
    return EXIT_OK


def _read_forbids(args) -> list[str]:
    words = list(args.forbids)
    if not words or words == ["-"]:
        words = [line.strip() for line in sys.stdin if line.strip()]
    return words


def cmd_defines(args, out) -> int:
    S = ForbiddenSystem.of(_read_forbids(args), args.alphabet)
    verdict = classify(S)
    if args.format == "json":
        data = {"verdict": verdict.tag, "alphabet": S.alphabet.symbols, "forbidden": list(S)}
        if verdict.word is not None:
            data["word"] = verdict.word.period
        if verdict.witness is not None:
            data["witness"] = [w.period for w in verdict.witness]
        out.write(dump_json(data))
    else:
        out.write(f"{verdict}\n")
    return {"unique": EXIT_OK, "none": EXIT_NONE, "multiple": EXIT_MULTIPLE}[verdict.tag]


def _mark(report, k: int) -> str:
    checks = report.checks_at(k)
    if not checks:
        return ""
    return "ok" if all(c.ok for c in checks) else "FAIL"


def cmd_evolve(args, out) -> int:
    w = _word(args.word, args.alphabet)
    report = verify_identities(w)
    if args.format == "json":
        out.write(dump_json(report.to_dict()))
        return EXIT_OK if report.ok else EXIT_FAILED

    header = ["k", "V", "E", "i_k", "o_k", "c_k", "inc_k", "m_k+2", "checks"]
    rows = [
        [s.k, s.v_count, s.e_count, s.in_forks, s.out_forks, s.crossroads, s.inc, s.maw_count, _mark(report, s.k)]
        for s in report.levels
    ]
    if args.format == "tsv":
        out.write("\t".join(header) + "\n")
        for row in rows:
            out.write("\t".join(str(x) for x in row) + "\n")
    else:
        widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
        for row in [header, *rows]:
            out.write("  ".join(str(x).rjust(wd) for x, wd in zip(row, widths)).rstrip() + "\n")

    if report.binary:
        s_check = report.summary("|S|=1+sum_c")
        n_check = report.summary("n=1+sum_(c+i)")
        out.write(
            f"|S̃| = 1 + Σc: {'PASS' if s_check.ok else 'FAIL'} ({s_check.lhs} = 1 + {report.sum_c})\n"
        )
        out.write(
            f"n = 1 + Σ(c+i): {'PASS' if n_check.ok else 'FAIL'} ({n_check.lhs} = 1 + {report.sum_ci})\n"
        )
    else:
        out.write("binary identities: N/A (alphabet has "
                  f"{len(w.alphabet)} letters; general recurrence checked per level)\n")
    failures = report.failures()
    for c in failures:
        print(f"identity {c.name} failed at k={c.k}: {c.lhs} != {c.rhs}", file=sys.stderr)
    return EXIT_OK if not failures else EXIT_FAILED


def cmd_rauzy(args, out) -> int:
    w = _word(args.word, args.alphabet)
    if args.level < 0:
        raise UsageError("level must be non-negative")
    g = rauzy_graph(w, args.level)
    fmt = args.format or "dot"
    if fmt == "dot":
        out.write(to_dot(g))
    elif fmt == "json":
        out.write(dump_json({
            "level": g.level,
            "vertices": sorted(g.vertices, key=lambda s: (len(s), s)),
            "edges": [[e[:-1], e[1:], e] for e in sorted(g.edges)],
        }))
    else:
        sep = "\t" if fmt == "tsv" else " -> "
        for e in sorted(g.edges):
            out.write(f"{e[:-1] or 'ε'}{sep}{e[1:] or 'ε'}{sep if fmt == 'tsv' else ' : '}{e}\n")
    return EXIT_OK


def cmd_fib(args, out) -> int:
    if args.k < 0:
        raise UsageError("k must be non-negative")
    raw = fibonacci_string(args.k)
    w = canonicalize(raw, "ab")
    k = len(minimal_forbidden_words(w))
    phi = fibonacci_number(k)
    tight = w.n == phi
    if args.format == "json":
        out.write(dump_json({
            "index": args.k, "raw": raw, "word": w.period, "period": w.n,
            "codelength": k, "phi": phi, "bound_ok": w.n <= phi, "tight": tight,
        }))
    else:
        shown = raw if len(raw) <= 64 else raw[:61] + "..."
        canon = w.period if len(w.period) <= 64 else w.period[:61] + "..."
        status = "TIGHT" if tight else ("OK" if w.n <= phi else "VIOLATED")
        out.write(f"word {shown} (canonical {canon}), period {w.n}, k={k}, {w.n} ≤ φ_{k} = {phi} {status}\n")
    return EXIT_OK if w.n <= phi else EXIT_FAILED


def cmd_search(args, out) -> int:
    alphabet = args.alphabet or "ab"
    if len(alphabet) < 2:
        raise UsageError("search needs an alphabet of at least two letters")
    rows = codelength_table(alphabet, args.max_n, budget=args.budget, jobs=args.jobs)
    if args.format == "json":
        out.write(dump_json([r.to_dict() for r in rows]))
    elif args.format == "tsv":
        out.write(rows_to_tsv(rows))
    else:
        out.write(f"{'n':>3}  {'min_k':>5}  {'phi':>5}  {'minimizers':>10}  sample\n")
        for r in rows:
            sample = r.extremal_words[0].period if r.extremal_words else ""
            mark = "ok" if r.fib_bound_ok else "VIOLATION"
            out.write(
                f"{r.n:>3}  {r.min_codelength:>5}  {fibonacci_number(r.min_codelength):>5}  "
                f"{len(r.extremal_words):>10}  {sample}  {mark}\n"
            )
    return EXIT_OK if all(r.fib_bound_ok for r in rows) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", help="alphabet symbols in order (default: letters of the input)")
    common.add_argument("--format", choices=["table", "json", "tsv", "dot"], default=None)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max exhaustive-search cost")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for search")

    parser = argparse.ArgumentParser(
        prog="codelength",
        description="Minimal forbidden systems, Rauzy graphs and Fibonacci bounds for periodic words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("maw", parents=[common], help="reduced forbidden system of a periodic word")
    p.add_argument("word")
    p.set_defaults(func=cmd_maw)

    p = sub.add_parser("defines", parents=[common], help="does a forbidden system define a unique word")
    p.add_argument("forbids", nargs="*", help="forbidden words; read from stdin when omitted or '-'")
    p.set_defaults(func=cmd_defines)

    p = sub.add_parser("evolve", parents=[common], help="per-level Rauzy statistics and identity checks")
    p.add_argument("word")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("rauzy", parents=[common], help="Rauzy graph of a given level")
    p.add_argument("word")
    p.add_argument("level", type=int)
    p.set_defaults(func=cmd_rauzy)

    p = sub.add_parser("fib", parents=[common], help="Fibonacci word l_k and its codelength")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("search", parents=[common], help="exhaustive minimum codelength per period")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.format == "dot" and args.command not in GRAPH_COMMANDS:
            raise UsageError("--format dot only applies to graph commands (rauzy)")
        if args.budget <= 0:
            raise UsageError("--budget must be positive")
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        return args.func(args, out)
    except (UsageError, WordError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceededError, InconclusiveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
