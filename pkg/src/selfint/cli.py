"""Command-line front end: ``selfint <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import verify
from .census import THREADS_ENV, emit_table, enumerate_words, resolve_pants_order, si_histogram
from .census import table_to_csv, table_to_json, table_to_plain
from .errors import SelfIntError
from .linking import TORUS, intersection_number, si_result
from .surgery import Orientation, find_opposite_corner_pairs, reduce_to_two_blockpairs
from .surgery import surgery_reversed, surgery_same
from .words import CyclicWord, block_decomposition, cyclic_reduce, power_decomposition


class UsageError(Exception):
    pass


def _word(text: str) -> CyclicWord:
    reduced = cyclic_reduce(text)
    if not reduced:
        raise UsageError(f"{text!r} reduces to the empty word")
    if reduced != text:
        print(f"note: {text} reduced to {reduced}", file=sys.stderr)
    return CyclicWord(reduced)


def _order(args):
    return TORUS if args.surface == "torus" else resolve_pants_order()


def _threads(value: str) -> Optional[int]:
    if value == "auto":
        return None
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("threads must be a positive integer or 'auto'")
    return n


def _abab_note(w: CyclicWord) -> Optional[str]:
    """The exact value for <(r^i s^j)^2> with i or j equal to 1, where only a bound is known in general."""
    pd = power_decomposition(w)
    if pd.exponent != 2:
        return None
    bd = block_decomposition(pd.root)
    if bd.h == 1 and min(e for _, e in bd.blocks) == 1:
        return "=1"
    return None


def cmd_si(args) -> str:
    w = _word(args.word)
    r = si_result(w, _order(args))
    note = _abab_note(w) if args.surface == "torus" and not r.exact else None
    if args.format == "json":
        doc = r.to_json()
        doc["word"] = w.letters
        if note:
            doc["note"] = note
        return json.dumps(doc) + "\n"
    if r.exact:
        return f"{r.value}\n"
    line = f"≤ {r.value} (bound; nonprimitive)"
    if note:
        line += f" {note} (exact for this shape)"
    return line + "\n"


def cmd_in(args) -> str:
    v, w = _word(args.word1), _word(args.word2)
    value = intersection_number(v, w, _order(args))
    if args.format == "json":
        return json.dumps({"words": [v.letters, w.letters], "in": value}) + "\n"
    return f"{value}\n"


def _parse_pair(text: str) -> tuple:
    try:
        i, j = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--pair expects i,j, got {text!r}") from None
    return i, j


def cmd_surgery(args) -> str:
    w = _word(args.word)
    pairs = find_opposite_corner_pairs(w)
    if args.pair is not None:
        i, j = _parse_pair(args.pair)
        pairs = [p for p in pairs if {p.site1.position, p.site2.position} == {i, j}]
        if not pairs:
            raise UsageError(f"positions {i},{j} of {w.letters} are not opposite corners")
    rows = []
    for p in pairs:
        if p.orientation is Orientation.REVERSED:
            out = surgery_reversed(w, p)
            text = out.letters
        else:
            out = surgery_same(w, p)
            text = out.texts()
        rows.append({"pair": [p.site1.position, p.site2.position],
                     "orientation": p.orientation.value, "result": text})
    if args.format == "json":
        return json.dumps({"word": w.letters, "surgeries": rows}) + "\n"
    lines = [f"{w.letters}: no opposite corners"] if not rows else []
    for r in rows:
        res = r["result"] if isinstance(r["result"], str) else "[" + ", ".join(r["result"]) + "]"
        lines.append(f"{r['pair'][0]},{r['pair'][1]} {r['orientation']}: {res}")
    return "\n".join(lines) + "\n"


def cmd_reduce(args) -> str:
    w = _word(args.word)
    trace = reduce_to_two_blockpairs(w)
    f = trace.final
    if args.format == "json":
        return json.dumps({"word": w.letters, "steps": trace.to_json(), "final": f.letters,
                           "alpha": f.alpha, "beta": f.beta, "h": f.h,
                           "guaranteed_gain": trace.guaranteed_gain}) + "\n"

    def fmt(x):
        return x if isinstance(x, str) else "[" + ", ".join(x) + "]"

    lines = [f"{s['rule']}: {fmt(s['before'])} -> {fmt(s['after'])}" for s in trace.to_json()]
    lines.append(f"final: {f.letters} (alpha {f.alpha}, beta {f.beta}, h {f.h}, "
                 f"gain >= {trace.guaranteed_gain})")
    return "\n".join(lines) + "\n"


def cmd_enumerate(args) -> str:
    if args.length < 1:
        raise UsageError("--length must be at least 1")
    if args.histogram:
        rows = [si_histogram(args.length, _order(args), args.threads)]
        return {"csv": table_to_csv, "json": table_to_json, "plain": table_to_plain}[args.format](rows)
    words = [w.letters for w in enumerate_words(args.length, not args.all, args.threads)]
    if args.format == "json":
        return json.dumps(words) + "\n"
    return "".join(x + "\n" for x in words)


def cmd_table(args) -> str:
    if args.max < 1:
        raise UsageError("--max must be at least 1")
    if args.surface == "pants" and args.max > 15 and not args.force:
        raise UsageError("pants tables are validated only up to length 15; pass --force")
    return emit_table(args.max, _order(args), args.format, args.threads)


def cmd_verify(args) -> tuple:
    failures = verify.SUITES[args.suite]()
    if args.format == "json":
        out = json.dumps({"suite": args.suite, "failures": failures}) + "\n"
    elif failures:
        out = f"{args.suite}: FAIL ({len(failures)} failures)\nfirst: {failures[0]}\n"
    else:
        out = f"{args.suite}: pass, 0 failures\n"
    return out, 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--surface", choices=("torus", "pants"), default="torus")
    common.add_argument("--format", choices=("csv", "json", "plain"), default="plain")
    common.add_argument("--threads", type=_threads, default=None,
                        help=f"worker threads (default: ${THREADS_ENV} or all cores)")
    common.add_argument("--force", action="store_true", help="allow unvalidated pants lengths")

    parser = argparse.ArgumentParser(prog="selfint",
                                     description="Self-intersection numbers of curves from cyclic words.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("si", parents=[common], help="self-intersection number of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_si)

    p = sub.add_parser("in", parents=[common], help="intersection number of two words")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_in)

    p = sub.add_parser("surgery", parents=[common], help="cross-corner surgery")
    p.add_argument("word")
    p.add_argument("--pair", help="corner positions i,j (default: every opposite pair)")
    p.set_defaults(func=cmd_surgery)

    p = sub.add_parser("reduce", parents=[common], help="reduce to at most two block-pairs")
    p.add_argument("word")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("enumerate", parents=[common], help="list words of a length")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--histogram", action="store_true", help="print the SI histogram instead")
    p.add_argument("--all", action="store_true", help="include proper powers")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", parents=[common], help="SI census table up to a length")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=sorted(verify.SUITES), required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0) and 2
    try:
        result = args.func(args)
    except (UsageError, SelfIntError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(result, tuple):
        result, code = result
    sys.stdout.write(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
