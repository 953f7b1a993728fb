"""Command-line front end.

Exit codes follow one convention across subcommands: 0 for a positive
verdict (match, equivalent, witness found, accepted), 1 for the negative
counterpart, 2 for unusable input, 3 for hitting a search budget or an
expansion cap.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Callable

from .automata import (
    DEFAULT_STATE_BUDGET,
    SearchBudgetExceeded,
    SearchOutcome,
    Verdict,
    find_separating_string,
    find_witness,
)
from .expression import (
    DEFAULT_EXPANSION_CAP,
    ExplosionCapError,
    evaluate,
    parse_expression,
    render_expression,
    to_dot_depth1_dnf,
)
from .matcher import Text, as_text, match_greedy
from .normalize import normalize
from .pattern import (
    Alphabet,
    Pattern,
    parse_pattern,
    parse_pattern_tokens,
    render_pattern,
    render_pattern_tokens,
    to_classical_regex,
)
from .reductions import (
    encode_3sat,
    encode_majority,
    encode_tm,
    parse_dimacs,
    simulate_tm,
    tm_from_json,
)


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _parse_pat(raw: str, args: argparse.Namespace) -> Pattern:
    if args.tokens:
        return parse_pattern_tokens(raw, args.escape)
    return parse_pattern(raw, args.escape)


def _render_pat(p: Pattern, args: argparse.Namespace) -> str:
    if args.tokens:
        return render_pattern_tokens(p, args.escape)
    return render_pattern(p, args.escape)


def _parse_text(raw: str, args: argparse.Namespace) -> Text:
    if args.tokens:
        return tuple(raw.split())
    return as_text(raw)


def _join(t: Text, args: argparse.Namespace) -> str:
    return " ".join(t) if args.tokens else "".join(t)


def _load_alphabet(args: argparse.Namespace) -> Alphabet:
    if args.alphabet_file is not None:
        return Alphabet.from_lines(Path(args.alphabet_file).read_text())
    if args.tokens:
        return Alphabet(tuple(args.alphabet.split()))
    return Alphabet.from_chars(args.alphabet)


def _emit(args: argparse.Namespace, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(human)


def _report_search(
    args: argparse.Namespace, outcome: SearchOutcome, elapsed_ms: float, human: str
) -> None:
    payload = {
        "verdict": outcome.verdict.value,
        "witness": list(outcome.witness) if outcome.witness is not None else None,
        "explored": outcome.explored,
        "elapsed_ms": round(elapsed_ms, 3),
    }
    _emit(args, payload, human)


def _cmd_match(args: argparse.Namespace) -> int:
    pattern = _parse_pat(args.pattern, args)
    text = _parse_text(args.text, args)
    if args.alphabet is not None or args.alphabet_file is not None:
        sigma = _load_alphabet(args)
        for sym in text:
            if sym not in sigma:
                raise ValueError(f"text symbol {sym!r} not in the alphabet")
        for sym in pattern.literals():
            if sym not in sigma:
                raise ValueError(f"pattern symbol {sym!r} not in the alphabet")
    matched = match_greedy(pattern, text)
    _emit(args, {"matched": matched}, "match" if matched else "no match")
    return 0 if matched else 1


def _cmd_normalize(args: argparse.Namespace) -> int:
    out = _render_pat(normalize(_parse_pat(args.pattern, args)), args)
    _emit(args, {"pattern": out}, out)
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    expr = parse_expression(args.expr, args.escape, args.tokens)
    value = evaluate(expr, _parse_text(args.text, args))
    _emit(args, {"matched": value}, "match" if value else "no match")
    return 0 if value else 1


def _cmd_dnf(args: argparse.Namespace) -> int:
    expr = parse_expression(args.expr, args.escape, args.tokens)
    sigma = _load_alphabet(args)
    dnf = to_dot_depth1_dnf(expr, sigma, cap=args.cap)
    if args.json:
        clauses = [
            [
                {"pattern": _render_pat(sa.pattern, args), "positive": sa.positive}
                for sa in clause
            ]
            for clause in dnf.clauses
        ]
        print(json.dumps({"clauses": clauses}))
    else:
        print(render_expression(dnf.to_expression(), args.escape, args.tokens))
    return 0


def _cmd_equiv(args: argparse.Namespace) -> int:
    e1 = parse_expression(args.e1, args.escape, args.tokens)
    e2 = parse_expression(args.e2, args.escape, args.tokens)
    sigma = _load_alphabet(args)
    t0 = time.perf_counter()
    outcome = find_separating_string(
        e1, e2, sigma, budget=args.budget, max_len=args.max_len
    )
    elapsed = (time.perf_counter() - t0) * 1000
    if outcome.verdict is Verdict.FOUND:
        assert outcome.witness is not None
        _report_search(
            args, outcome, elapsed, f"DIFFERENT: {_join(outcome.witness, args)}"
        )
        return 1
    _report_search(args, outcome, elapsed, "EQUIVALENT")
    return 0


def _cmd_nonempty(args: argparse.Namespace) -> int:
    expr = parse_expression(args.expr, args.escape, args.tokens)
    sigma = _load_alphabet(args)
    t0 = time.perf_counter()
    outcome = find_witness(expr, sigma, budget=args.budget, max_len=args.max_len)
    elapsed = (time.perf_counter() - t0) * 1000
    if outcome.verdict is Verdict.FOUND:
        assert outcome.witness is not None
        _report_search(args, outcome, elapsed, _join(outcome.witness, args))
        return 0
    _report_search(args, outcome, elapsed, "empty")
    return 1


def _write_alphabet(args: argparse.Namespace, sigma: Alphabet) -> None:
    if args.alphabet_out is not None:
        Path(args.alphabet_out).write_text(
            "".join(sym + "\n" for sym in sigma.symbols)
        )


def _cmd_reduce_3sat(args: argparse.Namespace) -> int:
    formula = parse_dimacs(_read_source(args.dimacs))
    expr, sigma = encode_3sat(formula)
    _write_alphabet(args, sigma)
    rendered = render_expression(expr, tokens=True)
    _emit(
        args,
        {"expression": rendered, "alphabet": list(sigma.symbols)},
        rendered,
    )
    return 0


def _cmd_reduce_majority(args: argparse.Namespace) -> int:
    pattern = encode_majority(args.n)
    out = render_pattern(pattern)
    _emit(args, {"pattern": out}, out)
    return 0


def _cmd_reduce_tm(args: argparse.Namespace) -> int:
    spec = tm_from_json(_read_source(args.machine))
    word = tuple(args.input.split())
    expr, sigma = encode_tm(spec, word, args.space)
    _write_alphabet(args, sigma)
    rendered = render_expression(expr, tokens=True)
    _emit(
        args,
        {"expression": rendered, "alphabet": list(sigma.symbols)},
        rendered,
    )
    return 0


def _cmd_simulate_tm(args: argparse.Namespace) -> int:
    spec = tm_from_json(_read_source(args.machine))
    word = tuple(args.input.split())
    result = simulate_tm(spec, word, args.space, max_steps=args.max_steps)
    payload = {
        "accepted": result.accepted,
        "history": list(result.history),
        "steps": result.steps,
    }
    human = " ".join(result.history) if result.accepted else "REJECT"
    _emit(args, payload, human)
    return 0 if result.accepted else 1


def _cmd_to_regex(args: argparse.Namespace) -> int:
    pattern = _parse_pat(args.pattern, args)
    sigma = _load_alphabet(args)
    out = to_classical_regex(pattern, sigma)
    _emit(args, {"regex": out}, out)
    return 0


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--escape", default=None, help="escape character for patterns")
    sub.add_argument(
        "--tokens",
        action="store_true",
        help="treat patterns and texts as whitespace-separated symbols",
    )
    sub.add_argument("--json", action="store_true", help="emit a JSON report")


def _add_alphabet(sub: argparse.ArgumentParser, required: bool = True) -> None:
    group = sub.add_mutually_exclusive_group(required=required)
    group.add_argument("--alphabet", help="alphabet as characters or tokens")
    group.add_argument("--alphabet-file", help="file with one symbol per line")


def _add_search(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_STATE_BUDGET,
        help="maximum number of search states",
    )
    sub.add_argument(
        "--max-len", type=int, default=None, help="cap on witness length"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="likekit",
        description="LIKE pattern matching, equivalence, and hardness gadgets",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("match", help="match one pattern against one text")
    p.add_argument("--pattern", required=True)
    p.add_argument("--text", required=True)
    _add_common(p)
    _add_alphabet(p, required=False)
    p.set_defaults(func=_cmd_match)

    p = subs.add_parser("normalize", help="print the normal form of a pattern")
    p.add_argument("--pattern", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_normalize)

    p = subs.add_parser("eval", help="evaluate a boolean expression on a text")
    p.add_argument("--expr", required=True)
    p.add_argument("--text", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_eval)

    p = subs.add_parser("dnf", help="rewrite an expression to wildcard-free DNF")
    p.add_argument("--expr", required=True)
    _add_common(p)
    _add_alphabet(p)
    p.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_EXPANSION_CAP,
        help="maximum number of generated atoms",
    )
    p.set_defaults(func=_cmd_dnf)

    p = subs.add_parser("equiv", help="decide whether two expressions agree")
    p.add_argument("--e1", required=True)
    p.add_argument("--e2", required=True)
    _add_common(p)
    _add_alphabet(p)
    _add_search(p)
    p.set_defaults(func=_cmd_equiv)

    p = subs.add_parser("nonempty", help="search for a text satisfying an expression")
    p.add_argument("--expr", required=True)
    _add_common(p)
    _add_alphabet(p)
    _add_search(p)
    p.set_defaults(func=_cmd_nonempty)

    p = subs.add_parser("reduce", help="generate gadget patterns and expressions")
    rsubs = p.add_subparsers(dest="gadget", required=True)

    r = rsubs.add_parser("3sat", help="encode a DIMACS 3-CNF formula")
    r.add_argument("--dimacs", required=True, help="DIMACS file, or - for stdin")
    r.add_argument("--alphabet-out", default=None, help="write the alphabet here")
    _add_common(r)
    r.set_defaults(func=_cmd_reduce_3sat)

    r = rsubs.add_parser("majority", help="pattern for majority-of-ones")
    r.add_argument(
        "--n", type=int, required=True, help="text length the pattern is aimed at"
    )
    _add_common(r)
    r.set_defaults(func=_cmd_reduce_majority)

    r = rsubs.add_parser("tm", help="encode a bounded-space machine run")
    r.add_argument("--machine", required=True, help="machine JSON file, or - for stdin")
    r.add_argument("--input", default="", help="input word, tokens separated by spaces")
    r.add_argument("--space", type=int, required=True, help="tape cells available")
    r.add_argument("--alphabet-out", default=None, help="write the alphabet here")
    _add_common(r)
    r.set_defaults(func=_cmd_reduce_tm)

    p = subs.add_parser("simulate", help="run a machine directly")
    ssubs = p.add_subparsers(dest="target", required=True)
    r = ssubs.add_parser("tm", help="run a bounded-space machine")
    r.add_argument("--machine", required=True, help="machine JSON file, or - for stdin")
    r.add_argument("--input", default="", help="input word, tokens separated by spaces")
    r.add_argument("--space", type=int, required=True, help="tape cells available")
    r.add_argument("--max-steps", type=int, default=None)
    _add_common(r)
    r.set_defaults(func=_cmd_simulate_tm)

    p = subs.add_parser("to-regex", help="translate a pattern to a classical regex")
    p.add_argument("--pattern", required=True)
    _add_common(p)
    _add_alphabet(p)
    p.set_defaults(func=_cmd_to_regex)

    return parser


def dispatch(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    handler: Callable[[argparse.Namespace], int] = args.func
    try:
        return handler(args)
    except (SearchBudgetExceeded, ExplosionCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))
