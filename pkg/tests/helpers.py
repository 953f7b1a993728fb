"""Shared oracles and generators for the test suite.

Everything here is deliberately independent of the package internals it
is used to check: the regex engine is a plain backtracker, satisfiability
is brute forced, and shortest witnesses come from direct enumeration.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

from likekit import (
    ANY_ONE,
    ANY_STRING,
    Alphabet,
    Atom,
    Cnf,
    LikeExpression,
    Literal,
    Pattern,
    Text,
    TmRule,
    TmSpec,
    Token,
    and_,
    evaluate,
    or_,
)


def all_texts(symbols: Sequence[str], max_len: int) -> Iterator[Text]:
    for n in range(max_len + 1):
        for combo in itertools.product(symbols, repeat=n):
            yield combo


def all_patterns(symbols: Sequence[str], max_len: int) -> Iterator[Pattern]:
    tokens: list[Token] = [Literal(s) for s in symbols]
    tokens.extend([ANY_ONE, ANY_STRING])
    for n in range(max_len + 1):
        for combo in itertools.product(tokens, repeat=n):
            yield Pattern(combo)


def random_text(rng: random.Random, symbols: Sequence[str], max_len: int) -> Text:
    n = rng.randint(0, max_len)
    return tuple(rng.choice(symbols) for _ in range(n))


def random_pattern(rng: random.Random, symbols: Sequence[str], max_len: int) -> Pattern:
    n = rng.randint(0, max_len)
    out: list[Token] = []
    for _ in range(n):
        r = rng.random()
        if r < 0.2:
            out.append(ANY_STRING)
        elif r < 0.4:
            out.append(ANY_ONE)
        else:
            out.append(Literal(rng.choice(symbols)))
    return Pattern(tuple(out))


def realize(rng: random.Random, p: Pattern, symbols: Sequence[str]) -> Text:
    """A text the pattern matches, built token by token."""
    out: list[str] = []
    for tok in p.tokens:
        if isinstance(tok, Literal):
            out.append(tok.symbol)
        elif tok == ANY_ONE:
            out.append(rng.choice(symbols))
        else:
            for _ in range(rng.randint(0, 2)):
                out.append(rng.choice(symbols))
    return tuple(out)


def random_monotone_expression(
    rng: random.Random, symbols: Sequence[str], budget: int
) -> LikeExpression:
    """Negation-free expression whose patterns hold at most ``budget`` tokens."""
    if budget <= 1 or rng.random() < 0.3:
        return Atom(random_pattern(rng, symbols, max(budget, 1)))
    left = rng.randint(1, budget - 1)
    a = random_monotone_expression(rng, symbols, left)
    b = random_monotone_expression(rng, symbols, budget - left)
    return and_(a, b) if rng.random() < 0.5 else or_(a, b)


def shortest_satisfying(
    e: LikeExpression, sigma: Alphabet, max_len: int
) -> Text | None:
    """First satisfying text in shortest-then-alphabet order, if any."""
    for t in all_texts(sigma.symbols, max_len):
        if evaluate(e, t):
            return t
    return None


def brute_force_sat(formula: Cnf) -> tuple[bool, ...] | None:
    for bits in itertools.product((False, True), repeat=formula.n_vars):
        ok = True
        for clause in formula.clauses:
            if not any(bits[abs(l) - 1] == (l > 0) for l in clause):
                ok = False
                break
        if ok:
            return bits
    return None


def assignment_satisfies(formula: Cnf, bits: Sequence[bool]) -> bool:
    return all(
        any(bits[abs(l) - 1] == (l > 0) for l in clause) for clause in formula.clauses
    )


# --- a small classical regex engine ------------------------------------------
#
# Grammar of the notation the package emits: union with +, grouping with
# parentheses, Kleene star, juxtaposition for concatenation, single
# characters as symbols. Matching is a memoized end-position search.


def _regex_parse(src: str) -> tuple[list[tuple], int]:
    nodes: list[tuple] = []

    def add(node: tuple) -> int:
        nodes.append(node)
        return len(nodes) - 1

    pos = 0

    def parse_alt() -> int:
        nonlocal pos
        branches = [parse_cat()]
        while pos < len(src) and src[pos] == "+":
            pos += 1
            branches.append(parse_cat())
        if len(branches) == 1:
            return branches[0]
        return add(("alt", tuple(branches)))

    def parse_cat() -> int:
        nonlocal pos
        items: list[int] = []
        while pos < len(src) and src[pos] not in ")+":
            items.append(parse_rep())
        if len(items) == 1:
            return items[0]
        return add(("cat", tuple(items)))

    def parse_rep() -> int:
        nonlocal pos
        if src[pos] == "(":
            pos += 1
            inner = parse_alt()
            assert pos < len(src) and src[pos] == ")", "unbalanced parentheses"
            pos += 1
            node = inner
        else:
            assert src[pos] != "*", "stray star"
            node = add(("sym", src[pos]))
            pos += 1
        while pos < len(src) and src[pos] == "*":
            node = add(("star", node))
            pos += 1
        return node

    root = parse_alt()
    assert pos == len(src), f"trailing regex input at {pos}"
    return nodes, root


def regex_matches(regex: str, text: Sequence[str]) -> bool:
    nodes, root = _regex_parse(regex)
    memo: dict[tuple[int, int], frozenset[int]] = {}

    def ends(node_id: int, start: int) -> frozenset[int]:
        key = (node_id, start)
        got = memo.get(key)
        if got is not None:
            return got
        memo[key] = frozenset()  # cycle guard for star
        kind = nodes[node_id][0]
        if kind == "sym":
            sym = nodes[node_id][1]
            out = (
                frozenset((start + 1,))
                if start < len(text) and text[start] == sym
                else frozenset()
            )
        elif kind == "cat":
            fronts = {start}
            for child in nodes[node_id][1]:
                fronts = {e for f in fronts for e in ends(child, f)}
            out = frozenset(fronts)
        elif kind == "alt":
            out = frozenset(
                e for child in nodes[node_id][1] for e in ends(child, start)
            )
        else:
            child = nodes[node_id][1]
            reached = {start}
            frontier = {start}
            while frontier:
                step = {e for f in frontier for e in ends(child, f)}
                frontier = step - reached
                reached |= frontier
            out = frozenset(reached)
        memo[key] = out
        return out

    if not regex:
        return len(text) == 0
    return len(text) in ends(root, 0)


# --- machines used across tests -----------------------------------------------


def m_one_step() -> tuple[TmSpec, tuple[str, ...], int]:
    """Reads the single 1, blanks it, accepts. One rule, one cell."""
    spec = TmSpec(
        states=("q0", "qa"),
        tape_alphabet=("1", "_blank"),
        input_alphabet=("1",),
        start="q0",
        accept="qa",
        rules=(TmRule("q0", "1", "qa", "_blank", "L"),),
    )
    return spec, ("1",), 1


def m_bouncer(space: int) -> tuple[TmSpec, tuple[str, ...], int]:
    """Walks right over the 1s, then walks left erasing them, accepts."""
    spec = TmSpec(
        states=("q0", "q1", "qa"),
        tape_alphabet=("1", "b"),
        input_alphabet=("1",),
        start="q0",
        accept="qa",
        rules=(
            TmRule("q0", "1", "q0", "1", "R"),
            TmRule("q0", "b", "q1", "b", "L"),
            TmRule("q1", "1", "q1", "b", "L"),
            TmRule("q1", "b", "qa", "b", "L"),
        ),
        blank="b",
    )
    return spec, ("1",) * (space - 1), space


def m_loop() -> tuple[TmSpec, tuple[str, ...], int]:
    """Spins in place forever at cell 0."""
    spec = TmSpec(
        states=("q0", "qa"),
        tape_alphabet=("b",),
        input_alphabet=(),
        start="q0",
        accept="qa",
        rules=(TmRule("q0", "b", "q0", "b", "L"),),
        blank="b",
    )
    return spec, (), 1


def m_stuck() -> tuple[TmSpec, tuple[str, ...], int]:
    """Halts immediately: no rule covers the starting read."""
    spec = TmSpec(
        states=("q0", "qa"),
        tape_alphabet=("1", "b"),
        input_alphabet=("1",),
        start="q0",
        accept="qa",
        rules=(TmRule("q0", "1", "qa", "b", "L"),),
        blank="b",
    )
    return spec, (), 1


def m_edge_fall() -> tuple[TmSpec, tuple[str, ...], int]:
    """Runs right off the last cell and halts without accepting."""
    spec = TmSpec(
        states=("q0", "qa"),
        tape_alphabet=("b",),
        input_alphabet=(),
        start="q0",
        accept="qa",
        rules=(TmRule("q0", "b", "q0", "b", "R"),),
        blank="b",
    )
    return spec, (), 2


def m_dirty_accept() -> tuple[TmSpec, tuple[str, ...], int]:
    """Enters the accept state with a 1 still on the tape."""
    spec = TmSpec(
        states=("q0", "qa"),
        tape_alphabet=("1", "b"),
        input_alphabet=("1",),
        start="q0",
        accept="qa",
        rules=(TmRule("q0", "1", "qa", "1", "R"),),
        blank="b",
    )
    return spec, ("1",), 2
