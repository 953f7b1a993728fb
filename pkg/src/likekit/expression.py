"""Boolean combinations of LIKE patterns.

The expression language is the SQL-flavored fragment

    expr  := or
    or    := and { "OR" and }
    and   := unary { "AND" unary }
    unary := "NOT" unary | "(" expr ")" | "LIKE" quoted-pattern

with double-quoted patterns (backslash escapes the quote and itself) and
the usual precedence NOT over AND over OR. Keywords are case-insensitive.

Besides parsing and evaluation this module hosts the two syntactic
rewrites: expansion of ``_`` wildcards into alternatives over a declared
alphabet, and the disjunctive normal form whose atoms contain constants
separated by ``%`` only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .matcher import Text, as_text, match_greedy
from .normalize import normalize
from .pattern import (
    AnyOne,
    Alphabet,
    Literal,
    Pattern,
    parse_pattern,
    parse_pattern_tokens,
    render_pattern,
    render_pattern_tokens,
)

DEFAULT_EXPANSION_CAP = 4096


class ExpressionSyntaxError(ValueError):
    """Expression text that cannot be parsed; carries the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (position {position})")
        self.position = position


class ExplosionCapError(RuntimeError):
    """A rewrite refused to generate more atoms than the configured cap."""

    def __init__(self, required: int, cap: int) -> None:
        super().__init__(
            f"rewrite would generate {required} atoms, above the cap of {cap}"
        )
        self.required = required
        self.cap = cap


@dataclass(frozen=True)
class Atom:
    pattern: Pattern


@dataclass(frozen=True)
class Not:
    child: "LikeExpression"


@dataclass(frozen=True)
class And:
    children: tuple["LikeExpression", ...]

    def __post_init__(self) -> None:
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ValueError("And needs at least two children")


@dataclass(frozen=True)
class Or:
    children: tuple["LikeExpression", ...]

    def __post_init__(self) -> None:
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ValueError("Or needs at least two children")


LikeExpression = Atom | Not | And | Or


def and_(*items: LikeExpression) -> LikeExpression:
    """Conjunction with flattening; a single item passes through unchanged."""
    flat: list[LikeExpression] = []
    for item in items:
        if isinstance(item, And):
            flat.extend(item.children)
        else:
            flat.append(item)
    if not flat:
        raise ValueError("and_ needs at least one item")
    if len(flat) == 1:
        return flat[0]
    return And(tuple(flat))


def or_(*items: LikeExpression) -> LikeExpression:
    """Disjunction with flattening; a single item passes through unchanged."""
    flat: list[LikeExpression] = []
    for item in items:
        if isinstance(item, Or):
            flat.extend(item.children)
        else:
            flat.append(item)
    if not flat:
        raise ValueError("or_ needs at least one item")
    if len(flat) == 1:
        return flat[0]
    return Or(tuple(flat))


def not_(item: LikeExpression) -> LikeExpression:
    return Not(item)


def atom_patterns(e: LikeExpression) -> Iterator[Pattern]:
    """Every atom's pattern, in preorder, duplicates included."""
    if isinstance(e, Atom):
        yield e.pattern
    elif isinstance(e, Not):
        yield from atom_patterns(e.child)
    else:
        for child in e.children:
            yield from atom_patterns(child)


def expression_size(e: LikeExpression) -> int:
    """Total number of pattern tokens across all atoms."""
    return sum(len(p) for p in atom_patterns(e))


def is_monotone(e: LikeExpression) -> bool:
    """True when the expression contains no negation."""
    if isinstance(e, Atom):
        return True
    if isinstance(e, Not):
        return False
    return all(is_monotone(c) for c in e.children)


def evaluate(e: LikeExpression, t: Text | str) -> bool:
    t = as_text(t)

    def rec(node: LikeExpression) -> bool:
        if isinstance(node, Atom):
            return match_greedy(node.pattern, t)
        if isinstance(node, Not):
            return not rec(node.child)
        if isinstance(node, And):
            return all(rec(c) for c in node.children)
        return any(rec(c) for c in node.children)

    return rec(e)


# --- parsing ---------------------------------------------------------------

_KEYWORDS = {"NOT", "AND", "OR", "LIKE"}


def _lex(text: str) -> list[tuple[str, str, int]]:
    out: list[tuple[str, str, int]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "(":
            out.append(("lparen", "(", i))
            i += 1
            continue
        if ch == ")":
            out.append(("rparen", ")", i))
            i += 1
            continue
        if ch == '"':
            j = i + 1
            buf: list[str] = []
            closed = False
            while j < n:
                cj = text[j]
                if cj == "\\" and j + 1 < n and text[j + 1] in ('"', "\\"):
                    buf.append(text[j + 1])
                    j += 2
                    continue
                if cj == '"':
                    closed = True
                    break
                buf.append(cj)
                j += 1
            if not closed:
                raise ExpressionSyntaxError("unterminated pattern string", i)
            out.append(("pattern", "".join(buf), i))
            i = j + 1
            continue
        j = i
        while j < n and not text[j].isspace() and text[j] not in '()"':
            j += 1
        word = text[i:j]
        if word.upper() in _KEYWORDS:
            out.append((word.upper().lower(), word, i))
        else:
            raise ExpressionSyntaxError(f"unexpected token {word!r}", i)
        i = j
    return out


class _Parser:
    def __init__(
        self,
        toks: list[tuple[str, str, int]],
        escape: str | None,
        tokens_mode: bool,
        length: int,
    ) -> None:
        self.toks = toks
        self.i = 0
        self.escape = escape
        self.tokens_mode = tokens_mode
        self.length = length

    def _peek(self) -> tuple[str, str, int] | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def _take(self, kind: str) -> tuple[str, str, int]:
        tok = self._peek()
        if tok is None or tok[0] != kind:
            pos = tok[2] if tok is not None else self.length
            raise ExpressionSyntaxError(f"expected {kind}", pos)
        self.i += 1
        return tok

    def parse_or(self) -> LikeExpression:
        items = [self.parse_and()]
        while (tok := self._peek()) is not None and tok[0] == "or":
            self.i += 1
            items.append(self.parse_and())
        return or_(*items)

    def parse_and(self) -> LikeExpression:
        items = [self.parse_unary()]
        while (tok := self._peek()) is not None and tok[0] == "and":
            self.i += 1
            items.append(self.parse_unary())
        return and_(*items)

    def parse_unary(self) -> LikeExpression:
        tok = self._peek()
        if tok is None:
            raise ExpressionSyntaxError("unexpected end of input", self.length)
        kind, _, pos = tok
        if kind == "not":
            self.i += 1
            return Not(self.parse_unary())
        if kind == "lparen":
            self.i += 1
            inner = self.parse_or()
            self._take("rparen")
            return inner
        if kind == "like":
            self.i += 1
            _, raw, _ = self._take("pattern")
            if self.tokens_mode:
                return Atom(parse_pattern_tokens(raw, self.escape))
            return Atom(parse_pattern(raw, self.escape))
        raise ExpressionSyntaxError("expected NOT, '(' or LIKE", pos)


def parse_expression(
    text: str, escape: str | None = None, tokens: bool = False
) -> LikeExpression:
    """Parse the expression grammar; connectives come out flattened."""
    toks = _lex(text)
    parser = _Parser(toks, escape, tokens, len(text))
    expr = parser.parse_or()
    left = parser._peek()
    if left is not None:
        raise ExpressionSyntaxError("unexpected trailing input", left[2])
    return expr


def _quote(p: Pattern, escape: str | None, tokens: bool) -> str:
    surface = render_pattern_tokens(p, escape) if tokens else render_pattern(p, escape)
    return '"' + surface.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_expression(
    e: LikeExpression, escape: str | None = None, tokens: bool = False
) -> str:
    """Inverse of parse_expression, up to flattening of nested connectives."""

    def prec(node: LikeExpression) -> int:
        if isinstance(node, Or):
            return 0
        if isinstance(node, And):
            return 1
        return 2

    def rec(node: LikeExpression, context: int) -> str:
        if isinstance(node, Atom):
            s = "LIKE " + _quote(node.pattern, escape, tokens)
        elif isinstance(node, Not):
            s = "NOT " + rec(node.child, 2)
        elif isinstance(node, And):
            s = " AND ".join(rec(c, 2) for c in node.children)
        else:
            s = " OR ".join(rec(c, 1) for c in node.children)
        if prec(node) < context:
            return "(" + s + ")"
        return s

    return rec(e, 0)


# --- rewrites ---------------------------------------------------------------


def _expansions(p: Pattern, sigma: Alphabet, cap: int) -> list[Pattern]:
    holes = [i for i, tok in enumerate(p.tokens) if isinstance(tok, AnyOne)]
    required = len(sigma) ** len(holes)
    if required > cap:
        raise ExplosionCapError(required, cap)
    if not holes:
        return [p]
    out: list[Pattern] = []
    for combo in itertools.product(sigma.symbols, repeat=len(holes)):
        toks = list(p.tokens)
        for hole, sym in zip(holes, combo):
            toks[hole] = Literal(sym)
        out.append(Pattern(tuple(toks)))
    return out


def expand_underscores(
    p: Pattern, sigma: Alphabet, cap: int = DEFAULT_EXPANSION_CAP
) -> LikeExpression:
    """Replace every ``_`` by each alphabet symbol, one atom per combination.

    The result has the same matches as ``p`` on texts over ``sigma``. The
    number of generated atoms is ``|sigma|`` to the power of the wildcard
    count, so a cap guards against blowup.
    """
    return or_(*[Atom(q) for q in _expansions(p, sigma, cap)])


@dataclass(frozen=True)
class SignedAtom:
    pattern: Pattern
    positive: bool


@dataclass(frozen=True)
class Dnf:
    """Disjunction of conjunctions of possibly negated atoms.

    Every atom is free of ``_``: it consists of constant factors separated
    by ``%``, with anchoring recorded by the presence or absence of leading
    and trailing ``%`` tokens in the pattern itself.
    """

    clauses: tuple[tuple[SignedAtom, ...], ...]

    def to_expression(self) -> LikeExpression:
        def clause_expr(clause: tuple[SignedAtom, ...]) -> LikeExpression:
            parts = [
                Atom(sa.pattern) if sa.positive else Not(Atom(sa.pattern))
                for sa in clause
            ]
            return and_(*parts)

        return or_(*[clause_expr(c) for c in self.clauses])


def to_dot_depth1_dnf(
    e: LikeExpression, sigma: Alphabet, cap: int = DEFAULT_EXPANSION_CAP
) -> Dnf:
    """Rewrite to disjunctive normal form with wildcard-free atoms.

    The steps: push negations down to atoms, expand every ``_`` over the
    alphabet, then distribute conjunction over disjunction. Evaluation is
    preserved on texts over ``sigma``. The cap bounds the total number of
    signed atoms the distribution may generate.
    """

    def check(count: int) -> None:
        if count > cap:
            raise ExplosionCapError(count, cap)

    def rec(node: LikeExpression, positive: bool) -> list[list[SignedAtom]]:
        if isinstance(node, Atom):
            pats = [normalize(q) for q in _expansions(node.pattern, sigma, cap)]
            if positive:
                return [[SignedAtom(q, True)] for q in pats]
            return [[SignedAtom(q, False) for q in pats]]
        if isinstance(node, Not):
            return rec(node.child, not positive)
        conjunctive = isinstance(node, And) == positive
        parts = [rec(c, positive) for c in node.children]
        if not conjunctive:
            merged = [clause for part in parts for clause in part]
            check(sum(len(c) for c in merged))
            return merged
        result: list[list[SignedAtom]] = [[]]
        for part in parts:
            result = [left + right for left in result for right in part]
            check(sum(len(c) for c in result))
        return result

    clauses = rec(e, True)
    return Dnf(tuple(tuple(c) for c in clauses))
