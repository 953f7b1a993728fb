"""Core data model for LIKE patterns.

A pattern is a sequence of tokens over an abstract symbol space: literal
symbols, a single-symbol wildcard (surface syntax ``_``) and an any-string
wildcard (surface syntax ``%``). Symbols are opaque nonempty strings, not
necessarily single characters. The wildcard meaning of ``%`` and ``_``
exists only in the surface syntax; parsed tokens are plain values, so a
literal percent sign is representable and unambiguous.

Two surface syntaxes are supported. In character mode every character of
the input is one symbol. In token mode symbols are whitespace-separated
names, which is required when symbol names are longer than one character
(machine-encoding alphabets, for example).

A pattern matches a whole text, never a substring of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Symbol = str

WILDCARD_ANY_STRING = "%"
WILDCARD_ANY_ONE = "_"
_METACHARS = (WILDCARD_ANY_STRING, WILDCARD_ANY_ONE)


class PatternSyntaxError(ValueError):
    """Pattern text that cannot be parsed; carries the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (position {position})")
        self.position = position


class RenderError(ValueError):
    """Pattern that cannot be written back in the requested surface syntax."""


@dataclass(frozen=True)
class Literal:
    """Token matching exactly one fixed symbol."""

    symbol: Symbol


@dataclass(frozen=True)
class AnyOne:
    """Token matching an arbitrary single symbol (surface ``_``)."""


@dataclass(frozen=True)
class AnyString:
    """Token matching any run of zero or more symbols (surface ``%``)."""


Token = Literal | AnyOne | AnyString

ANY_ONE = AnyOne()
ANY_STRING = AnyString()


@dataclass(frozen=True)
class Pattern:
    """Immutable token sequence. The empty pattern matches only the empty text."""

    tokens: tuple[Token, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.tokens, tuple):
            object.__setattr__(self, "tokens", tuple(self.tokens))

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[Token]:
        return iter(self.tokens)

    def has_any_string(self) -> bool:
        return any(isinstance(t, AnyString) for t in self.tokens)

    def literals(self) -> Iterator[Symbol]:
        for tok in self.tokens:
            if isinstance(tok, Literal):
                yield tok.symbol


@dataclass(frozen=True)
class Alphabet:
    """Nonempty ordered collection of distinct symbols.

    Declaration order is significant: searches enumerate candidate texts in
    this order, which makes every reported witness deterministic.
    """

    symbols: tuple[Symbol, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise ValueError("alphabet must contain at least one symbol")
        for sym in self.symbols:
            if not isinstance(sym, str) or not sym:
                raise ValueError("alphabet symbols must be nonempty strings")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __contains__(self, sym: object) -> bool:
        return sym in self.symbols

    @classmethod
    def from_chars(cls, text: str) -> "Alphabet":
        """Inline form: every character one symbol. Whitespace is rejected."""
        for ch in text:
            if ch.isspace():
                raise ValueError("inline alphabet may not contain whitespace")
        return cls(tuple(text))

    @classmethod
    def from_lines(cls, text: str) -> "Alphabet":
        """File form: one symbol token per line, order significant, blank lines skipped."""
        symbols = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if any(ch.isspace() for ch in line):
                raise ValueError(f"alphabet symbol {line!r} contains whitespace")
            symbols.append(line)
        return cls(tuple(symbols))


@dataclass(frozen=True)
class LengthProfile:
    """Length constraints a pattern imposes on its matches.

    ``min_length`` counts the literal and single-symbol tokens.
    ``fixed_length`` holds when the pattern has no any-string wildcard, in
    which case every match has exactly ``min_length`` symbols. ``infinite``
    says whether the matched language is infinite, presuming the ambient
    alphabet is nonempty (alphabets are never empty here).
    """

    min_length: int
    fixed_length: bool
    infinite: bool


def length_profile(p: Pattern) -> LengthProfile:
    n = sum(1 for t in p.tokens if not isinstance(t, AnyString))
    fixed = not p.has_any_string()
    return LengthProfile(min_length=n, fixed_length=fixed, infinite=not fixed)


def _check_escape(escape: str | None) -> None:
    if escape is None:
        return
    if len(escape) != 1 or escape in _METACHARS:
        raise ValueError("escape must be a single character other than % and _")


def parse_pattern(text: str, escape: str | None = None) -> Pattern:
    """Parse character-mode surface syntax.

    ``%`` and ``_`` become wildcards, everything else one literal symbol
    per character. The escape character, when declared, makes the
    following character literal; a trailing escape is an error.
    """
    _check_escape(escape)
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if escape is not None and ch == escape:
            if i + 1 >= n:
                raise PatternSyntaxError("dangling escape", i)
            tokens.append(Literal(text[i + 1]))
            i += 2
            continue
        if ch == WILDCARD_ANY_STRING:
            tokens.append(ANY_STRING)
        elif ch == WILDCARD_ANY_ONE:
            tokens.append(ANY_ONE)
        else:
            tokens.append(Literal(ch))
        i += 1
    return Pattern(tuple(tokens))


def render_pattern(p: Pattern, escape: str | None = None) -> str:
    """Write a pattern back as character-mode surface syntax.

    Literal metacharacters (and the escape character itself) need the
    escape to be declared; multi-character symbols cannot be rendered in
    character mode at all.
    """
    _check_escape(escape)
    out: list[str] = []
    for tok in p.tokens:
        if isinstance(tok, AnyString):
            out.append(WILDCARD_ANY_STRING)
        elif isinstance(tok, AnyOne):
            out.append(WILDCARD_ANY_ONE)
        else:
            sym = tok.symbol
            if len(sym) != 1:
                raise RenderError(
                    f"symbol {sym!r} is not a single character; use token mode"
                )
            if sym in _METACHARS or sym == escape:
                if escape is None:
                    raise RenderError(
                        f"literal {sym!r} needs an escape character to render"
                    )
                out.append(escape + sym)
            else:
                out.append(sym)
    return "".join(out)


def parse_pattern_tokens(text: str, escape: str | None = None) -> Pattern:
    """Parse token-mode surface syntax: whitespace-separated symbol names.

    The bare tokens ``%`` and ``_`` are wildcards. A token starting with
    the escape character is the literal symbol spelled by the rest of the
    token, so an escaped ``%`` names a literal percent symbol.
    """
    _check_escape(escape)
    tokens: list[Token] = []
    for i, word in enumerate(text.split()):
        if escape is not None and word.startswith(escape):
            rest = word[1:]
            if not rest:
                raise PatternSyntaxError("dangling escape", i)
            tokens.append(Literal(rest))
        elif word == WILDCARD_ANY_STRING:
            tokens.append(ANY_STRING)
        elif word == WILDCARD_ANY_ONE:
            tokens.append(ANY_ONE)
        else:
            tokens.append(Literal(word))
    return Pattern(tuple(tokens))


def render_pattern_tokens(p: Pattern, escape: str | None = None) -> str:
    """Write a pattern as whitespace-separated symbol tokens."""
    _check_escape(escape)
    out: list[str] = []
    for tok in p.tokens:
        if isinstance(tok, AnyString):
            out.append(WILDCARD_ANY_STRING)
        elif isinstance(tok, AnyOne):
            out.append(WILDCARD_ANY_ONE)
        else:
            sym = tok.symbol
            if any(ch.isspace() for ch in sym):
                raise RenderError(f"symbol {sym!r} contains whitespace")
            if sym in _METACHARS or (escape is not None and sym.startswith(escape)):
                if escape is None:
                    raise RenderError(
                        f"literal {sym!r} needs an escape character to render"
                    )
                out.append(escape + sym)
            else:
                out.append(sym)
    return " ".join(out)


def to_classical_regex(p: Pattern, sigma: Alphabet) -> str:
    """Translate into classical regular-expression notation over ``sigma``.

    ``%`` becomes a starred union of all alphabet symbols, ``_`` the union
    itself, literals stand for themselves and concatenation is
    juxtaposition. The empty pattern yields the empty expression. Every
    literal must belong to the alphabet.
    """
    union = "(" + "+".join(sigma.symbols) + ")"
    out: list[str] = []
    for tok in p.tokens:
        if isinstance(tok, AnyString):
            out.append(union + "*")
        elif isinstance(tok, AnyOne):
            out.append(union)
        else:
            if tok.symbol not in sigma:
                raise ValueError(
                    f"literal {tok.symbol!r} is not in the declared alphabet"
                )
            out.append(tok.symbol)
    return "".join(out)
