"""Wildcard-run normalization.

A pattern is normalized when no ``%`` is immediately followed by ``%`` or
``_``. Any maximal run of wildcards is equivalent to all its ``_`` tokens
first and a single trailing ``%`` when the run contained one, so a single
left-to-right pass produces the normal form. Normalization preserves the
matched language and never grows the token count.
"""

from __future__ import annotations

from .pattern import ANY_ONE, ANY_STRING, AnyOne, AnyString, Pattern, Token


def is_normalized(p: Pattern) -> bool:
    toks = p.tokens
    for left, right in zip(toks, toks[1:]):
        if isinstance(left, AnyString) and isinstance(right, (AnyOne, AnyString)):
            return False
    return True


def normalize(p: Pattern) -> Pattern:
    out: list[Token] = []
    ones = 0
    star = False

    def flush() -> None:
        nonlocal ones, star
        out.extend([ANY_ONE] * ones)
        if star:
            out.append(ANY_STRING)
        ones = 0
        star = False

    for tok in p.tokens:
        if isinstance(tok, AnyOne):
            ones += 1
        elif isinstance(tok, AnyString):
            star = True
        else:
            flush()
            out.append(tok)
    flush()
    return Pattern(tuple(out))
