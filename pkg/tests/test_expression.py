import random

import pytest

from likekit import (
    Alphabet,
    And,
    AnyOne,
    Atom,
    ExplosionCapError,
    ExpressionSyntaxError,
    Not,
    Or,
    and_,
    atom_patterns,
    evaluate,
    expand_underscores,
    expression_size,
    is_monotone,
    is_normalized,
    not_,
    or_,
    parse_expression,
    parse_pattern,
    render_expression,
    to_dot_depth1_dnf,
)

from helpers import all_texts, random_pattern


def P(text):
    return parse_pattern(text)


def test_parse_precedence():
    e = parse_expression('LIKE "a" OR LIKE "b" AND NOT LIKE "c"')
    assert e == Or((Atom(P("a")), And((Atom(P("b")), Not(Atom(P("c")))))))


def test_parse_parentheses_and_case():
    e = parse_expression('not (like "a" or LIKE "b") and Like "c"')
    assert e == And((Not(Or((Atom(P("a")), Atom(P("b"))))), Atom(P("c"))))


def test_parse_flattens_chains():
    e = parse_expression('LIKE "a" AND LIKE "b" AND LIKE "c"')
    assert isinstance(e, And) and len(e.children) == 3


def test_quoted_pattern_escapes():
    e = parse_expression('LIKE "a\\"b\\\\c"')
    assert e == Atom(P('a"b\\c'))


def test_pattern_escape_inside_expression():
    e = parse_expression('LIKE "a!%b"', escape="!")
    assert evaluate(e, "a%b")
    assert not evaluate(e, "ab")


def test_tokens_mode_expression():
    e = parse_expression('LIKE "# q0 %"', tokens=True)
    assert evaluate(e, ("#", "q0", "_blank"))
    assert not evaluate(e, ("#", "q1"))


@pytest.mark.parametrize(
    "bad,pos",
    [
        ('LIKE "a', 5),
        ('LIKE "a" banana', 9),
        ("LIKE", 4),
        ('("a")', 1),
        ('LIKE "a" OR', 11),
        ('LIKE "a")', 8),
    ],
)
def test_parse_errors_carry_position(bad, pos):
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse_expression(bad)
    assert exc.value.position == pos


def test_render_round_trip():
    rng = random.Random(7)

    def build(depth):
        if depth == 0 or rng.random() < 0.35:
            return Atom(random_pattern(rng, "ab", 4))
        kind = rng.random()
        if kind < 0.25:
            return Not(build(depth - 1))
        parts = [build(depth - 1) for _ in range(rng.randint(2, 3))]
        return and_(*parts) if kind < 0.6 else or_(*parts)

    for _ in range(300):
        e = build(3)
        assert parse_expression(render_expression(e)) == e, render_expression(e)


def test_render_quotes_special_characters():
    e = Atom(P('a"b\\c'))
    assert parse_expression(render_expression(e)) == e


def test_smart_constructors():
    a, b, c = Atom(P("a")), Atom(P("b")), Atom(P("c"))
    assert and_(a) == a
    assert or_(a) == a
    assert and_(a, and_(b, c)) == And((a, b, c))
    assert or_(or_(a, b), c) == Or((a, b, c))
    assert not_(a) == Not(a)
    with pytest.raises(ValueError):
        and_()
    with pytest.raises(ValueError):
        And((a,))
    with pytest.raises(ValueError):
        Or((a,))


def test_evaluate_connectives():
    e = parse_expression('LIKE "%a%" AND NOT LIKE "%b%"')
    assert evaluate(e, "xax")
    assert not evaluate(e, "ab")
    assert not evaluate(e, "x")
    e = parse_expression('LIKE "a" OR LIKE "b"')
    assert evaluate(e, "a") and evaluate(e, "b") and not evaluate(e, "c")


def test_size_monotonicity_atoms():
    e = parse_expression('LIKE "a%" AND (NOT LIKE "bb" OR LIKE "_")')
    assert expression_size(e) == 5
    assert not is_monotone(e)
    assert is_monotone(parse_expression('LIKE "a" AND (LIKE "b" OR LIKE "c")'))
    assert list(atom_patterns(e)) == [P("a%"), P("bb"), P("_")]


def test_expand_underscores_equivalence():
    sigma = Alphabet.from_chars("ab")
    p = P("_a_")
    expanded = expand_underscores(p, sigma)
    assert isinstance(expanded, Or) and len(expanded.children) == 4
    for t in all_texts("ab", 4):
        assert evaluate(expanded, t) == evaluate(Atom(p), t), t
    assert expand_underscores(P("ab"), sigma) == Atom(P("ab"))


def test_expand_underscores_cap():
    sigma = Alphabet.from_chars("ab")
    with pytest.raises(ExplosionCapError) as exc:
        expand_underscores(P("_____"), sigma, cap=16)
    assert exc.value.required == 32 and exc.value.cap == 16


def test_dnf_atoms_are_wildcard_free_and_normalized():
    sigma = Alphabet.from_chars("01")
    e = parse_expression('NOT (LIKE "%_0" AND NOT LIKE "_%%1") OR LIKE "__"')
    dnf = to_dot_depth1_dnf(e, sigma)
    assert dnf.clauses
    for clause in dnf.clauses:
        for sa in clause:
            assert not any(isinstance(t, AnyOne) for t in sa.pattern.tokens)
            assert is_normalized(sa.pattern)


@pytest.mark.parametrize(
    "text",
    [
        'LIKE "0_1"',
        'NOT LIKE "%0_"',
        'LIKE "_%" AND NOT LIKE "%11%"',
        'NOT (LIKE "_" OR NOT LIKE "0%_")',
        '(LIKE "%0" OR LIKE "1_") AND NOT (LIKE "01" AND LIKE "_%_")',
        'NOT NOT LIKE "_1%"',
    ],
)
def test_dnf_preserves_evaluation(text):
    sigma = Alphabet.from_chars("01")
    e = parse_expression(text)
    back = to_dot_depth1_dnf(e, sigma).to_expression()
    for t in all_texts("01", 5):
        assert evaluate(e, t) == evaluate(back, t), (text, t)


def test_dnf_cap():
    sigma = Alphabet.from_chars("01")
    e = parse_expression('LIKE "_____________"')
    with pytest.raises(ExplosionCapError):
        to_dot_depth1_dnf(e, sigma, cap=64)
