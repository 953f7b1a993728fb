"""LIKE patterns over abstract alphabets: matching, normal forms, boolean
expressions, equivalence decisions, and hardness gadget generators."""

from .automata import (
    DEFAULT_STATE_BUDGET,
    PatternNfa,
    SearchBudgetExceeded,
    SearchOutcome,
    Verdict,
    compile_pattern,
    decide_equivalence,
    find_separating_string,
    find_witness,
    nfa_accepts,
    nfa_step,
)
from .expression import (
    DEFAULT_EXPANSION_CAP,
    And,
    Atom,
    Dnf,
    ExplosionCapError,
    ExpressionSyntaxError,
    LikeExpression,
    Not,
    Or,
    SignedAtom,
    and_,
    atom_patterns,
    evaluate,
    expand_underscores,
    expression_size,
    is_monotone,
    not_,
    or_,
    parse_expression,
    render_expression,
    to_dot_depth1_dnf,
)
from .matcher import Segments, Text, as_text, match_greedy, match_oracle, split_segments
from .normalize import is_normalized, normalize
from .pattern import (
    ANY_ONE,
    ANY_STRING,
    Alphabet,
    AnyOne,
    AnyString,
    LengthProfile,
    Literal,
    Pattern,
    PatternSyntaxError,
    RenderError,
    Symbol,
    Token,
    length_profile,
    parse_pattern,
    parse_pattern_tokens,
    render_pattern,
    render_pattern_tokens,
    to_classical_regex,
)
from .reductions import (
    Cnf,
    TmRule,
    TmRunResult,
    TmSpec,
    decode_3sat_witness,
    encode_3sat,
    encode_majority,
    encode_tm,
    parse_dimacs,
    simulate_tm,
    tm_from_json,
)

__version__ = "0.1.0"

__all__ = [
    "ANY_ONE",
    "ANY_STRING",
    "Alphabet",
    "And",
    "AnyOne",
    "AnyString",
    "Atom",
    "Cnf",
    "DEFAULT_EXPANSION_CAP",
    "DEFAULT_STATE_BUDGET",
    "Dnf",
    "ExplosionCapError",
    "ExpressionSyntaxError",
    "LengthProfile",
    "LikeExpression",
    "Literal",
    "Not",
    "Or",
    "Pattern",
    "PatternNfa",
    "PatternSyntaxError",
    "RenderError",
    "SearchBudgetExceeded",
    "SearchOutcome",
    "Segments",
    "SignedAtom",
    "Symbol",
    "Text",
    "TmRule",
    "TmRunResult",
    "TmSpec",
    "Token",
    "Verdict",
    "and_",
    "as_text",
    "atom_patterns",
    "compile_pattern",
    "decide_equivalence",
    "decode_3sat_witness",
    "encode_3sat",
    "encode_majority",
    "encode_tm",
    "evaluate",
    "expand_underscores",
    "expression_size",
    "find_separating_string",
    "find_witness",
    "is_monotone",
    "is_normalized",
    "length_profile",
    "match_greedy",
    "match_oracle",
    "nfa_accepts",
    "nfa_step",
    "normalize",
    "not_",
    "or_",
    "parse_dimacs",
    "parse_expression",
    "parse_pattern",
    "parse_pattern_tokens",
    "render_expression",
    "render_pattern",
    "render_pattern_tokens",
    "simulate_tm",
    "split_segments",
    "tm_from_json",
    "to_classical_regex",
    "to_dot_depth1_dnf",
    "__version__",
]
