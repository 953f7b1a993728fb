"""Position-set automata for patterns and searches over expression states.

A pattern with m tokens becomes an automaton whose states are the
positions 0..m, position i meaning "the first i tokens are consumed".
A ``%`` token both self-loops and advances for free, so the reachable
configurations are sets of positions, held here as bitmasks.

Equivalence and emptiness questions about boolean combinations of
patterns reduce to graph search: a breadth-first scan over tuples of
position sets, one per distinct atom, that either finds a witness text
or exhausts the reachable state space. Exploration is capped by a state
budget; exceeding it raises rather than guessing.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable

from .expression import And, Atom, LikeExpression, Not, Or, expression_size, is_monotone
from .matcher import Text
from .pattern import Alphabet, AnyOne, AnyString, Literal, Pattern, Symbol

DEFAULT_STATE_BUDGET = 1 << 20


class SearchBudgetExceeded(RuntimeError):
    """The search hit its state budget before reaching a verdict."""

    def __init__(self, explored: int) -> None:
        super().__init__(f"state budget exceeded after exploring {explored} states")
        self.explored = explored


class PatternNfa:
    """Nondeterministic position automaton for one pattern.

    The state set after reading a text prefix is a bitmask over positions
    0..size; bit ``size`` set means the whole pattern can consume the
    prefix. Transition results are memoized per (mask, symbol).
    """

    __slots__ = (
        "pattern",
        "size",
        "_tokens",
        "_close_list",
        "_memo",
        "initial_mask",
        "accept_bit",
        "_absorb_mask",
    )

    def __init__(self, pattern: Pattern) -> None:
        self.pattern = pattern
        self.size = len(pattern.tokens)
        self._tokens = pattern.tokens
        self._memo: dict[tuple[int, Symbol], int] = {}
        self.accept_bit = 1 << self.size
        # Positions whose remaining tokens are all %: once reached, the
        # pattern matches every extension. The bare accept position does
        # not qualify; one more symbol unmatches it.
        chain = self.accept_bit
        for i in range(self.size - 1, -1, -1):
            if isinstance(self._tokens[i], AnyString) and chain >> (i + 1) & 1:
                chain |= 1 << i
        self._absorb_mask = chain & ~self.accept_bit
        self.initial_mask = self._close(1)

    def _close(self, mask: int) -> int:
        for i in range(self.size):
            if mask >> i & 1 and isinstance(self._tokens[i], AnyString):
                mask |= 1 << (i + 1)
        return mask

    def _step(self, mask: int, symbol: Symbol) -> int:
        key = (mask, symbol)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        out = 0
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            i = low.bit_length() - 1
            if i == self.size:
                continue
            tok = self._tokens[i]
            if isinstance(tok, AnyString):
                out |= low
            elif isinstance(tok, AnyOne) or (
                isinstance(tok, Literal) and tok.symbol == symbol
            ):
                out |= low << 1
        out = self._close(out)
        self._memo[key] = out
        return out

    def step(self, states: Iterable[int], symbol: Symbol) -> frozenset[int]:
        mask = self._close(sum(1 << i for i in set(states)))
        out = self._step(mask, symbol)
        return frozenset(i for i in range(self.size + 1) if out >> i & 1)

    def accepts(self, t: Text) -> bool:
        mask = self.initial_mask
        for sym in t:
            mask = self._step(mask, sym)
            if not mask:
                return False
        return bool(mask & self.accept_bit)

    def reach_mask(self, sigma: Alphabet) -> int:
        """Positions from which some text over sigma reaches acceptance."""
        reach = self.accept_bit
        changed = True
        while changed:
            changed = False
            for i in range(self.size - 1, -1, -1):
                if reach >> i & 1:
                    continue
                tok = self._tokens[i]
                if isinstance(tok, AnyString):
                    ok = bool(reach >> (i + 1) & 1) or bool(reach >> i & 1)
                elif isinstance(tok, AnyOne):
                    ok = bool(reach >> (i + 1) & 1)
                else:
                    ok = tok.symbol in sigma.symbols and bool(reach >> (i + 1) & 1)
                if ok:
                    reach |= 1 << i
                    changed = True
        return reach


def compile_pattern(p: Pattern) -> PatternNfa:
    return PatternNfa(p)


def nfa_step(nfa: PatternNfa, states: Iterable[int], symbol: Symbol) -> frozenset[int]:
    return nfa.step(states, symbol)


def nfa_accepts(nfa: PatternNfa, t: Text) -> bool:
    return nfa.accepts(t)


class Verdict(Enum):
    FOUND = "found"
    EXHAUSTED_EQUIVALENT = "exhausted-equivalent"
    EXHAUSTED_EMPTY = "exhausted-empty"


@dataclass(frozen=True)
class SearchOutcome:
    verdict: Verdict
    witness: Text | None
    explored: int


_TRUE_FOREVER = 1
_FALSE_FOREVER = -1
_UNDECIDED = 0


class _CompiledSearch:
    """One automaton per distinct atom plus evaluators over mask tuples."""

    def __init__(self, exprs: list[LikeExpression], sigma: Alphabet) -> None:
        patterns: list[Pattern] = []
        index: dict[Pattern, int] = {}
        for e in exprs:
            for p in _walk_atoms(e):
                if p not in index:
                    index[p] = len(patterns)
                    patterns.append(p)
        self.sigma = sigma
        self.nfas = [PatternNfa(p) for p in patterns]
        self.reach = [nfa.reach_mask(sigma) for nfa in self.nfas]
        self.initial = tuple(nfa.initial_mask for nfa in self.nfas)
        self._evals = [self._compile_eval(e, index) for e in exprs]
        self._fates = [self._compile_fate(e, index) for e in exprs]

    def step_state(self, state: tuple[int, ...], symbol: Symbol) -> tuple[int, ...]:
        return tuple(
            nfa._step(mask, symbol) for nfa, mask in zip(self.nfas, state)
        )

    def flags(self, state: tuple[int, ...]) -> tuple[bool, ...]:
        return tuple(ev(state) for ev in self._evals)

    def fates(self, state: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(fate(state) for fate in self._fates)

    def _compile_eval(
        self, e: LikeExpression, index: dict[Pattern, int]
    ) -> Callable[[tuple[int, ...]], bool]:
        if isinstance(e, Atom):
            i = index[e.pattern]
            bit = self.nfas[i].accept_bit

            def ev_atom(state: tuple[int, ...]) -> bool:
                return bool(state[i] & bit)

            return ev_atom
        if isinstance(e, Not):
            inner = self._compile_eval(e.child, index)
            return lambda state: not inner(state)
        subs = [self._compile_eval(c, index) for c in e.children]
        if isinstance(e, And):
            return lambda state: all(f(state) for f in subs)
        return lambda state: any(f(state) for f in subs)

    def _compile_fate(
        self, e: LikeExpression, index: dict[Pattern, int]
    ) -> Callable[[tuple[int, ...]], int]:
        """Three-valued forecast: does the subexpression's value stay fixed
        on every extension of the current text?"""
        if isinstance(e, Atom):
            i = index[e.pattern]
            absorb = self.nfas[i]._absorb_mask
            reach = self.reach[i]

            def fate_atom(state: tuple[int, ...]) -> int:
                mask = state[i]
                if mask & absorb:
                    return _TRUE_FOREVER
                if not mask & reach:
                    return _FALSE_FOREVER
                return _UNDECIDED

            return fate_atom
        if isinstance(e, Not):
            inner = self._compile_fate(e.child, index)
            return lambda state: -inner(state)
        subs = [self._compile_fate(c, index) for c in e.children]
        win = _FALSE_FOREVER if isinstance(e, And) else _TRUE_FOREVER

        def fate_gate(state: tuple[int, ...]) -> int:
            undecided = False
            for f in subs:
                v = f(state)
                if v == win:
                    return win
                if v == _UNDECIDED:
                    undecided = True
            return _UNDECIDED if undecided else -win

        return fate_gate


def _walk_atoms(e: LikeExpression) -> Iterable[Pattern]:
    if isinstance(e, Atom):
        yield e.pattern
    elif isinstance(e, Not):
        yield from _walk_atoms(e.child)
    else:
        for c in e.children:
            yield from _walk_atoms(c)


def _bfs(
    comp: _CompiledSearch,
    accept: Callable[[tuple[int, ...]], bool],
    prune: Callable[[tuple[int, ...]], bool],
    budget: int,
    max_len: int | None,
) -> tuple[Text | None, int]:
    """Shortest-first, alphabet-order-first scan over reachable states.

    Returns (witness, explored) with witness None when the space was
    exhausted without hitting an accepting state.
    """
    start = comp.initial
    visited: dict[tuple[int, ...], tuple[tuple[int, ...] | None, Symbol | None]] = {
        start: (None, None)
    }
    queue: deque[tuple[tuple[int, ...], int]] = deque([(start, 0)])
    symbols = comp.sigma.symbols
    while queue:
        state, depth = queue.popleft()
        if accept(state):
            parts: list[Symbol] = []
            cur: tuple[int, ...] | None = state
            while cur is not None:
                parent, sym = visited[cur]
                if sym is not None:
                    parts.append(sym)
                cur = parent
            parts.reverse()
            return tuple(parts), len(visited)
        if max_len is not None and depth >= max_len:
            continue
        for sym in symbols:
            nxt = comp.step_state(state, sym)
            if nxt in visited:
                continue
            if prune(nxt):
                continue
            if len(visited) >= budget:
                raise SearchBudgetExceeded(len(visited))
            visited[nxt] = (state, sym)
            queue.append((nxt, depth + 1))
    return None, len(visited)


def find_witness(
    e: LikeExpression,
    sigma: Alphabet,
    budget: int = DEFAULT_STATE_BUDGET,
    max_len: int | None = None,
) -> SearchOutcome:
    """Shortest text over sigma satisfying e, or a proof there is none.

    Ties between equal-length witnesses break toward the alphabet's
    declaration order. For a monotone expression an unset max_len is
    replaced by the total token count, which is known to bound the
    shortest witness; otherwise the reachable state space itself is
    finite and exploration terminates without a depth bound.
    """
    if max_len is None and is_monotone(e):
        max_len = expression_size(e)
    comp = _CompiledSearch([e], sigma)

    def accept(state: tuple[int, ...]) -> bool:
        return comp.flags(state)[0]

    def prune(state: tuple[int, ...]) -> bool:
        return comp.fates(state)[0] == _FALSE_FOREVER

    witness, explored = _bfs(comp, accept, prune, budget, max_len)
    if witness is None:
        return SearchOutcome(Verdict.EXHAUSTED_EMPTY, None, explored)
    return SearchOutcome(Verdict.FOUND, witness, explored)


def find_separating_string(
    e1: LikeExpression,
    e2: LikeExpression,
    sigma: Alphabet,
    budget: int = DEFAULT_STATE_BUDGET,
    max_len: int | None = None,
) -> SearchOutcome:
    """Shortest text on which the two expressions disagree, if any."""
    comp = _CompiledSearch([e1, e2], sigma)

    def accept(state: tuple[int, ...]) -> bool:
        f1, f2 = comp.flags(state)
        return f1 != f2

    def prune(state: tuple[int, ...]) -> bool:
        g1, g2 = comp.fates(state)
        return g1 != _UNDECIDED and g1 == g2

    witness, explored = _bfs(comp, accept, prune, budget, max_len)
    if witness is None:
        return SearchOutcome(Verdict.EXHAUSTED_EQUIVALENT, None, explored)
    return SearchOutcome(Verdict.FOUND, witness, explored)


def decide_equivalence(
    e1: LikeExpression,
    e2: LikeExpression,
    sigma: Alphabet,
    budget: int = DEFAULT_STATE_BUDGET,
) -> SearchOutcome:
    return find_separating_string(e1, e2, sigma, budget=budget)
