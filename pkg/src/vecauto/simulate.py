"""Exact simulators for every machine family.

Deterministic runs record one configuration per step.  Nondeterministic
vector automata are run breadth-first over sets of configurations
("frontiers"), deduplicated structurally.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .errors import MachineError, ResourceLimitError
from .linalg import RowVector, bits, format_rational
from .machines import (
    LEFT,
    MOVE_RIGHT,
    RIGHT,
    CounterMachine,
    MultiplyAutomaton,
    TuFA,
    VectorAutomaton,
    Word,
    as_word,
)

ACCEPT = "accept"
REJECT = "reject"
BUDGET_EXHAUSTED = "budget-exhausted"

DEFAULT_FRONTIER_CAP = 10**6


class VectorConfig(NamedTuple):
    state: str
    vector: RowVector

    def max_bits(self) -> int:
        return self.vector.max_bits()

    def to_json(self) -> dict:
        return {"state": self.state, "vector": self.vector.to_json()}


class CounterConfig(NamedTuple):
    state: str
    counters: tuple

    def max_bits(self) -> int:
        return max(abs(c).bit_length() for c in self.counters)

    def to_json(self) -> dict:
        return {"state": self.state, "counters": list(self.counters)}


class RegisterConfig(NamedTuple):
    state: str
    register: Fraction

    def max_bits(self) -> int:
        return bits(self.register)

    def to_json(self) -> dict:
        return {"state": self.state, "register": format_rational(self.register)}


@dataclass(frozen=True)
class Step:
    """One step: the tape position read, the symbol, and what came out.

    For nondeterministic runs ``config`` is the whole frontier (a tuple).
    """

    position: int
    symbol: str
    config: object

    def to_json(self) -> dict:
        if isinstance(self.config, tuple) and not hasattr(self.config, "_fields"):
            cfg = [c.to_json() for c in self.config]
            return {"position": self.position, "symbol": self.symbol, "frontier": cfg}
        return {"position": self.position, "symbol": self.symbol, "config": self.config.to_json()}


@dataclass
class RunTrace:
    word: Word
    initial: object
    steps: list = field(default_factory=list)
    verdict: str = REJECT
    diagnostic: Optional[str] = None
    frontier_sizes: Optional[list] = None

    @property
    def accepted(self) -> bool:
        return self.verdict == ACCEPT

    @property
    def final(self):
        return self.steps[-1].config if self.steps else self.initial

    def configs(self):
        """Every configuration in the trace, initial one included."""
        yield from _flatten(self.initial)
        for s in self.steps:
            yield from _flatten(s.config)

    def max_bits_per_step(self) -> list:
        """Max bit size after each step; index 0 is the initial configuration."""
        out = [max((c.max_bits() for c in _flatten(self.initial)), default=0)]
        for s in self.steps:
            out.append(max((c.max_bits() for c in _flatten(s.config)), default=0))
        return out

    def to_json(self) -> dict:
        init = self.initial
        doc = {
            "word": list(self.word),
            "verdict": self.verdict,
            "diagnostic": self.diagnostic,
            "steps": [s.to_json() for s in self.steps],
        }
        if isinstance(init, tuple) and not hasattr(init, "_fields"):
            doc["initial"] = [c.to_json() for c in init]
        else:
            doc["initial"] = init.to_json()
        if self.frontier_sizes is not None:
            doc["frontier_sizes"] = self.frontier_sizes
        return doc


def _flatten(cfg):
    if isinstance(cfg, tuple) and not hasattr(cfg, "_fields"):
        return cfg
    return (cfg,)


def tape(word: Word) -> tuple:
    return (LEFT,) + tuple(word) + (RIGHT,)


# -- vector automata --------------------------------------------------------


def vector_successors(m: VectorAutomaton, cfg: VectorConfig, symbol: str) -> list:
    return [VectorConfig(q, cfg.vector @ mat) for q, mat in m.moves(cfg.state, symbol, cfg.vector)]


def frontier_step(
    m: VectorAutomaton,
    frontier: Sequence[VectorConfig],
    symbol: str,
    *,
    dedupe: bool = True,
    rng: random.Random | None = None,
) -> list:
    out = []
    seen = set()
    for cfg in frontier:
        vec = cfg.vector
        for q, mat in m.moves(cfg.state, symbol, vec):
            nxt = VectorConfig(q, vec @ mat)
            if dedupe:
                if nxt in seen:
                    continue
                seen.add(nxt)
            out.append(nxt)
    if rng is not None:
        rng.shuffle(out)
    return out


def run_vector_automaton(m: VectorAutomaton, word: str | Sequence[str]) -> RunTrace:
    """Deterministic real-time run over ``¢ w $``."""
    if not m.deterministic:
        raise MachineError("use run_vector_automaton_nondet for nondeterministic machines")
    w = as_word(word, m.alphabet)
    cfg = VectorConfig(m.q0, m.initial_vector)
    trace = RunTrace(word=w, initial=cfg)
    for pos, sym in enumerate(tape(w)):
        moves = m.moves(cfg.state, sym, cfg.vector)
        if not moves:
            trace.diagnostic = (
                f"undefined transition ({cfg.state}, {sym}, {m.omega(cfg.state, cfg.vector)}) "
                f"at position {pos}"
            )
            trace.verdict = REJECT
            return trace
        q, mat = moves[0]
        cfg = VectorConfig(q, cfg.vector @ mat)
        trace.steps.append(Step(pos, sym, cfg))
    trace.verdict = ACCEPT if m.accepts(cfg.state, cfg.vector) else REJECT
    return trace


def run_vector_automaton_nondet(
    m: VectorAutomaton,
    word: str | Sequence[str],
    cap: int = DEFAULT_FRONTIER_CAP,
    *,
    dedupe: bool = True,
    rng: random.Random | None = None,
) -> RunTrace:
    """Breadth-first run over configuration sets.

    ``dedupe`` and ``rng`` (shuffles each frontier) are test hooks; neither
    may change the verdict.
    """
    if cap < 1:
        raise ValueError("frontier cap must be at least 1")
    w = as_word(word, m.alphabet)
    frontier = [VectorConfig(m.q0, m.initial_vector)]
    trace = RunTrace(word=w, initial=tuple(frontier), frontier_sizes=[1])
    for pos, sym in enumerate(tape(w)):
        frontier = frontier_step(m, frontier, sym, dedupe=dedupe, rng=rng)
        if len(frontier) > cap:
            raise ResourceLimitError(
                f"frontier of {len(frontier)} configurations exceeds cap {cap} at step {pos}",
                step=pos,
                word=w,
            )
        trace.steps.append(Step(pos, sym, tuple(frontier)))
        trace.frontier_sizes.append(len(frontier))
    accepted = any(m.accepts(c.state, c.vector) for c in frontier)
    trace.verdict = ACCEPT if accepted else REJECT
    if not frontier:
        trace.diagnostic = "every branch died on an undefined transition"
    return trace


# -- counter machines -------------------------------------------------------


def counter_successor(m: CounterMachine, cfg: CounterConfig, symbol: str):
    mv = m.move(cfg.state, symbol, cfg.counters)
    if mv is None:
        return None
    q, inc = mv
    return CounterConfig(q, tuple(c + d for c, d in zip(cfg.counters, inc)))


def run_counter_machine(m: CounterMachine, word: str | Sequence[str]) -> RunTrace:
    w = as_word(word, m.alphabet)
    cfg = CounterConfig(m.q0, (0,) * m.k)
    trace = RunTrace(word=w, initial=cfg)
    for pos, sym in enumerate(tape(w)):
        nxt = counter_successor(m, cfg, sym)
        if nxt is None:
            trace.diagnostic = (
                f"undefined transition ({cfg.state}, {sym}, {m.theta(cfg.counters)}) "
                f"at position {pos}"
            )
            trace.verdict = REJECT
            return trace
        cfg = nxt
        trace.steps.append(Step(pos, sym, cfg))
    trace.verdict = ACCEPT if m.accepts(cfg.state, cfg.counters) else REJECT
    return trace


# -- automata with multiplication -------------------------------------------


def default_step_budget(word_length: int) -> int:
    return 10 * (word_length + 2)


def run_multiply_automaton(
    m: MultiplyAutomaton, word: str | Sequence[str], step_budget: int | None = None
) -> RunTrace:
    """One-way run; the head may stay put.

    Without equality tests, behaviour while the head pauses depends only on
    the state, so revisiting a state on the same square is an infinite loop
    and the word is rejected at once.  With equality tests the register
    feeds back, so only ``step_budget`` bounds the run.
    """
    w = as_word(word, m.alphabet)
    t = tape(w)
    budget = default_step_budget(len(w)) if step_budget is None else step_budget
    if budget < 1:
        raise ValueError("step budget must be positive")
    cfg = RegisterConfig(m.q0, Fraction(1))
    trace = RunTrace(word=w, initial=cfg)
    pos = 0
    paused_in: set = set()
    while pos < len(t):
        if len(trace.steps) >= budget:
            trace.verdict = BUDGET_EXHAUSTED
            trace.diagnostic = f"step budget {budget} exhausted at position {pos}"
            return trace
        sym = t[pos]
        if not m.with_equality:
            if cfg.state in paused_in:
                trace.verdict = REJECT
                trace.diagnostic = f"infinite loop in state {cfg.state} on {sym} at position {pos}"
                return trace
            paused_in.add(cfg.state)
        mv = m.move(cfg.state, sym, cfg.register)
        if mv is None:
            trace.verdict = REJECT
            trace.diagnostic = f"undefined transition ({cfg.state}, {sym}) at position {pos}"
            return trace
        q, move, gamma = mv
        cfg = RegisterConfig(q, cfg.register * gamma)
        trace.steps.append(Step(pos, sym, cfg))
        if move == MOVE_RIGHT:
            pos += 1
            paused_in = set()
    trace.verdict = ACCEPT if m.accepts(cfg.state, cfg.register) else REJECT
    return trace


# -- Turakainen automata ----------------------------------------------------


def tufa_prefix(g: TuFA, word: Sequence[str]) -> RowVector:
    vec = g.initial_vector
    for s in word:
        vec = vec @ g.matrices[s]
    return vec


def eval_tufa(g: TuFA, word: str | Sequence[str]) -> Fraction:
    """Exact acceptance value v0 . A_w1 ... A_wn . f."""
    w = as_word(word, g.alphabet)
    return tufa_prefix(g, w).dot(g.final_vector)


def tufa_member(g: TuFA, cutpoint, word: str | Sequence[str]) -> bool:
    return eval_tufa(g, word) == cutpoint


# -- dispatch ---------------------------------------------------------------


def run(machine, word, *, cap: int = DEFAULT_FRONTIER_CAP, step_budget: int | None = None) -> RunTrace:
    """Run any tape-reading machine and return its trace."""
    if isinstance(machine, VectorAutomaton):
        if machine.deterministic:
            return run_vector_automaton(machine, word)
        return run_vector_automaton_nondet(machine, word, cap)
    if isinstance(machine, CounterMachine):
        return run_counter_machine(machine, word)
    if isinstance(machine, MultiplyAutomaton):
        return run_multiply_automaton(machine, word, step_budget)
    raise TypeError(f"{type(machine).__name__} has no tape run; use eval_tufa")


def accepts(machine, word, *, cutpoint=1, cap: int = DEFAULT_FRONTIER_CAP, step_budget=None) -> bool:
    """Membership verdict for any machine; budget exhaustion raises."""
    if isinstance(machine, TuFA):
        return tufa_member(machine, cutpoint, word)
    trace = run(machine, word, cap=cap, step_budget=step_budget)
    if trace.verdict == BUDGET_EXHAUSTED:
        raise ResourceLimitError(trace.diagnostic, step=len(trace.steps), word=trace.word)
    return trace.accepted

