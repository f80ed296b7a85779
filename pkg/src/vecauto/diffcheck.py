"""Enumeration, differential and equivalence testing, resource probes.

Exhaustive checks walk the word tree level by level, so each prefix is
simulated once and shared by all of its extensions.  Words come out in
length-then-lexicographic order (lexicographic by alphabet position).
"""
from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .errors import ResourceLimitError
from .linalg import bits, common_form, format_rational
from .machines import LEFT, RIGHT, CounterMachine, MultiplyAutomaton, TuFA, VectorAutomaton, word_text
from .simulate import (
    BUDGET_EXHAUSTED,
    DEFAULT_FRONTIER_CAP,
    CounterConfig,
    VectorConfig,
    counter_successor,
    frontier_step,
    run,
    run_multiply_automaton,
)


def enumerate_words(alphabet: Sequence[str], max_len: int) -> Iterator[tuple]:
    """All words of length 0..max_len, shortest first, then lexicographic."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    alphabet = tuple(alphabet)
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def word_count(alphabet_size: int, max_len: int) -> int:
    return sum(alphabet_size**i for i in range(max_len + 1))


def uniform_length_sampler(alphabet: Sequence[str], max_len: int) -> Callable[[random.Random], tuple]:
    """Pick a length uniformly in 0..max_len, then each symbol uniformly."""
    alphabet = tuple(alphabet)

    def sample(rng: random.Random) -> tuple:
        n = rng.randint(0, max_len)
        return tuple(rng.choice(alphabet) for _ in range(n))

    return sample


def sample_words(sampler: Callable[[random.Random], tuple], count: int, seed: int) -> list:
    rng = random.Random(seed)
    return [tuple(sampler(rng)) for _ in range(count)]


# -- bit growth bounds ---------------------------------------------------------


def _clog2(n: int) -> int:
    return (n - 1).bit_length() if n > 1 else 0


def matrix_growth(mat) -> int:
    """Bits a vector in common-denominator form can gain from one product with ``mat``.

    With ``mat = N / d`` an entry of ``u N`` is at most ``max|u|`` times the
    largest column sum of ``|N|``, and the denominator gains a factor ``d``.
    """
    entries = list(mat.entries())
    d = math.lcm(*(x.denominator for x in entries))
    k = mat.dim
    colsum = max(sum(abs(mat[i, j] * d) for i in range(k)) for j in range(k))
    return max(_clog2(int(colsum)), _clog2(d))


def vector_bits(values) -> int:
    num, den = common_form(values)
    return max(num.bit_length(), den.bit_length())


def bit_bound(machine) -> tuple:
    """``(B0, Bmax)`` with bits after ``t`` steps at most ``B0 + t * Bmax``."""
    if isinstance(machine, VectorAutomaton):
        mats = machine.matrices()
        grow = max([matrix_growth(m) for m in mats] + [0])
        return vector_bits(machine.initial_vector), grow
    if isinstance(machine, TuFA):
        grow = max([matrix_growth(m) for m in machine.matrices.values()] + [0])
        return vector_bits(machine.initial_vector), grow
    if isinstance(machine, CounterMachine):
        return 0, machine.bound.bit_length()
    if isinstance(machine, MultiplyAutomaton):
        return 1, max(bits(g) for g in machine.multipliers)
    raise TypeError(f"no bit bound for {type(machine).__name__}")


# -- prefix walkers ------------------------------------------------------------

_DEAD = None


class _Walker:
    """Incremental simulation: state after ``¢`` and a prefix, extended symbol by symbol."""

    steps_before_input = 1
    max_frontier = 0

    def start(self):
        raise NotImplementedError

    def step(self, s, symbol, prefix):
        raise NotImplementedError

    def finish(self, s) -> tuple:
        """``(verdict, bits after the last step or None)``."""
        raise NotImplementedError

    def bits(self, s) -> int:
        raise NotImplementedError

    def accepts(self, word) -> bool:
        s = self.start()
        for i, sym in enumerate(word):
            if s is _DEAD:
                break
            s = self.step(s, sym, tuple(word[: i + 1]))
        return self.finish(s)[0]


class _DetVectorWalker(_Walker):
    def __init__(self, m: VectorAutomaton):
        self.m = m

    def _move(self, cfg, sym):
        moves = self.m.moves(cfg.state, sym, cfg.vector)
        if not moves:
            return _DEAD
        q, mat = moves[0]
        return VectorConfig(q, cfg.vector @ mat)

    def start(self):
        return self._move(VectorConfig(self.m.q0, self.m.initial_vector), LEFT)

    def step(self, s, symbol, prefix):
        return self._move(s, symbol)

    def finish(self, s):
        if s is _DEAD:
            return False, None
        end = self._move(s, RIGHT)
        if end is _DEAD:
            return False, None
        return self.m.accepts(end.state, end.vector), end.max_bits()

    def bits(self, s):
        return s.max_bits()


class _NondetVectorWalker(_Walker):
    def __init__(self, m: VectorAutomaton, cap: int):
        self.m = m
        self.cap = cap

    def _step(self, frontier, sym, prefix):
        out = tuple(frontier_step(self.m, frontier, sym))
        if len(out) > self.cap:
            raise ResourceLimitError(
                f"frontier of {len(out)} configurations exceeds cap {self.cap} "
                f"on {word_text(prefix)!r}",
                step=len(prefix) + 1,
                word=prefix,
            )
        self.max_frontier = max(self.max_frontier, len(out))
        return out or _DEAD

    def start(self):
        return self._step((VectorConfig(self.m.q0, self.m.initial_vector),), LEFT, ())

    def step(self, s, symbol, prefix):
        return self._step(s, symbol, prefix)

    def finish(self, s):
        if s is _DEAD:
            return False, None
        end = frontier_step(self.m, s, RIGHT)
        if not end:
            return False, None
        self.max_frontier = max(self.max_frontier, len(end))
        verdict = any(self.m.accepts(c.state, c.vector) for c in end)
        return verdict, max(c.max_bits() for c in end)

    def bits(self, s):
        return max(c.max_bits() for c in s)


class _CounterWalker(_Walker):
    def __init__(self, m: CounterMachine):
        self.m = m

    def start(self):
        return counter_successor(self.m, CounterConfig(self.m.q0, (0,) * self.m.k), LEFT)

    def step(self, s, symbol, prefix):
        return counter_successor(self.m, s, symbol)

    def finish(self, s):
        if s is _DEAD:
            return False, None
        end = counter_successor(self.m, s, RIGHT)
        if end is None:
            return False, None
        return self.m.accepts(end.state, end.counters), end.max_bits()

    def bits(self, s):
        return s.max_bits()


class _TufaWalker(_Walker):
    steps_before_input = 0

    def __init__(self, g: TuFA, cutpoint):
        self.g = g
        self.cutpoint = Fraction(cutpoint)

    def start(self):
        return self.g.initial_vector

    def step(self, s, symbol, prefix):
        return s @ self.g.matrices[symbol]

    def finish(self, s):
        return s.dot(self.g.final_vector) == self.cutpoint, None

    def bits(self, s):
        return s.max_bits()


class _RunWalker(_Walker):
    """Fallback for one-way machines: no sharing, each word is run on its own."""

    def __init__(self, m, step_budget):
        self.m = m
        self.step_budget = step_budget

    def start(self):
        return ()

    def step(self, s, symbol, prefix):
        return prefix

    def finish(self, s):
        trace = run_multiply_automaton(self.m, s, self.step_budget)
        if trace.verdict == BUDGET_EXHAUSTED:
            raise ResourceLimitError(trace.diagnostic, step=len(trace.steps), word=s)
        return trace.accepted, trace.max_bits_per_step()

    def bits(self, s):
        return 0


def walker_for(machine, *, cutpoint=1, cap: int = DEFAULT_FRONTIER_CAP, step_budget=None) -> _Walker:
    if isinstance(machine, VectorAutomaton):
        return _DetVectorWalker(machine) if machine.deterministic else _NondetVectorWalker(machine, cap)
    if isinstance(machine, CounterMachine):
        return _CounterWalker(machine)
    if isinstance(machine, TuFA):
        return _TufaWalker(machine, cutpoint)
    if isinstance(machine, MultiplyAutomaton):
        return _RunWalker(machine, step_budget)
    raise TypeError(f"cannot test {type(machine).__name__}")


def _walk(walkers: Sequence[_Walker], alphabet: Sequence[str], max_len: int) -> Iterator:
    """Yield ``(word, [walker states])`` level by level in length-lex order."""
    level = [((), tuple(w.start() for w in walkers))]
    for n in range(max_len + 1):
        nxt = []
        for word, states in level:
            yield word, states
            if n == max_len:
                continue
            for sym in alphabet:
                w2 = word + (sym,)
                nxt.append(
                    (w2, tuple(_DEAD if s is _DEAD else wk.step(s, sym, w2) for wk, s in zip(walkers, states)))
                )
        level = nxt


# -- reports -------------------------------------------------------------------


@dataclass
class TestReport:
    machines: list
    source: str
    words_tested: int = 0
    counterexample: Optional[tuple] = None
    verdicts: Optional[dict] = None
    disagreements: list = field(default_factory=list)
    max_frontier: Optional[int] = None
    max_bits: int = 0
    bit_bounds: dict = field(default_factory=dict)
    bit_violations: list = field(default_factory=list)
    violation: Optional[dict] = None
    elapsed: float = 0.0

    __test__ = False

    @property
    def clean(self) -> bool:
        return self.counterexample is None and not self.bit_violations and self.violation is None

    def to_json(self) -> dict:
        def w(word):
            return None if word is None else {"text": word_text(word), "symbols": list(word)}

        return {
            "machines": list(self.machines),
            "source": self.source,
            "words_tested": self.words_tested,
            "clean": self.clean,
            "counterexample": w(self.counterexample),
            "verdicts": self.verdicts,
            "disagreements": [w(x) for x in self.disagreements],
            "max_frontier": self.max_frontier,
            "max_bits": self.max_bits,
            "bit_bounds": self.bit_bounds,
            "bit_violations": [
                {"word": w(x[0]), "step": x[1], "bits": x[2], "bound": x[3]} for x in self.bit_violations
            ],
            "violation": self.violation,
            "elapsed_seconds": format_rational(Fraction(round(self.elapsed * 1000), 1000)),
        }


def _name(machine) -> str:
    return getattr(machine, "kind", type(machine).__name__)


class _Check:
    """Shared driver: feeds words to walkers and compares outcomes."""

    def __init__(self, walkers, labels, compare, *, stop_at_first, check_bits, bounds):
        self.walkers = walkers
        self.labels = labels
        self.compare = compare
        self.stop_at_first = stop_at_first
        self.check_bits = check_bits
        self.bounds = bounds

    def _bits(self, report, word, states, finals):
        for i, (wk, s, fin) in enumerate(zip(self.walkers, states, finals)):
            b0, bmax = self.bounds[i]
            checks = []
            if isinstance(fin, list):
                checks = list(enumerate(fin))
            else:
                t = len(word) + wk.steps_before_input
                if s is not _DEAD:
                    checks.append((t, wk.bits(s)))
                if fin is not None:
                    checks.append((t + 1, fin))
            for t, b in checks:
                report.max_bits = max(report.max_bits, b)
                if b > b0 + t * bmax:
                    report.bit_violations.append((word, t, b, b0 + t * bmax))

    def _step_bits(self, report, word, j, wk, s, i):
        # explicit word lists have no prefix walk, so intermediate steps are checked here
        b0, bmax = self.bounds[j]
        t = i + wk.steps_before_input
        b = wk.bits(s)
        report.max_bits = max(report.max_bits, b)
        if b > b0 + t * bmax:
            report.bit_violations.append((word, t, b, b0 + t * bmax))

    def feed(self, report: TestReport, word, states) -> bool:
        """Returns False when the run should stop."""
        verdicts = []
        finals = []
        for wk, s in zip(self.walkers, states):
            v, fin = wk.finish(s)
            verdicts.append(v)
            finals.append(fin)
        report.words_tested += 1
        if self.check_bits:
            self._bits(report, word, states, finals)
        ok, detail = self.compare(word, verdicts)
        if not ok:
            report.disagreements.append(word)
            if report.counterexample is None:
                report.counterexample = word
                report.verdicts = detail
            if self.stop_at_first:
                return False
        return True

    def run(self, report: TestReport, alphabet, max_len, words) -> TestReport:
        t0 = time.perf_counter()
        report.bit_bounds = {
            label: {"B0": b0, "Bmax": bm} for label, (b0, bm) in zip(self.labels, self.bounds)
        }
        if words is None:
            for word, states in _walk(self.walkers, alphabet, max_len):
                if not self.feed(report, word, states):
                    break
        else:
            for word in words:
                states = []
                for j, wk in enumerate(self.walkers):
                    s = wk.start()
                    for i, sym in enumerate(word):
                        if s is _DEAD:
                            break
                        if self.check_bits and not isinstance(wk, _RunWalker):
                            self._step_bits(report, tuple(word), j, wk, s, i)
                        s = wk.step(s, sym, tuple(word[: i + 1]))
                    states.append(s)
                if not self.feed(report, tuple(word), states):
                    break
        frontiers = [wk.max_frontier for wk in self.walkers if isinstance(wk, _NondetVectorWalker)]
        report.max_frontier = max(frontiers) if frontiers else None
        report.elapsed = time.perf_counter() - t0
        return report


def _source(max_len, words, seed) -> str:
    if words is None:
        return f"exhaustive up to length {max_len}"
    if seed is not None:
        return f"sampled with seed {seed}"
    return "explicit word list"


def _resolve_words(alphabet, max_len, sampler, samples, seed, words):
    if words is not None:
        return list(words)
    if sampler is not None:
        return sample_words(sampler, samples, 0 if seed is None else seed)
    if max_len is None:
        raise ValueError("give max_len, a sampler, or an explicit word list")
    return None


def differential_test(
    machine,
    oracle: Callable[[tuple], bool],
    alphabet: Sequence[str],
    max_len: Optional[int] = None,
    *,
    sampler: Optional[Callable[[random.Random], tuple]] = None,
    samples: int = 1000,
    seed: Optional[int] = None,
    words: Optional[Iterable] = None,
    cutpoint=1,
    cap: int = DEFAULT_FRONTIER_CAP,
    step_budget: Optional[int] = None,
    stop_at_first: bool = True,
    check_bits: bool = False,
    name: Optional[str] = None,
) -> TestReport:
    """Compare machine verdicts with ``oracle`` word by word."""
    wk = walker_for(machine, cutpoint=cutpoint, cap=cap, step_budget=step_budget)
    word_list = _resolve_words(alphabet, max_len, sampler, samples, seed, words)

    def compare(word, verdicts):
        expected = bool(oracle(word))
        return verdicts[0] == expected, {"machine": verdicts[0], "oracle": expected}

    label = name or _name(machine)
    report = TestReport([label, "oracle"], _source(max_len, word_list, seed if sampler else None))
    check = _Check(
        [wk], [label], compare, stop_at_first=stop_at_first, check_bits=check_bits,
        bounds=[bit_bound(machine)],
    )
    return check.run(report, tuple(alphabet), max_len, word_list)


def equivalence_test(
    m1,
    m2,
    alphabet: Sequence[str],
    max_len: Optional[int] = None,
    *,
    cutpoints=(1, 1),
    sampler=None,
    samples: int = 1000,
    seed: Optional[int] = None,
    words: Optional[Iterable] = None,
    cap: int = DEFAULT_FRONTIER_CAP,
    step_budget: Optional[int] = None,
    stop_at_first: bool = True,
    names: Optional[Sequence[str]] = None,
) -> TestReport:
    """Check that two machines give the same verdict on every tested word."""
    walkers = [
        walker_for(m, cutpoint=c, cap=cap, step_budget=step_budget)
        for m, c in zip((m1, m2), cutpoints)
    ]
    labels = list(names) if names else [_name(m1), _name(m2)]
    word_list = _resolve_words(alphabet, max_len, sampler, samples, seed, words)

    def compare(word, verdicts):
        return verdicts[0] == verdicts[1], dict(zip(("first", "second"), verdicts))

    report = TestReport(labels, _source(max_len, word_list, seed if sampler else None))
    check = _Check(
        walkers, labels, compare, stop_at_first=stop_at_first, check_bits=False,
        bounds=[(0, 0), (0, 0)],
    )
    return check.run(report, tuple(alphabet), max_len, word_list)


def replay(machine, oracle, word, *, cutpoint=1, cap=DEFAULT_FRONTIER_CAP, step_budget=None) -> tuple:
    """Re-run one word in isolation: ``(machine verdict, oracle verdict)``."""
    wk = walker_for(machine, cutpoint=cutpoint, cap=cap, step_budget=step_budget)
    return wk.accepts(tuple(word)), bool(oracle(tuple(word)))


# -- probes --------------------------------------------------------------------


@dataclass
class BitGrowthReport:
    b0: int
    bmax: int
    words_tested: int = 0
    max_bits: int = 0
    max_step_growth: int = 0
    per_word: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "B0": self.b0,
            "Bmax": self.bmax,
            "words_tested": self.words_tested,
            "max_bits": self.max_bits,
            "max_step_growth": self.max_step_growth,
            "violations": [
                {"word": word_text(w), "step": t, "bits": b, "bound": bound}
                for w, t, b, bound in self.violations
            ],
        }


def _tufa_bits(g: TuFA, word) -> list:
    vec = g.initial_vector
    out = [vec.max_bits()]
    for s in word:
        vec = vec @ g.matrices[s]
        out.append(vec.max_bits())
    return out


def bitgrowth_probe(machine, words: Iterable, *, keep_series: bool = False) -> BitGrowthReport:
    """Measure entry bit lengths step by step and check the linear bound.

    Step 0 is the initial configuration.  ``max_step_growth`` is the largest
    increase between consecutive steps.
    """
    b0, bmax = bit_bound(machine)
    report = BitGrowthReport(b0, bmax)
    for word in words:
        word = tuple(word)
        if isinstance(machine, TuFA):
            series = _tufa_bits(machine, word)
        else:
            series = run(machine, word).max_bits_per_step()
        report.words_tested += 1
        if keep_series:
            report.per_word.append((word, series))
        for t, b in enumerate(series):
            report.max_bits = max(report.max_bits, b)
            if t:
                report.max_step_growth = max(report.max_step_growth, b - series[t - 1])
            if b > b0 + t * bmax:
                report.violations.append((word, t, b, b0 + t * bmax))
    return report


def _prime_product(primes, counters) -> Fraction:
    x = Fraction(1)
    for p, c in zip(primes, counters):
        x *= Fraction(p) ** c
    return x


def step_sync_probe(
    m_vec: VectorAutomaton,
    m_ctr: CounterMachine,
    primes: Sequence[int],
    words: Optional[Iterable] = None,
    *,
    alphabet: Optional[Sequence[str]] = None,
    max_len: Optional[int] = None,
) -> TestReport:
    """Check vector value = prod p_i ** c_i, and equal states, at every step.

    Steps are counted from 0 (the ``¢`` step).  Either pass ``words`` or an
    ``alphabet`` and ``max_len`` for an exhaustive prefix-shared sweep.
    """
    if m_vec.dim != 1:
        raise ValueError("the vector machine must have dimension 1")
    primes = tuple(primes)
    t0 = time.perf_counter()
    vw, cw = _DetVectorWalker(m_vec), _CounterWalker(m_ctr)
    source = _source(max_len, None if words is None else [], None)
    report = TestReport([_name(m_vec), _name(m_ctr)], source)

    def agree(v, c) -> bool:
        if v is _DEAD or c is _DEAD:
            return v is c
        return v.state == c.state and v.vector[0] == _prime_product(primes, c.counters)

    def fail(word, step, v, c):
        report.counterexample = word
        report.violation = {
            "word": word_text(word),
            "step": step,
            "vector": None if v is _DEAD else v.to_json(),
            "counters": None if c is _DEAD else c.to_json(),
        }

    def check_end(word, v, c) -> bool:
        if v is _DEAD or c is _DEAD:
            return True
        ve, ce = vw._move(v, RIGHT), counter_successor(m_ctr, c, RIGHT)
        if not agree(ve, ce):
            fail(word, len(word) + 1, ve, ce)
            return False
        return True

    if words is None:
        if alphabet is None or max_len is None:
            raise ValueError("give words, or alphabet and max_len")
        for word, (v, c) in _walk([vw, cw], tuple(alphabet), max_len):
            report.words_tested += 1
            if not agree(v, c):
                fail(word, len(word), v, c)
                break
            if not check_end(word, v, c):
                break
    else:
        for word in words:
            word = tuple(word)
            report.words_tested += 1
            v, c = vw.start(), cw.start()
            bad = False
            for step in range(len(word) + 1):
                if not agree(v, c):
                    fail(word, step, v, c)
                    bad = True
                    break
                if step == len(word) or v is _DEAD:
                    break
                v, c = vw._move(v, word[step]), counter_successor(m_ctr, c, word[step])
            if bad or not check_end(word, v, c):
                break
    report.elapsed = time.perf_counter() - t0
    return report
