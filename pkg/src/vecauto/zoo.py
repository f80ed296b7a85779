"""Example machines with brute-force membership oracles.

Oracles work on plain strings and Python ints only; none of them calls a
simulator or the rational linear algebra, so they can referee the machines.
"""
from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .linalg import RowVector, SquareMatrix, elementary_matrix, swap_matrix
from .machines import (
    EQ,
    MOVE_RIGHT,
    NE,
    RIGHT,
    SIMULTANEOUS_ZERO,
    STAY,
    CheckSpec,
    CounterMachine,
    MultiplyAutomaton,
    TuFA,
    vector_automaton,
)


@dataclass(frozen=True)
class ZooEntry:
    id: str
    machine: object
    oracle: Callable[[Sequence[str]], bool]
    alphabet: tuple
    fidelity_notes: str = ""
    cutpoint: Optional[Fraction] = None
    sampler: Optional[Callable[[random.Random], tuple]] = None
    fidelity: bool = False
    certified_len: int = 8
    unary_len: Optional[int] = field(default=None)

    def accepts_oracle(self, word: Sequence[str]) -> bool:
        return self.oracle(tuple(word))


def _m(rows) -> SquareMatrix:
    return SquareMatrix(rows)


# -- UFIBONACCI --------------------------------------------------------------

FIB_M1 = _m(
    [
        [0, 0, 0, 0, 0],
        [1, 1, 1, 0, 0],
        [1, 1, 0, 0, 0],
        [-1, 0, 0, 1, 0],
        [-1, 0, 0, 1, 1],
    ]
)
FIB_M2 = _m(
    [
        [0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [-1, 0, 0, 1, 0],
        [-1, 0, 0, 1, 1],
    ]
)


def fibonacci_oracle(word: Sequence[str]) -> bool:
    n = len(word)
    a, b = 1, 2
    while a < n:
        a, b = b, a + b
    return a == n


def build_ufibonacci(fidelity: bool = False) -> ZooEntry:
    """a^n with n in 1, 2, 3, 5, 8, ...

    Each state tests whether entry 1 is 0 and accepts when it ends at 0.
    """
    zero_check = CheckSpec(1, 0)
    if fidelity:
        m = vector_automaton(
            states=["q"],
            alphabet=["a"],
            q0="q",
            accept=["q"],
            initial_vector=[0, 1, 0, 0, 1],
            transitions={("q", "a", EQ): ("q", FIB_M1), ("q", "a", NE): ("q", FIB_M2)},
            check={"q": zero_check},
            accept_value=0,
        )
        notes = "literal single-state machine; entry 1 starts at 0, so it accepts the empty word"
    else:
        m = vector_automaton(
            states=["start", "run"],
            alphabet=["a"],
            q0="start",
            accept=["run"],
            initial_vector=[0, 1, 0, 0, 1],
            transitions={
                ("start", "a", EQ): ("run", FIB_M1),
                ("start", "a", NE): ("run", FIB_M2),
                ("run", "a", EQ): ("run", FIB_M1),
                ("run", "a", NE): ("run", FIB_M2),
            },
            check={"start": zero_check, "run": zero_check},
            accept_value=0,
        )
        notes = (
            "matrices and initial vector as printed; a non-accepting start state keeps the "
            "empty word out, since 0 is not in the oracle's set 1, 2, 3, 5, ... "
            "(the literal machine accepts '')"
        )
    return ZooEntry(
        "ufibonacci", m, fibonacci_oracle, ("a",), notes, fidelity=fidelity, certified_len=300
    )


# -- UGAUSS ------------------------------------------------------------------


def ugauss_oracle(word: Sequence[str]) -> bool:
    n = len(word)
    r = (math.isqrt(4 * n + 1) - 1) // 2
    return r * r + r == n


UG_M1 = elementary_matrix(1, 2, 2)
UG_M2 = SquareMatrix.diagonal([Fraction(1, 2), 2])
UG_M3 = SquareMatrix.diagonal([2, Fraction(1, 2)])


def build_ugauss_dva2(fidelity: bool = False) -> ZooEntry:
    """a^(n^2+n) with the vector [2^c1, 2^c2] playing two counters.

    Phase ``up2`` moves weight from entry 1 to entry 2; phase ``up1`` moves
    it back.  In the shipped machine ``up1`` keeps the vector swapped so the
    tested entry is always entry 1.  The fidelity variant keeps the printed
    matrices and lets ``up1`` test entry 2 directly.
    """
    j = swap_matrix(2, 2)
    if fidelity:
        trans = {
            ("start", "a"): ("up2", UG_M1),
            ("up2", "a", NE): ("up2", UG_M2),
            ("up2", "a", EQ): ("up1", UG_M3),
            ("up1", "a", NE): ("up1", UG_M3),
            ("up1", "a", EQ): ("up2", UG_M1),
        }
        check = {"up1": CheckSpec(2, 1)}
        notes = "printed M1, M2, M3; state up1 tests entry 2, which needs normalize_check_entry"
    else:
        trans = {
            ("start", "a"): ("up2", UG_M1),
            ("up2", "a", NE): ("up2", UG_M2),
            ("up2", "a", EQ): ("up1", UG_M3 @ j),
            ("up1", "a", NE): ("up1", UG_M2),
            ("up1", "a", EQ): ("up2", j @ UG_M1),
        }
        check = {}
        notes = (
            "the second phase watches entry 2; here the swap J is folded into the phase "
            "changes (M3 J on entry, J M1 on exit) so only entry 1 is ever tested"
        )
    m = vector_automaton(
        states=["start", "up2", "up1"],
        alphabet=["a"],
        q0="start",
        accept=["start", "up2"],
        initial_vector=[1, 1],
        transitions=trans,
        check=check,
    )
    return ZooEntry(
        "ugauss-dva2", m, ugauss_oracle, ("a",), notes, fidelity=fidelity, certified_len=400
    )


def build_ugauss_2ca() -> ZooEntry:
    """Two-counter version: counters move c1 into c2 and back, growing by one each round."""
    trans = {
        ("start", "a", "00"): ("down1", (1, 0)),
        ("down1", "a", "+0"): ("down1", (-1, 1)),
        ("down1", "a", "++"): ("down1", (-1, 1)),
        ("down1", "a", "0+"): ("down2", (1, -1)),
        ("down2", "a", "++"): ("down2", (1, -1)),
        ("down2", "a", "+0"): ("down1", (1, 0)),
        ("down1", RIGHT, "0+"): ("final", (0, 0)),
        ("down1", RIGHT, "+0"): ("dead", (0, 0)),
        ("down1", RIGHT, "++"): ("dead", (0, 0)),
    }
    m = CounterMachine(
        states=("start", "down1", "down2", "final", "dead"),
        alphabet=("a",),
        q0="start",
        accept=frozenset({"start", "final"}),
        k=2,
        transitions=trans,
    )
    return ZooEntry(
        "ugauss-2ca",
        m,
        ugauss_oracle,
        ("a",),
        "acceptance is decided on $ from the sign of counter 1",
        certified_len=400,
    )


def mod3_oracle(word: Sequence[str]) -> bool:
    return len(word) % 3 == 0


def build_mod3_2ca_simzero() -> ZooEntry:
    """a^n with 3 | n on a two-counter machine that only sees "all counters zero"."""
    trans = {
        ("zero", "a", EQ): ("two", (2, 1)),
        ("zero", "a", NE): ("zero", (0, 0)),
        ("two", "a", NE): ("one", (-1, 0)),
        ("one", "a", NE): ("zero", (-1, -1)),
    }
    m = CounterMachine(
        states=("zero", "two", "one"),
        alphabet=("a",),
        q0="zero",
        accept=frozenset({"zero"}),
        k=2,
        transitions=trans,
        bound=2,
        zero_test_mode=SIMULTANEOUS_ZERO,
    )
    return ZooEntry(
        "mod3-2ca-simzero",
        m,
        mod3_oracle,
        ("a",),
        "fixture for the dimension-1 simulation; counters cycle (0,0) (2,1) (1,1)",
        certified_len=100,
    )


# -- LNG ---------------------------------------------------------------------


def lng_alphabet(k: int) -> tuple:
    return tuple(f"a{i}" for i in range(k + 2))


def lng_oracle(word: Sequence[str], alphabet: Sequence[str]) -> bool:
    counts = [0] * len(alphabet)
    pos = {s: i for i, s in enumerate(alphabet)}
    for s in word:
        counts[pos[s]] += 1
    return len(set(counts)) == 1


def build_lng(k: int = 1) -> ZooEntry:
    """Equal counts of a0 .. a_{k+1} with one rational entry.

    a_i multiplies by the i-th prime; a0 divides by the product of all of
    them.  This is the witness that escapes every k-counter machine.
    """
    from .transforms import first_primes

    if k < 1:
        raise ValueError("k must be at least 1")
    alphabet = lng_alphabet(k)
    primes = first_primes(k + 1)
    trans = {("q", "a0"): ("q", SquareMatrix.scalar(Fraction(1, math.prod(primes))))}
    for i, p in enumerate(primes, start=1):
        trans[("q", f"a{i}")] = ("q", SquareMatrix.scalar(p))
    m = vector_automaton(
        states=["q"], alphabet=alphabet, q0="q", accept=["q"], initial_vector=[1], transitions=trans
    )
    return ZooEntry(
        f"lng-{k}",
        m,
        lambda w, _a=alphabet: lng_oracle(w, _a),
        alphabet,
        "ignores the test outcome; the value may be fractional mid-word",
        certified_len=8,
    )


# -- GEQ* --------------------------------------------------------------------

GEQ_MA = _m([[1, 0], [1, 1]])
GEQ_MB = _m([[1, 0], [-1, 1]])
GEQ_M0_LITERAL = _m([[0, 0], [1, 1]])
GEQ_M0 = _m([[0, 0], [0, 1]])


def geqstar_oracle(word: Sequence[str]) -> bool:
    """Maximal a-run then b-run blocks, each with at least as many a's as b's."""
    text = "".join(word)
    if not re.fullmatch(r"(a+b+)*", text):
        return False
    return all(len(a) >= len(b) for a, b in re.findall(r"(a+)(b+)", text))


def build_geqstar_dva2(fidelity: bool = False) -> ZooEntry:
    """(a^m b^n, m >= n >= 1)* with entry 1 as a counter that can be reset in one step."""
    reset = GEQ_M0_LITERAL if fidelity else GEQ_M0
    ident = SquareMatrix.identity(2)
    zero = CheckSpec(1, 0)
    trans = {
        ("start", "a"): ("as", GEQ_MA),
        ("start", "b"): ("dead", ident),
        ("as", "a"): ("as", GEQ_MA),
        ("as", "b", EQ): ("dead", ident),
        ("as", "b", NE): ("bs", GEQ_MB),
        ("bs", "b", EQ): ("dead", ident),
        ("bs", "b", NE): ("bs", GEQ_MB),
        ("bs", "a"): ("as", reset @ GEQ_MA),
        ("dead", "a"): ("dead", ident),
        ("dead", "b"): ("dead", ident),
        ("start", RIGHT): ("start", GEQ_M0),
        ("bs", RIGHT): ("bs", GEQ_M0),
        ("as", RIGHT): ("dead", ident),
    }
    m = vector_automaton(
        states=["start", "as", "bs", "dead"],
        alphabet=["a", "b"],
        q0="start",
        accept=["start", "bs"],
        initial_vector=[0, 1],
        transitions=trans,
        check={q: zero for q in ("start", "as", "bs", "dead")},
        accept_value=0,
    )
    if fidelity:
        notes = (
            "printed reset M0 = [[0,0],[1,1]] sends [x,1] to [1,1], so the first a of a new "
            "block leaves the counter at 2; first counterexample in length-lex order is "
            "'ababb', and 'aababb' is also accepted wrongly"
        )
    else:
        notes = (
            "reset uses [[0,0],[0,1]] (true reset to [0,1]); the boundary a applies reset then "
            "M_a in one step. On $ the vector is reset so acceptance depends on the state only"
        )
    return ZooEntry(
        "geqstar-dva2", m, geqstar_oracle, ("a", "b"), notes, fidelity=fidelity, certified_len=14
    )


def build_geqstar_fam() -> ZooEntry:
    """GEQ* on a 1DFAM: register 2^count, drained with paused halvings at block boundaries."""
    half = Fraction(1, 2)
    trans = {}

    def both(q, s, target, move, gamma):
        trans[(q, s, EQ)] = (target, move, gamma)
        trans[(q, s, NE)] = (target, move, gamma)

    both("start", "a", "as", MOVE_RIGHT, 2)
    both("start", "b", "dead", MOVE_RIGHT, 1)
    both("start", RIGHT, "accept", MOVE_RIGHT, 1)
    both("as", "a", "as", MOVE_RIGHT, 2)
    trans[("as", "b", EQ)] = ("dead", MOVE_RIGHT, 1)
    trans[("as", "b", NE)] = ("bs", MOVE_RIGHT, half)
    both("as", RIGHT, "dead", MOVE_RIGHT, 1)
    trans[("bs", "b", EQ)] = ("dead", MOVE_RIGHT, 1)
    trans[("bs", "b", NE)] = ("bs", MOVE_RIGHT, half)
    trans[("bs", "a", EQ)] = ("as", MOVE_RIGHT, 2)
    trans[("bs", "a", NE)] = ("drain", STAY, half)
    trans[("drain", "a", NE)] = ("drain", STAY, half)
    trans[("drain", "a", EQ)] = ("as", MOVE_RIGHT, 2)
    trans[("bs", RIGHT, EQ)] = ("accept", MOVE_RIGHT, 1)
    trans[("bs", RIGHT, NE)] = ("drain_end", STAY, half)
    trans[("drain_end", RIGHT, NE)] = ("drain_end", STAY, half)
    trans[("drain_end", RIGHT, EQ)] = ("accept", MOVE_RIGHT, 1)
    both("dead", "a", "dead", MOVE_RIGHT, 1)
    both("dead", "b", "dead", MOVE_RIGHT, 1)
    m = MultiplyAutomaton(
        states=("start", "as", "bs", "drain", "drain_end", "accept", "dead"),
        alphabet=("a", "b"),
        q0="start",
        accept=frozenset({"accept"}),
        transitions=trans,
        with_equality=True,
    )
    return ZooEntry(
        "geqstar-fam",
        m,
        geqstar_oracle,
        ("a", "b"),
        "the register is drained to 1 again before $ so that acceptance can see 1",
        certified_len=14,
    )


# -- MPAL --------------------------------------------------------------------


def mpal_oracle(word: Sequence[str]) -> bool:
    text = "".join(word)
    if text.count("c") != 1:
        return False
    left, right = text.split("c")
    return right == left[::-1]


def build_mpal_dbva2() -> ZooEntry:
    """w c reverse(w): w is written in decimal (a=1, b=2) and peeled off digit by digit."""
    tenth = Fraction(1, 10)
    ident = SquareMatrix.identity(2)
    m = vector_automaton(
        states=["left", "right", "dead"],
        alphabet=["a", "b", "c"],
        q0="left",
        accept=["right"],
        initial_vector=[0, 1],
        transitions={
            ("left", "a"): ("left", _m([[10, 0], [1, 1]])),
            ("left", "b"): ("left", _m([[10, 0], [2, 1]])),
            ("left", "c"): ("right", ident),
            ("right", "a"): ("right", _m([[tenth, 0], [-tenth, 1]])),
            ("right", "b"): ("right", _m([[tenth, 0], [-2 * tenth, 1]])),
            ("right", "c"): ("dead", ident),
            ("dead", "a"): ("dead", ident),
            ("dead", "b"): ("dead", ident),
            ("dead", "c"): ("dead", ident),
        },
        blind=True,
        accept_value=0,
    )
    return ZooEntry(
        "mpal-dbva2",
        m,
        mpal_oracle,
        ("a", "b", "c"),
        "a second c sends the run to a non-accepting sink",
        certified_len=10,
    )


# -- MOD_k -------------------------------------------------------------------


def build_mod_tufa(k: int = 3) -> ZooEntry:
    """a^i with i not divisible by k, as a k-state TuFA with cutpoint 1."""
    if k < 2:
        raise ValueError("k must be at least 2")
    cycle = _m([[1 if j == (i + 1) % k else 0 for j in range(k)] for i in range(k)])
    g = TuFA(
        alphabet=("a",),
        matrices={"a": cycle},
        initial_vector=RowVector.unit(1, k),
        final_vector=tuple([0] + [1] * (k - 1)),
    )
    return ZooEntry(
        f"mod{k}-tufa",
        g,
        lambda w, _k=k: len(w) % _k != 0,
        ("a",),
        "cyclic permutation; f is 0 on the start coordinate and 1 elsewhere",
        cutpoint=Fraction(1),
        certified_len=60,
    )


# -- SUBSETSUM ---------------------------------------------------------------

SS_M = {"0": _m([[2, 0, 0], [0, 1, 0], [0, 0, 1]]), "1": _m([[2, 0, 0], [0, 1, 0], [1, 0, 1]])}
SS_N = {"0": _m([[1, 0, 0], [0, 2, 0], [0, 0, 1]]), "1": _m([[1, 0, 0], [0, 2, 0], [0, 1, 1]])}
SS_SUBTRACT_CLEAR = _m([[1, 0, 0], [-1, 0, 0], [0, 0, 1]])


def subsetsum_oracle(word: Sequence[str]) -> bool:
    text = "".join(word)
    if not re.fullmatch(r"[01]+#([01]+#)+", text):
        return False
    numbers = [int(x, 2) for x in text.split("#")[:-1]]
    target, items = numbers[0], numbers[1:]
    sums = {0}
    for a in items:
        sums |= {s + a for s in sums if s + a <= target}
    return target in sums


def subsetsum_instance(rng: random.Random, max_items: int = 6, bits: int = 8) -> tuple:
    """Random well-formed ``t#a1#...#an#``; half the time t is a subset sum."""
    n = rng.randint(1, max_items)
    items = [rng.randrange(2**bits) for _ in range(n)]
    target = rng.randrange(2**bits)
    if rng.random() < 0.5:
        chosen = sum(a for a in items if rng.random() < 0.5)
        if chosen < 2**bits:
            target = chosen
    text = "".join(format(x, "b") + "#" for x in [target] + items)
    return tuple(text)


def build_subsetsum_nbva3(fidelity: bool = False) -> ZooEntry:
    """t#a1#...#an# such that some subset of the a_i sums to t.

    Each a_i is guessed into or out of the sum at its first digit; chosen
    ones are encoded in entry 2 and subtracted from entry 1 at their '#'.
    """
    ident = SquareMatrix.identity(3)
    sub = elementary_matrix(2, 3, -1) if fidelity else SS_SUBTRACT_CLEAR
    trans: dict = {("t0", "#"): [], ("t", "#"): [("gap", ident)]}
    for d in "01":
        trans[("t0", d)] = [("t", SS_M[d])]
        trans[("t", d)] = [("t", SS_M[d])]
        for start in ("gap", "sep"):
            trans[(start, d)] = [("take", SS_N[d]), ("skip", ident)]
        trans[("take", d)] = [("take", SS_N[d])]
        trans[("skip", d)] = [("skip", ident)]
    trans[("take", "#")] = [("sep", sub)]
    trans[("skip", "#")] = [("sep", ident)]
    trans = {k: v for k, v in trans.items() if v}
    m = vector_automaton(
        states=["t0", "t", "gap", "take", "skip", "sep"],
        alphabet=["0", "1", "#"],
        q0="t0",
        accept=["sep"],
        initial_vector=[0, 0, 1],
        transitions=trans,
        deterministic=False,
        blind=True,
        accept_value=0,
    )
    if fidelity:
        notes = "printed E^2_3(-1) alone: entry 2 is never cleared, so a second chosen a_j is mis-encoded"
    else:
        notes = (
            "subtraction uses [[1,0,0],[-1,0,0],[0,0,1]], which also clears entry 2 in the same "
            "step; empty numbers and a missing a_i kill the branch"
        )
    return ZooEntry(
        "subsetsum",
        m,
        subsetsum_oracle,
        ("0", "1", "#"),
        notes,
        sampler=subsetsum_instance,
        fidelity=fidelity,
        certified_len=8,
    )


# -- POW ---------------------------------------------------------------------


def pow_oracle(word: Sequence[str]) -> bool:
    n = len(word)
    k = 1
    while k + 2**k <= n:
        if k + 2**k == n:
            return True
        k += 1
    return False


POW_M1 = elementary_matrix(1, 2, 2)
POW_M2 = _m([[1, 0], [-1, 1]])


def build_pow_nbva2(fidelity: bool = False) -> ZooEntry:
    """a^(k + 2^k), k > 0: double entry 1 k times, then count it down."""
    if fidelity:
        trans = {
            ("double", "a"): [("count", POW_M2), ("double", POW_M1)],
            ("count", "a"): [("count", POW_M2)],
        }
        states = ["double", "count"]
        q0 = "double"
        notes = "switch allowed before any doubling; then k = 0 admits a^1"
    else:
        trans = {
            ("begin", "a"): [("double", POW_M1)],
            ("double", "a"): [("double", POW_M1), ("count", POW_M2)],
            ("count", "a"): [("count", POW_M2)],
        }
        states = ["begin", "double", "count"]
        q0 = "begin"
        notes = "the first a always doubles, enforcing k > 0"
    m = vector_automaton(
        states=states,
        alphabet=["a"],
        q0=q0,
        accept=["count"],
        initial_vector=[1, 1],
        transitions=trans,
        deterministic=False,
        blind=True,
        accept_value=0,
    )
    return ZooEntry(
        "pow-nbva2", m, pow_oracle, ("a",), notes, fidelity=fidelity, certified_len=1100
    )


# -- pausing 1DFAMW fixture --------------------------------------------------


def famw_pause_oracle(word: Sequence[str]) -> bool:
    bs = 0
    as_ = 0
    for s in word:
        if s == "a":
            if bs % 2:
                return False
            as_ += 1
        else:
            bs += 1
    return bs % 2 == 0 and bs == 2 * as_


def build_famw_pause() -> ZooEntry:
    """1DFAMW that pauses on a (x2 twice) and loops forever on an a after an odd b count.

    Accepts words with an even number of b's before every a and #b = 2 #a.
    """
    half = Fraction(1, 2)
    trans = {
        ("even", "a", None): ("pause", STAY, 2),
        ("pause", "a", None): ("even", MOVE_RIGHT, 2),
        ("even", "b", None): ("odd", MOVE_RIGHT, half),
        ("odd", "b", None): ("even", MOVE_RIGHT, half),
        ("odd", "a", None): ("spin", STAY, 1),
        ("spin", "a", None): ("odd", STAY, 1),
    }
    m = MultiplyAutomaton(
        states=("even", "pause", "odd", "spin"),
        alphabet=("a", "b"),
        q0="even",
        accept=frozenset({"even"}),
        transitions=trans,
        with_equality=False,
    )
    return ZooEntry(
        "famw-pause",
        m,
        famw_pause_oracle,
        ("a", "b"),
        "test fixture for the one-way to real-time compilation",
        certified_len=12,
    )


# -- registry ----------------------------------------------------------------

_FIXED = {
    "ufibonacci": build_ufibonacci,
    "ugauss-dva2": build_ugauss_dva2,
    "ugauss-2ca": build_ugauss_2ca,
    "mod3-2ca-simzero": build_mod3_2ca_simzero,
    "geqstar-dva2": build_geqstar_dva2,
    "geqstar-fam": build_geqstar_fam,
    "mpal-dbva2": build_mpal_dbva2,
    "subsetsum": build_subsetsum_nbva3,
    "pow-nbva2": build_pow_nbva2,
    "famw-pause": build_famw_pause,
}
_WITH_FIDELITY = {"ufibonacci", "ugauss-dva2", "geqstar-dva2", "subsetsum", "pow-nbva2"}

DEFAULT_IDS = (
    "ufibonacci",
    "ugauss-dva2",
    "ugauss-2ca",
    "mod3-2ca-simzero",
    "lng-1",
    "lng-2",
    "geqstar-dva2",
    "geqstar-fam",
    "mpal-dbva2",
    "mod2-tufa",
    "mod3-tufa",
    "mod5-tufa",
    "subsetsum",
    "pow-nbva2",
    "famw-pause",
)


def has_fidelity_variant(entry_id: str) -> bool:
    return entry_id in _WITH_FIDELITY


def get(entry_id: str, fidelity: bool = False) -> ZooEntry:
    """Build a zoo entry by id; ``lng-<k>`` and ``mod<k>-tufa`` are parametric."""
    if entry_id in _FIXED:
        if fidelity and entry_id not in _WITH_FIDELITY:
            raise KeyError(f"{entry_id} has no literal-matrix variant")
        builder = _FIXED[entry_id]
        return builder(fidelity=True) if fidelity else builder()
    if fidelity:
        raise KeyError(f"{entry_id} has no literal-matrix variant")
    m = re.fullmatch(r"lng-(\d+)", entry_id)
    if m:
        return build_lng(int(m.group(1)))
    m = re.fullmatch(r"mod(\d+)-tufa", entry_id)
    if m:
        return build_mod_tufa(int(m.group(1)))
    raise KeyError(f"unknown zoo entry {entry_id!r}")


def entries() -> list:
    return [get(i) for i in DEFAULT_IDS]
