"""Descriptions of the five machine families.

All machines read the tape ``¢ w $``.  A machine may leave endmarker
transitions out entirely for a state; such omitted moves default to "stay in
the same state and do nothing" (identity matrix, zero increments, multiplier
1 with a right move).  A state that defines *some* transition on an
endmarker gets no default for that endmarker.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Tuple

from .errors import InputError, MachineError
from .linalg import RationalLike, RowVector, SquareMatrix, rat

LEFT = "¢"
RIGHT = "$"
ENDMARKERS = (LEFT, RIGHT)

EQ = "="
NE = "!="
OMEGAS = (EQ, NE)

STAY = "stay"
MOVE_RIGHT = "right"

SIGNS = "signs"
SIMULTANEOUS_ZERO = "simultaneous-zero"

Word = Tuple[str, ...]


def as_word(word: str | Sequence[str], alphabet: Iterable[str]) -> Word:
    """Normalise ``word`` to a tuple of alphabet symbols.

    Strings are split greedily by longest match against the alphabet, so
    ``"a0a1"`` over ``{a0, a1}`` becomes ``("a0", "a1")``.
    """
    alphabet = tuple(alphabet)
    if not isinstance(word, str):
        out = tuple(word)
        for s in out:
            if s not in alphabet:
                raise InputError(f"symbol {s!r} is not in the alphabet {list(alphabet)}")
        return out
    by_len = sorted(alphabet, key=len, reverse=True)
    out = []
    i = 0
    while i < len(word):
        for s in by_len:
            if s and word.startswith(s, i):
                out.append(s)
                i += len(s)
                break
        else:
            raise InputError(
                f"cannot read {word[i:]!r} at offset {i} with alphabet {list(alphabet)}"
            )
    return tuple(out)


def word_text(word: Sequence[str]) -> str:
    return "".join(word)


def _check_common(states, q0, accept, alphabet) -> None:
    if q0 not in states:
        raise MachineError(f"initial state {q0!r} is not a state")
    bad = set(accept) - set(states)
    if bad:
        raise MachineError(f"accept states {sorted(bad)} are not states")
    for s in alphabet:
        if s in ENDMARKERS:
            raise MachineError(f"endmarker {s!r} cannot be an input symbol")
    if len(set(alphabet)) != len(alphabet):
        raise MachineError("alphabet has duplicate symbols")


def _check_key(key, states, alphabet, blind: bool, guards: Optional[Iterable]) -> None:
    state, symbol, guard = key
    if state not in states:
        raise MachineError(f"transition from unknown state {state!r}")
    if symbol not in alphabet and symbol not in ENDMARKERS:
        raise MachineError(f"transition on unknown symbol {symbol!r}")
    if blind:
        if guard is not None:
            raise MachineError(f"blind machine transition {key} carries a test value")
    elif guards is not None and guard not in guards:
        raise MachineError(f"transition {key} has an invalid test value")


@dataclass(frozen=True)
class CheckSpec:
    """Which vector entry a state tests, and against which constant."""

    entry: int = 1
    constant: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "constant", rat(self.constant))


STANDARD_CHECK = CheckSpec()


@dataclass(frozen=True, eq=True)
class VectorAutomaton:
    """Real-time vector automaton: deterministic or not, blind or not.

    ``transitions`` maps ``(state, symbol, omega)`` to a tuple of
    ``(next_state, matrix)`` moves.  ``omega`` is ``"="`` or ``"!="`` for
    machines that test their vector, and ``None`` for blind machines.
    """

    states: tuple
    alphabet: tuple
    q0: str
    accept: frozenset
    dim: int
    initial_vector: RowVector
    transitions: Mapping[tuple, tuple]
    deterministic: bool = True
    blind: bool = False
    check: Mapping[str, CheckSpec] = field(default_factory=dict)
    accept_value: Fraction = Fraction(1)
    accept_entry: int = 1

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "accept", frozenset(self.accept))
        object.__setattr__(self, "accept_value", rat(self.accept_value))
        if not isinstance(self.initial_vector, RowVector):
            object.__setattr__(self, "initial_vector", RowVector(self.initial_vector))
        trans = {k: tuple(v) for k, v in self.transitions.items()}
        object.__setattr__(self, "transitions", trans)
        object.__setattr__(self, "check", dict(self.check))
        _check_common(self.states, self.q0, self.accept, self.alphabet)
        if self.initial_vector.dim != self.dim:
            raise MachineError(
                f"initial vector has dim {self.initial_vector.dim}, machine has {self.dim}"
            )
        if not 1 <= self.accept_entry <= self.dim:
            raise MachineError(f"accept entry {self.accept_entry} outside 1..{self.dim}")
        for key, moves in trans.items():
            _check_key(key, self.states, self.alphabet, self.blind, OMEGAS)
            if self.deterministic and len(moves) > 1:
                raise MachineError(f"deterministic machine has {len(moves)} moves on {key}")
            for target, m in moves:
                if target not in self.states:
                    raise MachineError(f"transition {key} targets unknown state {target!r}")
                if not isinstance(m, SquareMatrix) or m.dim != self.dim:
                    raise MachineError(f"transition {key} matrix is not {self.dim}x{self.dim}")
        if self.blind and self.check:
            raise MachineError("blind machines have no per-state checks")
        for state, spec in self.check.items():
            if state not in self.states:
                raise MachineError(f"check given for unknown state {state!r}")
            if not 1 <= spec.entry <= self.dim:
                raise MachineError(f"check entry {spec.entry} outside 1..{self.dim}")
        explicit = frozenset((k[0], k[1]) for k in trans if k[1] in ENDMARKERS)
        object.__setattr__(self, "_explicit_ends", explicit)
        object.__setattr__(self, "_identity", SquareMatrix.identity(self.dim))

    @property
    def kind(self) -> str:
        return ("d" if self.deterministic else "n") + ("bva" if self.blind else "va")

    @property
    def size(self) -> int:
        """State count times dimension."""
        return len(self.states) * self.dim

    def check_for(self, state: str) -> CheckSpec:
        return self.check.get(state, STANDARD_CHECK)

    def omega(self, state: str, vector: RowVector) -> Optional[str]:
        if self.blind:
            return None
        spec = self.check_for(state)
        return EQ if vector[spec.entry - 1] == spec.constant else NE

    def moves(self, state: str, symbol: str, vector: RowVector) -> tuple:
        key = (state, symbol, self.omega(state, vector))
        found = self.transitions.get(key)
        if found is not None:
            return found
        if symbol in ENDMARKERS and (state, symbol) not in self._explicit_ends:
            return ((state, self._identity),)
        return ()

    def accepts(self, state: str, vector: RowVector) -> bool:
        return state in self.accept and vector[self.accept_entry - 1] == self.accept_value

    def matrices(self) -> list:
        """Distinct transition matrices, in first-seen order."""
        seen: dict = {}
        for moves in self.transitions.values():
            for _, m in moves:
                seen.setdefault(m, None)
        return list(seen)

    def with_endmarker_defaults(self) -> "VectorAutomaton":
        """Same machine with every implicit endmarker move written out."""
        trans = dict(self.transitions)
        guards = (None,) if self.blind else OMEGAS
        for q in self.states:
            for end in ENDMARKERS:
                if (q, end) in self._explicit_ends:
                    continue
                for g in guards:
                    trans[(q, end, g)] = ((q, self._identity),)
        return self.replace(transitions=trans)

    def replace(self, **changes) -> "VectorAutomaton":
        fields = dict(
            states=self.states,
            alphabet=self.alphabet,
            q0=self.q0,
            accept=self.accept,
            dim=self.dim,
            initial_vector=self.initial_vector,
            transitions=self.transitions,
            deterministic=self.deterministic,
            blind=self.blind,
            check=self.check,
            accept_value=self.accept_value,
            accept_entry=self.accept_entry,
        )
        fields.update(changes)
        return VectorAutomaton(**fields)


@dataclass(frozen=True, eq=True)
class CounterMachine:
    """Real-time deterministic k-counter machine with increments in [-bound, bound].

    With ``zero_test_mode == "signs"`` a non-blind machine dispatches on a
    sign string such as ``"0+"`` (one of ``0 + -`` per counter) and accepts by
    state alone.  With ``"simultaneous-zero"`` it only sees whether all
    counters are zero (``"="``) or not (``"!="``), and, like blind machines,
    accepts only if the counters are all zero at the end.
    """

    states: tuple
    alphabet: tuple
    q0: str
    accept: frozenset
    k: int
    transitions: Mapping[tuple, tuple]
    bound: int = 1
    blind: bool = False
    zero_test_mode: str = SIGNS

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "accept", frozenset(self.accept))
        trans = {
            key: (target, tuple(int(d) for d in inc))
            for key, (target, inc) in self.transitions.items()
        }
        object.__setattr__(self, "transitions", trans)
        _check_common(self.states, self.q0, self.accept, self.alphabet)
        if self.zero_test_mode not in (SIGNS, SIMULTANEOUS_ZERO):
            raise MachineError(f"unknown zero test mode {self.zero_test_mode!r}")
        if self.k < 1 or self.bound < 1:
            raise MachineError("need at least one counter and a positive bound")
        for key, (target, inc) in trans.items():
            if self.blind:
                _check_key(key, self.states, self.alphabet, True, ())
            elif self.zero_test_mode == SIMULTANEOUS_ZERO:
                _check_key(key, self.states, self.alphabet, False, OMEGAS)
            else:
                _check_key(key, self.states, self.alphabet, False, None)
            if not self.blind and self.zero_test_mode == SIGNS:
                theta = key[2]
                if not (isinstance(theta, str) and len(theta) == self.k and set(theta) <= set("0+-")):
                    raise MachineError(f"transition {key} has an invalid sign vector")
            if target not in self.states:
                raise MachineError(f"transition {key} targets unknown state {target!r}")
            if len(inc) != self.k:
                raise MachineError(f"transition {key} increment has wrong length")
            if any(abs(d) > self.bound for d in inc):
                raise MachineError(f"transition {key} increment exceeds bound {self.bound}")
        explicit = frozenset((k[0], k[1]) for k in trans if k[1] in ENDMARKERS)
        object.__setattr__(self, "_explicit_ends", explicit)

    @property
    def kind(self) -> str:
        return "counter"

    def theta(self, counters: Sequence[int]) -> Optional[str]:
        if self.blind:
            return None
        if self.zero_test_mode == SIMULTANEOUS_ZERO:
            return EQ if not any(counters) else NE
        return "".join("0" if c == 0 else ("+" if c > 0 else "-") for c in counters)

    def move(self, state: str, symbol: str, counters: Sequence[int]):
        found = self.transitions.get((state, symbol, self.theta(counters)))
        if found is not None:
            return found
        if symbol in ENDMARKERS and (state, symbol) not in self._explicit_ends:
            return state, (0,) * self.k
        return None

    def accepts(self, state: str, counters: Sequence[int]) -> bool:
        if state not in self.accept:
            return False
        if self.blind or self.zero_test_mode == SIMULTANEOUS_ZERO:
            return not any(counters)
        return True


@dataclass(frozen=True, eq=True)
class MultiplyAutomaton:
    """One-way automaton with a rational register (1DFAM, or 1DFAMW without equality).

    ``transitions`` maps ``(state, symbol, omega)`` (``omega`` is ``None``
    without equality tests) to ``(next_state, move, gamma)`` where ``move`` is
    ``"stay"`` or ``"right"``.
    """

    states: tuple
    alphabet: tuple
    q0: str
    accept: frozenset
    transitions: Mapping[tuple, tuple]
    with_equality: bool = True
    multipliers: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "accept", frozenset(self.accept))
        trans = {
            key: (target, move, rat(gamma))
            for key, (target, move, gamma) in self.transitions.items()
        }
        object.__setattr__(self, "transitions", trans)
        gammas = frozenset(rat(g) for g in self.multipliers) or frozenset(
            g for _, _, g in trans.values()
        ) | {Fraction(1)}
        object.__setattr__(self, "multipliers", gammas)
        _check_common(self.states, self.q0, self.accept, self.alphabet)
        for key, (target, move, gamma) in trans.items():
            _check_key(key, self.states, self.alphabet, not self.with_equality, OMEGAS)
            if target not in self.states:
                raise MachineError(f"transition {key} targets unknown state {target!r}")
            if move not in (STAY, MOVE_RIGHT):
                raise MachineError(f"transition {key} has unknown move {move!r}")
            if gamma not in gammas:
                raise MachineError(f"transition {key} multiplier {gamma} not in the multiplier set")
        explicit = frozenset((k[0], k[1]) for k in trans if k[1] in ENDMARKERS)
        object.__setattr__(self, "_explicit_ends", explicit)

    @property
    def kind(self) -> str:
        return "fam" if self.with_equality else "famw"

    def move(self, state: str, symbol: str, register: Fraction):
        omega = (EQ if register == 1 else NE) if self.with_equality else None
        found = self.transitions.get((state, symbol, omega))
        if found is not None:
            return found
        if symbol in ENDMARKERS and (state, symbol) not in self._explicit_ends:
            return state, MOVE_RIGHT, Fraction(1)
        return None

    def accepts(self, state: str, register: Fraction) -> bool:
        return state in self.accept and register == 1


@dataclass(frozen=True, eq=True)
class TuFA:
    """Rational generalized finite automaton: f(w) = v0 . A_w1 ... A_wn . f."""

    alphabet: tuple
    matrices: Mapping[str, SquareMatrix]
    initial_vector: RowVector
    final_vector: tuple

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "matrices", dict(self.matrices))
        if not isinstance(self.initial_vector, RowVector):
            object.__setattr__(self, "initial_vector", RowVector(self.initial_vector))
        object.__setattr__(self, "final_vector", tuple(rat(x) for x in self.final_vector))
        n = self.initial_vector.dim
        if len(self.final_vector) != n:
            raise MachineError("final vector length differs from the state count")
        if set(self.matrices) != set(self.alphabet):
            raise MachineError("need exactly one matrix per alphabet symbol")
        for s, m in self.matrices.items():
            if m.dim != n:
                raise MachineError(f"matrix for {s!r} is not {n}x{n}")
        for s in self.alphabet:
            if s in ENDMARKERS:
                raise MachineError(f"endmarker {s!r} cannot be an input symbol")

    @property
    def n(self) -> int:
        return self.initial_vector.dim

    @property
    def kind(self) -> str:
        return "tufa"


Machine = (VectorAutomaton, CounterMachine, MultiplyAutomaton, TuFA)


def vector_automaton(
    *,
    states: Iterable[str],
    alphabet: Iterable[str],
    q0: str,
    accept: Iterable[str],
    initial_vector: Sequence[RationalLike],
    transitions: Mapping[tuple, object],
    deterministic: bool = True,
    blind: bool = False,
    check: Mapping[str, CheckSpec] | None = None,
    accept_value: RationalLike = 1,
    accept_entry: int = 1,
) -> VectorAutomaton:
    """Convenience constructor.

    Transition values may be a single ``(state, matrix)`` pair or a list of
    them; keys may be ``(state, symbol)`` for a non-blind machine, meaning the
    move applies whatever the test outcome.  Matrices may be given as nested
    lists.
    """
    v = RowVector(initial_vector)
    trans: dict = {}
    for key, value in transitions.items():
        if isinstance(value, tuple) and len(value) == 2 and isinstance(value[0], str):
            value = [value]
        moves = tuple(
            (t, m if isinstance(m, SquareMatrix) else SquareMatrix(m)) for t, m in value
        )
        if len(key) == 2:
            if blind:
                trans[(key[0], key[1], None)] = moves
            else:
                for g in OMEGAS:
                    trans.setdefault((key[0], key[1], g), moves)
        else:
            trans[key] = moves
    return VectorAutomaton(
        states=tuple(states),
        alphabet=tuple(alphabet),
        q0=q0,
        accept=frozenset(accept),
        dim=v.dim,
        initial_vector=v,
        transitions=trans,
        deterministic=deterministic,
        blind=blind,
        check=dict(check or {}),
        accept_value=rat(accept_value),
        accept_entry=accept_entry,
    )
