"""Language-preserving conversions between machine models.

Every function here is pure: it takes an immutable machine and returns a new
one.  Outputs have their endmarker moves written out only where they differ
from the implicit "stay put, identity" default.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NotApplicableError
from .linalg import RowVector, SquareMatrix, elementary_matrix, rat, swap_matrix
from .machines import (
    ENDMARKERS,
    MOVE_RIGHT,
    OMEGAS,
    RIGHT,
    SIGNS,
    SIMULTANEOUS_ZERO,
    CheckSpec,
    CounterMachine,
    MultiplyAutomaton,
    TuFA,
    VectorAutomaton,
)


def compact(m: VectorAutomaton) -> VectorAutomaton:
    """Drop explicit endmarker moves that coincide with the implicit default."""
    ident = SquareMatrix.identity(m.dim)
    guards = (None,) if m.blind else OMEGAS
    trans = dict(m.transitions)
    for q in m.states:
        for end in ENDMARKERS:
            keys = [(q, end, g) for g in guards]
            if all(trans.get(k) == ((q, ident),) for k in keys):
                if not any(k2[:2] == (q, end) and k2 not in keys for k2 in trans):
                    for k in keys:
                        trans.pop(k, None)
    return m.replace(transitions=trans)


def _conjugate(transitions: dict, left, right_for_target, right_for_accept) -> dict:
    """Rewrite every move ``q -> q'`` with matrix ``left(q) @ M @ right(q')``.

    Moves on the right endmarker use ``right_for_accept`` instead, because the
    vector after ``$`` is only inspected by the acceptance test.
    """
    out = {}
    for (q, sym, g), moves in transitions.items():
        new = []
        for target, mat in moves:
            right = right_for_accept if sym == RIGHT else right_for_target(target)
            new.append((target, left(q) @ mat @ right))
        out[(q, sym, g)] = tuple(new)
    return out


def normalize_check_entry(m: VectorAutomaton) -> VectorAutomaton:
    """Make every state test entry 1, keeping each state's constant.

    A state testing entry ``i`` keeps its vector with entries 1 and ``i``
    swapped; a move from ``q`` to ``q'`` becomes ``J_q M J_q'``.  With a
    uniform entry this is exactly the ``JMJ`` rewrite.
    """
    if m.blind:
        raise NotApplicableError("blind machines never test an entry; nothing to normalise")
    k = m.dim
    full = m.with_endmarker_defaults()
    swaps = {q: swap_matrix(m.check_for(q).entry, k) for q in m.states}
    trans = _conjugate(
        full.transitions,
        left=lambda q: swaps[q],
        right_for_target=lambda q: swaps[q],
        right_for_accept=swap_matrix(m.accept_entry, k),
    )
    out = full.replace(
        initial_vector=m.initial_vector @ swaps[m.q0],
        transitions=trans,
        check={q: CheckSpec(1, m.check_for(q).constant) for q in m.states if q in m.check},
        accept_entry=1,
    )
    return compact(out)


def _check_constants(m: VectorAutomaton) -> dict:
    if m.blind:
        return {q: Fraction(1) for q in m.states}
    for q in m.states:
        if m.check_for(q).entry != 1:
            raise NotApplicableError(
                f"state {q!r} tests entry {m.check_for(q).entry}; run normalize_check_entry first"
            )
    return {q: m.check_for(q).constant for q in m.states}


def normalize_check_value(m: VectorAutomaton) -> VectorAutomaton:
    """Make every test "entry 1 = 1" by adding one always-1 coordinate.

    In state ``q`` (testing against ``c_q``) the new vector is
    ``[v_1 - c_q + 1, v_2, ..., v_k, 1]``.  A move ``q -> q'`` with matrix
    ``M`` becomes ``E(c_q - 1) N E(1 - c_q')`` where ``N = diag(M, 1)`` and
    ``E(x)`` adds ``x`` times the last entry to the first.  The accept value
    is folded into the right-endmarker moves the same way.
    """
    if m.accept_entry != 1:
        raise NotApplicableError("acceptance tests a later entry; run normalize_check_entry first")
    consts = _check_constants(m)
    k1 = m.dim + 1

    def shift(x):
        return elementary_matrix(k1, k1, x)

    full = m.with_endmarker_defaults()
    padded = {
        key: tuple((t, mat.extend()) for t, mat in moves) for key, moves in full.transitions.items()
    }
    trans = _conjugate(
        padded,
        left=lambda q: shift(consts[q] - 1),
        right_for_target=lambda q: shift(1 - consts[q]),
        right_for_accept=shift(1 - m.accept_value),
    )
    v = RowVector(list(m.initial_vector) + [1]) @ shift(1 - consts[m.q0])
    out = VectorAutomaton(
        states=m.states,
        alphabet=m.alphabet,
        q0=m.q0,
        accept=m.accept,
        dim=k1,
        initial_vector=v,
        transitions=trans,
        deterministic=m.deterministic,
        blind=m.blind,
        check={} if m.blind else {q: CheckSpec(1, 1) for q in m.states},
        accept_value=1,
    )
    return compact(out)


def normalize_check_value_multiplicative(m: VectorAutomaton) -> VectorAutomaton:
    """Same-dimension alternative for nonzero constants.

    In state ``q`` entry 1 is kept divided by ``c_q``; a move becomes
    ``E1(c_q) M E1(1/c_q')`` with ``E1(x)`` scaling entry 1 by ``x``.
    """
    if m.accept_entry != 1:
        raise NotApplicableError("acceptance tests a later entry; run normalize_check_entry first")
    consts = _check_constants(m)
    if any(c == 0 for c in consts.values()) or m.accept_value == 0:
        raise NotApplicableError(
            "a check against 0 cannot be scaled to 1; use normalize_check_value instead"
        )
    k = m.dim

    def scale(x):
        return elementary_matrix(1, k, x)

    full = m.with_endmarker_defaults()
    trans = _conjugate(
        full.transitions,
        left=lambda q: scale(consts[q]),
        right_for_target=lambda q: scale(1 / consts[q]),
        right_for_accept=scale(1 / m.accept_value),
    )
    out = full.replace(
        initial_vector=m.initial_vector @ scale(1 / consts[m.q0]),
        transitions=trans,
        check={} if m.blind else {q: CheckSpec(1, 1) for q in m.states if q in m.check},
        accept_value=1,
    )
    return compact(out)


# -- one-dimensional machines and counters ----------------------------------


def _factorize(n: int) -> dict:
    out: dict = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def first_primes(count: int) -> tuple:
    primes: list = []
    n = 2
    while len(primes) < count:
        if all(n % p for p in primes if p * p <= n):
            primes.append(n)
        n += 1
    return tuple(primes)


def exponent_vector(x: Fraction, primes: Sequence[int]) -> tuple:
    """Prime exponents of a positive rational over a fixed factor base."""
    num = _factorize(x.numerator)
    den = _factorize(x.denominator)
    extra = (set(num) | set(den)) - set(primes)
    if extra:
        raise NotApplicableError(f"{x} has prime factors {sorted(extra)} outside the base")
    return tuple(num.get(p, 0) - den.get(p, 0) for p in primes)


def factor_base(m: VectorAutomaton) -> tuple:
    """Ascending primes dividing any multiplier of a one-dimensional machine."""
    primes: set = set()
    for mat in m.matrices():
        x = mat[0, 0]
        primes |= set(_factorize(x.numerator)) | set(_factorize(x.denominator))
    return tuple(sorted(primes))


def dva1_to_counter_machine(m: VectorAutomaton) -> CounterMachine:
    """Encode the single vector entry as prime exponents held in counters.

    The result tests only whether all counters are zero, which is exactly
    when the vector equals 1, and runs step for step with ``m``.
    """
    if m.dim != 1:
        raise NotApplicableError(f"machine has dimension {m.dim}, not 1")
    if not m.deterministic:
        raise NotApplicableError("counter machines here are deterministic")
    if m.initial_vector[0] != 1:
        raise NotApplicableError("counters start at zero, so the initial value must be 1")
    if m.accept_value != 1 or any(m.check_for(q) != CheckSpec(1, 1) for q in m.states):
        raise NotApplicableError("tests must compare against 1; normalise the machine first")
    for mat in m.matrices():
        if mat[0, 0] <= 0:
            raise NotApplicableError(f"multiplier {mat[0, 0]} is not a positive rational")
    primes = factor_base(m)
    k = max(len(primes), 1)
    trans = {}
    bound = 1
    for key, moves in m.transitions.items():
        if not moves:
            continue
        (target, mat), = moves
        inc = exponent_vector(mat[0, 0], primes) if primes else (0,)
        bound = max([bound] + [abs(d) for d in inc])
        trans[key] = (target, inc)
    return CounterMachine(
        states=m.states,
        alphabet=m.alphabet,
        q0=m.q0,
        accept=m.accept,
        k=k,
        transitions=trans,
        bound=bound,
        blind=m.blind,
        zero_test_mode=SIMULTANEOUS_ZERO,
    )


def counter_machine_to_dva1(m: CounterMachine, primes: Sequence[int] | None = None) -> VectorAutomaton:
    """Represent counters ``c_i`` by the single value ``prod p_i ** c_i``.

    ``primes`` defaults to the first ``k`` primes in ascending order.
    """
    if not m.blind and m.zero_test_mode == SIGNS:
        raise NotApplicableError(
            "only machines testing all counters for zero at once can be simulated in dimension 1"
        )
    primes = tuple(primes) if primes is not None else first_primes(m.k)
    if len(primes) != m.k:
        raise ValueError(f"need {m.k} primes, got {len(primes)}")
    trans = {}
    for key, (target, inc) in m.transitions.items():
        x = Fraction(1)
        for p, d in zip(primes, inc):
            x *= Fraction(p) ** d
        trans[key] = ((target, SquareMatrix.scalar(x)),)
    return VectorAutomaton(
        states=m.states,
        alphabet=m.alphabet,
        q0=m.q0,
        accept=m.accept,
        dim=1,
        initial_vector=RowVector([1]),
        transitions=trans,
        deterministic=True,
        blind=m.blind,
    )


# -- one-way to real time ---------------------------------------------------


def pause_closure(m: MultiplyAutomaton, state: str, symbol: str):
    """Follow stay-moves from ``state`` on ``symbol``.

    Returns ``(exit_state, product_of_multipliers)`` for the move that leaves
    the square, or ``None`` if the machine loops or hits an undefined move.
    """
    seen = set()
    product = Fraction(1)
    while True:
        if state in seen:
            return None
        seen.add(state)
        mv = m.move(state, symbol, Fraction(1))
        if mv is None:
            return None
        target, move, gamma = mv
        product *= gamma
        if move == MOVE_RIGHT:
            return target, product
        state = target


def famw_to_rtdbva1(m: MultiplyAutomaton) -> VectorAutomaton:
    """Compile a 1DFAMW into a blind real-time machine of dimension 1."""
    if m.with_equality:
        raise NotApplicableError("the register test makes pauses register-dependent")
    dead = "reject"
    while dead in m.states:
        dead += "_"
    one = SquareMatrix.scalar(1)
    trans = {}
    for q in m.states:
        for sym in m.alphabet + ENDMARKERS:
            exit_ = pause_closure(m, q, sym)
            if exit_ is None:
                trans[(q, sym, None)] = ((dead, one),)
            else:
                trans[(q, sym, None)] = ((exit_[0], SquareMatrix.scalar(exit_[1])),)
    for sym in m.alphabet:
        trans[(dead, sym, None)] = ((dead, one),)
    out = VectorAutomaton(
        states=m.states + (dead,),
        alphabet=m.alphabet,
        q0=m.q0,
        accept=m.accept,
        dim=1,
        initial_vector=RowVector([1]),
        transitions=trans,
        deterministic=True,
        blind=True,
    )
    return compact(out)


# -- Turakainen automata and blind vector automata --------------------------


def tufa_to_dbva(g: TuFA, cutpoint=1) -> VectorAutomaton:
    """One-state blind machine accepting ``{w : f_G(w) = cutpoint}``.

    Cutpoints other than 1 are first moved to 1: a nonzero cutpoint by
    scaling ``f``, a zero cutpoint by one extra always-1 state that adds 1 to
    every acceptance value.
    """
    lam = rat(cutpoint)
    init = g.initial_vector
    final = list(g.final_vector)
    mats = dict(g.matrices)
    if lam == 0:
        init = RowVector(list(init) + [1])
        final = final + [Fraction(1)]
        mats = {s: mat.extend() for s, mat in mats.items()}
    elif lam != 1:
        final = [x / lam for x in final]
    n = init.dim
    end = SquareMatrix([[final[i] if j == 0 else 0 for j in range(n)] for i in range(n)])
    trans = {("q", s, None): (("q", mats[s]),) for s in g.alphabet}
    trans[("q", RIGHT, None)] = (("q", end),)
    return VectorAutomaton(
        states=("q",),
        alphabet=g.alphabet,
        q0="q",
        accept=frozenset({"q"}),
        dim=n,
        initial_vector=init,
        transitions=trans,
        deterministic=True,
        blind=True,
    )


def constant_coordinate(m: VectorAutomaton) -> int | None:
    """A 1-based coordinate that provably stays 1 during every run, if any."""
    full = m.with_endmarker_defaults()
    mats = full.matrices()
    for j in range(m.dim):
        if m.initial_vector[j] != 1:
            continue
        if all(all(mat[i, j] == (1 if i == j else 0) for i in range(m.dim)) for mat in mats):
            return j + 1
    return None


def dbva_to_tufa(m: VectorAutomaton) -> TuFA:
    """Block construction: a TuFA with ``dim * |Q|`` states and cutpoint 1.

    Block ``(i, j)`` of ``A_sigma`` holds ``M`` when the machine moves from
    state ``i`` to state ``j`` with ``M``.  The left-endmarker move is folded
    into the initial vector and the right-endmarker move into ``f``, so
    ``f_G(w) = 1`` exactly when the machine accepts ``w``.

    When the accept value is nonzero ``f`` is divided by it.  An accept value
    of 0 needs a coordinate the machine keeps at 1; its column supplies the
    ``+1`` that separates accepting runs from rejecting ones.
    """
    if not m.blind or not m.deterministic:
        raise NotApplicableError("only deterministic blind machines have a block TuFA")
    k = m.dim
    idx = {q: i for i, q in enumerate(m.states)}
    n = k * len(m.states)
    full = m.with_endmarker_defaults()
    a = m.accept_value
    const = None
    if a == 0:
        const = constant_coordinate(m)
        if const is None:
            raise NotApplicableError(
                "accept value 0 with no invariant 1-coordinate; run normalize_check_value first"
            )

    def move(q, sym):
        found = full.transitions.get((q, sym, None))
        return found[0] if found else None

    matrices = {}
    for sym in m.alphabet:
        grid = [[Fraction(0)] * n for _ in range(n)]
        for q in m.states:
            mv = move(q, sym)
            if mv is None:
                continue
            target, mat = mv
            r0, c0 = idx[q] * k, idx[target] * k
            for r in range(k):
                for c in range(k):
                    grid[r0 + r][c0 + c] = mat[r, c]
        matrices[sym] = SquareMatrix(grid)

    init = [Fraction(0)] * n
    first = move(m.q0, ENDMARKERS[0])
    if first is not None:
        target, mat = first
        folded = m.initial_vector @ mat
        for r in range(k):
            init[idx[target] * k + r] = folded[r]

    final = [Fraction(0)] * n
    acc = m.accept_entry - 1
    for q in m.states:
        mv = move(q, RIGHT)
        if mv is None or mv[0] not in m.accept:
            continue
        _, mat = mv
        for r in range(k):
            if const is None:
                final[idx[q] * k + r] = mat[r, acc] / a
            else:
                final[idx[q] * k + r] = mat[r, acc] + mat[r, const - 1]
    return TuFA(
        alphabet=m.alphabet,
        matrices=matrices,
        initial_vector=RowVector(init),
        final_vector=tuple(final),
    )


TRANSFORMS = {
    "check-entry": normalize_check_entry,
    "check-value": normalize_check_value,
    "check-value-mult": normalize_check_value_multiplicative,
    "counters": dva1_to_counter_machine,
    "dva1": counter_machine_to_dva1,
    "rtdbva1": famw_to_rtdbva1,
    "tufa": dbva_to_tufa,
    "dbva": tufa_to_dbva,
}
