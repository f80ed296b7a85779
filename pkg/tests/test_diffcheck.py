import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vecauto import zoo
from vecauto.diffcheck import (
    bit_bound,
    bitgrowth_probe,
    differential_test,
    enumerate_words,
    equivalence_test,
    matrix_growth,
    replay,
    sample_words,
    uniform_length_sampler,
    word_count,
)
from vecauto.errors import ResourceLimitError
from vecauto.linalg import SquareMatrix
from vecauto.machines import vector_automaton
from vecauto.simulate import accepts


def test_enumeration_order():
    assert ["".join(w) for w in enumerate_words("a", 3)] == ["", "a", "aa", "aaa"]
    assert ["".join(w) for w in enumerate_words("ab", 2)] == ["", "a", "b", "aa", "ab", "ba", "bb"]


def test_enumeration_count():
    assert sum(1 for _ in enumerate_words("abc", 10)) == 88573 == word_count(3, 10)
    with pytest.raises(ValueError):
        list(enumerate_words("a", -1))


@given(st.integers(1, 4), st.integers(0, 6))
@settings(max_examples=20, deadline=None)
def test_count_matches_geometric_sum(size, n):
    alphabet = [chr(ord("a") + i) for i in range(size)]
    words = list(enumerate_words(alphabet, n))
    assert len(words) == word_count(size, n)
    assert len(set(words)) == len(words)


def test_exhaustive_walk_matches_enumeration():
    e = zoo.get("geqstar-dva2")
    seen = []
    report = differential_test(
        e.machine, lambda w: seen.append(w) or e.oracle(w), e.alphabet, 5
    )
    assert report.clean
    assert seen == list(enumerate_words(e.alphabet, 5))


def test_self_oracle_is_clean():
    e = zoo.get("mpal-dbva2")
    report = differential_test(e.machine, lambda w: accepts(e.machine, w), e.alphabet, 5)
    assert report.clean and report.words_tested == word_count(3, 5)
    assert equivalence_test(e.machine, e.machine, e.alphabet, 5).clean


def test_ugauss_certified():
    e = zoo.get("ugauss-dva2")
    report = differential_test(e.machine, e.oracle, e.alphabet, 400)
    assert report.clean and report.words_tested == 401


def test_first_counterexample_stops_run():
    e = zoo.get("geqstar-dva2", fidelity=True)
    report = differential_test(e.machine, e.oracle, e.alphabet, 6)
    assert report.counterexample == tuple("ababb")
    assert report.verdicts == {"machine": True, "oracle": False}
    assert report.words_tested == word_count(2, 4) + 12
    # replays to the same disagreement
    got, want = replay(e.machine, e.oracle, report.counterexample)
    assert got != want


def test_equivalence_is_symmetric():
    lit = zoo.get("geqstar-dva2", fidelity=True).machine
    fixed = zoo.get("geqstar-dva2").machine
    a = equivalence_test(lit, fixed, "ab", 6)
    b = equivalence_test(fixed, lit, "ab", 6)
    assert a.counterexample == b.counterexample == tuple("ababb")


def test_sampling_is_deterministic():
    sampler = uniform_length_sampler("ab", 9)
    assert sample_words(sampler, 50, 3) == sample_words(sampler, 50, 3)
    e = zoo.get("subsetsum")
    r1 = differential_test(e.machine, e.oracle, e.alphabet, sampler=e.sampler, samples=40, seed=11)
    r2 = differential_test(e.machine, e.oracle, e.alphabet, sampler=e.sampler, samples=40, seed=11)
    assert r1.to_json()["words_tested"] == r2.to_json()["words_tested"] == 40
    assert r1.clean and "seed 11" in r1.source


def test_resource_errors_carry_the_word():
    e = zoo.get("pow-nbva2")
    with pytest.raises(ResourceLimitError) as info:
        differential_test(e.machine, e.oracle, e.alphabet, 30, cap=5)
    # frontier after a^k holds k branches, so the sixth symbol breaks the cap
    assert info.value.word == ("a",) * 6


def test_report_json():
    e = zoo.get("geqstar-dva2", fidelity=True)
    doc = differential_test(e.machine, e.oracle, e.alphabet, 6).to_json()
    json.dumps(doc)
    assert doc["counterexample"]["text"] == "ababb"
    assert doc["clean"] is False


def test_frontier_statistics():
    e = zoo.get("subsetsum")
    report = differential_test(e.machine, e.oracle, e.alphabet, 6)
    assert report.max_frontier >= 2


# -- bit growth ------------------------------------------------------------------


def test_ugauss_grows_one_bit_per_step():
    m = zoo.get("ugauss-dva2").machine
    report = bitgrowth_probe(m, [("a",) * 100])
    assert report.clean
    assert report.max_step_growth <= 1


def test_identity_machine_has_no_growth():
    m = vector_automaton(
        states=["q"],
        alphabet=["a"],
        q0="q",
        accept=["q"],
        initial_vector=[3, 5],
        transitions={("q", "a"): ("q", SquareMatrix.identity(2))},
    )
    report = bitgrowth_probe(m, [("a",) * 20])
    assert bit_bound(m)[1] == 0
    assert report.max_step_growth == 0 and report.clean


def test_mpal_bound():
    m = zoo.get("mpal-dbva2").machine
    words = list(enumerate_words("abc", 10))[-500:]
    report = bitgrowth_probe(m, words)
    b0, bmax = bit_bound(m)
    assert report.clean
    assert report.max_bits <= b0 + 12 * bmax


def test_matrix_growth_examples():
    assert matrix_growth(SquareMatrix.diagonal([2, 1])) == 1
    assert matrix_growth(SquareMatrix.identity(3)) == 0
    assert matrix_growth(SquareMatrix([[10, 0], [2, 1]])) == 4


@given(
    st.lists(st.lists(st.fractions(-9, 9, max_denominator=6), min_size=2, max_size=2), min_size=2, max_size=2),
    st.lists(st.fractions(-9, 9, max_denominator=6), min_size=2, max_size=2),
    st.lists(st.sampled_from("ab"), max_size=10),
)
@settings(max_examples=60, deadline=None)
def test_bound_holds_for_random_machines(rows, init, word):
    mat = SquareMatrix(rows)
    m = vector_automaton(
        states=["q"],
        alphabet=["a", "b"],
        q0="q",
        accept=["q"],
        initial_vector=init,
        transitions={("q", "a"): ("q", mat), ("q", "b"): ("q", mat @ mat)},
        blind=True,
    )
    assert bitgrowth_probe(m, [tuple(word)]).clean


@given(st.integers(0, 2**20))
@settings(max_examples=20, deadline=None)
def test_exhaustive_bit_checks_match_probe(seed):
    rng = random.Random(seed)
    e = zoo.get("lng-1")
    words = [tuple(rng.choice(e.alphabet) for _ in range(rng.randint(0, 8))) for _ in range(5)]
    report = differential_test(e.machine, e.oracle, e.alphabet, words=words, check_bits=True)
    assert report.clean
    assert report.max_bits == max(bitgrowth_probe(e.machine, words).max_bits, 1)
