import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vecauto import zoo
from vecauto.diffcheck import differential_test, replay
from vecauto.machines import as_word
from vecauto.simulate import accepts


@pytest.mark.parametrize(
    "entry_id,word,verdict",
    [
        ("ufibonacci", "aaaaa", True),
        ("ufibonacci", "aaaa", False),
        ("ufibonacci", "aa", True),
        ("ufibonacci", "", False),
        ("ugauss-dva2", "", True),
        ("ugauss-dva2", "aa", True),
        ("ugauss-dva2", "a" * 12, True),
        ("ugauss-dva2", "a" * 13, False),
        ("ugauss-2ca", "aa", True),
        ("ugauss-2ca", "", True),
        ("ugauss-2ca", "a" * 20, True),
        ("lng-1", "a0a1a2", True),
        ("lng-1", "a0a1", False),
        ("lng-2", "", True),
        ("lng-2", "a0a0a1a2", False),
        ("lng-2", "a3a2a1a0", True),
        ("geqstar-dva2", "aab", True),
        ("geqstar-dva2", "abb", False),
        ("geqstar-dva2", "aabab", True),
        ("geqstar-fam", "aab", True),
        ("geqstar-fam", "abaab", True),
        ("geqstar-fam", "ba", False),
        ("mpal-dbva2", "abcba", True),
        ("mpal-dbva2", "c", True),
        ("mpal-dbva2", "abcab", False),
        ("mpal-dbva2", "acac", False),
        ("subsetsum", "101#11#10#", True),
        ("subsetsum", "10#11#", False),
        ("subsetsum", "0#1#", True),
        ("pow-nbva2", "aaa", True),
        ("pow-nbva2", "a" * 6, True),
        ("pow-nbva2", "aaaa", False),
        ("pow-nbva2", "a", False),
        ("famw-pause", "abb", True),
        ("famw-pause", "bab", False),
    ],
)
def test_machine_and_oracle_examples(entry_id, word, verdict):
    e = zoo.get(entry_id)
    w = as_word(word, e.alphabet)
    assert e.oracle(w) is verdict
    assert accepts(e.machine, w, cutpoint=e.cutpoint or 1) is verdict


@pytest.mark.parametrize("k,word,verdict", [(3, "a", True), (3, "aaa", False), (2, "", False)])
def test_mod_tufa_examples(k, word, verdict):
    e = zoo.get(f"mod{k}-tufa")
    assert e.machine.n == k
    assert e.oracle(tuple(word)) is verdict
    assert accepts(e.machine, word, cutpoint=1) is verdict


def test_fibonacci_oracle_values():
    members = [n for n in range(40) if zoo.fibonacci_oracle("a" * n)]
    assert members == [1, 2, 3, 5, 8, 13, 21, 34]


def test_gauss_oracle_values():
    assert [n for n in range(50) if zoo.ugauss_oracle("a" * n)] == [0, 2, 6, 12, 20, 30, 42]


def test_pow_oracle_values():
    assert [n for n in range(1101) if zoo.pow_oracle("a" * n)] == [
        3, 6, 11, 20, 37, 70, 135, 264, 521, 1034,
    ]


def test_subsetsum_oracle_parsing():
    assert zoo.subsetsum_oracle(tuple("101#11#10#"))
    assert not zoo.subsetsum_oracle(tuple("101#"))
    assert not zoo.subsetsum_oracle(tuple("1##1#"))
    assert not zoo.subsetsum_oracle(tuple("1#1"))


def test_geqstar_oracle_blocks():
    assert zoo.geqstar_oracle(())
    assert zoo.geqstar_oracle(tuple("aabaaabb"))
    assert not zoo.geqstar_oracle(tuple("aabb" + "a"))
    assert not zoo.geqstar_oracle(tuple("abbb"))


def test_fidelity_counterexamples_are_recorded():
    geq = zoo.get("geqstar-dva2", fidelity=True)
    assert "aababb" in geq.fidelity_notes and "ababb" in geq.fidelity_notes
    report = differential_test(geq.machine, geq.oracle, geq.alphabet, 6, stop_at_first=False)
    texts = ["".join(w) for w in report.disagreements]
    assert texts[0] == "ababb"
    assert "aababb" in texts
    assert replay(geq.machine, geq.oracle, tuple("aababb")) == (True, False)

    fib = zoo.get("ufibonacci", fidelity=True)
    assert accepts(fib.machine, "") and not fib.oracle(())

    pw = zoo.get("pow-nbva2", fidelity=True)
    assert accepts(pw.machine, "a") and not pw.oracle(("a",))


def test_subsetsum_literal_subtraction_fails():
    lit = zoo.get("subsetsum", fidelity=True)
    word = tuple("11#1#10#")
    assert lit.oracle(word)
    assert not accepts(lit.machine, word)
    assert accepts(zoo.get("subsetsum").machine, word)


def test_literal_gauss_tests_second_entry():
    lit = zoo.get("ugauss-dva2", fidelity=True)
    assert lit.machine.check_for("up1").entry == 2
    assert differential_test(lit.machine, lit.oracle, lit.alphabet, 120).clean


def test_every_fidelity_variant_has_notes():
    for entry_id in zoo.DEFAULT_IDS:
        if zoo.has_fidelity_variant(entry_id):
            e = zoo.get(entry_id, fidelity=True)
            assert e.fidelity and e.fidelity_notes
        assert zoo.get(entry_id).fidelity_notes


def test_registry_errors():
    with pytest.raises(KeyError):
        zoo.get("nope")
    with pytest.raises(KeyError):
        zoo.get("mpal-dbva2", fidelity=True)
    assert zoo.get("lng-3").alphabet == ("a0", "a1", "a2", "a3", "a4")
    assert zoo.get("mod7-tufa").machine.n == 7


@given(st.integers(0, 2**32))
@settings(max_examples=30, deadline=None)
def test_subsetsum_sampler_is_well_formed(seed):
    word = zoo.subsetsum_instance(random.Random(seed))
    text = "".join(word)
    assert text.endswith("#") and text.count("#") >= 2
    assert all(int(x, 2) < 2**8 for x in text.split("#")[:-1])


@given(st.integers(0, 2**32))
@settings(max_examples=10, deadline=None)
def test_sampler_is_deterministic(seed):
    a = zoo.subsetsum_instance(random.Random(seed))
    b = zoo.subsetsum_instance(random.Random(seed))
    assert a == b
