import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vecauto import io, zoo
from vecauto.cli import main
from vecauto.diffcheck import enumerate_words
from vecauto.linalg import SquareMatrix
from vecauto.machines import EQ, STAY, MultiplyAutomaton, vector_automaton
from vecauto.simulate import accepts

ALL_IDS = list(zoo.DEFAULT_IDS) + [f"{i}!" for i in zoo.DEFAULT_IDS if zoo.has_fidelity_variant(i)]


def _entry(ref):
    return zoo.get(ref.rstrip("!"), fidelity=ref.endswith("!"))


@pytest.mark.parametrize("ref", ALL_IDS)
def test_round_trip_every_zoo_machine(ref):
    m = _entry(ref).machine
    text = io.dumps(m, {"zoo": ref})
    back = io.loads(text)
    assert back == m
    assert io.digest(back) == io.digest(m)
    assert io.provenance_of(text) == {"zoo": ref}


def test_round_trip_preserves_behaviour():
    e = zoo.get("mpal-dbva2")
    back = io.loads(io.dumps(e.machine))
    for w in enumerate_words(e.alphabet, 5):
        assert accepts(back, w) == accepts(e.machine, w)


@given(
    st.lists(st.lists(st.fractions(-5, 5, max_denominator=7), min_size=2, max_size=2), min_size=2, max_size=2),
    st.lists(st.fractions(-5, 5, max_denominator=7), min_size=2, max_size=2),
)
@settings(max_examples=40, deadline=None)
def test_round_trip_random_matrices(rows, init):
    m = vector_automaton(
        states=["p", "q"],
        alphabet=["x"],
        q0="p",
        accept=["q"],
        initial_vector=init,
        transitions={("p", "x"): ("q", SquareMatrix(rows)), ("q", "x"): ("p", SquareMatrix(rows))},
        blind=True,
    )
    assert io.loads(io.dumps(m)) == m


def test_digest_ignores_provenance():
    m = zoo.get("ugauss-dva2").machine
    a = io.loads(io.dumps(m, {"note": "one"}))
    assert io.digest(a) == io.digest(m)
    assert io.digest(m) != io.digest(zoo.get("ugauss-dva2", fidelity=True).machine)


def test_parse_error_names_the_line():
    text = io.dumps(zoo.get("mod3-tufa").machine)
    broken = text.replace('"n":', '"n"', 1)
    with pytest.raises(io.MachineFileError) as info:
        io.loads(broken)
    assert "line" in str(info.value)


def test_schema_errors():
    doc = json.loads(io.dumps(zoo.get("ufibonacci").machine))
    with pytest.raises(io.MachineFileError):
        io.from_dict({**doc, "kind": "turing"})
    missing = dict(doc)
    del missing["initial_vector"]
    with pytest.raises(io.MachineFileError, match="initial_vector"):
        io.from_dict(missing)
    with pytest.raises(io.MachineFileError):
        io.from_dict({**doc, "initial_vector": ["1/0", "1"]})


# -- command line ----------------------------------------------------------------


def test_run_accept_and_reject(capsys):
    assert main(["run", "zoo:ugauss-dva2", "-i", "aa"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("ACCEPT") and "steps 4" in out
    assert main(["run", "zoo:pow-nbva2", "-i", "aaaa"]) == 1
    assert capsys.readouterr().out.startswith("REJECT")


def test_run_trace_is_json(capsys):
    assert main(["run", "zoo:mpal-dbva2", "-i", "c", "--trace"]) == 0
    out = capsys.readouterr().out
    doc = json.loads(out[out.index("{"):])
    assert doc["verdict"] == "accept"


def test_run_from_file(tmp_path, capsys):
    path = tmp_path / "g.json"
    assert main(["zoo", "export", "geqstar-dva2", "-o", str(path)]) == 0
    assert main(["run", str(path), "-i", "aab"]) == 0
    assert capsys.readouterr().out.startswith("ACCEPT")


def test_usage_errors(capsys):
    assert main(["run", "zoo:nope"]) == 2
    assert main(["run", "zoo:ugauss-dva2", "-i", "b"]) == 2
    assert main(["convert", "zoo:ugauss-2ca", "--to", "dva1"]) == 2
    assert main(["eval", "zoo:ufibonacci"]) == 2
    assert main(["check", "zoo:mpal-dbva2", "--fidelity"]) == 2
    with pytest.raises(SystemExit):
        main(["convert", "zoo:mpal-dbva2", "--to", "nothing"])


def test_resource_exit(capsys):
    assert main(["run", "zoo:pow-nbva2", "-i", "a" * 10, "--cap", "2"]) == 3
    assert "step" in capsys.readouterr().err


def test_budget_exit(tmp_path, capsys):
    m = MultiplyAutomaton(
        states=("p",),
        alphabet=("a",),
        q0="p",
        accept=frozenset({"p"}),
        transitions={("p", "a", EQ): ("p", STAY, 2), ("p", "a", "!="): ("p", STAY, 2)},
    )
    path = tmp_path / "spin.json"
    io.dump(m, path)
    assert main(["run", str(path), "-i", "a", "--budget", "9"]) == 3


def test_convert_counters_records_primes(capsys):
    assert main(["convert", "zoo:lng-2", "--to", "counters"]) == 0
    text = capsys.readouterr().out
    assert io.provenance_of(text)["primes"] == [2, 3, 5]
    m = io.loads(text)
    assert m.kind == "counter" and m.k == 3


def test_convert_tufa_to_dbva_and_back(tmp_path, capsys):
    path = tmp_path / "d.json"
    assert main(["convert", "zoo:mod3-tufa", "--to", "dbva", "--lambda", "1", "-o", str(path)]) == 0
    prov = io.provenance_of(path.read_text())
    assert prov["cutpoint"] == "1" and prov["transform"] == "dbva"
    assert prov["source_digest"] == io.digest(zoo.get("mod3-tufa").machine)
    assert main(["run", str(path), "-i", "aa"]) == 0
    capsys.readouterr()
    assert main(["convert", "zoo:mpal-dbva2", "--to", "tufa"]) == 0
    assert io.loads(capsys.readouterr().out).n == 6


def test_eval(capsys):
    assert main(["eval", "zoo:mod3-tufa", "-i", "aa"]) == 0
    assert capsys.readouterr().out.strip() == "1"
    assert main(["eval", "zoo:mod3-tufa", "-i", "aaa"]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_check_random_subsetsum(capsys):
    assert main(["check", "zoo:subsetsum", "--random", "300", "--seed", "7"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["clean"] and doc["words_tested"] == 300


def test_check_exhaustive_and_bits(tmp_path, capsys):
    report = tmp_path / "r.json"
    assert main(["check", "zoo:geqstar-dva2", "--max-len", "10", "--bits", "--report", str(report)]) == 0
    doc = json.loads(report.read_text())
    assert doc["words_tested"] == 2**11 - 1
    assert not doc["bit_violations"]


def test_check_fidelity_counterexample(capsys):
    assert main(["check", "zoo:geqstar-dva2", "--fidelity", "--max-len", "6"]) == 1
    captured = capsys.readouterr()
    assert "'ababb'" in captured.err
    assert json.loads(captured.out)["counterexample"]["text"] == "ababb"


def test_check_against_machine(tmp_path, capsys):
    path = tmp_path / "fam.json"
    assert main(["zoo", "export", "geqstar-fam", "-o", str(path)]) == 0
    assert main(["check", "zoo:geqstar-dva2", "--against", str(path), "--max-len", "8"]) == 0
    assert main(["check", "zoo:geqstar-dva2", "--fidelity", "--against", str(path), "--max-len", "6"]) == 1


def test_zoo_list_and_export(capsys):
    assert main(["zoo", "list"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == len(zoo.DEFAULT_IDS)
    assert any(line.startswith("pow-nbva2") and "fidelity" in line for line in lines)
    assert main(["zoo", "export", "subsetsum", "--fidelity"]) == 0
    text = capsys.readouterr().out
    prov = io.provenance_of(text)
    assert prov["fidelity"] is True and prov["zoo"] == "subsetsum"
    assert io.loads(text) == zoo.get("subsetsum", fidelity=True).machine
