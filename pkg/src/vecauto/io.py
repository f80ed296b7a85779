"""JSON machine files.

One document per machine.  Rationals are ``"p/q"`` strings, matrices are
row-major and, for vector automata, stored once in a ``matrices`` table and
referenced by name from each transition.
"""
from __future__ import annotations

import hashlib
import json
from typing import Any, Optional

from .errors import VecAutoError
from .linalg import RowVector, SquareMatrix, format_rational, parse_rational
from .machines import CheckSpec, CounterMachine, MultiplyAutomaton, TuFA, VectorAutomaton

VECTOR_KINDS = {
    "dva": (True, False),
    "dbva": (True, True),
    "nva": (False, False),
    "nbva": (False, True),
}
KINDS = tuple(VECTOR_KINDS) + ("counter", "fam", "famw", "tufa")


class MachineFileError(VecAutoError, ValueError):
    """A machine file could not be parsed or does not describe a valid machine."""


def _rats(values) -> list:
    return [format_rational(x) for x in values]


def _grid(m: SquareMatrix) -> list:
    return [_rats(row) for row in m.rows]


def to_dict(machine, provenance: Optional[dict] = None) -> dict:
    """Machine as a JSON-ready dict."""
    if isinstance(machine, VectorAutomaton):
        doc = _vector_doc(machine)
    elif isinstance(machine, CounterMachine):
        doc = _counter_doc(machine)
    elif isinstance(machine, MultiplyAutomaton):
        doc = _multiply_doc(machine)
    elif isinstance(machine, TuFA):
        doc = {
            "kind": "tufa",
            "alphabet": list(machine.alphabet),
            "n": machine.n,
            "initial_vector": _rats(machine.initial_vector),
            "final_vector": _rats(machine.final_vector),
            "matrices": {s: _grid(machine.matrices[s]) for s in machine.alphabet},
        }
    else:
        raise TypeError(f"cannot serialize {type(machine).__name__}")
    if provenance:
        doc["provenance"] = provenance
    return doc


def _header(m) -> dict:
    return {
        "states": list(m.states),
        "q0": m.q0,
        "accept": sorted(m.accept),
        "alphabet": list(m.alphabet),
    }


def _vector_doc(m: VectorAutomaton) -> dict:
    names: dict = {}
    transitions = []
    for (q, sym, omega), moves in m.transitions.items():
        if not moves:
            transitions.append({"from": q, "symbol": sym, "test": omega, "to": None})
        for target, mat in moves:
            if mat not in names:
                names[mat] = f"M{len(names) + 1}"
            transitions.append(
                {"from": q, "symbol": sym, "test": omega, "to": target, "matrix": names[mat]}
            )
    doc = {"kind": m.kind}
    doc.update(_header(m))
    doc.update(
        {
            "dim": m.dim,
            "initial_vector": _rats(m.initial_vector),
            "accept_value": format_rational(m.accept_value),
            "accept_entry": m.accept_entry,
            "check": {
                q: {"entry": c.entry, "constant": format_rational(c.constant)}
                for q, c in m.check.items()
            },
            "matrices": {name: _grid(mat) for mat, name in names.items()},
            "transitions": transitions,
        }
    )
    return doc


def _counter_doc(m: CounterMachine) -> dict:
    doc = {"kind": "counter"}
    doc.update(_header(m))
    doc.update(
        {
            "k": m.k,
            "bound": m.bound,
            "blind": m.blind,
            "zero_test_mode": m.zero_test_mode,
            "transitions": [
                {"from": q, "symbol": s, "test": t, "to": target, "increment": list(inc)}
                for (q, s, t), (target, inc) in m.transitions.items()
            ],
        }
    )
    return doc


def _multiply_doc(m: MultiplyAutomaton) -> dict:
    doc = {"kind": m.kind}
    doc.update(_header(m))
    doc.update(
        {
            "multipliers": sorted(_rats(m.multipliers)),
            "transitions": [
                {
                    "from": q,
                    "symbol": s,
                    "test": t,
                    "to": target,
                    "move": move,
                    "gamma": format_rational(gamma),
                }
                for (q, s, t), (target, move, gamma) in m.transitions.items()
            ],
        }
    )
    return doc


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def digest(machine) -> str:
    """sha256 of the canonical JSON form, provenance excluded."""
    return hashlib.sha256(canonical_json(to_dict(machine)).encode()).hexdigest()


def dumps(machine, provenance: Optional[dict] = None) -> str:
    return json.dumps(to_dict(machine, provenance), indent=2, ensure_ascii=False) + "\n"


def dump(machine, path, provenance: Optional[dict] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(machine, provenance))


# -- parsing -----------------------------------------------------------------


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        line = text.splitlines()[exc.lineno - 1] if text.splitlines() else ""
        raise MachineFileError(
            f"line {exc.lineno}, column {exc.colno}: {exc.msg}\n  {line}"
        ) from None
    return from_dict(doc)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def provenance_of(text: str) -> Optional[dict]:
    return json.loads(text).get("provenance")


def _field(doc: dict, name: str, where: str = "") -> Any:
    if name not in doc:
        raise MachineFileError(f"missing field {where + name!r}")
    return doc[name]


def _rat(value, where: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise MachineFileError(f"{where}: expected a rational string, got {value!r}")
    try:
        return parse_rational(str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise MachineFileError(f"{where}: {exc}") from None


def _vec(values, where: str) -> list:
    if not isinstance(values, list):
        raise MachineFileError(f"{where}: expected a list")
    return [_rat(x, f"{where}[{i}]") for i, x in enumerate(values)]


def _matrix(rows, where: str) -> SquareMatrix:
    if not isinstance(rows, list):
        raise MachineFileError(f"{where}: expected a list of rows")
    grid = [_vec(r, f"{where}[{i}]") for i, r in enumerate(rows)]
    try:
        return SquareMatrix(grid)
    except ValueError as exc:
        raise MachineFileError(f"{where}: {exc}") from None


def from_dict(doc: dict):
    if not isinstance(doc, dict):
        raise MachineFileError("machine file must hold a JSON object")
    kind = _field(doc, "kind")
    if kind not in KINDS:
        raise MachineFileError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    try:
        if kind in VECTOR_KINDS:
            return _parse_vector(doc, kind)
        if kind == "counter":
            return _parse_counter(doc)
        if kind in ("fam", "famw"):
            return _parse_multiply(doc, kind)
        return _parse_tufa(doc)
    except MachineFileError:
        raise
    except (ValueError, TypeError, KeyError) as exc:
        raise MachineFileError(f"invalid {kind} machine: {exc}") from None


def _common(doc: dict) -> dict:
    return {
        "states": tuple(_field(doc, "states")),
        "alphabet": tuple(_field(doc, "alphabet")),
        "q0": _field(doc, "q0"),
        "accept": frozenset(_field(doc, "accept")),
    }


def _parse_vector(doc: dict, kind: str) -> VectorAutomaton:
    deterministic, blind = VECTOR_KINDS[kind]
    mats = {
        name: _matrix(rows, f"matrices.{name}") for name, rows in doc.get("matrices", {}).items()
    }
    trans: dict = {}
    for i, t in enumerate(_field(doc, "transitions")):
        where = f"transitions[{i}]."
        key = (_field(t, "from", where), _field(t, "symbol", where), t.get("test"))
        moves = trans.setdefault(key, [])
        if t.get("to") is None:
            continue
        ref = _field(t, "matrix", where)
        if isinstance(ref, str):
            if ref not in mats:
                raise MachineFileError(f"{where}matrix: unknown matrix {ref!r}")
            mat = mats[ref]
        else:
            mat = _matrix(ref, where + "matrix")
        moves.append((t["to"], mat))
    check = {
        q: CheckSpec(int(_field(c, "entry", f"check.{q}.")), _rat(c.get("constant", "1"), f"check.{q}"))
        for q, c in doc.get("check", {}).items()
    }
    init = _vec(_field(doc, "initial_vector"), "initial_vector")
    dim = int(doc.get("dim", len(init)))
    return VectorAutomaton(
        dim=dim,
        initial_vector=RowVector(init),
        transitions={k: tuple(v) for k, v in trans.items()},
        deterministic=deterministic,
        blind=blind,
        check=check,
        accept_value=_rat(doc.get("accept_value", "1"), "accept_value"),
        accept_entry=int(doc.get("accept_entry", 1)),
        **_common(doc),
    )


def _parse_counter(doc: dict) -> CounterMachine:
    trans = {}
    for i, t in enumerate(_field(doc, "transitions")):
        where = f"transitions[{i}]."
        key = (_field(t, "from", where), _field(t, "symbol", where), t.get("test"))
        if key in trans:
            raise MachineFileError(f"{where}: duplicate transition {key}")
        trans[key] = (_field(t, "to", where), tuple(int(d) for d in _field(t, "increment", where)))
    return CounterMachine(
        k=int(_field(doc, "k")),
        transitions=trans,
        bound=int(doc.get("bound", 1)),
        blind=bool(doc.get("blind", False)),
        zero_test_mode=doc.get("zero_test_mode", "signs"),
        **_common(doc),
    )


def _parse_multiply(doc: dict, kind: str) -> MultiplyAutomaton:
    trans = {}
    for i, t in enumerate(_field(doc, "transitions")):
        where = f"transitions[{i}]."
        key = (_field(t, "from", where), _field(t, "symbol", where), t.get("test"))
        if key in trans:
            raise MachineFileError(f"{where}: duplicate transition {key}")
        trans[key] = (
            _field(t, "to", where),
            t.get("move", "right"),
            _rat(_field(t, "gamma", where), where + "gamma"),
        )
    multipliers = frozenset(_rat(g, "multipliers") for g in doc.get("multipliers", []))
    return MultiplyAutomaton(
        transitions=trans,
        with_equality=kind == "fam",
        multipliers=multipliers,
        **_common(doc),
    )


def _parse_tufa(doc: dict) -> TuFA:
    mats = {s: _matrix(rows, f"matrices.{s}") for s, rows in _field(doc, "matrices").items()}
    return TuFA(
        alphabet=tuple(_field(doc, "alphabet")),
        matrices=mats,
        initial_vector=RowVector(_vec(_field(doc, "initial_vector"), "initial_vector")),
        final_vector=tuple(_vec(_field(doc, "final_vector"), "final_vector")),
    )
