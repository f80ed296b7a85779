"""Command-line front end.

Machines are given as JSON files or as ``zoo:<id>`` (add ``(fidelity)`` or
``--fidelity`` for the literal-matrix variant).

Exit codes: 0 accept / clean, 1 reject / counterexample, 2 usage, parse or
not-applicable errors, 3 resource limits.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional

from . import diffcheck, io, simulate, transforms, zoo
from .errors import InputError, MachineError, NotApplicableError, ResourceLimitError, VecAutoError
from .linalg import format_rational, parse_rational
from .machines import CounterMachine, MultiplyAutomaton, TuFA, VectorAutomaton

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class UsageError(VecAutoError):
    pass


def resolve(ref: str, fidelity: bool = False):
    """Return ``(machine, zoo entry or None)`` for a path or ``zoo:<id>``."""
    if ref.startswith("zoo:"):
        name = ref[4:]
        m = re.fullmatch(r"(.+)\(fidelity\)", name)
        if m:
            name, fidelity = m.group(1), True
        try:
            entry = zoo.get(name, fidelity=fidelity)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        return entry.machine, entry
    if fidelity:
        raise UsageError("--fidelity applies to zoo machines only")
    try:
        return io.load(ref), None
    except OSError as exc:
        raise UsageError(f"cannot read {ref}: {exc.strerror}") from None


def _cutpoint(args, entry) -> object:
    if getattr(args, "cutpoint", None) is not None:
        return parse_rational(args.cutpoint)
    if entry is not None and entry.cutpoint is not None:
        return entry.cutpoint
    return 1


def _final_text(cfg) -> str:
    if isinstance(cfg, tuple) and not hasattr(cfg, "_fields"):
        return f"frontier of {len(cfg)} configurations"
    doc = cfg.to_json()
    parts = [f"state {doc.pop('state')}"]
    for key, value in doc.items():
        if isinstance(value, list):
            value = "[" + ", ".join(str(x) for x in value) + "]"
        parts.append(f"{key} {value}")
    return ", ".join(parts)


def cmd_run(args) -> int:
    machine, entry = resolve(args.machine, args.fidelity)
    if isinstance(machine, TuFA):
        value = simulate.eval_tufa(machine, args.input)
        lam = _cutpoint(args, entry)
        member = value == lam
        print("ACCEPT" if member else "REJECT")
        print(f"value {format_rational(value)} (cutpoint {format_rational(lam)})")
        return EXIT_OK if member else EXIT_NO
    trace = simulate.run(machine, args.input, cap=args.cap, step_budget=args.budget)
    if trace.verdict == simulate.BUDGET_EXHAUSTED:
        print(f"BUDGET EXHAUSTED: {trace.diagnostic}", file=sys.stderr)
        return EXIT_RESOURCE
    print("ACCEPT" if trace.accepted else "REJECT")
    print(f"final {_final_text(trace.final)}")
    print(f"steps {len(trace.steps)}")
    if trace.diagnostic:
        print(f"note {trace.diagnostic}")
    if args.trace:
        print(json.dumps(trace.to_json(), indent=2, ensure_ascii=False))
    return EXIT_OK if trace.accepted else EXIT_NO


_SOURCE_TYPES = {
    "check-entry": VectorAutomaton,
    "check-value": VectorAutomaton,
    "check-value-mult": VectorAutomaton,
    "counters": VectorAutomaton,
    "tufa": VectorAutomaton,
    "dva1": CounterMachine,
    "rtdbva1": MultiplyAutomaton,
    "dbva": TuFA,
}


def convert(machine, target: str, *, cutpoint=None, primes=None):
    """Apply a named transform; returns ``(result, provenance extras)``."""
    if target not in transforms.TRANSFORMS:
        raise UsageError(f"unknown transform {target!r}; choose from {', '.join(transforms.TRANSFORMS)}")
    need = _SOURCE_TYPES[target]
    if not isinstance(machine, need):
        raise NotApplicableError(
            f"{target} applies to {need.__name__} machines, not {getattr(machine, 'kind', '?')}"
        )
    extra: dict = {}
    fn = transforms.TRANSFORMS[target]
    if target == "dbva":
        lam = 1 if cutpoint is None else cutpoint
        extra["cutpoint"] = format_rational(parse_rational(str(lam)))
        return fn(machine, lam), extra
    if target == "dva1":
        result = fn(machine, primes)
        extra["primes"] = list(primes or transforms.first_primes(machine.k))
        return result, extra
    if target == "counters":
        result = fn(machine)
        extra["primes"] = list(transforms.factor_base(machine))
        return result, extra
    if target == "tufa":
        extra["cutpoint"] = "1"
    return fn(machine), extra


def cmd_convert(args) -> int:
    machine, _ = resolve(args.machine, args.fidelity)
    primes = [int(p) for p in args.primes.split(",")] if args.primes else None
    result, extra = convert(machine, args.to, cutpoint=args.cutpoint, primes=primes)
    provenance = {"transform": args.to, "source_digest": io.digest(machine)}
    provenance.update(extra)
    text = io.dumps(result, provenance)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {result.kind} machine to {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_eval(args) -> int:
    machine, _ = resolve(args.machine, args.fidelity)
    if not isinstance(machine, TuFA):
        raise UsageError("eval needs a TuFA")
    print(format_rational(simulate.eval_tufa(machine, args.input)))
    return EXIT_OK


def cmd_check(args) -> int:
    machine, entry = resolve(args.machine, args.fidelity)
    alphabet = entry.alphabet if entry is not None else machine.alphabet
    max_len = args.max_len
    if max_len is None and args.random is None:
        max_len = entry.certified_len if entry is not None else 8
    sampler = None
    if args.random is not None:
        if entry is not None and entry.sampler is not None:
            sampler = entry.sampler
        else:
            sampler = diffcheck.uniform_length_sampler(alphabet, max_len if max_len is not None else 10)
    common = dict(
        sampler=sampler,
        samples=args.random or 0,
        seed=args.seed,
        cap=args.cap,
        step_budget=args.budget,
        stop_at_first=not args.all,
    )
    if sampler is not None:
        max_len = None
    if args.against == "oracle":
        if entry is None:
            raise UsageError("--against oracle needs a zoo machine")
        report = diffcheck.differential_test(
            machine, entry.oracle, alphabet, max_len,
            cutpoint=_cutpoint(args, entry), check_bits=args.bits, name=args.machine, **common
        )
    else:
        other, other_entry = resolve(args.against)
        report = diffcheck.equivalence_test(
            machine, other, alphabet, max_len,
            cutpoints=(_cutpoint(args, entry), _cutpoint(args, other_entry)),
            names=[args.machine, args.against], **common
        )
    doc = json.dumps(report.to_json(), indent=2, ensure_ascii=False)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(doc + "\n")
    else:
        print(doc)
    if report.clean:
        print(f"clean: {report.words_tested} words ({report.source})", file=sys.stderr)
        return EXIT_OK
    word = report.counterexample
    if word is not None:
        print(f"counterexample: {''.join(word)!r} {report.verdicts}", file=sys.stderr)
    else:
        print("bit-growth bound violated", file=sys.stderr)
    return EXIT_NO


def cmd_zoo(args) -> int:
    if args.zoo_command == "list":
        for entry_id in zoo.DEFAULT_IDS:
            e = zoo.get(entry_id)
            tag = " (fidelity variant)" if zoo.has_fidelity_variant(entry_id) else ""
            print(f"{entry_id}\t{e.machine.kind}\t{','.join(e.alphabet)}{tag}")
        return EXIT_OK
    machine, entry = resolve(f"zoo:{args.id}", args.fidelity)
    provenance = {"zoo": entry.id, "fidelity": entry.fidelity, "notes": entry.fidelity_notes}
    text = io.dumps(machine, provenance)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vecauto", description="Simulate and cross-check exact vector automata")
    sub = p.add_subparsers(dest="command", required=True)

    def machine_arg(sp):
        sp.add_argument("machine", help="machine file or zoo:<id>")
        sp.add_argument("--fidelity", action="store_true", help="use the literal-matrix zoo variant")

    def limits(sp):
        sp.add_argument("--cap", type=int, default=simulate.DEFAULT_FRONTIER_CAP, help="frontier cap")
        sp.add_argument("--budget", type=int, default=None, help="1DFAM step budget")

    sp = sub.add_parser("run", help="run a machine on one word")
    machine_arg(sp)
    sp.add_argument("--input", "-i", default="", help="input word")
    sp.add_argument("--trace", action="store_true", help="dump the run trace as JSON")
    sp.add_argument("--lambda", dest="cutpoint", default=None, help="TuFA cutpoint")
    limits(sp)
    sp.set_defaults(func=cmd_run)

    sp = sub.add_parser("convert", help="apply a model transform")
    machine_arg(sp)
    sp.add_argument("--to", required=True, choices=sorted(transforms.TRANSFORMS))
    sp.add_argument("--lambda", dest="cutpoint", default=None, help="cutpoint for --to dbva")
    sp.add_argument("--primes", default=None, help="comma-separated primes for --to dva1")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("eval", help="exact acceptance value of a TuFA")
    machine_arg(sp)
    sp.add_argument("--input", "-i", default="")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("check", help="differential or equivalence test")
    machine_arg(sp)
    sp.add_argument("--against", default="oracle", help="'oracle' or a second machine")
    sp.add_argument("--max-len", type=int, default=None)
    sp.add_argument("--random", type=int, default=None, help="number of sampled words")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--all", action="store_true", help="collect every disagreement")
    sp.add_argument("--bits", action="store_true", help="also check the bit-growth bound")
    sp.add_argument("--lambda", dest="cutpoint", default=None, help="TuFA cutpoint")
    sp.add_argument("--report", default=None, help="write the JSON report here")
    limits(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("zoo", help="list or export zoo machines")
    zsub = sp.add_subparsers(dest="zoo_command", required=True)
    zsub.add_parser("list")
    ex = zsub.add_parser("export")
    ex.add_argument("id")
    ex.add_argument("--fidelity", action="store_true")
    ex.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=cmd_zoo)
    return p


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, io.MachineFileError, MachineError, InputError, NotApplicableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
