"""Command-line interface.

Exit codes: 0 success / valid / ok, 1 semantic failure (invalid, violation,
not found), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from importlib import resources
from pathlib import Path

import yaml

from . import linalg, phase
from .countermodel import falsify
from .harness import soundness_harness
from .kernel import Mode, ProofError, ProofTree, RuleTag, check_proof, search
from .models import ModelRecipe, enumerate_qstructures, is_orthoclosed, sample_qstructure
from .phase import QStructure
from .syntax import (ParseError, bind, eval_formula, parse, parse_sequent,
                     right_normalize, sequent_valid)


class InputError(Exception):
    pass


# -- file formats -------------------------------------------------------------

def model_to_dict(q: QStructure, name: str = "") -> dict:
    d = {"name": name, "size": q.size, "unit": q.unit,
         "dot": [list(r) for r in q.dot], "garbage": sorted(q.garbage)}
    if q.labels:
        d["labels"] = list(q.labels)
    return d


def model_from_dict(d: dict, check: bool = True) -> QStructure:
    """Build a structure from an explicit table or a ``recipe`` entry.

    With ``check``, explicit tables must satisfy the axioms.
    """
    if not isinstance(d, dict):
        raise InputError("model file must hold a JSON object")
    if "recipe" in d:
        r = d["recipe"]
        params = {k: v for k, v in r.items() if k != "kind"}
        if r.get("kind") == "ray" and not is_orthoclosed(params.get("rays", []),
                                                        params.get("ambient_dim", 0)):
            print("warning: ray list is not closed under orthocomplement; "
                  "some spans of rays will not be facts", file=sys.stderr)
        try:
            return ModelRecipe(r["kind"], params).build()
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"bad recipe: {e}") from e
    try:
        labels = d.get("labels")
        size = int(d["size"])
        unit = d.get("unit", 0)
        if isinstance(unit, str) and labels:
            unit = labels.index(unit)
        garbage = [labels.index(g) if isinstance(g, str) and labels else g
                   for g in d.get("garbage", [])]
        dot = [[labels.index(v) if isinstance(v, str) and labels else v for v in row]
               for row in d["dot"]]
        q = QStructure(size, int(unit), dot, set(garbage), labels)
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"malformed model: {e}") from e
    if check:
        report = phase.validate(q)
        if report:
            raise InputError("model violates the axioms: " + "; ".join(map(str, report[:5])))
    return q


def load_json(path: str) -> object:
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON: {e}") from e


def load_model(path: str, check: bool = True) -> QStructure:
    return model_from_dict(load_json(path), check)


def load_assignment(q: QStructure, arg: str | None) -> dict:
    """Assignment from a JSON/YAML file path or inline YAML like ``{a: [e0, ep]}``."""
    if not arg:
        return {}
    p = Path(arg)
    text = p.read_text() if p.is_file() else arg
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise InputError(f"cannot parse assignment: {e}") from e
    if not isinstance(raw, dict):
        raise InputError("assignment must map atom names to element lists")
    try:
        return bind(q, {str(k): list(v or []) for k, v in raw.items()})
    except ValueError as e:
        raise InputError(f"bad assignment: {e}") from e


def bundled(name: str) -> str:
    """Path of a bundled fixture, e.g. ``models/c1.json``."""
    return str(resources.files("qphase") / "data" / name)


# -- commands -------------------------------------------------------------------

def _flags(f: phase.Fact) -> str:
    q = f.q
    tags = []
    if f == phase.one_fact(q):
        tags.append("1")
    if f == phase.zero_fact(q):
        tags.append("0")
    if f == phase.top_fact(q):
        tags.append("T")
    if f == phase.z_fact(q):
        tags.append("Z")
    valid = "valid" if phase.is_valid_fact(f) else "-"
    return f"{f!r:<32} {valid:<6} {' '.join(tags)}".rstrip()


def cmd_validate(args) -> int:
    q = load_model(args.model, check=False)
    report = phase.validate(q)
    if not report:
        print("valid")
        missing = phase.garbage_products_report(q)
        if missing:
            print("note: garbage elements not of the form x.y with x perp y: "
                  + ", ".join(q.label(z) for z in sorted(missing)))
        return 0
    for v in report:
        print(f"{v.condition} violated at ({', '.join(q.label(x) for x in v.witness)})")
    return 1


def cmd_facts(args) -> int:
    q = load_model(args.model)
    for f in phase.all_facts(q):
        print(_flags(f))
    print(f"# {len(phase.all_facts(q))} facts; projective: {phase.is_projective(q)}; "
          f"1 == T: {phase.one_fact(q) == phase.top_fact(q)}")
    return 0


def cmd_eval(args) -> int:
    q = load_model(args.model)
    asg = load_assignment(q, args.assignment)
    f = parse(args.formula)
    try:
        print(repr(eval_formula(q, asg, f)))
    except KeyError as e:
        raise InputError(str(e)) from e
    return 0


def cmd_check(args) -> int:
    q = load_model(args.model)
    asg = load_assignment(q, args.assignment)
    s = parse_sequent(args.sequent)
    try:
        ok = sequent_valid(q, asg, s)
    except KeyError as e:
        raise InputError(str(e)) from e
    print("valid" if ok else "invalid")
    return 0 if ok else 1


def _write(obj: dict, out: str | None) -> None:
    text = json.dumps(obj, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_prove(args) -> int:
    s = right_normalize(parse_sequent(args.sequent))
    t = search(s, args.depth, args.mode, args.allow_cut)
    if t is None:
        print("not found")
        return 1
    _write(t.to_dict(), args.output)
    return 0


def cmd_check_proof(args) -> int:
    try:
        t = ProofTree.from_dict(load_json(args.proof))
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"malformed proof file: {e}") from e
    try:
        check_proof(t, args.mode)
    except ProofError as e:
        print(f"error {e}")
        return 1
    print("ok")
    return 0


def cmd_falsify(args) -> int:
    s = parse_sequent(args.sequent)
    out = falsify(s, args.max_size, args.seed, args.budget)
    if out.countermodel is None:
        print(f"inconclusive: no countermodel in {out.probes} probes")
        return 1
    cm = out.countermodel
    _write({"sequent": str(s), "model": model_to_dict(cm.structure),
            "assignment": {k: sorted(v.members) for k, v in cm.assignment.items()},
            "certificate": cm.certificate}, args.output)
    return 0


def cmd_harness(args) -> int:
    rep = soundness_harness(args.rule, args.trials, args.seed, args.mode)
    print(rep.summary())
    for cx in rep.violations[:3]:
        print(json.dumps(cx.to_dict()))
    return 0 if rep.ok else 1


def cmd_baby(args) -> int:
    if args.baby_cmd == "project":
        a = linalg.parse_subspace(args.a)
        b = linalg.parse_subspace(args.b, a.ambient_dim)
        print(linalg.project_subspace(a, b))
    elif args.baby_cmd == "complement":
        a = linalg.parse_subspace(args.a, args.dim)
        print(linalg.ortho_complement(a))
    else:
        rng = random.Random(args.seed)
        passed = 0
        for _ in range(args.trials):
            a, b, c = (linalg.random_subspace(args.dim, rng) for _ in range(3))
            ok1 = (linalg.is_zero(linalg.project_subspace(a, b))
                   == linalg.is_zero(linalg.project_subspace(b, a)))
            ok2 = (linalg.is_zero(linalg.project_subspace(linalg.project_subspace(a, b), c))
                   == linalg.is_zero(linalg.project_subspace(a, linalg.project_subspace(c, b))))
            passed += ok1 and ok2
        print(f"{passed}/{args.trials} pass")
        return 0 if passed == args.trials else 1
    return 0


def cmd_enumerate(args) -> int:
    count = 0
    for q in enumerate_qstructures(args.size):
        count += 1
        if not args.count:
            print(json.dumps(model_to_dict(q, f"enum-{args.size}-{count - 1}")))
    if args.count:
        print(count)
    return 0


def cmd_random_model(args) -> int:
    s = sample_qstructure(args.size, args.seed, args.projective)
    d = model_to_dict(s.structure, f"random-{args.size}-{args.seed}")
    d["attempts"] = s.attempts
    _write(d, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qphase", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("validate", help="check a model file against the axioms")
    s.add_argument("model")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("facts", help="list every fact of a model")
    s.add_argument("model")
    s.set_defaults(func=cmd_facts)

    s = sub.add_parser("eval", help="evaluate a formula")
    s.add_argument("model")
    s.add_argument("assignment", help="file or inline YAML, e.g. '{a: [e0, ep]}'")
    s.add_argument("formula")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("check", help="decide a sequent in one model")
    s.add_argument("model")
    s.add_argument("assignment")
    s.add_argument("sequent")
    s.set_defaults(func=cmd_check)

    modes = [m.value for m in Mode]
    s = sub.add_parser("prove", help="bounded proof search")
    s.add_argument("sequent")
    s.add_argument("--depth", type=int, default=6)
    s.add_argument("--mode", choices=modes, default="plain")
    s.add_argument("--allow-cut", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_prove)

    s = sub.add_parser("check-proof", help="check a proof file")
    s.add_argument("proof")
    s.add_argument("--mode", choices=modes, default="plain")
    s.set_defaults(func=cmd_check_proof)

    s = sub.add_parser("falsify", help="search for a countermodel")
    s.add_argument("sequent")
    s.add_argument("--max-size", type=int, default=6)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=10_000)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_falsify)

    s = sub.add_parser("harness", help="randomized soundness check of one rule")
    s.add_argument("--rule", choices=[r.value for r in RuleTag], required=True)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--mode", choices=modes, default="plain")
    s.set_defaults(func=cmd_harness)

    s = sub.add_parser("baby", help="subspace projection in Q^d")
    bsub = s.add_subparsers(dest="baby_cmd", required=True)
    b = bsub.add_parser("project", help="project subspace A onto B")
    b.add_argument("a", help="vectors separated by ';', e.g. '1,1;0,1'")
    b.add_argument("b")
    b = bsub.add_parser("complement", help="orthogonal complement")
    b.add_argument("a")
    b.add_argument("--dim", type=int)
    b = bsub.add_parser("test-lemma1", help="check both orthogonality transfers on random triples")
    b.add_argument("--dim", type=int, default=4)
    b.add_argument("--trials", type=int, default=500)
    b.add_argument("--seed", type=int, default=7)
    s.set_defaults(func=cmd_baby)

    s = sub.add_parser("enumerate", help="all structures of a given size")
    s.add_argument("size", type=int)
    s.add_argument("--count", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("random-model", help="sample a structure")
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--projective", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_random_model)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParseError, phase.StructureError, linalg.DimensionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
