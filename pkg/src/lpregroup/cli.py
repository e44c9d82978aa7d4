"""Batch command-line frontend.

Every subcommand maps to one operation family; output is plain text by
default and machine-readable with --json.  Exit status: 0 on success or a
holding check, 1 on a counterexample or failed property, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from time import perf_counter

from .atoms import (
    atoms,
    atom_lcm_join,
    core,
    decompose_positive,
    delta,
    eval_word,
    format_word,
    generate_atom,
    p_set,
)
from .checker import (
    Bounds,
    HoldsWithinBounds,
    check_equation,
    report_to_json,
    verify_lemma_suite,
)
from .errors import LPregroupError
from .models import FnModel
from .periodic import format_element, parse_element
from .terms import (
    axiom_commute,
    axiom_join,
    axiom_periodic,
    format_equation,
    parse_equation,
    parse_term,
    eval_term,
)
from .variety import (
    axiom_for,
    format_sig,
    lattice_report,
    leq as sig_leq,
    join as sig_join,
    parse_sig,
    properly_periodic_bottom,
    subvariety_sigs,
)

_MODEL_RE = re.compile(r"^F(\d+)$")


def _parse_model(text: str) -> FnModel:
    m = _MODEL_RE.match(text)
    if not m or int(m.group(1)) < 1:
        raise ValueError(f"unknown model {text!r}; expected F<n>")
    return FnModel(int(m.group(1)))


def _parse_bindings(pairs: list[str]) -> dict:
    out = {}
    for pair in pairs:
        name, sep, literal = pair.partition("=")
        if not sep:
            raise ValueError(f"bad binding {pair!r}; expected var=F<n>:[..]")
        out[name.strip()] = parse_element(literal)
    return out


def _cmd_eval(args) -> int:
    model = _parse_model(args.model)
    term = parse_term(args.term)
    assignment = _parse_bindings(args.bind or [])
    value = eval_term(term, model, assignment)
    if args.json:
        print(json.dumps({"result": model.format(value)}))
    else:
        print(model.format(value))
    return 0


def _axiom_from_args(args):
    if args.equation is not None:
        if args.axiom is not None:
            raise ValueError("give either --axiom or --equation, not both")
        return "equation", parse_equation(args.equation)
    if args.axiom is None:
        raise ValueError("one of --axiom or --equation is required")
    if args.n is None:
        raise ValueError("--axiom requires --n")
    if args.axiom == "commute":
        return f"commute({args.n})", axiom_commute(int(args.n))
    if args.axiom == "periodic":
        return f"periodic({args.n})", axiom_periodic(int(args.n))
    ks = {int(tok) for tok in args.n.split(",")}
    return f"join({sorted(ks)})", axiom_join(ks)


def _cmd_check(args) -> int:
    name, eq = _axiom_from_args(args)
    model = _parse_model(args.model)
    bounds = Bounds(
        n=model.n,
        h=args.h,
        mode=args.mode,
        sample_count=args.samples,
        seed=args.seed,
    )
    t0 = perf_counter()
    verdict = check_equation(eq, model, bounds, threads=args.threads)
    elapsed_ms = int((perf_counter() - t0) * 1000)
    holds = isinstance(verdict, HoldsWithinBounds)
    if args.json:
        report = {
            "property": f"{name} on {model.name}",
            "bounds": bounds.describe(),
            "verdict": "HoldsWithinBounds" if holds else "Counterexample",
            "elapsed_ms": elapsed_ms,
        }
        if holds:
            report["checked"] = verdict.checked
            report["elements"] = verdict.element_count
        else:
            report["witness"] = {
                "assignment": {
                    v: model.format(e) for v, e in verdict.assignment.items()
                },
                "lhs": model.format(verdict.lhs_value),
                "rhs": model.format(verdict.rhs_value),
            }
        print(json.dumps(report))
    elif holds:
        print(
            f"holds within bounds: checked={verdict.checked} "
            f"elements={verdict.element_count} mode={verdict.mode}"
        )
    else:
        print("counterexample:")
        for var, element in sorted(verdict.assignment.items()):
            print(f"  {var} = {model.format(element)}")
        print(f"  lhs = {model.format(verdict.lhs_value)}")
        print(f"  rhs = {model.format(verdict.rhs_value)}")
    return 0 if holds else 1


def _cmd_atoms(args) -> int:
    elements = atoms(args.n)
    if args.json:
        print(json.dumps({"atoms": [format_element(a) for a in elements]}))
    else:
        for a in elements:
            print(format_element(a))
    return 0


def _cmd_core(args) -> int:
    f = parse_element(args.element)
    c = core(f)
    if args.json:
        print(json.dumps({"core": format_element(c), "p_set": sorted(p_set(f))}))
    else:
        print(format_element(c))
    return 0


def _cmd_delta(args) -> int:
    f = parse_element(args.element)
    if args.json:
        print(json.dumps({"delta": format_element(delta(f))}))
    else:
        print(format_element(delta(f)))
    return 0


def _cmd_decompose(args) -> int:
    f = parse_element(args.element)
    word = decompose_positive(f, args.max_length)
    if args.json:
        print(
            json.dumps(
                {"word": list(word), "result": format_element(eval_word(word, f.n))}
            )
        )
    else:
        print(format_word(word))
    return 0


def _cmd_generate(args) -> int:
    f = parse_element(args.element)
    trace = generate_atom(f)
    if args.json:
        print(
            json.dumps(
                {
                    "input": format_element(f),
                    "stages": [
                        [label, format_element(el)] for label, el in trace.stages
                    ],
                }
            )
        )
    else:
        for label, el in trace.stages:
            print(f"{label}: {format_element(el)}")
    return 0


def _cmd_lcm_join(args) -> int:
    a = parse_element(args.a)
    b = parse_element(args.b)
    s, t, joined = atom_lcm_join(a, b)
    if args.json:
        print(
            json.dumps(
                {
                    "s": s,
                    "t": t,
                    "join": format_element(joined),
                    "per": joined.per(),
                }
            )
        )
    else:
        print(f"s={s} t={t} join={format_element(joined)} per={joined.per()}")
    return 0


def _cmd_variety(args) -> int:
    if args.action == "subvarieties":
        n = int(args.arg)
        if args.count:
            print(len(subvariety_sigs(n)))
        elif args.json:
            print(json.dumps(lattice_report(n)))
        else:
            for sig in subvariety_sigs(n):
                print(format_sig(sig))
        return 0
    if args.action == "bottom":
        print(format_sig(properly_periodic_bottom(int(args.arg))))
        return 0
    if args.action == "axiom":
        eq = axiom_for(parse_sig(args.arg))
        if args.json:
            print(json.dumps({"axiom": format_equation(eq)}))
        else:
            print(format_equation(eq))
        return 0
    if args.action in ("leq", "join"):
        a, b = parse_sig(args.arg), parse_sig(args.arg2)
        if args.action == "leq":
            print("true" if sig_leq(a, b) else "false")
        else:
            print(format_sig(sig_join(a, b)))
        return 0
    raise ValueError(f"unknown variety action {args.action!r}")


def _cmd_verify(args) -> int:
    if args.suite == "all":
        names = None
    elif args.suite.strip() == "":
        names = []
    else:
        names = [tok.strip() for tok in args.suite.split(",")]
    results = verify_lemma_suite(names)
    if args.json:
        print(report_to_json(results))
    else:
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            line = f"{mark} {r.name} [{r.bounds}] checked={r.checked} ({r.elapsed_ms} ms)"
            if not r.passed:
                line += f" witness={r.witness}"
            print(line)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpregroup",
        description="Exact computations with n-periodic order-preserving maps on Z.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a term in a model")
    p.add_argument("--model", required=True, help="model name, e.g. F2")
    p.add_argument("--term", required=True)
    p.add_argument("--bind", action="append", metavar="var=F<n>:[..]")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("check", help="bounded counterexample search")
    p.add_argument("--axiom", choices=("commute", "periodic", "join"))
    p.add_argument("--n", help="axiom index, or comma list for join")
    p.add_argument("--equation", help="raw equation text, e.g. 'x = x'")
    p.add_argument("--model", required=True)
    p.add_argument("--h", type=int, default=2)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("atoms", help="list the covers of the identity")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_atoms)

    p = sub.add_parser("core", help="meet of the positive shifted conjugates")
    p.add_argument("element")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_core)

    p = sub.add_parser("delta", help="height-one idempotent from an idempotent")
    p.add_argument("element")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("decompose", help="word over shifts and atoms")
    p.add_argument("element")
    p.add_argument("--max-length", type=int, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("generate", help="run the atom-generation pipeline")
    p.add_argument("element")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("lcm-join", help="aligned join of two atoms")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lcm_join)

    p = sub.add_parser("variety", help="divisor-lattice computations")
    p.add_argument("action", choices=("subvarieties", "bottom", "axiom", "leq", "join"))
    p.add_argument("arg", help="integer index or signature literal V{..}")
    p.add_argument("arg2", nargs="?", help="second signature for leq/join")
    p.add_argument("--count", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_variety)

    p = sub.add_parser("verify", help="run the registered property suite")
    p.add_argument("--suite", default="all", help="'all' or comma list of names")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LPregroupError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
