"""Command-line interface.

Exit codes across all subcommands: 0 success / property holds, 1 semantic
failure (counterexample found, proof step failed, expectation mismatch),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import catalog as catalog_mod
from . import chains, proofs
from .errors import ParseError, RelativesError
from .relation import Relation
from .render import STYLES, render
from .parser import parse_formula, parse_term
from .relfile import format_assignment, load_relation_file
from .semantics import evaluate
from .verifier import (
    CheckConfig,
    Claim,
    CounterExample,
    SampledClean,
    Valid,
    check_up_to,
)


def _pairs_line(rel: Relation) -> str:
    return " ".join(f"({i},{j})" for i, j in rel.sorted_pairs())


def _pairs_compact(rel: Relation) -> str:
    return "".join(f"({i},{j})" for i, j in rel.sorted_pairs()) or "-"


def _verdict_text(verdict, sampled=None) -> str:
    if isinstance(verdict, CounterExample):
        assign = " ".join(
            f"{v}={_pairs_compact(r)}" for v, r in sorted(verdict.assignment.items())
        )
        return f"counterexample[n={verdict.n} {assign}]"
    parts = []
    if isinstance(verdict, Valid) and verdict.sizes:
        parts.append("valid[" + ",".join(map(str, verdict.sizes)) + "]")
    if isinstance(verdict, SampledClean) and verdict.sizes:
        parts.append(_sampled_text(verdict))
    if isinstance(sampled, SampledClean):
        parts.append(_sampled_text(sampled))
    if isinstance(sampled, CounterExample):
        parts.append(_verdict_text(sampled))
    return "+".join(parts) if parts else "unchecked"


def _sampled_text(v: SampledClean) -> str:
    inside = ",".join(f"{n}x{c}" for n, c in zip(v.sizes, v.counts))
    return f"sampled-clean[{inside} seed={v.seed}]"


def _resolve_seed(args) -> int:
    if args.deterministic or args.seed is not None:
        return args.seed if args.seed is not None else 0
    return random.randrange(1 << 32)


# -- subcommands -------------------------------------------------------------


def cmd_eval(args) -> int:
    rf = load_relation_file(args.relations)
    term = parse_term(args.term)
    result = evaluate(term, rf.relations, rf.n)
    if args.machine:
        for i, j in result.sorted_pairs():
            print(f"pair\t{i}\t{j}")
    else:
        print(_pairs_line(result))
    return 0


def cmd_check(args) -> int:
    formula = parse_formula(args.formula)
    claim = Claim.from_formula(formula)
    seed = _resolve_seed(args)
    samples = ()
    if args.samples:
        samples = ((args.sample_size or args.max_size + 1, args.samples),)
    config = CheckConfig(
        max_exhaustive_size=args.max_size,
        sample_sizes=samples,
        seed=seed,
        deterministic=args.deterministic,
    )
    verdict, sampled = check_up_to(claim, config)
    bad = verdict if isinstance(verdict, CounterExample) else (
        sampled if isinstance(sampled, CounterExample) else None
    )
    if args.machine:
        print(f"verdict\t{_verdict_text(verdict, sampled)}")
        if bad is not None:
            for v, r in sorted(bad.assignment.items()):
                print(f"assign\t{v}\t{_pairs_compact(r)}")
    else:
        if bad is not None:
            print(f"counterexample at universe size {bad.n}:")
            print(format_assignment(bad.assignment, bad.n))
        else:
            print(_verdict_text(verdict, sampled))
    return 1 if bad is not None else 0


def cmd_catalog(args) -> int:
    seed = _resolve_seed(args)
    samples = ()
    if args.samples:
        samples = ((args.sample_size or args.max_size + 1, args.samples),)
    config = CheckConfig(
        max_exhaustive_size=args.max_size,
        sample_sizes=samples,
        seed=seed,
        deterministic=args.deterministic,
    )
    report = catalog_mod.run_catalog(config)
    for res in report.results:
        verdict = _verdict_text(res.verdict, res.sampled)
        match = "match" if res.matches else "MISMATCH"
        if args.machine:
            print(f"{res.entry.id}\t{verdict}\t{res.entry.expected}\t{match}")
        else:
            print(f"{res.entry.id:8s} {verdict:60s} expected={res.entry.expected:10s} {match}")
    return 0 if report.all_match else 1


def cmd_chain(args) -> int:
    rf = load_relation_file(args.relations)
    for name in (args.a, args.b):
        if name not in rf.relations:
            raise RelativesError(f"relation {name!r} is not defined in {args.relations}")
    a, b = rf.relations[args.a], rf.relations[args.b]
    trace = chains.chain_trace(a, b)
    full = b.union(trace.stages[-1])
    if args.machine:
        print(f"chain\t{_pairs_compact(full)}")
        print(f"iterates\t{_pairs_compact(trace.stages[-1])}")
        print(f"stabilized\t{trace.stabilized_at}")
    else:
        print(f"chain: {_pairs_line(full)}")
        print(f"iterates: {_pairs_line(trace.stages[-1])}")
        print(f"stabilized after step {trace.stabilized_at}")
    return 0


def cmd_prove(args) -> int:
    if args.bundled:
        script = proofs.bundled_induction_script()
    elif args.script:
        script = proofs.load_script(args.script)
    else:
        raise RelativesError("give a script path or --bundled")
    result = proofs.check_script(script)
    failed = [s for s in result.steps if not s.ok]
    for s in result.steps:
        if args.machine:
            print(f"step\t{s.index}\t{'pass' if s.ok else 'fail'}\t{s.message}")
        else:
            print(f"step {s.index}: {'pass' if s.ok else 'FAIL: ' + s.message}")
    goal_note = "reached" if result.goal_reached else "NOT reached"
    print(f"goal\t{goal_note}" if args.machine else f"goal {goal_note}")
    if not result.passed:
        return 1
    if args.audit_size:
        audit = proofs.audit_script(script, args.audit_size)
        for s in audit.steps:
            status = "sound" if s.sound else "UNSOUND"
            if args.machine:
                print(f"audit\t{s.index}\t{status}")
            else:
                print(f"audit {s.index}: {status}")
            if s.counterexample is not None:
                print(format_assignment(s.counterexample.assignment, s.counterexample.n))
        if not audit.sound:
            return 1
    return 0


def cmd_render(args) -> int:
    try:
        entry = catalog_mod.catalog_entry(args.input)
    except KeyError:
        entry = None
    if entry is not None:
        if args.style == "ascii":
            out = entry.formula_text
        elif args.style == "settheory":
            out = entry.settheory
        else:
            out = render(entry.formula, args.style)
    else:
        try:
            ast = parse_formula(args.input)
        except ParseError:
            ast = parse_term(args.input)
        out = render(ast, args.style)
    if args.machine:
        print(f"render\t{args.style}\t{out}")
    else:
        print(out)
    return 0


# -- argument parsing --------------------------------------------------------


def _add_check_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-size", type=int, default=2, metavar="N",
                   help="largest universe size for exhaustive checking (default 2)")
    p.add_argument("--samples", type=int, default=0, metavar="K",
                   help="random assignments to draw beyond the exhaustive sizes")
    p.add_argument("--sample-size", type=int, default=0, metavar="N",
                   help="universe size for sampling (default max-size + 1)")
    p.add_argument("--seed", type=int, default=None, metavar="S")
    p.add_argument("--deterministic", action="store_true",
                   help="fix the sampling seed so repeated runs are byte-identical")
    p.add_argument("--machine", action="store_true",
                   help="tab-separated output, one record per line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relatives",
        description="Workbench for the calculus of binary relatives.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a term over a relation file")
    p.add_argument("relations", help="relation file path")
    p.add_argument("term")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="check a formula over all small models")
    p.add_argument("formula")
    _add_check_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("catalog", help="run the whole theorem catalog")
    _add_check_flags(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("chain", help="compute a chain and its trace")
    p.add_argument("relations", help="relation file path")
    p.add_argument("a", help="name of the map relation")
    p.add_argument("b", help="name of the generator relation")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("prove", help="replay and audit a proof script")
    p.add_argument("script", nargs="?", help="proof script path")
    p.add_argument("--bundled", action="store_true",
                   help="use the shipped chain-induction derivation")
    p.add_argument("--audit-size", type=int, default=0, metavar="N",
                   help="also model-check each step at universe sizes 1..N")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("render", help="render a formula or catalog entry")
    p.add_argument("input", help="formula text or a catalog id such as D59")
    p.add_argument("--style", choices=STYLES, default="ascii")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RelativesError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
