"""Command-line front end.

Exit codes: 0 affirmative, 1 negative (with a certificate), 2 usage or
validation error. Results go to stdout; progress lines go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import conditions as cat
from .conditions import Params, evaluate, get_row
from .errors import BestMonoError, ParseError
from .oracles import ScaleLimits, forcibly, known_properties, parse_property
from .sequences import DegreeSequence, majorizes, parse_sequence, realize
from .sinks import sinks, verify_sink_lower_bound
from .sweeps import containment, parse_row_spec
from .witnesses import recipe_for, verify_weak_optimality

BOUNDS: dict[str, Callable[[DegreeSequence], cat.BoundResult]] = {
    "murphy-alpha": cat.murphy_alpha,
    "caro-wei": cat.caro_wei,
    "clique-lower": cat.clique_chromatic_lower,
    "welsh-powell": cat.welsh_powell_chi_upper,
    "max-degree-chi": cat.max_degree_chi_upper,
    "max-degree-arboricity": cat.max_degree_arboricity_upper,
    "arboricity": cat.arboricity_upper,
}


class UsageError(BestMonoError):
    pass


def parse_n_range(text: str) -> list[int]:
    """``"7"`` or ``"5..7"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            out = list(range(int(lo), int(hi) + 1))
        else:
            out = [int(text)]
    except ValueError:
        raise UsageError(f"expected N or LO..HI, got {text!r}") from None
    if not out:
        raise UsageError(f"empty range {text!r}")
    return out


def _params(args: argparse.Namespace) -> Params:
    return Params.parse(k=args.k, b=args.b, t=args.t, beta=args.beta)


def _limits(args: argparse.Namespace) -> ScaleLimits:
    limits = ScaleLimits()
    if getattr(args, "max_n", None) is not None:
        limits = ScaleLimits(args.max_n, max(args.max_n, limits.cycles), args.max_n, max(args.max_n, limits.subsets))
    return limits


def _emit(args: argparse.Namespace, data: dict, text: str) -> None:
    if args.json:
        out = json.dumps(data, sort_keys=True)
    else:
        out = text
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _json_num(x) -> object:
    return "inf" if x == float("inf") else x


# ---------------------------------------------------------------------------
# commands


def cmd_check(args: argparse.Namespace) -> int:
    seq = parse_sequence(args.seq)
    if args.bound:
        if args.cond:
            raise UsageError("give either --cond or --bound, not both")
        result = BOUNDS[args.bound](seq)
        data = {"bound": args.bound, "sequence": seq.to_json(), **result.to_json()}
        if result.trace:
            data["trace"] = [_json_num(x) for x in result.trace]
        _emit(args, data, str(result.integer))
        return 0
    if not args.cond:
        raise UsageError("check needs --cond or --bound")
    verdict = evaluate(get_row(args.cond), _params(args), seq)
    if verdict.declared:
        text = f"{verdict.condition}: declared"
    else:
        text = f"{verdict.condition}: fails {verdict.failing_clause}"
    _emit(args, verdict.to_json(), text)
    return 0 if verdict.declared else 1


def cmd_forcibly(args: argparse.Namespace) -> int:
    seq = parse_sequence(args.seq)
    prop = parse_property(args.prop)
    if args.premise:
        prop = type(prop).implies(parse_property(args.premise), prop)
    result = forcibly(prop, seq, _limits(args), args.max_n)
    data = {
        "property": str(prop),
        "sequence": seq.to_json(),
        "forcibly": result.holds,
        "realizations_checked": result.checked,
        "counterexample": result.counterexample.to_json() if result.counterexample else None,
    }
    if result.holds:
        text = f"{seq} is forcibly {prop} ({result.checked} realizations checked)"
    else:
        text = f"{seq} is not forcibly {prop}; counterexample {json.dumps(data['counterexample'])}"
    _emit(args, data, text)
    return 0 if result.holds else 1


def cmd_realize(args: argparse.Namespace) -> int:
    seq = parse_sequence(args.seq)
    g = realize(seq)
    _emit(args, {"sequence": seq.to_json(), "graph": g.to_json()}, json.dumps(g.to_json()))
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    recipe = recipe_for(get_row(args.cond), _params(args), args.n, args.clause, args.i, args.j)
    g = recipe.build()
    data = {"recipe": recipe.render(), "degrees": g.degree_sequence().to_json(), "graph": g.to_json()}
    _emit(args, data, f"{recipe.render()}  degrees {g.degree_sequence()}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    row = get_row(args.cond)
    params = _params(args)
    reports = []
    for n in parse_n_range(args.n):
        if not row.accepts(n, params):
            _progress(f"{row.id}: n={n} outside the row's range, skipped")
            continue
        rep = verify_weak_optimality(
            row, params, n, oracle_max_n=args.oracle_max_n, sample=args.sample, limits=_limits(args)
        )
        _progress(f"{row.id} n={n}: {'PASS' if rep.passed else 'FAIL'}")
        reports.append(rep)
    if not reports:
        raise UsageError("no n in range is valid for this condition")
    passed = all(r.passed for r in reports)
    lines = []
    for rep in reports:
        lines.append(f"n={rep.n}: {'PASS' if rep.passed else 'FAIL'} ({len(rep.instances)} clause instances)")
        for inst in rep.instances:
            for problem in inst.problems:
                lines.append(f"  ({inst.clause}) i={inst.i} j={inst.j}: {problem}")
    lines.append("PASS" if passed else "FAIL")
    _emit(args, {"passed": passed, "reports": [r.to_json() for r in reports]}, "\n".join(lines))
    return 0 if passed else 1


def cmd_sinks(args: argparse.Namespace) -> int:
    prop = parse_property(args.prop)
    report = sinks(prop, args.n, limits=_limits(args), max_n=args.max_n, jobs=args.jobs, progress=_progress)
    lines = [f"{report.count} sink(s) for {prop} at n={args.n}"]
    lines += [f"  {s}" for s in report.sinks]
    _emit(args, report.to_json(), "\n".join(lines))
    return 0


def cmd_sink_bound(args: argparse.Namespace) -> int:
    report = verify_sink_lower_bound(args.k, args.n, limits=_limits(args), jobs=args.jobs)
    lines = [f"family of {report.count} (p({args.k - 1}) = {report.expected})"]
    lines += [f"  {s}" for s in report.family]
    lines.append("PASS" if report.passed else "FAIL")
    _emit(args, report.to_json(), "\n".join(lines))
    return 0 if report.passed else 1


def cmd_bm_sweep(args: argparse.Namespace) -> int:
    report = containment(parse_row_spec(args.source), parse_row_spec(args.target), parse_n_range(args.n), _progress)
    lines = []
    for n, seqs in report.counterexamples.items():
        if not seqs:
            lines.append(f"n={n}: contained ({report.checked[n]} sequences)")
            continue
        top = [s for s in seqs if not any(t != s and majorizes(t, s) for t in seqs)]
        lines.append(f"n={n}: {len(seqs)} counterexample(s); maximal ones:")
        lines += [f"  {s}" for s in top]
    lines.append(f"{report.source} within {report.target}: {'holds' if report.holds else 'FAILS'}")
    _emit(args, report.to_json(), "\n".join(lines))
    return 0 if report.holds else 1


def cmd_list(args: argparse.Namespace) -> int:
    if args.what == "properties":
        names = known_properties()
        _emit(args, {"properties": names}, "\n".join(names))
        return 0
    rows = list(cat.REGISTRY.values())
    text = "\n".join(f"{r.id:10s} {r.conclusion} [{', '.join(sorted(r.flags))}]" for r in rows)
    _emit(args, {"conditions": [r.to_json() for r in rows]}, text)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k")
    p.add_argument("--b", help="rational, e.g. 3/2")
    p.add_argument("--t", help="rational, e.g. 3/2")
    p.add_argument("--beta")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--output", help="write the report to a file")
    common.add_argument("--max-n", type=int, help="override the oracle vertex limits")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    parser = argparse.ArgumentParser(prog="bestmono", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="evaluate a condition or a bound")
    p.add_argument("--seq", required=True)
    p.add_argument("--cond")
    p.add_argument("--bound", choices=sorted(BOUNDS))
    _add_params(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("forcibly", parents=[common], help="exact forcibly-P oracle")
    p.add_argument("--seq", required=True)
    p.add_argument("--prop", required=True)
    p.add_argument("--premise", help="check only realizations with this property")
    p.set_defaults(func=cmd_forcibly)

    p = sub.add_parser("realize", parents=[common], help="one realization of a sequence")
    p.add_argument("--seq", required=True)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("witness", parents=[common], help="extremal graph for a clause instance")
    p.add_argument("--cond", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--clause", required=True)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    _add_params(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[common], help="weak-optimality harness")
    p.add_argument("--cond", required=True)
    p.add_argument("--n", required=True, help="N or LO..HI")
    p.add_argument("--oracle-max-n", type=int, default=7)
    p.add_argument("--sample", type=int, help="sample size for the domination check")
    _add_params(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sinks", parents=[common], help="maximal non-forcibly sequences")
    p.add_argument("--prop", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_sinks)

    p = sub.add_parser("sink-bound", parents=[common], help="edge-connectivity sink family")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_sink_bound)

    p = sub.add_parser("bm-sweep", parents=[common], help="declared-set containment")
    p.add_argument("--from", dest="source", required=True, help="e.g. tough:1")
    p.add_argument("--to", dest="target", required=True, help="e.g. ham")
    p.add_argument("--n", required=True, help="N or LO..HI")
    p.set_defaults(func=cmd_bm_sweep)

    p = sub.add_parser("list", parents=[common], help="list conditions or properties")
    p.add_argument("what", nargs="?", choices=["conditions", "properties"], default="conditions")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (BestMonoError, KeyError, ParseError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
