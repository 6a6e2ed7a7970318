"""Command-line interface: ``fcxlab space|fn|separate|ideals|regularity|graph|verify``.

Exit codes: 0 success, 1 an asserted invariant was violated, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import zdgraph as zd
from .errors import FcxError, InputError, NotMember, SchemaError
from .ideals import (
    annihilator,
    enumerate_filters_and_ideals,
    ideal_predicates,
    j1_membership,
    prime_equivalents_check,
    proper_ideals,
    socle_membership,
    structure_space_report,
    sum_ideals,
)
from .instance import (
    decode_elem,
    decode_set,
    encode_elem,
    encode_number,
    encode_set,
    encode_space,
    json_arg,
    parse_instance,
    space_from,
)
from .regularity import idempotent_coz_witness, regular_witness, space_regularity_report
from .ring import classify, membership
from .separation import fc_separated, separated_after_removal, separation_witness
from .spaces import (
    RELATIVIZATION,
    clopen_removal,
    is_clopen,
    is_closed,
    is_open,
    make_space,
)
from .verify import MODELS, SUITES, VerifyConfig, exit_code, jsonable, run_verify_suite

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class UsageError(InputError):
    pass


# output -----------------------------------------------------------------------


def _text(obj, indent: int = 0) -> list:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines += _text(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines += _text(v, indent + 1)
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(obj))
    return lines


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, dict):
        return json.dumps(v, ensure_ascii=False)
    return str(v)


def emit(doc, args, dot: str = None) -> None:
    if args.format == "dot":
        if dot is None:
            raise UsageError("--format dot is only available for 'graph metrics'")
        text = dot
    elif args.format == "text":
        text = "\n".join(_text(doc)) + "\n"
    else:
        text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# argument helpers ----------------------------------------------------------------


def _space(args):
    if args.space:
        return space_from(json_arg(args.space))
    if args.kind:
        return make_space(args.kind, args.n)
    raise UsageError("give --space S.json or --kind")


def _csv(value: str) -> list:
    return [v.strip() for v in value.split(",") if v.strip()]


# commands -----------------------------------------------------------------------


def cmd_space(args) -> int:
    space = _space(args)
    doc = {
        "space": encode_space(space),
        "name": str(space),
        "discrete": space.is_discrete,
        "non_isolated_points": None
        if space.non_isolated_points() is None
        else encode_set(space.non_isolated_points()),
        "relativization": RELATIVIZATION,
    }
    if space.is_finite:
        doc["points"] = list(range(space.n))
    if args.set is not None:
        A = decode_set(json_arg(args.set), space, "--set")
        F = clopen_removal(space, A)
        doc["set"] = {
            "value": encode_set(A),
            "open": is_open(space, A),
            "closed": is_closed(space, A),
            "clopen": is_clopen(space, A),
            "clopen_after_removing": None if F is None else encode_set(F),
        }
    emit(doc, args)
    return EXIT_OK


def _describe_function(name, f, space) -> dict:
    c = classify(f, space)
    cls = {"kind": c.kind.value}
    if c.inverse is not None:
        cls["inverse"] = encode_elem(c.inverse)
    if c.witness is not None:
        cls["annihilating_witness"] = encode_elem(c.witness)
    j1 = j1_membership(f, space)
    return {
        "name": name,
        "element": encode_elem(f),
        "membership": {
            "FcX": membership(f, space, "FcX").to_json(),
            "Cc": membership(f, space, "Cc").to_json(),
        },
        "zero_set": encode_set(f.zero_set()),
        "cozero_set": encode_set(f.cozero_set()),
        "classification": cls,
        "socle": socle_membership(f, space),
        "j1": {
            "member": j1.member,
            "refuting_g": None if j1.refuting_g is None else encode_elem(j1.refuting_g),
        },
        "regular_witness": encode_elem(regular_witness(f, space)),
    }


def cmd_fn(args) -> int:
    if args.instance:
        inst = parse_instance(json_arg(args.instance), args.instance)
        space, fns = inst.space, inst.functions
    else:
        space = _space(args)
        if not args.f:
            raise UsageError("give --instance I.json or --f F.json")
        fns = {"f": decode_elem(json_arg(args.f), space, "--f")}
    if args.name:
        if args.name not in fns:
            raise SchemaError(f"no function named {args.name!r}")
        fns = {args.name: fns[args.name]}
    doc = {
        "space": encode_space(space),
        "functions": [_describe_function(k, f, space) for k, f in fns.items()],
    }
    emit(doc, args)
    return EXIT_OK


def cmd_separate(args) -> int:
    space = _space(args)
    A = decode_set(json_arg(args.a), space, "--a")
    B = decode_set(json_arg(args.b), space, "--b")
    v = fc_separated(A, B, space)
    doc = {"space": encode_space(space), "separated": v.separated}
    if v.separated:
        r = separated_after_removal(A, B, space)
        doc.update(
            z1=encode_set(v.z1),
            z2=encode_set(v.z2),
            f=encode_elem(v.f),
            g=encode_elem(v.g),
            h=encode_elem(separation_witness(v.f, v.g)),
            removal={"F": encode_set(r.F), "completely_separated": r.cs},
        )
    doc["relativization"] = RELATIVIZATION
    emit(doc, args)
    return EXIT_OK


def cmd_ideals(args) -> int:
    n = args.n
    census = enumerate_filters_and_ideals(n)
    ideals = proper_ideals(n)
    structure = structure_space_report(n)
    doc = {
        "n": n,
        "filter_count": census.filter_count,
        "ultrafilter_count": census.ultrafilter_count,
        "bijective": census.bijective,
        "bijection": [
            {"maximal_ideal": [x], "ultrafilter_base": sorted(frozenset.intersection(*U)), "ultrafilter_size": len(U)}
            for x, U in census.bijection
        ],
        "predicates": [ideal_predicates(I).to_json() for I in ideals],
        "prime_conditions": [prime_equivalents_check(I).to_json() for I in ideals],
        "annihilators": [
            {"ideal": sorted(I.vanishing), "annihilator": sorted(annihilator(I).vanishing)} for I in ideals
        ],
        "sums": [
            {"a": sorted(I.vanishing), "b": sorted(J.vanishing), "sum": sorted(sum_ideals(I, J).vanishing)}
            for I in ideals
            for J in ideals
        ],
        "structure_space": structure.to_json(),
    }
    ok = (
        census.filter_count == 2**n - 1
        and census.ultrafilter_count == n
        and census.bijective
        and all(r["agree"] for r in doc["prime_conditions"])
        and structure.discrete
    )
    emit(doc, args)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_regularity(args) -> int:
    space = _space(args)
    doc = space_regularity_report(space).to_json()
    doc["space"] = encode_space(space)
    if args.set is not None:
        A = decode_set(json_arg(args.set), space, "--set")
        w = idempotent_coz_witness(space, A)
        doc["idempotent_coz_witness"] = {
            "set": encode_set(A),
            "found": w.ok,
            "element": None if w.element is None else encode_elem(w.element),
            "reason": w.reason,
        }
    emit(doc, args)
    return EXIT_OK


def cmd_graph(args) -> int:
    G = zd.witness_graph(args.n, args.reps)
    if args.format == "dot":
        emit(None, args, zd.dot_export(G))
        return EXIT_OK
    m = zd.graph_oracle_metrics(G)
    cycles = G.order <= zd.MAX_CYCLE_ORACLE_VERTICES
    mismatches = zd.oracle_mismatches(G, m, cycles=cycles)
    doc = {
        "n": G.n,
        "reps": G.reps,
        "vertices": G.order,
        "edges": len(G.edges()),
        "diameter": encode_number(m.diameter),
        "girth": encode_number(m.girth),
        "radius": encode_number(m.radius),
        "cycle_oracle": "exhaustive" if cycles else "skipped",
        "mismatches": [jsonable(x.to_json()) for x in mismatches],
    }
    emit(doc, args)
    return EXIT_VIOLATION if mismatches else EXIT_OK


def cmd_verify(args) -> int:
    base = {}
    if args.config:
        base = json_arg(args.config)
        if not isinstance(base, dict):
            raise SchemaError("--config must hold a JSON object")
    if args.max_n is not None:
        base["max_n"] = args.max_n
    if args.seed is not None:
        base["seed"] = args.seed
    if args.suites:
        base["suites"] = _csv(args.suites)
    if args.models:
        base["models"] = _csv(args.models)
    report = run_verify_suite(VerifyConfig.from_dict(base), timings=args.timings)
    if args.report:
        args.out = args.report
    emit(report, args)
    return exit_code(report)


# parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "dot"), default="json")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    spaced = argparse.ArgumentParser(add_help=False)
    spaced.add_argument("--space", metavar="S.json", help="space object or instance file (path or inline JSON)")
    spaced.add_argument("--kind", choices=("finite", "discrete_n", "cofinite_n", "conv_seq"))
    spaced.add_argument("--n", type=int, help="size of a finite space")

    p = argparse.ArgumentParser(prog="fcxlab", description="Exact computations in C_c(X)_F over decidable space models.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("space", parents=[common, spaced], help="describe a space model")
    s.add_argument("--set", metavar="A.json", help="also classify this subset")
    s.set_defaults(func=cmd_space)

    s = sub.add_parser("fn", parents=[common, spaced], help="membership, zero sets and class of functions")
    s.add_argument("--instance", metavar="I.json")
    s.add_argument("--f", metavar="F.json", help="a single element (with --space)")
    s.add_argument("--name", help="only this function of the instance")
    s.set_defaults(func=cmd_fn)

    s = sub.add_parser("separate", parents=[common, spaced], help="F_c-complete separation of two sets")
    s.add_argument("--a", required=True, metavar="A.json")
    s.add_argument("--b", required=True, metavar="B.json")
    s.set_defaults(func=cmd_separate)

    s = sub.add_parser("ideals", parents=[common], help="ideal/filter census over Finite(n)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--report", dest="out", metavar="PATH", help="write the report to PATH")
    s.set_defaults(func=cmd_ideals)

    s = sub.add_parser("regularity", parents=[common, spaced], help="F_cP and Baer verdicts")
    s.add_argument("--set", metavar="A.json", help="look for an idempotent with this cozero set")
    s.set_defaults(func=cmd_regularity)

    g = sub.add_parser("graph", help="zero-divisor graph over Finite(n)")
    gsub = g.add_subparsers(dest="graph_command", required=True)
    s = gsub.add_parser("metrics", parents=[common], help="oracle metrics or DOT export")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--reps", type=int, default=2)
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("verify", parents=[common], help="run the verification suites")
    s.add_argument("--max-n", type=int, dest="max_n")
    s.add_argument("--seed", type=int)
    s.add_argument("--suites", help="comma-separated subset of " + ",".join(SUITES))
    s.add_argument("--models", help="comma-separated subset of " + ",".join(MODELS))
    s.add_argument("--config", metavar="C.json", help="config object (flags override it)")
    s.add_argument("--report", metavar="PATH", help="write the report to PATH")
    s.add_argument("--timings", action="store_true", help="add runtime_ms per check (not byte-stable)")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotMember as e:
        msg = str(e)
        if e.verdict is not None:
            msg += " " + json.dumps(e.verdict.to_json(), ensure_ascii=False)
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except FcxError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as e:
        print(f"invariant violated: {e}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
