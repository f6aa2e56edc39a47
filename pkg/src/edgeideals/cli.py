"""Command-line front end.

Subcommands: gen (emit a family graph as DOT), inv (invariants of its
edge-ideal quotient), sdepth (exact Stanley depth with a witness),
decomp (replay the induction decompositions of a family), and verify
(run formula claims over parameter grids and report pass/fail).

Output is deterministic for a fixed command line; verify exits nonzero
exactly when a stated claim fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from .betti import DEFAULT_MAX_VARS, invariants
from .decompositions import replay_family
from .errors import (CapExceededError, EdgeIdealsError, FamilySpecParseError,
                     TooManyVariablesError)
from .families import build_extended, parse_family
from .graphs import to_dot
from .ideals import edge_ideal
from .sdepth import DEFAULT_EXACT_CAP, stanley_depth, validate_partition, face_poset
from .verify import CLAIMS, DEFAULT_SEED, RunConfig, run_claims


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_range(text: str) -> list[int]:
    """'2' -> [2]; '1..4' -> [1, 2, 3, 4]."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _build_from_arg(spec_text: str):
    spec = parse_family(spec_text)
    return spec, build_extended(spec)


def cmd_gen(args) -> int:
    spec, graph = _build_from_arg(args.spec)
    if args.format == "json":
        doc = {
            "spec": str(spec),
            "vertices": [lab.name for lab in graph.labels],
            "edges": [[graph.labels[a].name, graph.labels[b].name]
                      for a, b in graph.edges],
            "n_vertices": graph.n_vertices,
            "n_edges": graph.n_edges,
        }
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit(to_dot(graph), args.out)
    return 0


def cmd_inv(args) -> int:
    spec, graph = _build_from_arg(args.spec)
    ideal = edge_ideal(graph)
    inv = invariants(ideal, args.field, max_vars=args.hochster_cap,
                     jobs=args.threads)
    doc = {
        "spec": str(spec),
        "n_vars": ideal.n_vars,
        "field": f"GF({args.field})",
        "reg": inv.regularity,
        "pdim": inv.projective_dimension,
        "depth": inv.depth,
        "hochster_cap": args.hochster_cap,
        "sdepth_cap": args.sdepth_cap,
    }
    try:
        value, _ = stanley_depth(ideal, args.sdepth_cap)
        doc["sdepth"] = value
    except CapExceededError:
        doc["sdepth"] = None
    if args.format == "text":
        keys = ["n_vars", "depth", "sdepth", "reg", "pdim"]
        body = "\n".join(f"{k}: {doc[k]}" for k in keys if doc[k] is not None)
        _emit(f"{doc['spec']} over {doc['field']}\n{body}\n", args.out)
    elif args.format == "csv":
        keys = sorted(doc)
        _emit(",".join(keys) + "\n"
              + ",".join(str(doc[k]) for k in keys) + "\n", args.out)
    else:
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    return 0


def cmd_sdepth(args) -> int:
    spec, graph = _build_from_arg(args.spec)
    ideal = edge_ideal(graph)
    value, witness = stanley_depth(ideal, args.sdepth_cap)
    validate_partition(face_poset(ideal, cap=max(14, ideal.n_vars)), witness)
    names = [lab.name for lab in graph.labels]
    doc = {
        "spec": str(spec),
        "sdepth": value,
        "intervals": witness.to_json_dict(names),
    }
    if args.format == "text":
        lines = [f"{doc['spec']}: sdepth = {value}"]
        for pair in doc["intervals"]:
            lines.append(f"  [{'*'.join(pair['lower']) or '1'}, "
                         f"{'*'.join(pair['upper']) or '1'}]")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    return 0


def cmd_decomp(args) -> int:
    spec, _ = _build_from_arg(args.spec)
    reports = replay_family(spec)
    ok = all(r.ok for r in reports)
    if args.format == "text":
        lines = []
        for r in reports:
            mark = "ok " if r.ok else "FAIL"
            facs = ", ".join(f.expected for f in r.factors) or "nothing"
            lines.append(f"[{mark}] {r.rule_id} pivot {r.pivot}: "
                         f"{facs} + {r.expected_free} free")
        lines.append("all rules pass" if ok else "some rules FAILED")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        doc = {"spec": str(spec), "ok": ok,
               "rules": [r.as_dict() for r in reports]}
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    if args.claim == "all":
        claim_ids = sorted(CLAIMS)
    else:
        if args.claim not in CLAIMS:
            known = ", ".join(sorted(CLAIMS))
            print(f"error: unknown claim {args.claim!r}; known: {known}",
                  file=sys.stderr)
            return 2
        claim_ids = [args.claim]
    override = {}
    for name in ("n", "p", "q", "u"):
        text = getattr(args, name)
        if text is not None:
            override[name] = _parse_range(text)
    config = RunConfig(
        characteristic=args.field, cross_field=args.cross_field,
        hochster_cap=args.hochster_cap, sdepth_cap=args.sdepth_cap,
        threads=args.threads, seed=args.seed,
        include_durations=args.durations,
        decompositions=not args.no_decomp)
    report = run_claims(claim_ids, config, override or None)
    if args.format == "csv":
        _emit(report.as_csv(), args.out)
    elif args.format == "text":
        _emit(report.as_text(), args.out)
    else:
        _emit(report.as_json(), args.out)
    return 0 if report.ok else 1


def _add_common(parser: argparse.ArgumentParser,
                default_format: str = "json") -> None:
    parser.add_argument("--field", type=int, default=2,
                        help="prime field characteristic (default 2)")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker processes for the subset scan")
    parser.add_argument("--format", choices=["json", "text", "csv", "dot"],
                        default=default_format)
    parser.add_argument("--out", help="write output to this file")
    parser.add_argument("--hochster-cap", type=int, default=DEFAULT_MAX_VARS,
                        help="max ambient variables for exact homology")
    parser.add_argument("--sdepth-cap", type=int, default=DEFAULT_EXACT_CAP,
                        help="max live variables for exact Stanley depth")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed recorded in reports")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgeideals",
        description="edge-ideal invariants of snake-family graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit a family graph")
    p_gen.add_argument("spec", help='e.g. "brs(q=3,tsnake(n=3,p=3))"')
    _add_common(p_gen, default_format="dot")
    p_gen.set_defaults(func=cmd_gen)

    p_inv = sub.add_parser("inv", help="invariants of the edge-ideal quotient")
    p_inv.add_argument("spec")
    _add_common(p_inv)
    p_inv.set_defaults(func=cmd_inv)

    p_sd = sub.add_parser("sdepth", help="exact Stanley depth with witness")
    p_sd.add_argument("spec")
    _add_common(p_sd)
    p_sd.set_defaults(func=cmd_sdepth)

    p_dec = sub.add_parser("decomp", help="replay induction decompositions")
    p_dec.add_argument("spec")
    _add_common(p_dec)
    p_dec.set_defaults(func=cmd_decomp)

    p_ver = sub.add_parser("verify", help="verify formula claims on a grid")
    p_ver.add_argument("claim", help='claim id or "all"')
    p_ver.add_argument("--n", help="range like 1..4")
    p_ver.add_argument("--p", help="range like 1..2")
    p_ver.add_argument("--q", help="range like 1..2")
    p_ver.add_argument("--u", help="range like 1..6")
    p_ver.add_argument("--cross-field", action="store_true",
                       help="also compute over GF(3) and compare")
    p_ver.add_argument("--durations", action="store_true",
                       help="include wall-clock durations in the report")
    p_ver.add_argument("--no-decomp", action="store_true",
                       help="skip decomposition replay")
    _add_common(p_ver)
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FamilySpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TooManyVariablesError, CapExceededError) as exc:
        print(f"error: {exc}\nhint: raise --hochster-cap or --sdepth-cap, "
              f"or pick smaller parameters", file=sys.stderr)
        return 2
    except EdgeIdealsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
