"""Command-line surface.

Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage
error (argparse default), 3 malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import checkers, formats, pathcount, randgen, reductions, solver
from .graph import all_pairs, is_connected
from .oracle import brute_force_mp, duality_report, is_multipacking
from .rooted_tree import bfs_tree

JSON_SCHEMA = "multipacking-report/1"


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        raise SystemExit(3)


def _parse(parser_fn, text: str):
    try:
        return parser_fn(text)
    except formats.InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        raise SystemExit(3)


def cmd_solve(args) -> int:
    g = _parse(formats.parse_graph, _read(args.graph))
    t0 = time.perf_counter()
    family_size = None
    if args.algo == "brute":
        size, witness = brute_force_mp(g)
    elif args.algo == "a162":
        size, witness, family_size = solver.solve_detailed(
            g, solver.candidate_family_162
        )
    else:
        size, witness, family_size = solver.solve_detailed(
            g, solver.candidate_family
        )
    elapsed = time.perf_counter() - t0
    if args.json:
        print(
            json.dumps(
                {
                    "schema": JSON_SCHEMA,
                    "instance": args.graph,
                    "algorithm": args.algo,
                    "mp": size,
                    "witness": list(witness),
                    "family_size": family_size,
                    "wall_time_s": elapsed,
                }
            )
        )
    else:
        print(f"instance   {args.graph}")
        print(f"algorithm  {args.algo}")
        print(f"mp         {size}")
        print(f"witness    {' '.join(map(str, witness)) or '-'}")
        if family_size is not None:
            print(f"family     {family_size}")
        print(f"time_s     {elapsed:.4f}")
    return 0


def cmd_verify(args) -> int:
    g = _parse(formats.parse_graph, _read(args.graph))
    members = _parse(formats.parse_vertex_set, _read(args.set_file))
    try:
        ok = is_multipacking(g, all_pairs(g), members)
    except ValueError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 3
    print("multipacking" if ok else "not a multipacking")
    return 0 if ok else 1


def _write_reduction(out, prefix: str) -> None:
    Path(f"{prefix}.graph").write_text(formats.serialize_graph(out.graph))
    Path(f"{prefix}.labels").write_text(formats.serialize_labels(out.labels))
    Path(f"{prefix}.claims").write_text(formats.serialize_claims(out.claims))
    print(f"wrote {prefix}.graph ({out.graph.n} vertices), .labels, .claims")


def cmd_reduce_hs(args) -> int:
    inst = _parse(formats.parse_hitting_set, _read(args.hs_file))
    builders = {
        "chordal": reductions.reduce_hs_chordal,
        "hyperbolic": reductions.reduce_hs_half_hyperbolic,
        "bipartite": reductions.reduce_hs_bipartite,
        "clawfree": reductions.reduce_hs_clawfree,
    }
    try:
        out = builders[args.variant](inst)
    except ValueError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 3
    _write_reduction(out, args.out)
    return 0


def cmd_reduce_tds(args) -> int:
    g = _parse(formats.parse_graph, _read(args.graph))
    try:
        if args.variant == "regular":
            out = reductions.reduce_tds_regular(g, args.k)
        else:
            out = reductions.reduce_tds_conv(g, args.k)
    except ValueError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 3
    _write_reduction(out, args.out)
    return 0


def cmd_check(args) -> int:
    g = _parse(formats.parse_graph, _read(args.graph))
    all_ok = True
    for prop in args.props.split(","):
        prop = prop.strip()
        if prop == "chordal":
            ok, witness = checkers.is_chordal(g)
            detail = ("peo " if ok else "chordless cycle ") + " ".join(
                map(str, witness)
            )
        elif prop == "bipartite":
            ok, witness = checkers.is_bipartite(g)
            detail = f"parts {witness}" if ok else f"odd walk {list(witness)}"
        elif prop == "clawfree":
            ok, witness = checkers.is_clawfree(g)
            detail = "" if ok else f"claw {witness}"
        elif prop == "regular":
            deg = checkers.regularity(g)
            ok = deg is not None
            detail = f"degree {deg}" if ok else "degrees differ"
        elif prop == "hyperbolicity":
            try:
                delta = checkers.hyperbolicity(g)
            except ValueError as e:
                print(f"input error: {e}", file=sys.stderr)
                return 3
            ok = True
            detail = f"delta = {delta}"
        else:
            print(f"unknown property: {prop}", file=sys.stderr)
            return 2
        all_ok = all_ok and ok
        print(f"{prop:14s} {'true' if ok else 'false':5s} {detail}")
    return 0 if all_ok else 1


def cmd_count(args) -> int:
    counts = (
        pathcount.count_all_path(args.n)
        if args.kind == "all"
        else pathcount.count_maximal_path(args.n)
    )
    print("n count")
    for i, c in enumerate(counts, start=1):
        print(f"{i} {c}")
    if args.verify_upto:
        upto = min(args.verify_upto, args.n)
        for i in range(1, upto + 1):
            p = pathcount.path_graph(i)
            observed = (
                len(pathcount.enumerate_multipackings(p))
                if args.kind == "all"
                else len(pathcount.enumerate_maximal_multipackings(p))
            )
            if observed != counts[i - 1]:
                print(f"mismatch at n={i}: recurrence {counts[i - 1]}, enumeration {observed}")
                return 1
        print(f"verified against enumeration up to n={upto}")
    return 0


def cmd_duality(args) -> int:
    g = _parse(formats.parse_graph, _read(args.graph))
    try:
        rep = duality_report(g)
    except ValueError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 3
    print(f"mp                {rep.mp}")
    print(f"gamma_b           {rep.gamma_b}")
    print(f"mp_witness        {' '.join(map(str, rep.mp_witness)) or '-'}")
    print(f"broadcast_powers  {' '.join(map(str, rep.broadcast_witness.powers))}")
    print(f"bound_2mp3_ok     {rep.bound_2mp3_ok}")
    print(f"bound_chordal_ok  {rep.bound_chordal_ok}")
    return 0 if rep.bound_2mp3_ok and rep.mp <= rep.gamma_b else 1


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    print("n,family_size,growth")
    for _ in range(args.trees):
        n = rng.randint(2, args.max_n)
        tree = randgen.random_tree(n, rng)
        fam = solver.candidate_family(bfs_tree(tree, 0))
        growth = len(fam) ** (1.0 / n)
        print(f"{n},{len(fam)},{growth:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="multipacking",
        description="Exact multipacking solvers, reductions, and class checkers",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="maximum multipacking of a graph")
    sp.add_argument("graph")
    sp.add_argument("--algo", choices=["brute", "a162", "a158"], default="a158")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_solve)

    sp = sub.add_parser("verify", help="check a vertex set is a multipacking")
    sp.add_argument("graph")
    sp.add_argument("set_file")
    sp.set_defaults(fn=cmd_verify)

    rp = sub.add_parser("reduce", help="build hardness-reduction instances")
    rsub = rp.add_subparsers(dest="kind", required=True)
    sp = rsub.add_parser("hs", help="from a hitting-set instance")
    sp.add_argument("hs_file")
    sp.add_argument(
        "--variant",
        required=True,
        choices=["chordal", "hyperbolic", "bipartite", "clawfree"],
    )
    sp.add_argument("--out", required=True)
    sp.set_defaults(fn=cmd_reduce_hs)
    sp = rsub.add_parser("tds", help="from a total-dominating-set instance")
    sp.add_argument("graph")
    sp.add_argument("--variant", required=True, choices=["regular", "conv"])
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(fn=cmd_reduce_tds)

    sp = sub.add_parser("check", help="structural class checks with witnesses")
    sp.add_argument("graph")
    sp.add_argument(
        "--props",
        default="chordal,bipartite,clawfree,regular,hyperbolicity",
    )
    sp.set_defaults(fn=cmd_check)

    cp = sub.add_parser("count", help="path multipacking counts")
    csub = cp.add_subparsers(dest="what", required=True)
    sp = csub.add_parser("paths")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--kind", choices=["all", "maximal"], default="all")
    sp.add_argument("--verify-upto", type=int, default=0)
    sp.set_defaults(fn=cmd_count)

    sp = sub.add_parser("duality", help="MP vs broadcast domination report")
    sp.add_argument("graph")
    sp.set_defaults(fn=cmd_duality)

    bp = sub.add_parser("bench", help="benchmark harnesses")
    bsub = bp.add_subparsers(dest="what", required=True)
    sp = bsub.add_parser("family")
    sp.add_argument("--trees", type=int, required=True)
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.set_defaults(fn=cmd_bench)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
