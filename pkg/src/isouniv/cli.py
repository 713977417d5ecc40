"""Command-line entry point.

Exit codes: 0 success / found, 1 well-formed negative answer, 2 input error,
3 search budget exhausted (inconclusive).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import families
from .assignment import max_weight_max_matching
from .embed import Embedding, find_embedding, parse_k
from .errors import BudgetExceeded, InputError
from .forest import solve
from .graph import Graph, format_graph, read_graph, to_dot
from .greedy import best_case_greedy, greedy_fold
from .oracle import ENUMERATION_CEILING, min_universal_bruteforce
from .solution import UniversalSolution

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _emit_solution(sol: UniversalSolution, fmt: str) -> None:
    if fmt == "dot":
        sys.stdout.write(to_dot(sol.host, "U"))
    else:
        print(_dump(sol.to_json()))


def _read_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc})") from exc


def _read_matrix(path: str) -> list[list[int]]:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                try:
                    rows.append([int(x) for x in line.split()])
                except ValueError as exc:
                    raise InputError(f"bad matrix row {line!r}") from exc
    return rows


def cmd_solve(args) -> int:
    a, b = read_graph(args.a), read_graph(args.b)
    _emit_solution(solve(a, b), args.format)
    return EXIT_OK


def cmd_embed(args) -> int:
    pattern, host = read_graph(args.pattern), read_graph(args.host)
    e = find_embedding(pattern, host, parse_k(args.k), args.budget)
    if e is None:
        print(_dump({"found": False}))
        return EXIT_NEGATIVE
    print(_dump(e.to_json()))
    return EXIT_OK


def cmd_oracle(args) -> int:
    family = [read_graph(p) for p in args.files]
    sol = min_universal_bruteforce(family, parse_k(args.k), args.max_vertices, args.budget)
    if sol is None:
        print(_dump({"found": False, "max_vertices": args.max_vertices}))
        return EXIT_NEGATIVE
    _emit_solution(sol, args.format)
    return EXIT_OK


def cmd_match(args) -> int:
    w = _read_matrix(args.matrix)
    flipped = bool(w) and len(w) > len(w[0])
    if flipped:
        w = [list(col) for col in zip(*w)]
    m = max_weight_max_matching(w)
    pairs = sorted((j, i) if flipped else (i, j) for i, j in m.pairs)
    print(_dump({"pairs": [list(p) for p in pairs], "weight": m.weight}))
    return EXIT_OK


def _parse_order(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise InputError(f"bad order {text!r}") from exc


def cmd_greedy(args) -> int:
    family = [read_graph(p) for p in args.files]
    if args.order:
        sol = greedy_fold(family, _parse_order(args.order))
    else:
        _, _, sol = best_case_greedy(family)
    _emit_solution(sol, args.format)
    return EXIT_OK


def _parse_triple(text: str) -> tuple[int, int, int]:
    parts = text.replace(" ", "").split(",")
    if len(parts) != 3:
        raise InputError(f"bad triple {text!r}; expected x,y,z")
    try:
        return tuple(int(p) for p in parts)  # type: ignore[return-value]
    except ValueError as exc:
        raise InputError(f"bad triple {text!r}") from exc


def _need(args, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise InputError(f"family {args.family} needs {', '.join(missing)}")


def _bundle_manifest(bundle: families.FamilyBundle) -> dict:
    out = {
        "family": bundle.family,
        "metadata": bundle.metadata,
        "members": [
            {"name": name, "n": g.n, "m": g.m, "file": f"{name}.graph"}
            for name, g in zip(bundle.names, bundle.graphs)
        ],
    }
    sol = bundle.solution()
    if sol is not None:
        out.update(sol.to_json())
        out["universal_file"] = "universal.graph"
    if bundle.extras:
        out["extras"] = {
            name: {
                "n": host.n,
                "edges": [list(e) for e in host.sorted_edges()],
                "embeddings": [e.to_json() for e in embs],
                "file": f"{name}.graph",
            }
            for name, (host, embs) in bundle.extras.items()
        }
    return out


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "star-triple":
        _need(args, "t")
        bundle = families.gen_star_triple(args.t)
    elif fam == "greedy":
        _need(args, "r", "s")
        bundle = families.gen_greedy_family(args.r, args.s)
    elif fam == "k-iso":
        _need(args, "n", "k")
        bundle = families.gen_k_family(args.n, int(args.k))
    else:
        _need(args, "instance")
        with open(args.instance, encoding="utf-8") as fh:
            inst = families.parse_3dm(fh.read())
        if fam == "np-reduction":
            bundle = families.gen_np_reduction(inst)
        else:
            if not args.matching:
                raise InputError("np-certificate needs at least one --matching x,y,z")
            bundle = families.gen_np_certificate(inst, [_parse_triple(t) for t in args.matching])

    if not bundle.verify():
        print("generated witnesses failed verification", file=sys.stderr)
        return EXIT_NEGATIVE
    manifest = _bundle_manifest(bundle)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for name, g in zip(bundle.names, bundle.graphs):
            _write(os.path.join(args.out, f"{name}.graph"), format_graph(g))
        if bundle.claimed_universal is not None:
            _write(os.path.join(args.out, "universal.graph"), format_graph(bundle.claimed_universal))
        for name, (host, _) in bundle.extras.items():
            _write(os.path.join(args.out, f"{name}.graph"), format_graph(host))
        _write(os.path.join(args.out, "manifest.json"), _dump(manifest) + "\n")
    print(_dump(manifest))
    return EXIT_OK


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_verify(args) -> int:
    sol = UniversalSolution.from_json(_read_json(args.solution))
    inputs: list[Graph] = [read_graph(p) for p in args.inputs]
    ok = sol.verify(inputs)
    print(_dump({"valid": ok, "size": sol.size}))
    return EXIT_OK if ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isouniv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "dot"), default="json")

    def add_budget(p):
        p.add_argument("--budget", type=int, default=None,
                       help="node-expansion budget (default: $ISOUNIV_BUDGET or 1e8)")

    p = sub.add_parser("solve", help="minimum isometric-universal graph of two forests")
    p.add_argument("a")
    p.add_argument("b")
    add_format(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("embed", help="search a k-isometric embedding")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--k", default="inf")
    add_budget(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("oracle", help="brute-force minimum universal graph")
    p.add_argument("files", nargs="+")
    p.add_argument("--k", default="inf")
    p.add_argument("--max-vertices", type=int, default=ENUMERATION_CEILING)
    add_budget(p)
    add_format(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("match", help="maximum-weight assignment of a weight matrix")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("gen", help="generate a lower-bound family")
    p.add_argument("--family", required=True,
                   choices=("star-triple", "greedy", "k-iso", "np-reduction", "np-certificate"))
    p.add_argument("--t", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--instance")
    p.add_argument("--matching", action="append")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("greedy", help="greedy fold through the pairwise solver")
    p.add_argument("files", nargs="+")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--best-case", action="store_true")
    mode.add_argument("--order")
    add_format(p)
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("verify", help="check a solution file against its inputs")
    p.add_argument("solution")
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
