"""Command-line front end: compute indices, generate families, run
claim verifiers, enumerate trees.  All structured output is JSON on
stdout; --pretty switches to aligned key/value lines.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 method
precondition failure, 4 disconnected input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .benzenoid import coronene_tw3, gen_coronene
from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    EdgeListFormatError,
    InfeasibleSpecError,
    LoopEdgeError,
    NotATreeError,
    NotBipartiteError,
    NotPartialCubeError,
    OrderTooLargeError,
    VertexOutOfRangeError,
)
from .extremal import TreeSpec, caterpillar_twk, gen_tree
from .graphs import (
    Graph,
    bfs_distances,
    cycle_graph,
    dump_edge_list,
    hypercube_graph,
    is_tree,
    parse_edge_list,
)
from .indices import (
    index_report,
    twk,
    wiener,
    wiener_polynomial,
    wk,
    wk_star,
    twk_star,
    zagreb_m1,
    zagreb_m2,
)
from .partial_cube import is_partial_cube, twk_cut
from .tree_linear import RootedTree, distance_count_table, wk_linear
from .treegen import all_free_trees
from .verify import (
    DEFAULT_SEED,
    verify_coronene,
    verify_cut_vs_oracle,
    verify_eq1,
    verify_extremal,
    verify_linear_vs_oracle,
)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="distindex",
        description="Distance-based graph indices: computation, generation, verification.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute indices of an edge-list graph")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE", help="edge-list file")
    src.add_argument("--stdin", action="store_true", help="read edge list from stdin")
    c.add_argument(
        "--index",
        required=True,
        choices=["wk", "twk", "wiener", "poly", "zagreb", "wk-star", "twk-star", "all"],
    )
    c.add_argument("--k", type=int, help="distance (wk, wk-star) or degree (twk, twk-star)")
    c.add_argument("--method", choices=["oracle", "linear", "cut", "auto"], default="auto")
    c.add_argument("--pretty", action="store_true")
    c.add_argument("--no-timing", action="store_true", help="omit the elapsed_ms field")

    g = sub.add_parser("gen", help="generate a named graph family")
    g.add_argument(
        "--family",
        required=True,
        choices=[
            "path", "star", "cycle", "hypercube",
            "double-broom", "starlike-broom", "caterpillar", "coronene",
        ],
    )
    g.add_argument("--out", required=True, metavar="FILE")
    g.add_argument("--n", type=int, help="vertex count")
    g.add_argument("--k", type=int, help="distance (brooms) or rings (coronene)")
    g.add_argument("--kdeg", type=int, help="target degree (caterpillar)")
    g.add_argument("--p", type=int, help="number of degree-kdeg vertices (caterpillar)")
    g.add_argument("--a1", type=int, help="first pendant group size (double-broom)")
    g.add_argument("--a2", type=int, help="second pendant group size (double-broom)")
    g.add_argument("--parts", help="comma-separated pendant group sizes (starlike-broom)")
    g.add_argument("--d", type=int, help="dimension (hypercube)")
    g.add_argument("--pretty", action="store_true")

    v = sub.add_parser("verify", help="run a claim verifier")
    v.add_argument(
        "--claim",
        required=True,
        choices=[
            "max-wk", "max-tw3", "degree-count", "wiener-bounds",
            "eq1", "coronene", "cut-vs-oracle", "linear-vs-oracle",
        ],
    )
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--pretty", action="store_true")

    e = sub.add_parser("enumerate", help="list all free trees of one order")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--pretty", action="store_true")

    return ap


def _emit(payload: dict, pretty: bool) -> None:
    if pretty:
        width = max(len(key) for key in payload)
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True)
            print(f"{key:<{width}}  {value}")
    else:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _need(value, flag: str):
    if value is None:
        raise ValueError(f"missing required flag {flag}")
    return value


def _tree_diameter(g: Graph) -> int:
    row = bfs_distances(g, 0)
    far = row.index(max(row))
    return max(bfs_distances(g, far))


def _cmd_compute(args) -> dict:
    text = sys.stdin.read() if args.stdin else Path(args.input).read_text()
    g = parse_edge_list(text)
    index, k, method = args.index, args.k, args.method

    if index in ("wk", "wk-star", "twk-star") and (k is None or k < 1):
        raise ValueError(f"--index {index} needs --k >= 1")
    if index == "twk" and (k is None or k < 0):
        raise ValueError("--index twk needs --k >= 0")
    if method == "linear" and index not in ("wk", "poly"):
        raise ValueError("--method linear applies to --index wk or poly")
    if method == "cut" and index != "twk":
        raise ValueError("--method cut applies to --index twk")

    t0 = time.perf_counter()
    if method == "auto":
        if index in ("wk", "poly"):
            method = "linear" if is_tree(g) else "oracle"
        elif index == "twk":
            method = "cut" if is_partial_cube(g).accepted else "oracle"
        else:
            method = "oracle"

    payload: dict = {"n": g.n, "m": g.m, "index": index, "method": method}
    if k is not None:
        payload["k"] = k
    if index == "wiener":
        payload["wiener"] = wiener(g)
    elif index == "wk":
        payload["wk"] = wk_linear(g, k) if method == "linear" else wk(g, k)
    elif index == "poly":
        if method == "linear":
            rt = RootedTree.build(g)
            diam = _tree_diameter(g)
            coeffs = [0]
            if diam:
                table = distance_count_table(rt, diam)
                coeffs += [wk_linear(rt, kk, table) for kk in range(1, diam + 1)]
            payload["poly"] = coeffs
        else:
            payload["poly"] = list(wiener_polynomial(g).coeffs)
    elif index == "twk":
        payload["twk"] = twk_cut(g, k) if method == "cut" else twk(g, k)
    elif index == "zagreb":
        payload["m1"] = zagreb_m1(g)
        payload["m2"] = zagreb_m2(g)
    elif index == "wk-star":
        payload["wk_star"] = wk_star(g, k)
    elif index == "twk-star":
        payload["twk_star"] = twk_star(g, k)
    else:
        payload.update(index_report(g, star_k=k).as_dict())
    if not args.no_timing:
        payload["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return payload


def _cmd_gen(args) -> dict:
    family = args.family
    predicted: dict = {}
    if family == "path":
        n = _need(args.n, "--n")
        graph = gen_tree(TreeSpec.path(n))
        params = {"n": n}
        predicted = {"wiener": (n + 1) * n * (n - 1) // 6}
    elif family == "star":
        n = _need(args.n, "--n")
        graph = gen_tree(TreeSpec.star(n))
        params = {"n": n}
        predicted = {"wiener": (n - 1) * (n - 1)}
    elif family == "cycle":
        n = _need(args.n, "--n")
        graph = cycle_graph(n)
        params = {"n": n}
    elif family == "hypercube":
        d = _need(args.d, "--d")
        graph = hypercube_graph(d)
        params = {"d": d}
    elif family == "double-broom":
        k = _need(args.k, "--k")
        a1 = _need(args.a1, "--a1")
        a2 = _need(args.a2, "--a2")
        graph = gen_tree(TreeSpec.double_broom(k, a1, a2))
        params = {"k": k, "a1": a1, "a2": a2}
        predicted = {"wk": a1 * a2, "k": k}
    elif family == "starlike-broom":
        k = _need(args.k, "--k")
        raw = _need(args.parts, "--parts")
        try:
            parts = tuple(int(x) for x in raw.split(","))
        except ValueError as exc:
            raise ValueError(f"--parts must be comma-separated integers, got {raw!r}") from exc
        graph = gen_tree(TreeSpec.starlike_broom(k, parts))
        params = {"k": k, "parts": list(parts)}
        q = sum(parts)
        predicted = {"wk": (q * q - sum(a * a for a in parts)) // 2, "k": k}
    elif family == "caterpillar":
        n = _need(args.n, "--n")
        kdeg = _need(args.kdeg, "--kdeg")
        p = _need(args.p, "--p")
        graph = gen_tree(TreeSpec.caterpillar(n, kdeg, p))
        params = {"n": n, "kdeg": kdeg, "p": p}
        predicted = {"twk": caterpillar_twk(n, kdeg, p), "k": kdeg}
    else:
        k = _need(args.k, "--k")
        graph = gen_coronene(k).graph
        params = {"k": k}
        predicted = {"tw3": coronene_tw3(k)}

    dump_edge_list(graph, args.out)
    payload = {
        "family": family,
        "params": params,
        "n": graph.n,
        "m": graph.m,
        "out": args.out,
    }
    if predicted:
        payload["predicted"] = predicted
    return payload


def _cmd_verify(args) -> dict:
    claim = args.claim
    if claim in ("max-wk", "max-tw3", "degree-count", "wiener-bounds"):
        return verify_extremal(_need(args.n, "--n"), claim, args.k)
    if claim == "eq1":
        return verify_eq1(args.n if args.n is not None else 60)
    if claim == "coronene":
        return verify_coronene(_need(args.k, "--k"))
    if claim == "cut-vs-oracle":
        trials = args.trials if args.trials is not None else 200
        return verify_cut_vs_oracle(trials=trials, seed=args.seed)
    trials = args.trials if args.trials is not None else 1000
    return verify_linear_vs_oracle(trials=trials, seed=args.seed)


def _cmd_enumerate(args) -> dict:
    payload: dict = {"n": args.n}
    if args.count_only:
        payload["count"] = sum(1 for _ in all_free_trees(args.n))
    else:
        trees = [t.edges() for t in all_free_trees(args.n)]
        payload["count"] = len(trees)
        payload["trees"] = [[[u, v] for u, v in edges] for edges in trees]
    return payload


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "compute": _cmd_compute,
        "gen": _cmd_gen,
        "verify": _cmd_verify,
        "enumerate": _cmd_enumerate,
    }
    try:
        payload = handlers[args.command](args)
    except (
        EdgeListFormatError,
        LoopEdgeError,
        DuplicateEdgeError,
        VertexOutOfRangeError,
        InfeasibleSpecError,
        OrderTooLargeError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotATreeError, NotPartialCubeError, NotBipartiteError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DisconnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    _emit(payload, args.pretty)
    if args.command == "verify" and not payload.get("pass", False):
        return 1
    return 0


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
