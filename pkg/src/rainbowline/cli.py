"""Command-line surface.

Subcommands: gen, linegraph, bound, exact, verify, color, bench.
Exit codes: 0 success/verified, 2 verification failed, 3 input error,
4 resource limit exceeded.
"""

import argparse
import csv
import io
import sys

from . import triangles
from .coloring import (
    EdgeColoring,
    color_cubic_iterated,
    color_forest_packing,
    color_iterated_baseline,
    color_packing,
)
from .errors import InputError, LimitError
from .families import FAMILIES, connected_gnp, gen_family, random_cubic
from .formats import (
    dump_report,
    graph_payload,
    parse_coloring,
    parse_edge_list,
    render_edge_list,
    to_dot,
)
from .graphs import Graph, degree_profile, diameter
from .linegraph import iterated_line_graph, line_graph
from .oracle import DEFAULT_EDGE_CAP, exact_rc, is_rainbow_connected, rc_lower_bound

EXIT_OK = 0
EXIT_UNVERIFIED = 2
EXIT_INPUT = 3
EXIT_LIMIT = 4

_FAMILY_PARAM_FLAGS = ("t", "k", "n", "r", "f")


def _add_source_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--file", help="edge-list file ('-' for stdin)")
    p.add_argument("--family", choices=FAMILIES, help="generated family")
    p.add_argument("--model", choices=("gnp", "random_cubic"), help="random model source")
    p.add_argument("--seed", type=int, help="seed, mandatory with --model")
    for flag in _FAMILY_PARAM_FLAGS:
        p.add_argument(f"--{flag}", type=int, help=argparse.SUPPRESS)
    p.add_argument("--p", type=float, help=argparse.SUPPRESS)


def _load_graph(args: argparse.Namespace) -> tuple[Graph, dict]:
    sources = [s for s in (args.file, args.family, args.model) if s]
    if len(sources) != 1:
        raise InputError("exactly one of --file, --family, or --model is required")
    if args.file:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
        return parse_edge_list(text), {"file": args.file}
    if args.model:
        if args.seed is None:
            raise InputError("--seed is required for random models")
        if args.n is None:
            raise InputError("--n is required for random models")
        meta = {"model": args.model, "n": args.n, "seed": args.seed}
        if args.model == "gnp":
            if args.p is None:
                raise InputError("--p is required for the gnp model")
            meta["p"] = args.p
            return connected_gnp(args.n, args.p, args.seed), meta
        return random_cubic(args.n, args.seed), meta
    params = {
        flag: getattr(args, flag)
        for flag in _FAMILY_PARAM_FLAGS
        if getattr(args, flag, None) is not None
    }
    return gen_family(args.family, **params), {"family": args.family, "params": params}


def _write(path: str, text: str) -> None:
    with open(path, "w") as fh:
        fh.write(text)


def cmd_gen(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args)
    sys.stdout.write(render_edge_list(g))
    return EXIT_OK


def cmd_linegraph(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args)
    chain = iterated_line_graph(g, args.iterations)
    target = chain[-1].l_graph
    sys.stdout.write(render_edge_list(target))
    if args.dot:
        _write(args.dot, to_dot(target))
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    g, meta = _load_graph(args)
    lower = rc_lower_bound(g)
    upper = g.n - 1
    print(f"diameter = {lower}")
    print(f"rc lower bound = {lower}")
    print(f"rc upper bound (spanning tree) = {upper}")
    if args.json:
        _write(
            args.json,
            dump_report(
                {
                    "command": "bound",
                    "instance": meta,
                    "graph": graph_payload(g),
                    "diameter": lower,
                    "rc_lower": lower,
                    "rc_upper": upper,
                }
            ),
        )
    return EXIT_OK


def cmd_exact(args: argparse.Namespace) -> int:
    g, meta = _load_graph(args)
    value = exact_rc(g, max_edges=args.max_edges)
    print(f"exact rc = {value}")
    if args.json:
        _write(
            args.json,
            dump_report(
                {
                    "command": "exact",
                    "instance": meta,
                    "graph": graph_payload(g),
                    "exact_rc": value,
                }
            ),
        )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g, meta = _load_graph(args)
    colors, k = parse_coloring(open(args.coloring).read(), g.m)
    coloring = EdgeColoring(g, colors, k)
    ok, witness = is_rainbow_connected(g, coloring)
    print(f"verified = {str(ok).lower()}")
    if witness:
        print(f"failing pair = {witness[0]} {witness[1]}")
    if args.json:
        _write(
            args.json,
            dump_report(
                {
                    "command": "verify",
                    "instance": meta,
                    "graph": graph_payload(g),
                    "coloring": list(colors),
                    "k": k,
                    "verified": ok,
                    "witness_failure": list(witness) if witness else None,
                }
            ),
        )
    return EXIT_OK if ok else EXIT_UNVERIFIED


_THEOREM_DEFAULT_PACK = {"31": "forest_exact", "32": "exact"}
_GREEDY_FALLBACK = {"forest_exact": "forest_greedy", "exact": "greedy"}


def _pick_packing(g: Graph, theorem: str, requested: str | None) -> tuple:
    """Packing for the chosen bound: the requested mode verbatim, else the
    exact default with a greedy fallback when the search cap trips."""
    if requested:
        return triangles.pack_edge_disjoint(g, requested), requested
    mode = _THEOREM_DEFAULT_PACK[theorem]
    try:
        return triangles.pack_edge_disjoint(g, mode), mode
    except LimitError:
        fallback = _GREEDY_FALLBACK[mode]
        return triangles.pack_edge_disjoint(g, fallback), fallback


def _packing_payload(p: triangles.TrianglePacking) -> dict:
    return {
        "t": p.t,
        "c": p.c,
        "n2_prime": p.n2_prime,
        "op": p.op,
        "forest": p.all_forest,
        "triangles": [list(t.vertices) for t in p.triangles],
    }


def cmd_color(args: argparse.Namespace) -> int:
    g, meta = _load_graph(args)
    packing = None
    pack_mode = None
    if args.theorem == "31":
        packing, pack_mode = _pick_packing(g, "31", args.pack)
        coloring, cert = color_forest_packing(g, packing)
        target_name = "L"
    elif args.theorem == "32":
        packing, pack_mode = _pick_packing(g, "32", args.pack)
        coloring, cert = color_packing(g, packing)
        target_name = "L"
    elif args.theorem == "cubic":
        coloring, cert = color_cubic_iterated(g)
        target_name = "L2"
    else:
        coloring, cert = color_iterated_baseline(g)
        target_name = "L2"
    target = coloring.graph
    lower = rc_lower_bound(target)
    print(f"bound {cert.bound_name} = {cert.bound_value}")
    print(f"colors used = {cert.colors_used}")
    print(f"verified = {str(cert.verified).lower()}")
    if cert.witness_failure:
        print(f"failing pair = {cert.witness_failure[0]} {cert.witness_failure[1]}")
    if packing is not None:
        print(
            f"packing: t={packing.t} c={packing.c} n2'={packing.n2_prime} "
            f"op={packing.op} mode={pack_mode}"
        )
    if args.json:
        payload = {
            "command": "color",
            "instance": {**meta, "theorem": args.theorem, "pack": pack_mode},
            "source_graph": graph_payload(g),
            "target": target_name,
            "target_graph": graph_payload(target),
            "bound": {"name": cert.bound_name, "value": cert.bound_value},
            "colors_used": cert.colors_used,
            "coloring": list(coloring.colors),
            "verified": cert.verified,
            "witness_failure": list(cert.witness_failure) if cert.witness_failure else None,
            "diameter_lower_bound": lower,
        }
        if packing is not None:
            payload["packing"] = _packing_payload(packing)
        _write(args.json, dump_report(payload))
    if args.dot:
        _write(args.dot, to_dot(target, coloring.colors))
    return EXIT_OK if cert.verified else EXIT_UNVERIFIED


_BENCH_FIELDS = [
    "index", "seed", "n", "m", "n2",
    "t_greedy", "t_exact", "t_forest_greedy", "t_forest_exact",
    "c", "n2_prime", "op",
    "bound_forest", "colors_forest", "verified_forest",
    "bound_general", "colors_general", "verified_general",
    "bound_cubic", "colors_cubic", "verified_cubic",
    "diam_line", "exact_rc_line",
]


def _bench_row(index: int, seed: int, g: Graph, cubic: bool, max_edges: int) -> dict:
    prof = degree_profile(g)
    row: dict = {"index": index, "seed": seed, "n": g.n, "m": g.m, "n2": prof.n2}
    packs: dict[str, triangles.TrianglePacking | None] = {}
    for mode in triangles.PACK_MODES:
        try:
            packs[mode] = triangles.pack_edge_disjoint(g, mode)
        except LimitError:
            packs[mode] = None
        row[f"t_{mode}"] = packs[mode].t if packs[mode] else ""
    forest_pack = packs["forest_exact"] or packs["forest_greedy"]
    general_pack = packs["exact"] or packs["greedy"]
    assert forest_pack is not None and general_pack is not None
    row["c"] = general_pack.c
    row["n2_prime"] = general_pack.n2_prime
    row["op"] = general_pack.op
    _, cert_f = color_forest_packing(g, forest_pack)
    row["bound_forest"] = cert_f.bound_value
    row["colors_forest"] = cert_f.colors_used
    row["verified_forest"] = cert_f.verified
    _, cert_g = color_packing(g, general_pack)
    row["bound_general"] = cert_g.bound_value
    row["colors_general"] = cert_g.colors_used
    row["verified_general"] = cert_g.verified
    if cubic:
        _, cert_c = color_cubic_iterated(g)
        row["bound_cubic"] = cert_c.bound_value
        row["colors_cubic"] = cert_c.colors_used
        row["verified_cubic"] = cert_c.verified
    else:
        row["bound_cubic"] = row["colors_cubic"] = row["verified_cubic"] = ""
    lg = line_graph(g).l_graph
    row["diam_line"] = diameter(lg)
    try:
        row["exact_rc_line"] = exact_rc(lg, max_edges=max_edges)
    except LimitError:
        row["exact_rc_line"] = ""
    return row


def run_bench(model: str, n: int, p: float, count: int, seed: int, max_edges: int) -> list[dict]:
    """Seeded benchmark rows; connected samples only, deterministic per seed."""
    if model not in ("gnp", "random_cubic"):
        raise InputError(f"unknown model {model!r}")
    if count < 0:
        raise InputError("count must be non-negative")
    rng_seed = seed
    rows = []
    for index in range(count):
        instance_seed = rng_seed * 1_000_003 + index
        if model == "gnp":
            g = connected_gnp(n, p, instance_seed)
        else:
            g = random_cubic(n, instance_seed)
        rows.append(_bench_row(index, instance_seed, g, model == "random_cubic", max_edges))
    return rows


def _bench_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_BENCH_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def cmd_bench(args: argparse.Namespace) -> int:
    if args.seed is None:
        raise InputError("--seed is required for random models")
    if args.model == "gnp" and args.p is None:
        raise InputError("--p is required for the gnp model")
    if args.n is None:
        raise InputError("--n is required")
    rows = run_bench(args.model, args.n, args.p or 0.0, args.count, args.seed, args.max_edges)
    text = _bench_csv(rows)
    if args.csv:
        _write(args.csv, text)
    else:
        sys.stdout.write(text)
    if args.json:
        _write(
            args.json,
            dump_report(
                {
                    "command": "bench",
                    "model": args.model,
                    "n": args.n,
                    "p": args.p,
                    "count": args.count,
                    "seed": args.seed,
                    "rows": rows,
                }
            ),
        )
    bad = [r for r in rows if r["verified_forest"] is not True or r["verified_general"] is not True]
    return EXIT_UNVERIFIED if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowline",
        description="Rainbow colorings of (iterated) line graphs from triangle structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="print a family graph as an edge list")
    _add_source_args(p_gen)
    p_gen.set_defaults(func=cmd_gen)

    p_lg = sub.add_parser("linegraph", help="print the (iterated) line graph")
    _add_source_args(p_lg)
    p_lg.add_argument("--iterations", type=int, default=1)
    p_lg.add_argument("--dot", help="write the result as DOT")
    p_lg.set_defaults(func=cmd_linegraph)

    p_bound = sub.add_parser("bound", help="diameter lower bound for rc")
    _add_source_args(p_bound)
    p_bound.add_argument("--json", help="write a JSON report")
    p_bound.set_defaults(func=cmd_bound)

    p_exact = sub.add_parser("exact", help="exact rc by exhaustive search")
    _add_source_args(p_exact)
    p_exact.add_argument("--max-edges", type=int, default=DEFAULT_EDGE_CAP)
    p_exact.add_argument("--json", help="write a JSON report")
    p_exact.set_defaults(func=cmd_exact)

    p_verify = sub.add_parser("verify", help="check a coloring for rainbow connectivity")
    _add_source_args(p_verify)
    p_verify.add_argument("--coloring", required=True, help="file with one color per edge")
    p_verify.add_argument("--json", help="write a JSON report")
    p_verify.set_defaults(func=cmd_verify)

    p_color = sub.add_parser("color", help="build and verify a rainbow coloring")
    _add_source_args(p_color)
    p_color.add_argument("--theorem", choices=("31", "32", "cubic", "iterated"), required=True)
    p_color.add_argument("--pack", choices=triangles.PACK_MODES)
    p_color.add_argument("--json", help="write a JSON report")
    p_color.add_argument("--dot", help="write the colored target graph as DOT")
    p_color.set_defaults(func=cmd_color)

    p_bench = sub.add_parser("bench", help="seeded random ensembles with all bounds")
    p_bench.add_argument("--model", choices=("gnp", "random_cubic"), required=True)
    p_bench.add_argument("--n", type=int)
    p_bench.add_argument("--p", type=float)
    p_bench.add_argument("--count", type=int, default=10)
    p_bench.add_argument("--seed", type=int)
    p_bench.add_argument("--max-edges", type=int, default=DEFAULT_EDGE_CAP)
    p_bench.add_argument("--csv", help="write the table as CSV")
    p_bench.add_argument("--json", help="write the table as JSON")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LimitError as exc:
        msg = str(exc)
        if exc.lower is not None and exc.upper is not None:
            msg += f" (proven bracket: {exc.lower}..{exc.upper})"
        print(f"resource limit: {msg}", file=sys.stderr)
        return EXIT_LIMIT
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
