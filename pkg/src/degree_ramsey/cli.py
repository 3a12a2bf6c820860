"""``degree-ramsey`` command line.

Exit codes: 0 arrows / success, 1 does not arrow / check failed, 2 unknown
(budget exhausted), 3 usage error, 4 input/output error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import bounds, pipelines
from .arrowing import SearchBudget, brute_force_arrowing, decide_arrowing
from .construct import (
    ConstructionError,
    bipartite_double_cover,
    high_girth_regular,
    one_factorization,
    regular_bipartite_supergraph,
    serialize_factorization,
    serialize_supergraph,
    star_free_coloring,
)
from .graph import (
    GraphFormatError,
    parse_coloring,
    parse_graph,
    serialize_coloring,
    serialize_embedding,
    serialize_graph,
)
from .patterns import EmbeddingFailure, embed_tree, find_monochromatic, kst_find, peel_dense_core
from .targets import PatternSyntaxError, parse_pattern

EXIT_USAGE = 3
EXIT_IO = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would read as "unknown"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    return int(os.environ.get("RAMSEY_SEED", "0"))


def _read_graph(path):
    return parse_graph(Path(path).read_text())


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_arrow(args) -> int:
    h = _read_graph(args.host)
    pat = parse_pattern(args.pattern)
    if args.verify_cert:
        col = parse_coloring(Path(args.verify_cert).read_text())
        if col.color_count != args.colors:
            raise UsageError(f"certificate uses {col.color_count} colors, expected {args.colors}")
        col.check_host(h)
        hit = find_monochromatic(h, col, pat)
        if hit is None:
            print("CERTIFICATE VALID not_arrows")
            return 1
        c, emb = hit
        print(f"CERTIFICATE INVALID monochromatic copy in color {c}: {' '.join(map(str, emb.map))}")
        return 2
    if args.oracle:
        verdict = brute_force_arrowing(h, pat, args.colors)
    else:
        budget = SearchBudget(args.budget_nodes, args.budget_seconds)
        verdict = decide_arrowing(h, pat, args.colors, budget)
    print(f"{verdict.outcome.value.upper()} nodes={verdict.nodes_explored} seconds={verdict.seconds:.3f}")
    if verdict.certificate is not None:
        text = serialize_coloring(verdict.certificate)
        if args.cert_out:
            Path(args.cert_out).write_text(text)
        else:
            sys.stdout.write(text)
    return verdict.exit_code


def cmd_color(args) -> int:
    h = _read_graph(args.host)
    col = star_free_coloring(h, args.colors, args.star)
    _emit(serialize_coloring(col), args.out)
    return 0


def cmd_construct(args) -> int:
    if args.what == "high-girth-regular":
        seed = args.seed if args.seed is not None else _default_seed()
        text = serialize_graph(high_girth_regular(args.degree, args.girth, seed))
    elif args.what == "double-cover":
        text = serialize_graph(bipartite_double_cover(_read_graph(args.input)))
    elif args.what == "supergraph":
        text = serialize_supergraph(regular_bipartite_supergraph(_read_graph(args.input), args.degree))
    else:
        # also accept supergraph files, whose inclusion lines are ignored here
        g = parse_graph(Path(args.input).read_text(), {"inc": [], "vmap": []})
        text = serialize_factorization(one_factorization(g))
    _emit(text, args.out)
    return 0


def cmd_embed(args) -> int:
    h = _read_graph(args.host)
    t = _read_graph(args.tree)
    result = embed_tree(h, t, args.root_degree)
    if isinstance(result, EmbeddingFailure):
        print(f"FAILURE tree_vertex={result.tree_vertex} host_vertex={result.host_vertex} {result.reason}")
        return 1
    sys.stdout.write(serialize_embedding(result))
    return 0


def cmd_peel(args) -> int:
    res = peel_dense_core(_read_graph(args.input))
    print("removed " + " ".join(map(str, res.removed)))
    print("kept " + " ".join(map(str, res.kept)))
    sys.stdout.write(serialize_graph(res.core))
    return 0


def cmd_kst(args) -> int:
    cert = kst_find(_read_graph(args.input), args.m, args.n)
    if cert is None:
        print("NONE")
        return 1
    print("left " + " ".join(map(str, cert.left_set)))
    print("right " + " ".join(map(str, cert.right_set)))
    return 0


_BOUNDS = {
    "star": (bounds.bound_star, ("n", "s"), 0),
    "tree-spider": (bounds.bound_tree_spider, ("k", "s"), 0),
    "tree-upper": (bounds.bound_tree_upper, ("delta_T", "s"), 0),
    "kmn-expected": (bounds.kmn_expected_upper, ("N", "m", "n", "s"), 0),
    "kmn-lower": (bounds.kmn_lower_bound, ("n", "m", "s"), 0),
    "kmn-constant": (bounds.kmn_upper_constant, ("m", "s", "n"), 1),
    "cycle": (bounds.cycle_bounds, ("m", "s", "n"), 1),
}


def cmd_bounds(args) -> int:
    if args.name == "kmn-mc":
        if len(args.values) not in (5, 6):
            raise UsageError("kmn-mc takes N m n s trials [seed]")
        vals = [int(x) for x in args.values]
        seed = vals[5] if len(vals) == 6 else _default_seed()
        mc = bounds.monte_carlo_kmn(*vals[:5], seed)
        fields = {
            "existence_frequency": mc.existence_frequency,
            "existence_stderr": mc.existence_stderr,
            "mean_count": mc.mean_count,
            "count_stderr": mc.count_stderr,
            "exact_expected_count": str(mc.exact_expected_count),
            "labeled_bound": str(mc.labeled_bound),
        }
        if args.json:
            print(json.dumps({"name": "kmn-mc", "inputs": dict(zip("N m n s trials".split(), vals[:5]), seed=seed), **fields}))
        else:
            print("\t".join(["kmn-mc", f"N={vals[0]} m={vals[1]} n={vals[2]} s={vals[3]} trials={vals[4]} seed={seed}",
                             " ".join(f"{k}={v}" for k, v in fields.items()), "estimate", "Theorem1-proof"]))
        return 0
    if args.name not in _BOUNDS:
        raise UsageError(f"unknown bound {args.name!r}; choose from {', '.join(sorted(_BOUNDS))}, kmn-mc")
    fn, names, optional = _BOUNDS[args.name]
    if not len(names) - optional <= len(args.values) <= len(names):
        raise UsageError(f"{args.name} takes {' '.join(names)}" + (" (last optional)" if optional else ""))
    try:
        vals = [int(x) for x in args.values]
    except ValueError:
        raise UsageError("bound arguments must be integers") from None
    report = fn(*vals)
    print(report.to_json() if args.json else report.to_line())
    for flag in report.flags:
        print(f"# flag: {flag}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    fn = pipelines.PIPELINES[args.which]
    kwargs = {"seed": seed}
    if args.colors is not None:
        if args.which == "lemma1":
            kwargs["s_values"] = (args.colors,)
        elif args.which == "lemma6":
            raise UsageError("lemma6 takes no color count")
        else:
            kwargs["s"] = args.colors
    if args.trials is not None and args.which == "theorem1-mc":
        kwargs["trials"] = args.trials
    checks = fn(**kwargs)
    for c in checks:
        print(c.line())
    return 0 if pipelines.all_passed(checks) else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="degree-ramsey", description="Degree Ramsey number laboratory.")
    p.add_argument("--threads", type=int, default=1,
                   help="worker cap (searches currently run single-threaded)")
    p.add_argument("--deterministic", action="store_true",
                   help="deterministic results (always the case for single-threaded runs)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("arrow", help="decide whether HOST arrows PATTERN with S colors")
    a.add_argument("--host", required=True)
    a.add_argument("--pattern", required=True)
    a.add_argument("--colors", type=int, required=True)
    a.add_argument("--budget-nodes", type=int, default=10**7)
    a.add_argument("--budget-seconds", type=float, default=600.0)
    a.add_argument("--oracle", action="store_true", help="use exhaustive enumeration instead")
    a.add_argument("--cert-out")
    a.add_argument("--verify-cert", help="check a coloring file instead of searching")
    a.set_defaults(func=cmd_arrow)

    c = sub.add_parser("color", help="explicit colorings")
    csub = c.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    sf = csub.add_parser("star-free")
    sf.add_argument("--host", required=True)
    sf.add_argument("--colors", type=int, required=True)
    sf.add_argument("--star", type=int, required=True)
    sf.add_argument("--out")
    sf.set_defaults(func=cmd_color)

    k = sub.add_parser("construct", help="build hosts and certificates")
    ksub = k.add_subparsers(dest="what", required=True, parser_class=_Parser)
    hg = ksub.add_parser("high-girth-regular")
    hg.add_argument("--degree", type=int, required=True)
    hg.add_argument("--girth", type=int, required=True)
    hg.add_argument("--seed", type=int)
    for name in ("double-cover", "supergraph", "factorize"):
        q = ksub.add_parser(name)
        q.add_argument("--in", dest="input", required=True)
        if name == "supergraph":
            q.add_argument("--degree", type=int, required=True)
    for q in ksub.choices.values():
        q.add_argument("--out")
        q.set_defaults(func=cmd_construct)

    e = sub.add_parser("embed", help="greedy tree embedding")
    e.add_argument("--host", required=True)
    e.add_argument("--tree", required=True)
    e.add_argument("--root-degree", type=int)
    e.set_defaults(func=cmd_embed)

    pe = sub.add_parser("peel", help="dense core by low-degree deletion")
    pe.add_argument("--in", dest="input", required=True)
    pe.set_defaults(func=cmd_peel)

    ks = sub.add_parser("kst", help="find K_{m,n} with m vertices on side A")
    ks.add_argument("--in", dest="input", required=True)
    ks.add_argument("-m", type=int, required=True)
    ks.add_argument("-n", type=int, required=True)
    ks.set_defaults(func=cmd_kst)

    b = sub.add_parser("bounds", help="closed-form bounds")
    b.add_argument("name")
    b.add_argument("values", nargs="*")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify-theorem", help="run a proof pipeline and print CHECK lines")
    v.add_argument("which", choices=sorted(pipelines.PIPELINES))
    v.add_argument("--seed", type=int)
    v.add_argument("--colors", type=int)
    v.add_argument("--trials", type=int)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PatternSyntaxError) as exc:
        print(f"degree-ramsey: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, GraphFormatError) as exc:
        print(f"degree-ramsey: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, ConstructionError) as exc:
        print(f"degree-ramsey: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
