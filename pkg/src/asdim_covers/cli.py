"""Command line entry point (``asdim``).

Exit status: 0 success, 1 usage or input error, 2 a checked bound was
violated, 3 a search ran out of budget before reaching a verdict.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import io
from .covers import cactus_cover, coarse_cactus_cover, planar_cover
from .generators import FAMILIES, GeneratorSpec, generate, is_cactus
from .graph import INF, InputError, components, set_diameter
from .theta import MODES, check_annulus_theta_free, find_fat_theta, is_fat, witness_margins
from .verify import layer_multiplicities, multiplicities, verify_cover

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_BUDGET = 0, 1, 2, 3
THREADS_ENV = "ASDIM_THREADS"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 by default; 2 means "violation" here
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="asdim", description="Bounded low-multiplicity covers of graphs, fat theta search and exact verification.")
    p.add_argument("--threads", type=_positive_int, default=None,
                   help=f"worker threads (default: ${THREADS_ENV} or 1); never changes output bytes")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="write a graph from a seeded family")
    g.add_argument("--family", required=True, choices=FAMILIES)
    g.add_argument("--seed", type=int, default=0)
    for name in ("w", "h", "n", "l1", "l2", "l3", "c", "ell", "bridge", "window", "dim"):
        g.add_argument(f"--{name}", type=int)
    g.add_argument("--sizes", type=_int_list, help="cube sides for lambda-grid, e.g. 2,3,4")
    g.add_argument("--p", type=float, help="edge deletion probability for random-planar")
    g.add_argument("--out", "-o")

    c = sub.add_parser("cover", help="compute a cover of a graph")
    c.add_argument("--graph", required=True)
    c.add_argument("--algorithm", required=True, choices=["cactus", "coarse-cactus", "planar-pipeline"])
    c.add_argument("--base", type=int, default=0)
    c.add_argument("--m", type=float, help="scale for cactus / coarse-cactus")
    c.add_argument("--M", type=float, help="fatness scale for coarse-cactus")
    c.add_argument("--rho", type=float, help="multiplicity radius for planar-pipeline")
    c.add_argument("--out", "-o")
    c.add_argument("--dot", help="also write a DOT drawing with sets coloured")

    v = sub.add_parser("verify", help="check a cover against diameter and multiplicity bounds")
    v.add_argument("--graph", required=True)
    v.add_argument("--cover", required=True)
    v.add_argument("--diameter-bound", type=float)
    v.add_argument("--radius", type=float)
    v.add_argument("--multiplicity-bound", type=int)
    v.add_argument("--layers", action="store_true",
                   help="also check per-annulus multiplicity against the cover's layer bound")
    v.add_argument("--out", "-o")

    t = sub.add_parser("theta-search", help="search for an embedded M-fat theta curve")
    t.add_argument("--graph", required=True)
    t.add_argument("--M", type=float, required=True)
    t.add_argument("--mode", choices=MODES, default="exhaustive")
    t.add_argument("--budget", type=int, default=1_000_000)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--cutoff", type=int)
    t.add_argument("--out", "-o")

    vt = sub.add_parser("verify-theta", help="re-check a fat theta certificate")
    vt.add_argument("--graph", required=True)
    vt.add_argument("--certificate", required=True)
    vt.add_argument("--M", type=float, help="check at this M instead of the certificate's")

    a = sub.add_parser("annulus-check", help="fat theta search in every component of an annulus")
    a.add_argument("--graph", required=True)
    a.add_argument("--base", type=int, default=0)
    a.add_argument("--r", type=float, required=True)
    a.add_argument("--m", type=float, required=True)
    a.add_argument("--mode", choices=MODES, default="exhaustive")
    a.add_argument("--budget", type=int, default=1_000_000)
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--cutoff", type=int)
    a.add_argument("--out", "-o")

    s = sub.add_parser("stats", help="print graph (and optionally cover) summaries")
    s.add_argument("--graph", required=True)
    s.add_argument("--cover")
    s.add_argument("--radius", type=float)
    return p


def _graph(path: str):
    return io.loads_graph(io.read_text(path, "graph"))


def _need(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InputError(f"{args.command} needs " + ", ".join("--" + n.replace("_", "-") for n in missing))


def _cmd_generate(args) -> int:
    keys = ("w", "h", "n", "l1", "l2", "l3", "c", "ell", "bridge", "window", "dim", "sizes", "p")
    params = {k: getattr(args, k) for k in keys if getattr(args, k) is not None}
    g = generate(GeneratorSpec(args.family, params, args.seed))
    io.write_text(args.out, io.dumps_graph(g))
    return EXIT_OK


def _cmd_cover(args, threads: int) -> int:
    g = _graph(args.graph)
    if args.algorithm == "cactus":
        _need(args, "m")
        cov = cactus_cover(g, args.base, args.m, workers=threads)
    elif args.algorithm == "coarse-cactus":
        _need(args, "m", "M")
        cov = coarse_cactus_cover(g, args.base, args.m, args.M, workers=threads)
    else:
        _need(args, "rho")
        cov = planar_cover(g, args.base, args.rho, workers=threads)
    io.write_text(args.out, io.dumps_cover(cov))
    if args.dot:
        io.write_text(args.dot, io.to_dot(g, cov))
    return EXIT_OK


def _cmd_verify(args, threads: int) -> int:
    g = _graph(args.graph)
    cov = io.loads_cover(io.read_text(args.cover, "cover"))
    rep = verify_cover(g, cov, args.diameter_bound, args.radius, args.multiplicity_bound, workers=threads)
    out = rep.to_dict()
    ok = rep.passed
    if args.layers:
        bound = int(cov.params.get("layer_multiplicity_bound", cov.params.get("multiplicity_bound", 2)))
        layers = layer_multiplicities(g, cov, workers=threads)
        worst = max(layers.values(), default=0)
        out["layers"] = {
            "radius": cov.params.get("layer_radius", cov.params.get("radius", 0)),
            "multiplicity_bound": bound,
            "max_multiplicity": worst,
            "per_annulus": {str(k): v for k, v in layers.items()},
            "passed": worst <= bound,
        }
        ok = ok and worst <= bound
    io.write_text(args.out, io.dumps(out))
    if not ok:
        for what, why in rep.violations[:20]:
            print(f"violation: {what}: {why}", file=sys.stderr)
        if len(rep.violations) > 20:
            print(f"... {len(rep.violations) - 20} more", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_theta_search(args) -> int:
    g = _graph(args.graph)
    res = find_fat_theta(g, args.M, args.mode, args.budget, args.seed, args.cutoff)
    io.write_text(args.out, io.dumps(io.certificate_to_dict(res, args.seed)))
    if not res.found and res.exhausted:
        print("no fat theta found within budget", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_verify_theta(args) -> int:
    g = _graph(args.graph)
    M, theta, w = io.certificate_from_dict(io._load(io.read_text(args.certificate, "certificate"), "certificate"))
    if args.M is not None:
        M = args.M
    if is_fat(g, theta, M, w):
        return EXIT_OK
    cross, ab = witness_margins(g, theta, w)
    print(f"certificate rejected at M={M:g}: middle gap {cross:g}, alpha-beta gap {ab:g}", file=sys.stderr)
    return EXIT_VIOLATION


def _cmd_annulus_check(args, threads: int) -> int:
    g = _graph(args.graph)
    rep = check_annulus_theta_free(g, args.base, args.r, args.m, args.mode, args.budget, args.seed, args.cutoff)
    out = {
        "base": rep.base, "r": rep.r, "m": rep.m, "mode": rep.mode, "cutoff": rep.cutoff, "seed": args.seed,
        "passed": rep.passed,
        "components": [
            dict(io.certificate_to_dict(res), size=int(c.size), min_vertex=int(c[0]))
            for c, res in zip(rep.components, rep.results)
        ],
    }
    io.write_text(args.out, io.dumps(out))
    if not rep.passed:
        i, _ = rep.counterexample  # type: ignore[misc]
        print(f"fat theta found in component {i}", file=sys.stderr)
        return EXIT_VIOLATION
    if rep.exhausted:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_stats(args, threads: int) -> int:
    g = _graph(args.graph)
    comps = components(g)
    out = {
        "vertices": g.n,
        "edges": len(g.edges),
        "components": len(comps),
        "is_cactus": is_cactus(g),
        "diameter": max((set_diameter(g, c) for c in comps), default=0.0) if len(comps) <= 1 else INF,
    }
    if args.cover:
        cov = io.loads_cover(io.read_text(args.cover, "cover"))
        radius = args.radius if args.radius is not None else cov.params.get("radius", 0)
        sizes = [len(s) for s in cov.sets]
        hits = multiplicities(g, cov, radius, workers=threads)
        hist: dict[int, int] = {}
        for h in hits.tolist():
            hist[h] = hist.get(h, 0) + 1
        out["cover"] = {
            "algorithm": cov.algorithm, "sets": len(cov.sets),
            "largest_set": max(sizes, default=0),
            "max_set_diameter": max((set_diameter(g, s.vertices) for s in cov.sets if len(s)), default=0.0),
            "radius": radius, "multiplicity_histogram": dict(sorted(hist.items())),
        }
    print(io.dumps(out), end="")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return int(exc.code or 0)
    threads = args.threads or _default_threads()
    try:
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "cover":
            return _cmd_cover(args, threads)
        if args.command == "verify":
            return _cmd_verify(args, threads)
        if args.command == "theta-search":
            return _cmd_theta_search(args)
        if args.command == "verify-theta":
            return _cmd_verify_theta(args)
        if args.command == "annulus-check":
            return _cmd_annulus_check(args, threads)
        return _cmd_stats(args, threads)
    except InputError as exc:
        print(f"asdim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
