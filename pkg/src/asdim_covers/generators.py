"""Seeded graph families used as the experiment corpus.

All generators are deterministic: the same family, parameters and seed
give the same :class:`~asdim_covers.graph.Graph`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx
import numpy as np

from .graph import Graph, InputError

FAMILIES = (
    "grid", "path", "cycle", "theta", "cactus-random",
    "k5-subdivision", "k33-subdivision", "lambda-grid", "random-planar",
)


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0


def _positive(name: str, v: int, least: int = 1) -> int:
    if int(v) != v or v < least:
        raise InputError(f"{name} must be an integer >= {least}, got {v!r}")
    return int(v)


def grid(w: int, h: int) -> Graph:
    w, h = _positive("w", w), _positive("h", h)
    edges = []
    for y in range(h):
        for x in range(w):
            v = y * w + x
            if x + 1 < w:
                edges.append((v, v + 1))
            if y + 1 < h:
                edges.append((v, v + w))
    return Graph(w * h, edges)


def path(n: int) -> Graph:
    n = _positive("n", n)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    n = _positive("n", n, 3)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def theta(l1: int, l2: int, l3: int) -> Graph:
    """Hubs 0 and 1 joined by three internally disjoint paths of the given lengths."""
    lengths = [_positive("arm length", x) for x in (l1, l2, l3)]
    if lengths.count(1) > 1:
        raise InputError("at most one arm may have length 1 in a simple graph")
    edges = []
    nxt = 2
    for L in lengths:
        chain = [0] + list(range(nxt, nxt + L - 1)) + [1]
        nxt += L - 1
        edges += list(zip(chain, chain[1:]))
    return Graph(nxt, edges)


def _subdivide(n_branch: int, pairs: Sequence[tuple[int, int]], length: int) -> Graph:
    length = _positive("subdivision length", length)
    edges = []
    nxt = n_branch
    for u, v in pairs:
        chain = [u] + list(range(nxt, nxt + length - 1)) + [v]
        nxt += length - 1
        edges += list(zip(chain, chain[1:]))
    return Graph(nxt, edges)


def k5_subdivision(length: int) -> Graph:
    """K5 with every edge replaced by a path of ``length`` edges; branch vertices are 0..4."""
    return _subdivide(5, list(itertools.combinations(range(5), 2)), length)


def k33_subdivision(length: int) -> Graph:
    """K3,3 subdivided; sides are {0,1,2} and {3,4,5}."""
    return _subdivide(6, [(u, v) for u in range(3) for v in range(3, 6)], length)


def cactus_random(c: int, ell: int, seed: int = 0, bridge: int = 0, window: int = 0) -> Graph:
    """A tree of ``c`` cycles with lengths drawn around ``ell``.

    Each new cycle hangs off a vertex of an earlier cycle, either glued
    directly at that vertex or through a path of ``bridge`` edges.
    ``window > 0`` restricts the choice to the last ``window`` cycles, which
    stretches the cactus out and raises its diameter.
    """
    c = _positive("c", c)
    ell = _positive("ell", ell, 3)
    if bridge < 0 or window < 0:
        raise InputError("bridge and window must be nonnegative")
    rng = np.random.default_rng(seed)
    lo, hi = max(3, ell // 2), max(3, (3 * ell) // 2)
    edges: list[tuple[int, int]] = []
    cycles: list[list[int]] = []
    nxt = 0
    for i in range(c):
        length = int(rng.integers(lo, hi + 1))
        if i == 0:
            anchor = None
        else:
            first = max(0, i - window) if window else 0
            host = cycles[int(rng.integers(first, i))]
            anchor = host[int(rng.integers(len(host)))]
            for _ in range(bridge):
                edges.append((anchor, nxt))
                anchor = nxt
                nxt += 1
        ring = [anchor] if anchor is not None else [nxt]
        if anchor is None:
            nxt += 1
        ring += list(range(nxt, nxt + length - 1))
        nxt += length - 1
        edges += [(ring[k], ring[(k + 1) % length]) for k in range(length)]
        cycles.append(ring)
    return Graph(nxt, edges)


def lambda_grid(dim: int, sizes: Sequence[int]) -> Graph:
    """Disjoint ``dim``-dimensional grid cubes of the given side lengths, chained by single edges."""
    dim = _positive("dimension", dim)
    if not sizes:
        raise InputError("lambda-grid needs at least one cube size")
    edges = []
    offset = 0
    prev_last = None
    for side in sizes:
        side = _positive("cube side", side)
        k = side + 1
        cube = nx.convert_node_labels_to_integers(nx.grid_graph(dim=[k] * dim), ordering="sorted")
        edges += [(u + offset, v + offset) for u, v in cube.edges()]
        if prev_last is not None:
            edges.append((prev_last, offset))
        prev_last = offset + k**dim - 1
        offset += k**dim
    return Graph(offset, edges)


def random_planar(w: int, h: int, p: float, seed: int = 0) -> Graph:
    """Grid subgraph: a random spanning tree is kept, every other edge dropped with probability ``p``."""
    if not 0 <= p <= 1:
        raise InputError(f"deletion probability must lie in [0, 1], got {p!r}")
    base = grid(w, h)
    rng = np.random.default_rng(seed)
    e = np.asarray(base.edges, dtype=np.int64).reshape(-1, 2)
    keys = rng.random(len(e))
    parent = list(range(base.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    in_tree = np.zeros(len(e), dtype=bool)
    for i in np.argsort(keys, kind="stable"):
        a, b = find(int(e[i, 0])), find(int(e[i, 1]))
        if a != b:
            parent[a] = b
            in_tree[i] = True
    drop = rng.random(len(e)) < p
    keep = in_tree | ~drop
    return Graph(base.n, [tuple(x) for x in e[keep].tolist()])


def generate(spec: GeneratorSpec) -> Graph:
    f, q = spec.family, dict(spec.params)
    try:
        if f == "grid":
            return grid(q["w"], q["h"])
        if f == "path":
            return path(q["n"])
        if f == "cycle":
            return cycle(q["n"])
        if f == "theta":
            return theta(*q["lengths"]) if "lengths" in q else theta(q["l1"], q["l2"], q["l3"])
        if f == "cactus-random":
            return cactus_random(q["c"], q["ell"], spec.seed, q.get("bridge", 0), q.get("window", 0))
        if f == "k5-subdivision":
            return k5_subdivision(q["ell"])
        if f == "k33-subdivision":
            return k33_subdivision(q["ell"])
        if f == "lambda-grid":
            return lambda_grid(q["dim"], q["sizes"])
        if f == "random-planar":
            return random_planar(q["w"], q["h"], q["p"], spec.seed)
    except KeyError as exc:
        raise InputError(f"family {f!r} is missing parameter {exc.args[0]!r}") from None
    raise InputError(f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")


def is_cactus(g: Graph) -> bool:
    """True iff every block is a single edge or a simple cycle."""
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    for block in nx.biconnected_component_edges(G):
        nodes = {u for e in block for u in e}
        if len(block) > 1 and len(block) != len(nodes):
            return False
    return True
