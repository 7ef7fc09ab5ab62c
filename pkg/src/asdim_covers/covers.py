"""Bounded covers of low multiplicity.

Three constructions share one engine (annuli of width ``N`` around a base
point, each split into chain classes with gap ``gap``):

* :func:`cactus_cover` with ``N = 100m`` and ``gap = 10m``; on a cactus
  every set has diameter at most ``1000m`` and every closed ``m``-ball meets
  at most two sets.
* :func:`coarse_cactus_cover` with the same rule at scale ``max(m, M)``; on
  a space without embedded ``M``-fat theta curves the diameter bound is
  ``10**5 * max(m, M)``.
* :func:`planar_cover`, which slices a planar graph into annuli of width
  ``3*rho`` and covers each slice via :func:`annulus_cover`; sets have
  diameter at most ``3*10**6*rho`` and every closed ``rho``-ball meets at
  most four of them.

Every cover produced here is a partition of the vertex set.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np
from scipy.sparse import csgraph

from .decomposition import annuli, annulus_index, band, chain_partition
from .graph import Graph, InputError, Space, Subspace, components

ALGORITHMS = ("cactus", "coarse-cactus", "planar-pipeline")


@dataclass(frozen=True)
class CoverSet:
    label: str
    vertices: np.ndarray
    annulus: int = 0
    component: int = 0
    cls: int = 0

    def __len__(self) -> int:
        return int(self.vertices.size)


@dataclass
class Cover:
    algorithm: str
    params: dict[str, float]
    base: int
    sets: list[CoverSet] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise InputError(f"unknown cover algorithm {self.algorithm!r}")
        self.sets.sort(key=lambda s: (int(s.vertices[0]) if s.vertices.size else -1, s.label))
        labels = [s.label for s in self.sets]
        if len(set(labels)) != len(labels):
            raise InputError("cover labels must be unique")

    def __len__(self) -> int:
        return len(self.sets)

    def owner(self, n: int) -> np.ndarray:
        """Index of the set containing each vertex (-1 if none, last one wins on overlap)."""
        own = np.full(n, -1, dtype=np.int64)
        for i, s in enumerate(self.sets):
            own[s.vertices] = i
        return own

    def vertex_sets(self) -> list[np.ndarray]:
        return [s.vertices for s in self.sets]


def _pmap(fn: Callable, items: Iterable, workers: int) -> list:
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _component_bases(space: Space, base: int) -> list[tuple[int, int]]:
    """(component index, base) pairs; the given base serves its own component."""
    space.check_vertex(base)
    comps = components(space)
    out = []
    for i, comp in enumerate(comps):
        j = np.searchsorted(comp, base)
        out.append((i, base if j < comp.size and comp[j] == base else int(comp[0])))
    return out


def _prefixed(label: str, comp: int, ncomp: int) -> str:
    return label if ncomp == 1 else f"G{comp}.{label}"


def _chain_cover(space: Space, base: int, width: float, gap: float, workers: int) -> list[CoverSet]:
    roots = _component_bases(space, base)
    sets: list[CoverSet] = []
    for ci, b in roots:
        dec = annuli(space, b, width)

        def split(k: int) -> list[CoverSet]:
            part = chain_partition(space, dec.annuli[k], gap)
            return [
                CoverSet(_prefixed(f"A{k}.K{j}", ci, len(roots)), c, k, 0, j)
                for j, c in enumerate(part.classes)
            ]

        for group in _pmap(split, range(len(dec.annuli)), workers):
            sets.extend(group)
    return sets


def cactus_cover(g: Space, base: int, m: float, workers: int = 1) -> Cover:
    if not m > 0:
        raise InputError(f"m must be positive, got {m!r}")
    N, gap = 100 * m, 10 * m
    params = {
        "m": m, "N": N, "gap": gap,
        "diameter_bound": 1000 * m, "radius": m, "multiplicity_bound": 2,
    }
    return Cover("cactus", params, int(base), _chain_cover(g, base, N, gap, workers))


def coarse_cactus_cover(space: Space, base: int, m: float, M: float, workers: int = 1) -> Cover:
    if not (m > 0 and M > 0):
        raise InputError(f"m and M must be positive, got m={m!r}, M={M!r}")
    scale = max(m, M)
    N, gap = 100 * scale, 10 * scale
    params = {
        "m": m, "M": M, "scale": scale, "N": N, "gap": gap,
        "diameter_bound": 1000 * N, "radius": m, "multiplicity_bound": 2,
    }
    return Cover("coarse-cactus", params, int(base), _chain_cover(space, base, N, gap, workers))


def lemma0_cover(g: Graph, component, L: float, m: float) -> Cover:
    """Coarse-cactus cover of one component of a width-``5m`` annulus, in its own path metric.

    Such a component has no embedded ``5m``-fat theta curve when ``g`` is
    planar, so its sets are ``10**5 * max(L, 5m)``-bounded with
    ``L``-multiplicity at most 2.
    """
    comp = np.unique(np.asarray(component, dtype=np.int64))
    scale = max(L, 5 * m)
    params = {
        "L": L, "m": m, "M": 5 * m, "scale": scale, "N": 100 * scale, "gap": 10 * scale,
        "diameter_bound": 10**5 * scale, "radius": L, "multiplicity_bound": 2,
    }
    if comp.size == 0:
        return Cover("coarse-cactus", params, -1, [])
    sub = Subspace(g, comp, "induced")
    inner = coarse_cactus_cover(sub, int(comp[0]), L, 5 * m)
    return Cover("coarse-cactus", params, int(comp[0]), inner.sets)


def _label_components(g: Graph, verts: np.ndarray) -> np.ndarray:
    """Component label (over the induced subgraph on ``verts``) per global id; -1 elsewhere."""
    out = np.full(g.n, -1, dtype=np.int64)
    if verts.size:
        _, lab = csgraph.connected_components(g.csr[verts][:, verts], directed=False)
        out[verts] = lab
    return out


def _annulus_sets(
    g: Graph, dist: np.ndarray, verts: np.ndarray, target: np.ndarray, s: float, m: float, n: int, prefix: str
) -> list[CoverSet]:
    if target.size == 0:
        return []
    if s <= 2 * m:
        return [CoverSet(f"{prefix}A{n}.C0.K0", target, n, 0, 0)]
    inner = band(dist, verts, s - m, s + 2 * m)
    outer = band(dist, verts, s - 2 * m, s + 3 * m)
    outer_label = _label_components(g, outer)
    in_target = np.zeros(g.n, dtype=bool)
    in_target[target] = True
    cache: dict[int, Cover] = {}
    sets: list[CoverSet] = []
    for ci, C in enumerate(components(Subspace(g, inner, "induced"))):
        piece = C[in_target[C]]
        if piece.size == 0:
            continue
        key = int(outer_label[C[0]])
        if key not in cache:
            cache[key] = lemma0_cover(g, outer[outer_label[outer] == key], m, m)
        mark = np.zeros(g.n, dtype=bool)
        mark[piece] = True
        for j, cs in enumerate(cache[key].sets):
            part = cs.vertices[mark[cs.vertices]]
            if part.size:
                sets.append(CoverSet(f"{prefix}A{n}.C{ci}.K{j}", part, n, ci, j))
    return sets


def annulus_cover(g: Graph, base: int, s: float, m: float, index: int = 0) -> Cover:
    """Cover of ``A(s, s+m)`` by ``10**6 m``-bounded sets of ``m``-multiplicity at most 2.

    For ``s <= 2m`` the whole annulus is a single set.  Otherwise each
    component ``C`` of ``A(s-m, s+2m)`` is widened to the component of
    ``A(s-2m, s+3m)`` containing it, that widened piece is covered in its own
    path metric, and the classes are cut back to ``C`` inside ``A(s, s+m)``.
    Distinct components are more than ``2m`` apart, so their pieces never
    share a ball.
    """
    if not m > 0 or s < 0:
        raise InputError(f"need s >= 0 and m > 0, got s={s!r}, m={m!r}")
    g.check_vertex(base)
    dist = g.distances(base)
    params = {
        "s": s, "m": m, "diameter_bound": 10**6 * m, "radius": m, "multiplicity_bound": 2,
    }
    target = band(dist, g.vertices, s, s + m)
    return Cover("planar-pipeline", params, int(base), _annulus_sets(g, dist, g.vertices, target, s, m, index, ""))


def planar_cover(g: Graph, base: int, rho: float, workers: int = 1) -> Cover:
    if not rho > 0:
        raise InputError(f"rho must be positive, got {rho!r}")
    m = 3 * rho
    roots = _component_bases(g, base)
    sets: list[CoverSet] = []
    for ci, b in roots:
        dist = g.distances(b)
        verts = g.vertices[np.isfinite(dist)]
        layer = annulus_index(dist[verts], m)
        order = np.argsort(layer, kind="stable")
        bounds = np.searchsorted(layer[order], np.arange(1, int(layer.max()) + 1))
        targets = np.split(verts[order], bounds)
        prefix = "" if len(roots) == 1 else f"G{ci}."

        def cover_layer(n: int) -> list[CoverSet]:
            return _annulus_sets(g, dist, verts, targets[n], n * m, m, n, prefix)

        for group in _pmap(cover_layer, range(len(targets)), workers):
            sets.extend(group)
    params = {
        "rho": rho, "m": m,
        "diameter_bound": 3 * 10**6 * rho, "radius": rho, "multiplicity_bound": 4,
        "layer_diameter_bound": 10**6 * m, "layer_radius": m, "layer_multiplicity_bound": 2,
    }
    return Cover("planar-pipeline", params, int(base), sets)
