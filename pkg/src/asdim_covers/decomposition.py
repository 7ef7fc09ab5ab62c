"""Annuli around a base point and the chain-equivalence partition.

``chain_partition`` groups the points of a subset that can be linked by a
chain of subset points with consecutive distances at most ``gap``.  It runs
one multi-source shortest-path sweep from the whole subset, truncated at
``gap``: two subset points ``u, v`` are joined whenever some edge ``(x, y)``
has ``d(u, x) + w(x, y) + d(y, v) <= gap`` with ``u, v`` the nearest
sources of ``x`` and ``y``.  Along a shortest ``u``-``v`` path of length at
most ``gap`` every consecutive pair of nearest sources gets joined this way,
so the components equal the transitive closure of ``d <= gap``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from .graph import InputError, Space


@dataclass(frozen=True)
class AnnulusDecomposition:
    base: int
    width: float
    annuli: list[np.ndarray] = field(default_factory=list)

    def index_of(self, v: int) -> int | None:
        for k, a in enumerate(self.annuli):
            i = np.searchsorted(a, v)
            if i < a.size and a[i] == v:
                return k
        return None


@dataclass(frozen=True)
class ChainPartition:
    subset: np.ndarray
    gap: float
    classes: list[np.ndarray] = field(default_factory=list)


def annulus_index(dist: np.ndarray, width: float) -> np.ndarray:
    """``k`` with ``k*width <= d < (k+1)*width``; -1 where ``d`` is infinite."""
    out = np.full(dist.shape, -1, dtype=np.int64)
    ok = np.isfinite(dist)
    d = dist[ok]
    k = np.floor(d / width).astype(np.int64)
    # float division can land one bucket off near the boundaries
    k[k * width > d] -= 1
    k[(k + 1) * width <= d] += 1
    out[ok] = k
    return out


def band(dist: np.ndarray, vertices: np.ndarray, lo: float, hi: float) -> np.ndarray:
    """Vertices ``v`` of ``vertices`` with ``lo <= dist[v] < hi``."""
    d = dist[vertices]
    return vertices[(d >= lo) & (d < hi)]


def annuli(space: Space, base: int, width: float) -> AnnulusDecomposition:
    if not width > 0:
        raise InputError(f"annulus width must be positive, got {width!r}")
    space.check_vertex(base)
    dist = space.distances(base)
    verts = space.vertices
    k = annulus_index(dist[verts], width)
    reach = k >= 0
    if not reach.any():
        return AnnulusDecomposition(base, width, [])
    count = int(k[reach].max()) + 1
    order = np.argsort(k[reach], kind="stable")
    vs = verts[reach][order]
    bounds = np.searchsorted(k[reach][order], np.arange(1, count))
    return AnnulusDecomposition(base, width, np.split(vs, bounds))


def chain_partition(space: Space, subset, gap: float) -> ChainPartition:
    if not gap > 0:
        raise InputError(f"chain gap must be positive, got {gap!r}")
    S = space.check_vertices(subset)
    if S.size == 0:
        return ChainPartition(S, gap, [])
    dist, owner = space.nearest_sources(S, limit=gap)
    csr, l2g, g2l = space._metric
    reached_local = np.flatnonzero(np.isfinite(dist[l2g]))
    rows = csr[reached_local].tocoo()
    x = l2g[reached_local[rows.row]]
    y = l2g[rows.col]
    ok = dist[x] + rows.data + dist[y] <= gap
    a, b = owner[x[ok]], owner[y[ok]]
    keep = a != b
    pos = np.searchsorted(S, np.concatenate([a[keep], b[keep]]))
    half = pos.size // 2
    link = sparse.coo_matrix((np.ones(half), (pos[:half], pos[half:])), shape=(S.size, S.size))
    _, labels = csgraph.connected_components(link, directed=False)
    order = np.argsort(labels, kind="stable")
    bounds = np.flatnonzero(np.diff(labels[order])) + 1
    classes = np.split(S[order], bounds)
    classes.sort(key=lambda c: int(c[0]))
    return ChainPartition(S, gap, classes)
