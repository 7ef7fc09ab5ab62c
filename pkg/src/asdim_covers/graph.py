"""Finite graphs viewed as geodesic spaces.

Vertices are ``0..n-1``; every edge carries a positive length (1 by
default).  A :class:`Subspace` is a vertex subset of a graph that measures
distance either in the ambient graph or along its own induced edges only.

Distances are float64 arrays indexed by global vertex id, with ``inf`` for
vertices that are unreachable or outside the space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Union

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

INF = math.inf


class InputError(ValueError):
    """Malformed input: bad vertex ids, parameters or file contents."""


class _MetricSpace:
    """Shared distance machinery for :class:`Graph` and :class:`Subspace`.

    Subclasses provide ``graph`` (the underlying :class:`Graph`),
    ``vertices`` (sorted global ids) and ``_metric`` which is the CSR matrix
    used for shortest paths together with the local-to-global id map.
    Those matrices hold both directions of every edge, so traversals run
    in directed mode and skip scipy's symmetrisation pass.
    """

    graph: "Graph"

    @property
    def vertices(self) -> np.ndarray:
        raise NotImplementedError

    @property
    def _metric(self) -> tuple[sparse.csr_matrix, np.ndarray, np.ndarray]:
        raise NotImplementedError

    @cached_property
    def _member(self) -> np.ndarray:
        mask = np.zeros(self.graph.n, dtype=bool)
        mask[self.vertices] = True
        return mask

    def __contains__(self, v: object) -> bool:
        try:
            i = int(v)  # type: ignore[arg-type]
        except (TypeError, ValueError):
            return False
        return 0 <= i < self.graph.n and bool(self._member[i])

    def check_vertex(self, v: int) -> int:
        if v not in self:
            raise InputError(f"vertex {v!r} is not in the space")
        return int(v)

    def check_vertices(self, vs: Iterable[int]) -> np.ndarray:
        arr = np.unique(np.asarray(list(vs) if not isinstance(vs, np.ndarray) else vs, dtype=np.int64))
        if arr.size and (arr[0] < 0 or arr[-1] >= self.graph.n or not self._member[arr].all()):
            bad = [int(v) for v in arr if not (0 <= v < self.graph.n) or not self._member[v]]
            raise InputError(f"vertices {bad[:5]} are not in the space")
        return arr

    def distances(self, sources: Union[int, Iterable[int]], limit: float = INF) -> np.ndarray:
        """Distance from the nearest of ``sources`` to every vertex.

        Distances larger than ``limit`` are reported as ``inf``.
        """
        csr, l2g, g2l = self._metric
        src = np.atleast_1d(np.asarray(sources if not isinstance(sources, set) else sorted(sources), dtype=np.int64))
        out = np.full(self.graph.n, INF)
        if src.size == 0:
            return out
        local = g2l[src]
        if (local < 0).any():
            raise InputError(f"source {int(src[local < 0][0])} is not in the space")
        if src.size == 1 and self.graph.unit_weights and limit >= self.graph.n:
            out[l2g] = _bfs_depths(csr, int(local[0]))
            return out
        d = csgraph.dijkstra(
            csr, directed=True, indices=local, limit=limit,
            unweighted=self.graph.unit_weights, min_only=True,
        )
        out[l2g] = d
        return out

    def nearest_sources(self, sources: np.ndarray, limit: float = INF) -> tuple[np.ndarray, np.ndarray]:
        """Multi-source distances plus, per vertex, the global id of a nearest source (-1 if unreached)."""
        csr, l2g, g2l = self._metric
        local = g2l[np.asarray(sources, dtype=np.int64)]
        dist = np.full(self.graph.n, INF)
        owner = np.full(self.graph.n, -1, dtype=np.int64)
        if local.size == 0:
            return dist, owner
        d, _, src = csgraph.dijkstra(
            csr, directed=True, indices=local, limit=limit,
            unweighted=self.graph.unit_weights, min_only=True, return_predecessors=True,
        )
        dist[l2g] = d
        reached = src >= 0
        owner[l2g[reached]] = l2g[src[reached]]
        return dist, owner

    def distance_matrix(self, rows: Iterable[int]) -> np.ndarray:
        """Rows of the distance matrix, one per vertex in ``rows``; columns are global ids."""
        csr, l2g, g2l = self._metric
        r = np.asarray(list(rows) if not isinstance(rows, np.ndarray) else rows, dtype=np.int64)
        out = np.full((r.size, self.graph.n), INF)
        if r.size == 0:
            return out
        local = g2l[r]
        if (local < 0).any():
            raise InputError("row vertex outside the space")
        d = csgraph.dijkstra(csr, directed=True, indices=local, unweighted=self.graph.unit_weights)
        out[:, l2g] = d
        return out

    @cached_property
    def induced_csr(self) -> sparse.csr_matrix:
        """Edges with both endpoints in the space, in local (vertex-array) order."""
        idx = self.vertices
        return self.graph.csr[idx][:, idx].tocsr()

    def neighbors(self) -> list[list[int]]:
        """Induced adjacency lists in global ids, keyed by position in ``vertices``."""
        csr = self.induced_csr
        verts = self.vertices
        return [verts[csr.indices[csr.indptr[i]:csr.indptr[i + 1]]].tolist() for i in range(verts.size)]


def _bfs_depths(csr: sparse.csr_matrix, source: int) -> np.ndarray:
    # BFS tree from scipy, then depths by pointer jumping; about twice as
    # fast as unweighted dijkstra on large sparse graphs
    n = csr.shape[0]
    order, pred = csgraph.breadth_first_order(csr, source, directed=True, return_predecessors=True)
    ids = np.arange(n)
    hop = np.where(pred < 0, ids, pred)
    depth = (hop != ids).astype(np.int64)
    while True:
        nxt = hop[hop]
        if np.array_equal(nxt, hop):
            break
        depth = depth + depth[hop]
        hop = nxt
    out = np.full(n, INF)
    out[order] = depth[order]
    return out


@dataclass(frozen=True, eq=False)
class Graph(_MetricSpace):
    """Finite simple undirected graph with positive edge lengths.

    Edges are stored canonically: ``u < v`` and sorted, so two graphs built
    from the same edge set compare equal and serialize identically.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()
    weights: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        edges = [tuple(e) for e in self.edges]
        if self.weights is not None and len(self.weights) != len(edges):
            raise InputError("weights must be parallel to edges")
        ws = list(self.weights) if self.weights is not None else [1] * len(edges)
        rows = []
        for e, w in zip(edges, ws):
            if len(e) != 2:
                raise InputError(f"edge {e!r} is not a pair")
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {e!r} has an endpoint outside 0..{self.n - 1}")
            if not (w > 0) or not math.isfinite(w):
                raise InputError(f"edge {e!r} has non-positive length {w!r}")
            rows.append((min(u, v), max(u, v), w))
        rows.sort()
        for a, b in zip(rows, rows[1:]):
            if a[:2] == b[:2]:
                raise InputError(f"duplicate edge {a[:2]}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", tuple((u, v) for u, v, _ in rows))
        if self.weights is None or all(w == 1 for _, _, w in rows):
            object.__setattr__(self, "weights", None)
        else:
            object.__setattr__(self, "weights", tuple(float(w) for _, _, w in rows))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges, self.weights) == (other.n, other.edges, other.weights)

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.weights))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    @property
    def graph(self) -> "Graph":  # type: ignore[override]
        return self

    @cached_property
    def vertices(self) -> np.ndarray:  # type: ignore[override]
        return np.arange(self.n, dtype=np.int64)

    @property
    def unit_weights(self) -> bool:
        return self.weights is None

    @property
    def max_weight(self) -> float:
        return 1.0 if self.weights is None else float(max(self.weights))

    @cached_property
    def csr(self) -> sparse.csr_matrix:
        if not self.edges:
            return sparse.csr_matrix((self.n, self.n))
        e = np.asarray(self.edges, dtype=np.int64)
        w = np.ones(len(e)) if self.weights is None else np.asarray(self.weights, dtype=float)
        m = sparse.coo_matrix(
            (np.concatenate([w, w]), (np.concatenate([e[:, 0], e[:, 1]]), np.concatenate([e[:, 1], e[:, 0]]))),
            shape=(self.n, self.n),
        )
        return m.tocsr()

    @cached_property
    def _metric(self) -> tuple[sparse.csr_matrix, np.ndarray, np.ndarray]:  # type: ignore[override]
        ids = np.arange(self.n, dtype=np.int64)
        return self.csr, ids, ids

    @cached_property
    def induced_csr(self) -> sparse.csr_matrix:  # type: ignore[override]
        return self.csr

    @cached_property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for a in adj:
            a.sort()
        return adj

    def edge_weight(self, u: int, v: int) -> float:
        return float(self.csr[u, v])


@dataclass(frozen=True, eq=False)
class Subspace(_MetricSpace):
    """A vertex subset of ``parent`` with an ambient or induced-path metric."""

    parent: Graph
    vertex_set: np.ndarray
    metric_mode: str = "induced"

    def __post_init__(self) -> None:
        if self.metric_mode not in ("induced", "ambient"):
            raise InputError(f"unknown metric mode {self.metric_mode!r}")
        vs = np.unique(np.asarray(self.vertex_set, dtype=np.int64))
        if vs.size and (vs[0] < 0 or vs[-1] >= self.parent.n):
            raise InputError("subspace vertices must be vertices of the parent graph")
        vs.setflags(write=False)
        object.__setattr__(self, "vertex_set", vs)

    def __repr__(self) -> str:
        return f"Subspace({self.parent!r}, |V|={self.vertex_set.size}, {self.metric_mode})"

    @property
    def graph(self) -> Graph:  # type: ignore[override]
        return self.parent

    @property
    def vertices(self) -> np.ndarray:  # type: ignore[override]
        return self.vertex_set

    @cached_property
    def _metric(self) -> tuple[sparse.csr_matrix, np.ndarray, np.ndarray]:  # type: ignore[override]
        if self.metric_mode == "ambient":
            return self.parent._metric
        g2l = np.full(self.parent.n, -1, dtype=np.int64)
        g2l[self.vertex_set] = np.arange(self.vertex_set.size)
        return self.induced_csr, self.vertex_set, g2l


Space = Union[Graph, Subspace]


def sssp(space: Space, source: int) -> dict[int, float]:
    """Shortest-path distance from ``source`` to every vertex of the space."""
    space.check_vertex(source)
    d = space.distances(source)
    return {int(v): float(d[v]) for v in space.vertices}


def components(space: Space) -> list[np.ndarray]:
    """Connected components of the space, each a sorted id array, ordered by minimum id.

    Connectivity always uses edges with both endpoints in the space, in
    either metric mode.
    """
    verts = space.vertices
    if verts.size == 0:
        return []
    ncomp, labels = csgraph.connected_components(space.induced_csr, directed=False)
    order = np.argsort(labels, kind="stable")
    bounds = np.flatnonzero(np.diff(labels[order])) + 1
    groups = np.split(verts[order], bounds)
    groups.sort(key=lambda g: int(g[0]))
    return groups


def set_diameter(space: Space, s: Iterable[int], limit: float = INF) -> float:
    """Exact diameter of the vertex set ``s`` in the space's metric.

    Uses eccentricity bounds (lower/upper per vertex, refined by one
    single-source run per step) so most sets need only a handful of
    traversals.  ``limit`` caps the traversal radius; if some pair is further
    apart than ``limit`` the computation restarts without the cap, so the
    result is exact either way.
    """
    S = space.check_vertices(s)
    if S.size == 0:
        raise InputError("diameter of an empty set")
    if S.size == 1:
        return 0.0
    k = S.size
    lo = np.zeros(k)
    hi = np.full(k, INF)
    active = np.ones(k, dtype=bool)
    best = 0.0
    i = 0
    pick_high = True
    while True:
        d = space.distances(int(S[i]), limit=limit)[S]
        if not np.isfinite(d).all():
            if math.isfinite(limit):
                limit = INF
                continue
            return INF
        ecc = float(d.max())
        np.maximum(lo, np.maximum(d, ecc - d), out=lo)
        np.minimum(hi, ecc + d, out=hi)
        lo[i] = hi[i] = ecc
        best = max(best, float(lo.max()))
        active[i] = False
        active &= hi > best
        if not active.any():
            return best
        idx = np.flatnonzero(active)
        i = int(idx[np.argmax(hi[idx])]) if pick_high else int(idx[np.argmin(lo[idx])])
        pick_high = not pick_high
