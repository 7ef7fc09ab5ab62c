"""Embedded theta curves and their fatness.

A theta curve is a pair of hubs ``a != b`` joined by three paths whose
interiors are pairwise disjoint.  Split path ``i`` at indices
``s_i < t_i`` (with ``t_i - s_i >= 2``) into

* ``alpha_i = p_i[0..s_i]`` (contains ``a``),
* the open middle ``p_i[s_i+1 .. t_i-1]``,
* ``beta_i = p_i[t_i..]`` (contains ``b``).

The curve is ``M``-fat under those splits when distinct middles are at
least ``M`` apart and ``alpha_1 u alpha_2 u alpha_3`` is at least ``2M``
from ``beta_1 u beta_2 u beta_3``.  All distances are taken in the space the
curve lives in, between vertex sets.

Search strategy (:func:`find_fat_theta`, exhaustive mode):

1. sweep: for hub pairs, three successive shortest paths with earlier
   interiors removed; a hit is returned straight away.
2. filter: a necessary condition.  On every ``M``-fat theta each path
   carries a middle vertex ``z_i`` with ``d(z_i, p_j) >= R`` for ``j != i``,
   ``R = M - w/2`` (``w`` the largest edge length): walk the middle of
   ``p_i`` until ``d(., alpha) - d(., beta)`` changes sign.  So ``p_i`` joins
   ``a``, ``z_i`` and ``b`` while avoiding the open ``R``-balls around the
   other two ``z``.  When no triple ``z_1, z_2, z_3`` (pairwise ``>= M``
   apart) and hubs ``a, b`` (``d(a, b) >= 2M``) pass this test, there is no
   ``M``-fat theta at all, at any path length.
3. enumeration: simple hub-to-hub paths up to ``cutoff`` edges for the hub
   pairs that survived the filter, combined into triples and decided with
   :func:`max_fatness`.  Exhausting this stage without running out of
   budget proves absence among thetas whose paths respect the cutoff.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx
import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from .graph import INF, Graph, InputError, Space, Subspace, components
from .decomposition import band

MODES = ("exhaustive", "random")


@dataclass(frozen=True)
class ThetaCurve:
    a: int
    b: int
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def __post_init__(self) -> None:
        paths = tuple(tuple(int(v) for v in p) for p in self.paths)
        if len(paths) != 3:
            raise InputError("a theta curve has exactly three paths")
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "b", int(self.b))
        object.__setattr__(self, "paths", paths)
        if self.a == self.b:
            raise InputError("theta hubs must differ")
        seen: set[int] = set()
        for p in paths:
            if len(p) < 2 or p[0] != self.a or p[-1] != self.b:
                raise InputError(f"path {list(p)} does not run from {self.a} to {self.b}")
            inner = set(p[1:-1])
            if len(inner) != len(p) - 2 or {self.a, self.b} & inner:
                raise InputError(f"path {list(p)} is not simple")
            if seen & inner:
                raise InputError("theta paths share interior vertices")
            seen |= inner
        if sum(len(p) == 2 for p in paths) > 1:
            raise InputError("two theta paths are the same edge")

    @property
    def lengths(self) -> tuple[int, int, int]:
        return tuple(len(p) - 1 for p in self.paths)  # type: ignore[return-value]

    def vertices(self) -> list[int]:
        out = [self.a, self.b]
        for p in self.paths:
            out.extend(p[1:-1])
        return out

    def check_in(self, space: Space) -> None:
        """Raise unless every path edge is an edge of the space."""
        for p in self.paths:
            space.check_vertices(p)
            csr = space.graph.csr
            for u, v in zip(p, p[1:]):
                if csr[u, v] == 0:
                    raise InputError(f"({u}, {v}) is not an edge")


@dataclass(frozen=True)
class FatnessWitness:
    splits: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]
    margins: Optional[tuple[float, float]] = None

    def __post_init__(self) -> None:
        splits = tuple((int(s), int(t)) for s, t in self.splits)
        if len(splits) != 3:
            raise InputError("a witness has one split per path")
        object.__setattr__(self, "splits", splits)
        if self.margins is not None:
            object.__setattr__(self, "margins", (float(self.margins[0]), float(self.margins[1])))


def _check_splits(theta: ThetaCurve, w: FatnessWitness) -> None:
    for (s, t), L in zip(w.splits, theta.lengths):
        if not (0 <= s and t <= L and t - s >= 2):
            raise InputError(f"split ({s}, {t}) invalid for a path of length {L}; the open middle must be nonempty")


def _theta_distances(space: Space, theta: ThetaCurve) -> tuple[np.ndarray, list[np.ndarray]]:
    """Distance matrix over the theta's vertices, plus per-path index arrays into it."""
    verts = theta.vertices()
    pos = {v: i for i, v in enumerate(verts)}
    D = space.distance_matrix(np.asarray(verts))[:, verts]
    idx = [np.array([pos[v] for v in p]) for p in theta.paths]
    return D, idx


def witness_margins(space: Space, theta: ThetaCurve, w: FatnessWitness) -> tuple[float, float]:
    """(smallest distance between distinct middles, distance from all alphas to all betas)."""
    _check_splits(theta, w)
    D, idx = _theta_distances(space, theta)
    mids = [p[s + 1:t] for p, (s, t) in zip(idx, w.splits)]
    alpha = np.concatenate([p[:s + 1] for p, (s, _) in zip(idx, w.splits)])
    beta = np.concatenate([p[t:] for p, (_, t) in zip(idx, w.splits)])
    cross = min(float(D[np.ix_(mids[i], mids[j])].min()) for i, j in ((0, 1), (0, 2), (1, 2)))
    return cross, float(D[np.ix_(alpha, beta)].min())


def is_fat(space: Space, theta: ThetaCurve, M: float, w: FatnessWitness) -> bool:
    theta.check_in(space)
    cross, ab = witness_margins(space, theta, w)
    if w.margins is not None and w.margins != (cross, ab):
        return False
    # conditions on disjointness of middles from the arcs hold for any embedded theta
    return cross >= M and ab >= 2 * M


class _Feasibility:
    """Decides whether some split tuple makes a fixed theta ``M``-fat.

    Given the alpha ends ``s``, the best beta starts are the smallest
    ``t_j`` keeping every alpha ``2M`` away from ``beta_j``: larger ``t_j``
    only enlarges middle ``j``.  So only the ``s`` tuples are searched, one
    ``s_1`` at a time with ``(s_2, s_3)`` vectorised.
    """

    def __init__(self, D: np.ndarray, idx: list[np.ndarray]):
        self.L = [p.size - 1 for p in idx]
        self.sub = {(i, j): D[np.ix_(idx[i], idx[j])] for i in range(3) for j in range(3)}
        # pmin[i,j][s, t] = min d(p_i[u], p_j[v]) over u <= s, v >= t
        self.pmin = {}
        for key, A in self.sub.items():
            P = np.minimum.accumulate(A, axis=0)
            self.pmin[key] = np.minimum.accumulate(P[:, ::-1], axis=1)[:, ::-1]

    def _tau(self, M: float) -> dict:
        # smallest admissible t_j per s_i; L_j + 1 means none
        return {
            (i, j): (self.L[j] + 1) - (P >= 2 * M).sum(axis=1)
            for (i, j), P in self.pmin.items()
        }

    def witness(self, M: float) -> Optional[tuple[tuple[int, int], ...]]:
        L = self.L
        if min(L) < 2:
            return None
        tau = self._tau(M)
        prefix = {}
        for i, j in ((0, 1), (0, 2), (1, 2)):
            bad = (self.sub[i, j] < M).astype(np.int64)
            P = np.zeros((L[i] + 2, L[j] + 2), dtype=np.int64)
            P[1:, 1:] = bad.cumsum(0).cumsum(1)
            prefix[i, j] = P

        def count(i, j, lo_i, hi_i, lo_j, hi_j):
            # bad pairs with p_i index in [lo_i, hi_i) and p_j index in [lo_j, hi_j)
            P = prefix[i, j]
            return P[hi_i, hi_j] - P[lo_i, hi_j] - P[hi_i, lo_j] + P[lo_i, lo_j]

        s2, s3 = np.meshgrid(np.arange(L[1] - 1), np.arange(L[2] - 1), indexing="ij")
        base2 = np.maximum(s2 + 2, np.maximum(tau[1, 1][s2], tau[2, 1][s3]))
        base3 = np.maximum(s3 + 2, np.maximum(tau[1, 2][s2], tau[2, 2][s3]))
        base1 = np.maximum(tau[1, 0][s2], tau[2, 0][s3])
        for s1 in range(L[0] - 1):
            t1 = np.maximum(np.maximum(s1 + 2, tau[0, 0][s1]), base1)
            t2 = np.maximum(base2, tau[0, 1][s1])
            t3 = np.maximum(base3, tau[0, 2][s1])
            ok = (t1 <= L[0]) & (t2 <= L[1]) & (t3 <= L[2])
            if not ok.any():
                continue
            t1c, t2c, t3c = np.minimum(t1, L[0]), np.minimum(t2, L[1]), np.minimum(t3, L[2])
            ok &= count(0, 1, s1 + 1, t1c, s2 + 1, t2c) == 0
            ok &= count(0, 2, s1 + 1, t1c, s3 + 1, t3c) == 0
            ok &= count(1, 2, s2 + 1, t2c, s3 + 1, t3c) == 0
            hit = np.flatnonzero(ok.ravel())
            if hit.size:
                k = int(hit[0])
                a2, a3 = int(s2.ravel()[k]), int(s3.ravel()[k])
                return ((s1, int(t1c.ravel()[k])), (a2, int(t2c.ravel()[k])), (a3, int(t3c.ravel()[k])))
        return None

    def candidates(self) -> np.ndarray:
        vals = []
        for (i, j), A in self.sub.items():
            vals.append(A.ravel() / 2)
            if i != j:
                vals.append(A.ravel())
        c = np.unique(np.concatenate(vals + [np.zeros(1)]))
        return c[np.isfinite(c)]


def max_fatness(space: Space, theta: ThetaCurve) -> tuple[float, Optional[FatnessWitness]]:
    """Largest ``M`` for which some split tuple makes ``theta`` ``M``-fat, with a witness.

    Returns ``(0.0, None)`` when some path has fewer than two edges, since
    its open middle can never be nonempty.
    """
    theta.check_in(space)
    D, idx = _theta_distances(space, theta)
    feas = _Feasibility(D, idx)
    if min(feas.L) < 2:
        return 0.0, None
    cand = feas.candidates()
    lo, hi = 0, cand.size - 1  # cand[0] == 0 is always feasible
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if feas.witness(float(cand[mid])) is not None:
            lo = mid
        else:
            hi = mid - 1
    best = float(cand[lo])
    splits = feas.witness(best)
    w = FatnessWitness(splits)  # type: ignore[arg-type]
    margins = witness_margins(space, theta, w)
    return min(margins[0], margins[1] / 2), FatnessWitness(splits, margins)  # type: ignore[arg-type]


def fat_witness(space: Space, theta: ThetaCurve, M: float) -> Optional[FatnessWitness]:
    """A witness that ``theta`` is ``M``-fat, or None."""
    D, idx = _theta_distances(space, theta)
    splits = _Feasibility(D, idx).witness(M)
    if splits is None:
        return None
    w = FatnessWitness(splits)
    return FatnessWitness(splits, witness_margins(space, theta, w))


# search ---------------------------------------------------------------------


@dataclass
class ThetaSearch:
    """Outcome of :func:`find_fat_theta`.

    ``theta``/``witness`` are set when a certified curve was found.
    Otherwise ``proved_absent`` says whether the search was complete
    (``scope`` names what it covered) and ``exhausted`` whether the budget
    ran out first.
    """

    M: float
    mode: str
    cutoff: Optional[int]
    theta: Optional[ThetaCurve] = None
    witness: Optional[FatnessWitness] = None
    proved_absent: bool = False
    exhausted: bool = False
    scope: str = ""
    stage: str = ""
    steps: int = 0

    @property
    def found(self) -> bool:
        return self.theta is not None


class _Budget(Exception):
    pass


class _Counter:
    def __init__(self, budget: int):
        self.left = budget
        self.used = 0

    def tick(self, k: int = 1) -> None:
        self.used += k
        self.left -= k
        if self.left < 0:
            raise _Budget


@dataclass
class _Block:
    verts: np.ndarray  # global ids, sorted
    csr: sparse.csr_matrix  # block edges, local ids
    D: np.ndarray  # space distances between block vertices
    hubs: np.ndarray  # local ids with block degree >= 3
    adj: list[list[int]] = field(default_factory=list)


def _blocks(space: Space) -> list[_Block]:
    """Biconnected blocks that are neither an edge nor a cycle; only they can hold a theta."""
    verts = space.vertices
    csr = space.induced_csr.tocoo()
    G = nx.Graph()
    G.add_nodes_from(range(verts.size))
    G.add_edges_from(zip(csr.row.tolist(), csr.col.tolist()))
    out = []
    for edges in nx.biconnected_component_edges(G):
        nodes = sorted({u for e in edges for u in e})
        if len(edges) <= len(nodes):
            continue
        local = {u: i for i, u in enumerate(nodes)}
        r = [local[u] for u, _ in edges]
        c = [local[v] for _, v in edges]
        gl = verts[nodes]
        w = np.asarray([space.graph.csr[gl[i], gl[j]] for i, j in zip(r, c)], dtype=float)
        k = len(nodes)
        bcsr = sparse.coo_matrix((np.concatenate([w, w]), (r + c, c + r)), shape=(k, k)).tocsr()
        D = space.distance_matrix(gl)[:, gl]
        deg = np.diff(bcsr.indptr)
        adj = [bcsr.indices[bcsr.indptr[i]:bcsr.indptr[i + 1]].tolist() for i in range(k)]
        out.append(_Block(gl, bcsr, D, np.flatnonzero(deg >= 3), adj))
    out.sort(key=lambda b: int(b.verts[0]))
    return out


def _hub_pairs(blk: _Block, M: float) -> list[tuple[int, int]]:
    h = blk.hubs
    return [(int(a), int(b)) for a, b in itertools.combinations(h, 2) if blk.D[a, b] >= 2 * M]


def _shortest_path(adj, wt, a: int, b: int, dead: set, skip_edge: bool):
    dist = {a: 0.0}
    prev = {a: -1}
    heap = [(0.0, a)]
    while heap:
        d, v = heapq.heappop(heap)
        if v == b:
            path = [b]
            while path[-1] != a:
                path.append(prev[path[-1]])
            return path[::-1]
        if d > dist[v]:
            continue
        for u in adj[v]:
            if u in dead or (skip_edge and {u, v} == {a, b}):
                continue
            nd = d + wt(v, u)
            if nd < dist.get(u, INF):
                dist[u] = nd
                prev[u] = v
                heapq.heappush(heap, (nd, u))
    return None


def _successive_paths(adj, wt, a: int, b: int):
    """Three a-b paths, each a shortest path once earlier interiors are removed."""
    dead: set[int] = set()
    skip_edge = False
    paths = []
    for _ in range(3):
        p = _shortest_path(adj, wt, a, b, dead, skip_edge)
        if p is None:
            return None
        skip_edge = skip_edge or len(p) == 2
        dead.update(p[1:-1])
        paths.append(p)
    return paths


def _weight_fn(blk: _Block, rng: Optional[np.random.Generator] = None):
    w = {}
    coo = sparse.triu(blk.csr).tocoo()
    noise = np.ones(coo.data.size) if rng is None else 1 + 0.5 * rng.random(coo.data.size)
    for u, v, x in zip(coo.row.tolist(), coo.col.tolist(), (coo.data * noise).tolist()):
        w[u, v] = w[v, u] = x
    return lambda u, v: w[u, v]


def _to_theta(blk: _Block, a: int, b: int, paths) -> ThetaCurve:
    v = blk.verts
    return ThetaCurve(int(v[a]), int(v[b]), tuple(tuple(int(v[x]) for x in p) for p in paths))  # type: ignore[arg-type]


def _try(space: Space, blk: _Block, a: int, b: int, paths, M: float):
    if paths is None:
        return None
    theta = _to_theta(blk, a, b, paths)
    w = fat_witness(space, theta, M)
    return (theta, w) if w is not None else None


def _filter(blk: _Block, M: float, R: float) -> set[tuple[int, int]]:
    """Hub pairs that pass the necessary condition for some middle triple."""
    k = blk.verts.size
    D = blk.D
    hubs = blk.hubs.tolist()
    far_hubs = [sum(1 << q for q, g in enumerate(hubs) if D[h, g] >= 2 * M) for h in hubs]
    far = D >= M
    ball = D < R
    # for each far pair (j, l): component labels of block - B_j - B_l and
    # the hub bitmask of each component, built lazily (label 0 = removed)
    coo = blk.csr.tocoo()
    er, ec = coo.row, coo.col
    is_hub = np.zeros(k, dtype=bool)
    is_hub[hubs] = True
    lab: dict[tuple[int, int], list] = {}
    pairs = [(j, l) for j in range(k) for l in (np.flatnonzero(far[j, j + 1:]) + j + 1).tolist()]
    chunk = max(1, 2_000_000 // max(1, er.size))
    for c0 in range(0, len(pairs), chunk):
        # one block-diagonal graph per chunk of pairs keeps scipy calls few
        batch = np.asarray(pairs[c0:c0 + chunk]).reshape(-1, 2)
        alive = ~(ball[batch[:, 0]] | ball[batch[:, 1]])
        em = alive[:, er] & alive[:, ec]
        off = (np.arange(len(batch)) * k)[:, None]
        rows = (er[None, :] + off)[em]
        cols = (ec[None, :] + off)[em]
        size = len(batch) * k
        link = sparse.csr_matrix((np.ones(rows.size), (rows, cols)), shape=(size, size))
        _, cl = csgraph.connected_components(link, directed=False)
        cl = np.where(alive, cl.reshape(len(batch), k) + 1, 0)
        for (j, l), row in zip(pairs[c0:c0 + chunk], cl):
            lab[j, l] = [row, {0: 0}]
    hub_pos = np.cumsum(is_hub) - 1

    def mask(j: int, l: int, z: int) -> int:
        row, masks = lab[j, l]
        c = int(row[z])
        if c not in masks:
            bits = np.zeros(len(hubs), dtype=bool)
            bits[hub_pos[(row == c) & is_hub]] = True
            masks[c] = int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")
        return masks[c]

    nbr = [set(np.flatnonzero(far[j]).tolist()) for j in range(k)]
    found: set[tuple[int, int]] = set()

    for j, l in lab:
        for z in nbr[j] & nbr[l]:
            if z <= l:
                continue
            F = mask(j, l, z)
            if F & (F - 1) == 0:
                continue
            F &= mask(j, z, l)
            if F & (F - 1) == 0:
                continue
            F &= mask(l, z, j)
            for q in range(len(hubs)):
                if F >> q & 1 and F & far_hubs[q]:
                    for q2 in range(q + 1, len(hubs)):
                        if F >> q2 & 1 and far_hubs[q] >> q2 & 1:
                            found.add((hubs[q], hubs[q2]))
    return found


def _enumerate(space: Space, blk: _Block, a: int, b: int, M: float, R: float, cutoff: int, counter: _Counter):
    """Simple a-b paths of at most ``cutoff`` edges, then triples with disjoint interiors."""
    db = blk.D[b]
    da = blk.D[a]
    paths: list[tuple[int, ...]] = []
    on_path = np.zeros(blk.verts.size, dtype=bool)

    def dfs(v: int, path: list[int], length: int) -> None:
        counter.tick()
        if v == b:
            # a fat theta needs a vertex R away from both hubs on every path
            if any(da[x] >= R and db[x] >= R for x in path):
                paths.append(tuple(path))
            return
        for u in blk.adj[v]:
            if on_path[u] or length + 1 + db[u] > cutoff:
                continue
            on_path[u] = True
            path.append(u)
            dfs(u, path, length + 1)
            path.pop()
            on_path[u] = False

    on_path[a] = True
    dfs(a, [a], 0)
    inner = [frozenset(p[1:-1]) for p in paths]
    for i, j in itertools.combinations(range(len(paths)), 2):
        if inner[i] & inner[j]:
            continue
        for l in range(j + 1, len(paths)):
            counter.tick()
            if inner[l] & inner[i] or inner[l] & inner[j]:
                continue
            if len(paths[i]) == len(paths[j]) == 2:
                continue
            hit = _try(space, blk, a, b, [list(paths[i]), list(paths[j]), list(paths[l])], M)
            if hit:
                return hit
    return None


def find_fat_theta(
    space: Space,
    M: float,
    mode: str = "exhaustive",
    budget: int = 1_000_000,
    seed: int = 0,
    cutoff: Optional[int] = None,
) -> ThetaSearch:
    """Look for an embedded ``M``-fat theta curve in ``space``.

    Every curve returned has been re-verified with :func:`is_fat`.  In
    random mode a miss proves nothing.  ``budget`` bounds sweep pairs, random
    samples, enumeration steps and path triples together.
    """
    if mode not in MODES:
        raise InputError(f"unknown search mode {mode!r}")
    if budget <= 0:
        raise InputError(f"budget must be positive, got {budget!r}")
    if not M > 0:
        raise InputError(f"M must be positive, got {M!r}")
    if cutoff is not None and cutoff < 1:
        raise InputError(f"cutoff must be positive, got {cutoff!r}")
    res = ThetaSearch(M, mode, cutoff)
    counter = _Counter(budget)
    blocks = _blocks(space)
    R = M - space.graph.max_weight / 2

    def done(stage: str, hit) -> ThetaSearch:
        res.stage, res.steps = stage, counter.used
        if hit:
            theta, w = hit
            if not is_fat(space, theta, M, w):
                raise AssertionError("fat theta certificate failed re-verification")
            res.theta, res.witness = theta, w
        return res

    try:
        if mode == "random":
            rng = np.random.default_rng(seed)
            pairs = [(bi, a, b) for bi, blk in enumerate(blocks) for a, b in _hub_pairs(blk, M)]
            if not pairs:
                res.proved_absent, res.scope = True, "all thetas (no two branch vertices 2M apart in one block)"
                return done("random", None)
            while True:
                counter.tick()
                bi, a, b = pairs[int(rng.integers(len(pairs)))]
                blk = blocks[bi]
                hit = _try(space, blk, a, b, _successive_paths(blk.adj, _weight_fn(blk, rng), a, b), M)
                if hit:
                    return done("random", hit)

        if not any(_hub_pairs(blk, M) for blk in blocks):
            res.proved_absent, res.scope = True, "all thetas (no two branch vertices 2M apart in one block)"
            return done("filter", None)
        for blk in blocks:
            wt = _weight_fn(blk)
            for a, b in _hub_pairs(blk, M):
                counter.tick()
                hit = _try(space, blk, a, b, _successive_paths(blk.adj, wt, a, b), M)
                if hit:
                    return done("sweep", hit)
        survivors = []
        for bi, blk in enumerate(blocks):
            if R <= 0:
                survivors += [(bi, a, b) for a, b in _hub_pairs(blk, M)]
            else:
                survivors += [(bi, a, b) for a, b in sorted(_filter(blk, M, R))]
        if not survivors:
            res.proved_absent, res.scope = True, "all thetas (necessary condition fails everywhere)"
            return done("filter", None)
        limit = cutoff if cutoff is not None else max(b.verts.size for b in blocks)
        for bi, a, b in survivors:
            hit = _enumerate(space, blocks[bi], a, b, M, R, limit, counter)
            if hit:
                return done("enumeration", hit)
        res.proved_absent = True
        res.scope = f"thetas with every path of at most {limit} edges"
        return done("enumeration", None)
    except _Budget:
        res.exhausted = True
        return done("budget", None)


@dataclass
class AnnulusThetaReport:
    base: int
    r: float
    m: float
    mode: str
    cutoff: Optional[int]
    components: list[np.ndarray]
    results: list[ThetaSearch]

    @property
    def counterexample(self) -> Optional[tuple[int, ThetaSearch]]:
        for i, res in enumerate(self.results):
            if res.found:
                return i, res
        return None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    @property
    def exhausted(self) -> bool:
        return any(r.exhausted for r in self.results)


def check_annulus_theta_free(
    g: Graph,
    base: int,
    r: float,
    m: float,
    mode: str = "exhaustive",
    budget: int = 1_000_000,
    seed: int = 0,
    cutoff: Optional[int] = None,
) -> AnnulusThetaReport:
    """Search every component of ``A(r, r+m)``, in its own path metric, for an ``m``-fat theta."""
    g.check_vertex(base)
    dist = g.distances(base)
    ring = band(dist, g.vertices, r, r + m)
    comps = components(Subspace(g, ring, "induced")) if ring.size else []
    results = [
        find_fat_theta(Subspace(g, c, "induced"), m, mode, budget, seed, cutoff)
        for c in comps
    ]
    return AnnulusThetaReport(int(base), r, m, mode, cutoff, comps, results)
