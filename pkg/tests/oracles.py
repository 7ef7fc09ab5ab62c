"""Brute-force reference implementations used by the tests.

Nothing here imports the library's algorithms; only plain edge lists go in.
"""

import heapq
import itertools
from collections import deque

import numpy as np

INF = float("inf")


def adjacency(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def floyd_warshall(n, edges, weights=None, allowed=None):
    """All-pairs distances; with ``allowed`` only edges inside that vertex set count."""
    D = [[INF] * n for _ in range(n)]
    for i in range(n):
        D[i][i] = 0.0
    ws = weights if weights is not None else [1.0] * len(edges)
    for (u, v), w in zip(edges, ws):
        if allowed is not None and (u not in allowed or v not in allowed):
            continue
        D[u][v] = min(D[u][v], w)
        D[v][u] = min(D[v][u], w)
    for k in range(n):
        Dk = D[k]
        for i in range(n):
            dik = D[i][k]
            if dik == INF:
                continue
            Di = D[i]
            for j in range(n):
                if dik + Dk[j] < Di[j]:
                    Di[j] = dik + Dk[j]
    return D


def bfs(n, edges, source, allowed=None):
    adj = adjacency(n, edges)
    dist = [INF] * n
    dist[source] = 0
    q = deque([source])
    while q:
        v = q.popleft()
        for u in adj[v]:
            if allowed is not None and u not in allowed:
                continue
            if dist[u] == INF:
                dist[u] = dist[v] + 1
                q.append(u)
    return dist


def dijkstra(n, edges, source, weights=None):
    adj = [[] for _ in range(n)]
    ws = weights if weights is not None else [1.0] * len(edges)
    for (u, v), w in zip(edges, ws):
        adj[u].append((v, w))
        adj[v].append((u, w))
    dist = [INF] * n
    dist[source] = 0.0
    heap = [(0.0, source)]
    while heap:
        d, v = heapq.heappop(heap)
        if d > dist[v]:
            continue
        for u, w in adj[v]:
            if d + w < dist[u]:
                dist[u] = d + w
                heapq.heappush(heap, (d + w, u))
    return dist


def ball(adj, v, radius):
    """Vertices within ``radius`` hops of ``v`` (unit lengths), listed by BFS."""
    seen = {v: 0}
    q = deque([v])
    while q:
        x = q.popleft()
        if seen[x] + 1 > radius:
            continue
        for y in adj[x]:
            if y not in seen:
                seen[y] = seen[x] + 1
                q.append(y)
    return list(seen)


def closure_classes(subset, dist, gap):
    """Transitive closure of ``d <= gap`` over all pairs of ``subset``, as sorted tuples."""
    subset = sorted(subset)
    parent = {v: v for v in subset}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in itertools.combinations(subset, 2):
        if dist(u, v) <= gap:
            parent[find(u)] = find(v)
    groups = {}
    for v in subset:
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(g)) for g in groups.values())


def ball_multiplicity(D, sets, v, radius):
    """Sets meeting the closed ball, by listing the ball's vertices one by one."""
    ball = [u for u in range(len(D)) if D[v][u] <= radius]
    return sum(1 for s in sets if any(u in s for u in ball))


def flood_components(vertices, edges):
    vertices = set(vertices)
    adj = {v: [] for v in vertices}
    for u, v in edges:
        if u in vertices and v in vertices:
            adj[u].append(v)
            adj[v].append(u)
    seen, out = set(), []
    for s in sorted(vertices):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        out.append(tuple(sorted(comp)))
    return out


def _splits(L):
    return [(s, t) for s in range(L + 1) for t in range(s + 2, L + 1)]


def _rect_min(A):
    """R[a, b, c, d] = min A[a:b, c:d] (inf when empty)."""
    m, k = A.shape
    rows = np.full((m + 1, m + 1, k), np.inf)
    for a in range(m):
        rows[a, a + 1:] = np.minimum.accumulate(A[a:], axis=0)
    R = np.full((m + 1, m + 1, k + 1, k + 1), np.inf)
    for c in range(k):
        R[:, :, c, c + 1:] = np.minimum.accumulate(rows[:, :, c:], axis=2)
    return R


def brute_max_fatness(D, paths):
    """Largest min(middle gap, alpha-beta gap / 2) over every split tuple.

    ``D`` is indexed by vertex ids, ``paths`` are vertex lists.  Every
    split tuple is scored; no monotonicity is exploited.
    """
    D = np.asarray(D, dtype=float)
    P = [np.asarray(p) for p in paths]
    L = [len(p) - 1 for p in P]
    S = [np.array(_splits(x)).reshape(-1, 2) for x in L]
    if any(len(x) == 0 for x in S):
        return 0.0
    total = np.full([len(x) for x in S], np.inf)
    for i in range(3):
        for j in range(3):
            R = _rect_min(D[np.ix_(P[i], P[j])])
            si, ti = S[i][:, 0][:, None], S[i][:, 1][:, None]
            sj, tj = S[j][:, 0][None, :], S[j][:, 1][None, :]
            ab = R[0, si + 1, tj, L[j] + 1]  # alpha_i against beta_j
            if i == j:
                T = np.diagonal(ab) / 2
                idx = [None] * 3
                idx[i] = slice(None)
                total = np.minimum(total, T[tuple(idx)])
                continue
            T = ab / 2
            if i < j:
                T = np.minimum(T, R[si + 1, ti, sj + 1, tj])
            idx = [None] * 3
            idx[i] = idx[j] = slice(None)
            total = np.minimum(total, (T if i < j else T.T)[tuple(idx)])
    return float(total.max())


def all_thetas(n, edges):
    """Every embedded theta as (a, b, [p1, p2, p3]), by listing simple paths."""
    adj = adjacency(n, edges)
    out = []
    for a, b in itertools.combinations(range(n), 2):
        paths = []

        def walk(v, path, seen):
            if v == b:
                paths.append(list(path))
                return
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    path.append(u)
                    walk(u, path, seen)
                    path.pop()
                    seen.discard(u)

        walk(a, [a], {a})
        inner = [set(p[1:-1]) for p in paths]
        for i, j, k in itertools.combinations(range(len(paths)), 3):
            if inner[i] & inner[j] or inner[i] & inner[k] or inner[j] & inner[k]:
                continue
            if sum(len(paths[x]) == 2 for x in (i, j, k)) > 1:
                continue
            out.append((a, b, [paths[i], paths[j], paths[k]]))
    return out


def theta_graph_distances(l1, l2, l3):
    """Closed-form distances in the theta graph built by the generator."""
    lengths = [l1, l2, l3]
    paths, nxt = [], 2
    for L in lengths:
        paths.append([0] + list(range(nxt, nxt + L - 1)) + [1])
        nxt += L - 1
    n = nxt
    D = np.full((n, n), np.inf)
    where = {}
    for i, p in enumerate(paths):
        for k, v in enumerate(p):
            where.setdefault(v, []).append((i, k))
    h = min(lengths)  # hub-to-hub distance
    for u in range(n):
        for v in range(n):
            best = np.inf
            for i, x in where[u]:
                for j, y in where[v]:
                    Li, Lj = lengths[i], lengths[j]
                    if i == j:
                        best = min(best, abs(x - y), x + h + (Lj - y), (Li - x) + h + y)
                    best = min(best, x + y, (Li - x) + (Lj - y), x + h + (Lj - y), (Li - x) + h + y)
            D[u, v] = best
    return D, paths
