"""Exact checks of cover guarantees.

Balls are closed: a set counts against the ball ``B(v, r)`` when some
vertex of the set lies at distance ``<= r`` from ``v``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import asdict, dataclass, field

import numpy as np

from .covers import Cover, _pmap
from .graph import INF, InputError, Space, set_diameter

BALL_CONVENTION = "closed"


@dataclass
class CoverReport:
    coverage_ok: bool
    partition_ok: bool
    max_set_diameter: float
    diameters: dict[str, float]
    diameter_bound: float
    multiplicity_radius: float
    multiplicity_bound: int
    max_multiplicity: int
    multiplicity_histogram: dict[int, int]
    violations: list[tuple[str, str]] = field(default_factory=list)
    empirical_ratio: float = 0.0
    radius_ratio: float = 0.0
    ball_convention: str = BALL_CONVENTION

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        d = asdict(self)
        d["multiplicity_histogram"] = {str(k): v for k, v in sorted(self.multiplicity_histogram.items())}
        d["violations"] = [list(v) for v in self.violations]
        d["passed"] = self.passed
        return d


def _within(space: Space, vertices: np.ndarray, radius: float) -> np.ndarray:
    """Mask of vertices at distance ``<= radius`` from ``vertices``."""
    return space.distances(vertices, limit=radius) <= radius


def multiplicity_at(space: Space, cover: Cover, v: int, radius: float) -> int:
    space.check_vertex(v)
    ball = space.distances(v, limit=radius) <= radius
    return sum(1 for s in cover.sets if s.vertices.size and ball[s.vertices].any())


def multiplicities(space: Space, cover: Cover, radius: float, sets=None, workers: int = 1) -> np.ndarray:
    """Per-vertex count of sets meeting the closed ``radius``-ball around it."""
    sets = cover.sets if sets is None else sets
    hits = np.zeros(space.graph.n, dtype=np.int64)
    n = space.graph.n
    member = space._member
    verts = []
    for s in sets:
        vs = s.vertices[(s.vertices >= 0) & (s.vertices < n)]
        verts.append(vs[member[vs]])
    for mask in _pmap(lambda vs: _within(space, vs, radius), [v for v in verts if v.size], workers):
        hits += mask
    return hits


def verify_cover(
    space: Space,
    cover: Cover,
    diameter_bound: float | None = None,
    radius: float | None = None,
    multiplicity_bound: int | None = None,
    centers=None,
    workers: int = 1,
) -> CoverReport:
    """Check coverage, disjointness, set diameters and ball multiplicity exactly.

    Bounds left as ``None`` are read from ``cover.params``.  ``centers``
    restricts which ball centres are examined (default: every vertex).
    """
    p = cover.params
    diameter_bound = float(p.get("diameter_bound", INF) if diameter_bound is None else diameter_bound)
    radius = float(p.get("radius", 0) if radius is None else radius)
    multiplicity_bound = int(p.get("multiplicity_bound", 1) if multiplicity_bound is None else multiplicity_bound)
    n = space.graph.n
    violations: list[tuple[str, str]] = []

    count = np.zeros(n, dtype=np.int64)
    member = space._member
    for s in cover.sets:
        inside = (s.vertices >= 0) & (s.vertices < n)
        if not inside.all():
            violations.append((s.label, f"vertex {int(s.vertices[~inside][0])} is not a graph vertex"))
        vs = s.vertices[inside]
        foreign = vs[~member[vs]]
        if foreign.size:
            violations.append((s.label, f"vertex {int(foreign[0])} is outside the space"))
        if s.vertices.size == 0:
            violations.append((s.label, "empty set"))
        np.add.at(count, vs, 1)
    verts = space.vertices
    uncovered = verts[count[verts] == 0]
    overlap = verts[count[verts] > 1]
    violations += [(str(int(v)), "uncovered") for v in uncovered]
    violations += [(str(int(v)), f"in {int(count[v])} sets") for v in overlap]

    def diameter(s) -> float:
        vs = s.vertices[(s.vertices >= 0) & (s.vertices < n)]
        vs = vs[member[vs]]
        return set_diameter(space, vs, limit=diameter_bound) if vs.size else 0.0

    diams = dict(zip((s.label for s in cover.sets), _pmap(diameter, cover.sets, workers)))
    for label, d in diams.items():
        if d > diameter_bound:
            violations.append((label, f"diameter {_num(d)} exceeds {_num(diameter_bound)}"))
    max_diam = max(diams.values(), default=0.0)

    hits = multiplicities(space, cover, radius, workers=workers)
    c = verts if centers is None else space.check_vertices(centers)
    mult = hits[c]
    hist = Counter(mult.tolist())
    max_mult = int(mult.max()) if mult.size else 0
    for v in c[mult > multiplicity_bound]:
        violations.append((str(int(v)), f"closed {_num(radius)}-ball meets {int(hits[v])} sets"))

    scale = p.get("m", 0)
    return CoverReport(
        coverage_ok=uncovered.size == 0,
        partition_ok=overlap.size == 0,
        max_set_diameter=max_diam,
        diameters=diams,
        diameter_bound=diameter_bound,
        multiplicity_radius=radius,
        multiplicity_bound=multiplicity_bound,
        max_multiplicity=max_mult,
        multiplicity_histogram=dict(sorted(hist.items())),
        violations=violations,
        empirical_ratio=max_diam / scale if scale else math.nan,
        radius_ratio=max_diam / radius if radius else math.nan,
    )


def layer_multiplicities(space: Space, cover: Cover, radius: float | None = None, workers: int = 1) -> dict[int, int]:
    """Worst ball multiplicity inside each annulus, counting only that annulus's sets.

    Centres range over the annulus itself, so this is the multiplicity of
    the per-annulus cover as a cover of the annulus with the ambient metric.
    """
    radius = float(cover.params.get("layer_radius", cover.params.get("radius", 0)) if radius is None else radius)
    groups: dict[int, list] = {}
    for s in cover.sets:
        groups.setdefault(s.annulus, []).append(s)

    def worst(k: int) -> int:
        sets = groups[k]
        hits = multiplicities(space, cover, radius, sets=sets)
        centres = np.concatenate([s.vertices for s in sets])
        return int(hits[centres].max())

    keys = sorted(groups)
    return dict(zip(keys, _pmap(worst, keys, workers)))


def separation_check(space: Space, sets, bound: float) -> tuple[bool, float]:
    """Whether distinct sets are more than ``bound`` apart, plus the smallest gap found."""
    arrs = [space.check_vertices(s) for s in sets]
    owner = np.full(space.graph.n, -1, dtype=np.int64)
    for i, a in enumerate(arrs):
        if (owner[a] >= 0).any():
            raise InputError(f"set {i} overlaps an earlier set")
        owner[a] = i
    best = INF
    if len(arrs) < 2:
        return True, best
    for i, a in enumerate(arrs):
        if a.size == 0:
            continue
        d = space.distances(a)
        others = (owner >= 0) & (owner != i)
        if others.any():
            best = min(best, float(d[others].min()))
    return best > bound, best


def _num(x: float) -> str:
    return str(int(x)) if math.isfinite(x) and float(x).is_integer() else f"{x:g}"
