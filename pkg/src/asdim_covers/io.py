"""JSON and DOT serialization.

Output is canonical: sorted keys, compact separators, sorted edges and a
trailing newline, so equal values always give equal bytes.  Non-finite
floats are written as the strings ``"inf"``, ``"-inf"`` and ``"nan"``.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from .covers import Cover, CoverSet
from .graph import Graph, InputError
from .theta import FatnessWitness, ThetaCurve, ThetaSearch


def _plain(x: Any) -> Any:
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, np.ndarray):
        return [_plain(v) for v in x.tolist()]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
    return x


def dumps(obj: Any) -> str:
    return json.dumps(_plain(obj), sort_keys=True, separators=(",", ":"), allow_nan=False) + "\n"


def _number(x: Any) -> float:
    if x in ("inf", "-inf", "nan"):
        return float(x)
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InputError(f"expected a number, got {x!r}")
    return x


def _load(text: str, what: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(obj, dict):
        raise InputError(f"{what}: expected a JSON object")
    return obj


# graphs


def graph_to_dict(g: Graph) -> dict:
    d: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.weights is not None:
        d["weights"] = list(g.weights)
    return d


def graph_from_dict(d: dict) -> Graph:
    try:
        n = d["n"]
        edges = d.get("edges", [])
        weights = d.get("weights")
    except (KeyError, AttributeError):
        raise InputError("graph JSON needs an integer 'n' and an 'edges' list") from None
    if isinstance(n, bool) or not isinstance(n, int):
        raise InputError(f"graph 'n' must be an integer, got {n!r}")
    if not isinstance(edges, list) or any(not isinstance(e, list) or len(e) != 2 for e in edges):
        raise InputError("graph 'edges' must be a list of [u, v] pairs")
    for e in edges:
        for v in e:
            if isinstance(v, bool) or not isinstance(v, int):
                raise InputError(f"edge endpoint {v!r} is not an integer")
    if weights is not None:
        if not isinstance(weights, list):
            raise InputError("graph 'weights' must be a list")
        weights = tuple(_number(w) for w in weights)
    return Graph(n, tuple(tuple(e) for e in edges), weights)


def dumps_graph(g: Graph) -> str:
    return dumps(graph_to_dict(g))


def loads_graph(text: str) -> Graph:
    return graph_from_dict(_load(text, "graph"))


# covers


def cover_to_dict(c: Cover) -> dict:
    return {
        "algorithm": c.algorithm,
        "params": dict(c.params),
        "base": c.base,
        "sets": [
            {"label": s.label, "annulus": s.annulus, "component": s.component, "class": s.cls,
             "vertices": s.vertices}
            for s in c.sets
        ],
    }


def cover_from_dict(d: dict) -> Cover:
    try:
        sets = [
            CoverSet(
                str(s["label"]),
                np.unique(np.asarray(s["vertices"], dtype=np.int64)),
                int(s.get("annulus", 0)),
                int(s.get("component", 0)),
                int(s.get("class", 0)),
            )
            for s in d["sets"]
        ]
        params = {str(k): _number(v) for k, v in d.get("params", {}).items()}
        return Cover(str(d["algorithm"]), params, int(d.get("base", 0)), sets)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed cover JSON: {exc}") from None


def dumps_cover(c: Cover) -> str:
    return dumps(cover_to_dict(c))


def loads_cover(text: str) -> Cover:
    return cover_from_dict(_load(text, "cover"))


# theta certificates


def certificate_to_dict(res: ThetaSearch, seed: int | None = None) -> dict:
    d: dict[str, Any] = {
        "M": res.M,
        "mode": res.mode,
        "cutoff": res.cutoff,
        "found": res.found,
        "proved_absent": res.proved_absent,
        "budget_exhausted": res.exhausted,
        "scope": res.scope,
        "stage": res.stage,
        "steps": res.steps,
    }
    if seed is not None:
        d["seed"] = seed
    if res.theta is not None and res.witness is not None:
        d["theta"] = {"a": res.theta.a, "b": res.theta.b, "paths": [list(p) for p in res.theta.paths]}
        d["splits"] = [list(x) for x in res.witness.splits]
        d["margins"] = list(res.witness.margins) if res.witness.margins else None
    return d


def certificate_from_dict(d: dict) -> tuple[float, ThetaCurve, FatnessWitness]:
    try:
        t = d["theta"]
        theta = ThetaCurve(int(t["a"]), int(t["b"]), tuple(tuple(p) for p in t["paths"]))  # type: ignore[arg-type]
        margins = d.get("margins")
        w = FatnessWitness(
            tuple(tuple(x) for x in d["splits"]),  # type: ignore[arg-type]
            None if margins is None else (_number(margins[0]), _number(margins[1])),
        )
        return _number(d["M"]), theta, w
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed certificate: {exc!r}") from None


# files


def read_text(path: str | Path, what: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {what} {str(path)!r}: {exc.strerror}") from None


def write_text(path: str | Path | None, text: str) -> None:
    if path is None or str(path) == "-":
        print(text, end="")
    else:
        Path(path).write_text(text)


def to_dot(g: Graph, cover: Cover | None = None) -> str:
    """Graphviz DOT; with a cover, each set gets its own fill colour."""
    lines = ["graph G {", "  node [shape=point];"]
    if cover is not None:
        own = cover.owner(g.n)
        for v in range(g.n):
            if own[v] >= 0:
                hue = (int(own[v]) * 0.618033988749895) % 1.0
                lines.append(f'  {v} [color="{hue:.3f} 0.8 0.9"];')
    for i, (u, v) in enumerate(g.edges):
        if g.weights is None:
            lines.append(f"  {u} -- {v};")
        else:
            lines.append(f'  {u} -- {v} [label="{g.weights[i]:g}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
