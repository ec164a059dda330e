"""Constructors for specific drawn embeddings.

Fan embeddings of K_{n,4}, K_{n,3,1}, K_{n,2,2} and K_{n,2,1,1} (and the
woven K_{n,1,1,1,1} variant) are built as genuine spatial embeddings: the
small parts sit on a vertical axis, each big-part vertex spans its own
vertical half-plane ("page") containing its star, and axis edges that skip
over intermediate axis vertices are routed through private pages on the
opposite side.  The 3d picture is projected obliquely to a diagram and every
over/under flag comes from exact depth comparison, so the diagram faithfully
presents the spatial isotopy class.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .diagram import CrossingKey, DegeneracyError, Diagram
from .graphs import Graph, InvalidSpecError, PartiteGraph, build_complete_partite

Point3 = tuple[Fraction, Fraction, Fraction]


class ManifestMismatchError(ValueError):
    """Computed crossings of a diagram disagree with its declared manifest."""


@dataclass(frozen=True)
class LayoutRecipe:
    """Provenance record of a constructed diagram: which family built it,
    with what parameters, and the full expected crossing manifest (crossing
    keys with over flags).  A diagram matches its recipe when its computed
    crossings are exactly the manifest's keys with the manifest's flags."""

    family: str  # "fan" | "weave" | "random"
    parameters: dict = field(default_factory=dict)
    manifest: tuple[tuple[CrossingKey, str], ...] = ()

    def check(self, d: Diagram) -> None:
        """Raise ManifestMismatchError unless d's crossings match exactly."""
        computed = {c.key: c.over for c in d.crossings()}
        declared = dict(self.manifest)
        if computed != declared:
            missing = sorted(set(declared) - set(computed))
            extra = sorted(set(computed) - set(declared))
            flipped = sorted(
                k for k in set(computed) & set(declared) if computed[k] != declared[k]
            )
            raise ManifestMismatchError(
                f"crossing manifest mismatch: missing={missing} extra={extra} "
                f"flipped={flipped}")

    def matches(self, d: Diagram) -> bool:
        try:
            self.check(d)
        except ManifestMismatchError:
            return False
        return True


def layout_recipe(d: Diagram) -> LayoutRecipe:
    """Recipe of a diagram built by one of the constructors in this module
    (family and parameters are read from the diagram's metadata)."""
    family = d.meta.get("construction", "random")
    params = {k: v for k, v in d.meta.items() if k != "construction"}
    manifest = tuple(sorted((c.key, c.over) for c in d.crossings()))
    return LayoutRecipe(family, params, manifest)


def _project(p: Point3, alpha: Fraction, beta: Fraction):
    return (p[0] + alpha * p[2], p[1] + beta * p[2])


def diagram_from_spatial(
    graph: Graph,
    positions3: Sequence[Point3],
    paths3: dict | None = None,
    meta: dict | None = None,
    alpha: Fraction = Fraction(1, 7),
    beta: Fraction = Fraction(1, 13),
) -> Diagram:
    """Project a polyline spatial embedding to a diagram; over/under at each
    crossing is decided by exact height along the projection fiber.

    Tries a few projection directions if the first is degenerate."""
    paths3 = paths3 or {}
    last_err: Exception | None = None
    for k in range(1, 8):
        a, b = alpha * k, beta * k * k
        try:
            return _project_once(graph, positions3, paths3, meta, a, b)
        except DegeneracyError as e:
            last_err = e
    raise DegeneracyError(f"no generic projection found: {last_err}")


def _project_once(graph, positions3, paths3, meta, alpha, beta) -> Diagram:
    pos2 = [_project(p, alpha, beta) for p in positions3]
    wp2 = {e: [_project(q, alpha, beta) for q in paths3.get(e, [])] for e in graph.edges}
    d = Diagram(graph, pos2, wp2, meta=dict(meta or {}))
    poly3 = {
        e: [positions3[e[0]], *paths3.get(e, []), positions3[e[1]]] for e in graph.edges
    }
    rules = {}
    for c in d.crossings():
        ea, sa, eb, sb = c.key
        za = _depth(poly3[graph.edges[ea]], sa, c.ta)
        zb = _depth(poly3[graph.edges[eb]], sb, c.tb)
        if za == zb:
            raise DegeneracyError(f"projection fiber tie at crossing {c.key}")
        rules[c.key] = "a" if za > zb else "b"
    return d.with_over_rules(rules)


def _depth(poly3, seg: int, t: Fraction) -> Fraction:
    z1, z2 = poly3[seg][2], poly3[seg + 1][2]
    return z1 + t * (z2 - z1)


# -- fan embeddings ---------------------------------------------------------

# axis interleavings per small-part shape: order in which the small parts'
# vertices sit on the axis, as (part index, occurrence) slots
_AXIS_ORDERS = {
    (4,): [(1, 0), (1, 1), (1, 2), (1, 3)],
    (3, 1): [(2, 0), (1, 0), (1, 1), (1, 2)],
    (2, 2): [(1, 0), (2, 0), (1, 1), (2, 1)],
    (2, 1, 1): [(1, 0), (2, 0), (1, 1), (3, 0)],
}


def fan_embedding(parts: Sequence[int]) -> Diagram:
    """Fan embedding of K_{parts}: parts[0] is the fan part (any size); the
    remaining parts must total 4 vertices in one of the shapes [4], [3,1],
    [2,2], [2,1,1]."""
    parts = [int(p) for p in parts]
    if len(parts) < 2 or sum(parts[1:]) != 4:
        raise InvalidSpecError(
            f"fan embedding needs small parts totalling 4 vertices, got {parts}")
    shape = tuple(parts[1:])
    if shape not in _AXIS_ORDERS:
        raise InvalidSpecError(f"unsupported small-part shape {list(shape)}")
    n = parts[0]
    if n < 1:
        raise InvalidSpecError("fan part must be nonempty")
    g = build_complete_partite(parts)
    order = _AXIS_ORDERS[shape]
    # vertex ids: fan part occupies 0..n-1; axis part i starts after
    axis_vertex = {}
    off = n
    for pi, size in enumerate(parts[1:], start=1):
        for occ in range(size):
            axis_vertex[(pi, occ)] = off + occ
        off += size
    axis_seq = [axis_vertex[slot] for slot in order]  # bottom to top, z = 1..4
    z_of = {v: Fraction(k + 1) for k, v in enumerate(axis_seq)}

    positions3: list[Point3] = [None] * g.n  # type: ignore[list-item]
    for i in range(n):
        positions3[i] = (Fraction(2 * i - (n - 1), 4), Fraction(10), Fraction(0))
    for v, z in z_of.items():
        positions3[v] = (Fraction(0), Fraction(0), z)

    # axis edges between non-consecutive axis vertices arc through private
    # pages on the empty side (y < 0)
    paths3: dict = {}
    rank = {v: k for k, v in enumerate(axis_seq)}
    skip_edges = [
        (u, v)
        for (u, v) in g.edges
        if u >= n and v >= n and abs(rank[u] - rank[v]) > 1
    ]
    for j, (u, v) in enumerate(skip_edges):
        s = Fraction(-3 * (j + 1))  # distinct page direction (s, -5), lower left
        paths3[(u, v)] = [
            (s, Fraction(-5), z_of[u]),
            (s, Fraction(-5), z_of[v]),
        ]
    d = diagram_from_spatial(
        g, positions3, paths3,
        meta={"construction": "fan", "parts": parts, "axis_order": axis_seq},
    )
    return d


def weave_embedding_n1111(n: int) -> Diagram:
    """Woven embedding of K_{n,1,1,1,1}: the fan embedding of K_{n,2,1,1}
    (pair part {b, d}) plus the edge bd woven through the middle of the fans.

    The woven edge runs across all n fans at mid height.  It passes entirely
    over the first floor(n/2) fans, and through the middle of the rest --
    over their edges to b and x but under their edges to d and y -- so that
    it pierces the disk spanned by each triangle (i, x, y) on that side.
    The run is reached by dipping below the whole figure and climbing
    outside it on the left; the depth changes in the gap between the two
    middle fans, and the run comes back down outside on the right.  All
    over/under flags are taken from exact depth along the projection
    fiber."""
    if n < 3:
        raise InvalidSpecError("woven embedding needs a fan part of at least 3")
    g = build_complete_partite([n, 1, 1, 1, 1])
    vb, vd, vx, vy = n, n + 1, n + 2, n + 3
    z_of = {vb: Fraction(1), vx: Fraction(2), vd: Fraction(3), vy: Fraction(4)}
    positions3: list[Point3] = [None] * g.n  # type: ignore[list-item]
    # fan tops spaced wide enough that the depth change fits in a gap
    for i in range(n):
        positions3[i] = (Fraction(2 * i - (n - 1)), Fraction(10), Fraction(0))
    for v, z in z_of.items():
        positions3[v] = (Fraction(0), Fraction(0), z)
    paths3: dict = {}
    # skip-edge pages far out on the left, clear of the woven edge's route
    for s, (u, v) in [(-40, (vb, vy)), (-50, (vx, vy))]:
        paths3[(u, v)] = [(Fraction(s), Fraction(-5), z_of[u]),
                          (Fraction(s), Fraction(-5), z_of[v])]
    half = n // 2  # fans 0..half-1 on one side of the weave, the rest on the other
    x_gap = Fraction(2 * half - n)  # between fan tops half-1 and half
    right = Fraction(n + 1)
    # fan-edge depths where the run crosses them are about k/5 for the edge
    # to the axis vertex at height k, so depth 1/2 sits between the x and d
    # edges (inside the x..y strip) and depth 3 is above all of them
    z_hi, z_lo = Fraction(3), Fraction(1, 2)
    paths3[(vb, vd)] = [
        (Fraction(0), Fraction(-6), Fraction(1)),    # dip under everything
        (Fraction(-60), Fraction(-6), Fraction(1)),  # left of the skip pages
        (Fraction(-60), Fraction(-6), z_hi),
        (Fraction(-60), Fraction(8), z_hi),
        (x_gap, Fraction(8), z_hi),                  # across fans 0..half-1
        (x_gap, Fraction(8), z_lo),                  # depth change in the gap
        (right, Fraction(8), z_lo),                  # across fans half..n-1
        (right, Fraction(-2), z_lo),                 # down outside, then into d
    ]
    return diagram_from_spatial(
        g, positions3, paths3,
        meta={"construction": "weave", "parts": [n] + [1] * 4},
    )


def random_embedding(g: Graph, seed: int) -> Diagram:
    """Random straight-line diagram of g with independent fair over/under
    flags at every crossing; deterministic per seed.

    Vertices are placed at random integer points in a box; placements that
    fail general-position validation are resampled, so the result always
    validates.  Over/under flags are drawn in sorted crossing-key order so
    they too depend only on the seed."""
    rng = random.Random(seed)
    span = max(200, 50 * g.n)
    last_err: Exception | None = None
    for _ in range(1000):
        pts = set()
        while len(pts) < g.n:
            pts.add((rng.randint(-span, span), rng.randint(-span, span)))
        pos = sorted(pts)
        rng.shuffle(pos)
        meta = {"construction": "random", "seed": seed}
        parts = list(getattr(g, "parts", ()))
        if parts:
            meta["parts"] = parts
        d = Diagram(g, pos, meta=meta)
        try:
            crossings = d.crossings()
        except DegeneracyError as e:
            last_err = e
            continue
        rules = {
            c.key: ("a" if rng.random() < 0.5 else "b")
            for c in sorted(crossings, key=lambda c: c.key)
        }
        return d.with_over_rules(rules)
    raise DegeneracyError(f"no general-position placement found: {last_err}")
