"""Planar diagrams of graph embeddings: polyline edges, exact crossing
computation with over/under flags, validation, editing and serialization.

A diagram is immutable; edits (flip_crossing, move_vertex) return new
diagrams.  Crossing sign convention: +1 when the over-strand direction is a
counterclockwise quarter turn of the under-strand direction.
"""

from __future__ import annotations

import json
import warnings
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .geometry import Point, SegmentContact, bbox_disjoint, orient, segment_contact
from .graphs import Cycle, Graph, cycle_edges

CrossingKey = tuple[int, int, int, int]  # (edge_a, seg_a, edge_b, seg_b), edge_a < edge_b


class DegeneracyError(ValueError):
    """Diagram geometry is not in general position."""


class UnknownCrossingError(KeyError):
    """Crossing key does not exist in the diagram."""


class Crossing:
    """A transverse double point between segments of two edges.

    ``base`` is the sign of cross(dir_a, dir_b) for the canonical (stored
    u -> v) directions of the two edges; the crossing sign for canonical
    directions is ``base`` if edge b is over and ``-base`` if edge a is over.
    """

    __slots__ = ("key", "point", "base", "over", "ta", "tb")

    def __init__(self, key: CrossingKey, point: Point, base: int, over: str,
                 ta: Fraction, tb: Fraction):
        self.key = key
        self.point = point
        self.base = base
        self.over = over  # 'a' or 'b'
        self.ta = ta
        self.tb = tb

    @property
    def sign(self) -> int:
        """Sign for canonical edge directions."""
        return self.base if self.over == "b" else -self.base

    def over_edge(self) -> int:
        return self.key[0] if self.over == "a" else self.key[2]

    def pos_on(self, edge: int) -> tuple[int, Fraction]:
        """(segment index, parameter) of this crossing along the given edge."""
        ea, sa, eb, sb = self.key
        if edge == ea:
            return (sa, self.ta)
        if edge == eb:
            return (sb, self.tb)
        raise ValueError(f"edge {edge} not part of crossing {self.key}")

    def __repr__(self):
        return f"Crossing{self.key}<over={self.over},sign={self.sign}>"


def _to_point(p) -> Point:
    return (Fraction(p[0]), Fraction(p[1]))


class Diagram:
    """A drawn embedding: graph + vertex positions + polyline edge paths +
    over/under rules keyed by canonical crossing key."""

    def __init__(self, graph: Graph, positions: Sequence, paths=None,
                 over_rules: dict[CrossingKey, str] | None = None, meta: dict | None = None):
        if len(positions) != graph.n:
            raise ValueError(f"{len(positions)} positions for {graph.n} vertices")
        self.graph = graph
        self.positions: tuple[Point, ...] = tuple(_to_point(p) for p in positions)
        if paths is None:
            paths = {}
        if isinstance(paths, dict):
            wp = [tuple(_to_point(q) for q in paths.get(e, ())) for e in graph.edges]
        else:
            wp = [tuple(_to_point(q) for q in w) for w in paths]
            if len(wp) != len(graph.edges):
                raise ValueError("one waypoint list per edge required")
        self.waypoints: tuple[tuple[Point, ...], ...] = tuple(wp)
        self.over_rules: dict[CrossingKey, str] = dict(over_rules or {})
        for k, v in self.over_rules.items():
            if v not in ("a", "b"):
                raise ValueError(f"over rule for {k} must be 'a' or 'b'")
        self.meta = dict(meta or {})
        self._crossings: list[Crossing] | None = None
        self._by_edge_pair: dict[tuple[int, int], list[Crossing]] | None = None

    # -- geometry ---------------------------------------------------------

    def polyline(self, edge_id: int) -> list[Point]:
        u, v = self.graph.edges[edge_id]
        return [self.positions[u], *self.waypoints[edge_id], self.positions[v]]

    def _int_polylines(self) -> list[list[tuple[int, int]]]:
        """All polylines with coordinates scaled to integers (shared scale)."""
        denoms = {c.denominator for p in self.positions for c in p}
        for w in self.waypoints:
            for p in w:
                denoms.update(c.denominator for c in p)
        m = lcm(*denoms) if denoms else 1
        out = []
        for e in range(len(self.graph.edges)):
            out.append([(int(p[0] * m), int(p[1] * m)) for p in self.polyline(e)])
        self._int_scale = m
        return out

    def over_for(self, key: CrossingKey) -> str:
        return self.over_rules.get(key, "a")

    def crossings(self) -> list[Crossing]:
        if self._crossings is None:
            self._crossings = compute_crossings(self)
        return self._crossings

    def crossings_between(self, ea: int, eb: int) -> list[Crossing]:
        """Crossings between two edges (order-insensitive)."""
        if self._by_edge_pair is None:
            idx: dict[tuple[int, int], list[Crossing]] = {}
            for c in self.crossings():
                idx.setdefault((c.key[0], c.key[2]), []).append(c)
            self._by_edge_pair = idx
        return self._by_edge_pair.get((min(ea, eb), max(ea, eb)), [])

    def crossing_by_key(self, key: CrossingKey) -> Crossing:
        for c in self.crossings():
            if c.key == tuple(key):
                return c
        raise UnknownCrossingError(tuple(key))

    # -- edits ------------------------------------------------------------

    def flip_crossing(self, key: CrossingKey) -> "Diagram":
        """Swap over/under at one crossing; geometry unchanged."""
        key = tuple(key)
        cur = self.crossing_by_key(key)  # raises UnknownCrossingError
        rules = dict(self.over_rules)
        rules[key] = "b" if cur.over == "a" else "a"
        d = Diagram(self.graph, self.positions, list(self.waypoints), rules, self.meta)
        d._adopt_geometry(self)
        return d

    def with_over_rules(self, rules: dict[CrossingKey, str]) -> "Diagram":
        d = Diagram(self.graph, self.positions, list(self.waypoints),
                    {**self.over_rules, **rules}, self.meta)
        d._adopt_geometry(self)
        return d

    def move_vertex(self, v: int, x, y) -> "Diagram":
        pos = list(self.positions)
        pos[v] = _to_point((x, y))
        d = Diagram(self.graph, pos, list(self.waypoints), dict(self.over_rules), self.meta)
        d.crossings()  # validate new geometry now
        return d

    def _adopt_geometry(self, src: "Diagram"):
        """Share crossing geometry from a diagram with identical positions/paths."""
        if src._crossings is not None:
            self._crossings = [
                Crossing(c.key, c.point, c.base, self.over_for(c.key), c.ta, c.tb)
                for c in src._crossings
            ]

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        parts = list(getattr(self.graph, "parts", ())) or self.meta.get("parts", [])
        obj = {
            "parts": list(parts),
            "positions": [[_dec(p[0]), _dec(p[1])] for p in self.positions],
            "edges": [
                {"u": u, "v": v, "waypoints": [[_dec(q[0]), _dec(q[1])] for q in self.waypoints[i]]}
                for i, (u, v) in enumerate(self.graph.edges)
            ],
            "over_rules": [
                {"a": c.key[0], "sa": c.key[1], "b": c.key[2], "sb": c.key[3],
                 "over": self.over_for(c.key)}
                for c in sorted(self.crossings(), key=lambda c: c.key)
            ],
            "meta": self.meta,
        }
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=False) + "\n"

    @staticmethod
    def from_json_obj(obj: dict) -> "Diagram":
        from .graphs import PartiteGraph

        edges = [(e["u"], e["v"]) for e in obj["edges"]]
        n = len(obj["positions"])
        parts = obj.get("parts") or []
        if parts and sum(parts) == n:
            g: Graph = PartiteGraph(parts)
            if set(g.edges) != {(min(u, v), max(u, v)) for u, v in edges}:
                g = Graph(n, edges)
        else:
            g = Graph(n, edges)
        wp_by_edge = {}
        for e in obj["edges"]:
            key = (min(e["u"], e["v"]), max(e["u"], e["v"]))
            pts = [tuple(map(Fraction, q)) for q in e.get("waypoints", [])]
            if e["u"] > e["v"]:
                pts = pts[::-1]
            wp_by_edge[key] = pts
        rules = {
            (r["a"], r["sa"], r["b"], r["sb"]): r["over"]
            for r in obj.get("over_rules", [])
        }
        pos = [tuple(map(Fraction, p)) for p in obj["positions"]]
        d = Diagram(g, pos, wp_by_edge, rules, obj.get("meta", {}))
        missing = [c.key for c in d.crossings() if c.key not in rules]
        if missing:
            warnings.warn(
                f"{len(missing)} crossings missing over rules; defaulting lower edge over",
                stacklevel=2,
            )
        return d

    @staticmethod
    def from_json(text: str) -> "Diagram":
        return Diagram.from_json_obj(json.loads(text))

    def __eq__(self, other):
        return (
            isinstance(other, Diagram)
            and self.graph == other.graph
            and self.positions == other.positions
            and self.waypoints == other.waypoints
            and {k: self.over_for(k) for k in (c.key for c in self.crossings())}
            == {k: other.over_for(k) for k in (c.key for c in other.crossings())}
            and self.meta == other.meta
        )

    def __repr__(self):
        return f"Diagram({self.graph!r}, crossings={len(self.crossings())})"


def _dec(x: Fraction) -> str:
    """Exact string for a rational: a decimal when the denominator is
    2,5-smooth, otherwise the fraction form "p/q" (both parse back exactly
    via Fraction())."""
    den = x.denominator
    k2 = k5 = 0
    while den % 2 == 0:
        den //= 2
        k2 += 1
    while den % 5 == 0:
        den //= 5
        k5 += 1
    if den != 1:
        return str(x)
    k = max(k2, k5)
    scaled = x * 10**k
    s = str(int(scaled))
    if k == 0:
        return s
    sign = "-" if s.startswith("-") else ""
    digits = s.lstrip("-").rjust(k + 1, "0")
    return f"{sign}{digits[:-k]}.{digits[-k:]}"


def compute_crossings(d: Diagram) -> list[Crossing]:
    """All transverse crossings, sorted by canonical key.

    Raises DegeneracyError on any contact that is not a transverse interior
    double point away from vertices and waypoints (collinear overlap,
    endpoint contact, vertex on edge, triple point, edge self-intersection).
    """
    polys = d._int_polylines()
    ne = len(polys)
    # vertex-on-edge / coincident vertices
    scale = d._int_scale
    vpos = [(int(p[0] * scale), int(p[1] * scale)) for p in d.positions]
    if len(set(vpos)) != len(vpos):
        raise DegeneracyError("coincident vertex positions")
    edges = d.graph.edges
    for vi, vp in enumerate(vpos):
        for e in range(ne):
            pts = polys[e]
            incident = vi in edges[e]
            for s in range(len(pts) - 1):
                a, b = pts[s], pts[s + 1]
                if a == b:
                    raise DegeneracyError(f"zero-length segment on edge {e}")
                if vp in (a, b):
                    if not incident:
                        raise DegeneracyError(f"vertex {vi} coincides with a point of edge {e}")
                    continue
                if orient(a, b, vp) == 0 and min(a[0], b[0]) <= vp[0] <= max(a[0], b[0]) \
                        and min(a[1], b[1]) <= vp[1] <= max(a[1], b[1]):
                    raise DegeneracyError(f"vertex {vi} lies on edge {e} segment {s}")

    found: list[Crossing] = []
    seen_points: dict[tuple, CrossingKey] = {}
    for ea in range(ne):
        pa = polys[ea]
        # self-intersection of one edge path
        for s1 in range(len(pa) - 1):
            for s2 in range(s1 + 1, len(pa) - 1):
                c = segment_contact(pa[s1], pa[s1 + 1], pa[s2], pa[s2 + 1])
                if s2 == s1 + 1:
                    if c.kind == SegmentContact.OVERLAP:
                        raise DegeneracyError(f"edge {ea} doubles back at segment {s1}")
                    continue  # shared waypoint endpoint is fine
                if c.kind != SegmentContact.NONE:
                    raise DegeneracyError(f"edge {ea} path is not simple ({s1},{s2})")
        for eb in range(ea + 1, ne):
            pb = polys[eb]
            shared = set(edges[ea]) & set(edges[eb])
            shared_pts = {vpos[v] for v in shared}
            for sa in range(len(pa) - 1):
                a1, a2 = pa[sa], pa[sa + 1]
                for sb in range(len(pb) - 1):
                    b1, b2 = pb[sb], pb[sb + 1]
                    if bbox_disjoint(a1, a2, b1, b2):
                        continue
                    c = segment_contact(a1, a2, b1, b2)
                    if c.kind == SegmentContact.NONE:
                        continue
                    if c.kind == SegmentContact.OVERLAP:
                        raise DegeneracyError(
                            f"collinear overlap between edges {ea}:{sa} and {eb}:{sb}")
                    if c.kind == SegmentContact.ENDPOINT:
                        if tuple(c.point) in shared_pts:
                            continue  # contact at the shared graph vertex
                        raise DegeneracyError(
                            f"endpoint contact between edges {ea}:{sa} and {eb}:{sb}")
                    key = (ea, sa, eb, sb)
                    ppt = (c.point[0], c.point[1])
                    if ppt in seen_points:
                        raise DegeneracyError(
                            f"triple point at {ppt}: {seen_points[ppt]} and {key}")
                    seen_points[ppt] = key
                    da = (a2[0] - a1[0], a2[1] - a1[1])
                    db = (b2[0] - b1[0], b2[1] - b1[1])
                    base = 1 if da[0] * db[1] - da[1] * db[0] > 0 else -1
                    pt = (c.point[0] / scale, c.point[1] / scale)
                    found.append(Crossing(key, pt, base, d.over_for(key), c.t, c.u))
    found.sort(key=lambda c: c.key)
    return found


def induced_diagram(d: Diagram, vertices: Iterable[int]) -> Diagram:
    """Sub-diagram on the edges with both endpoints in ``vertices``.

    Positions and waypoints are kept as drawn (other vertices become
    isolated), so every crossing of the sub-diagram is a crossing of d and
    keeps its over/under flag."""
    keep = set(vertices)
    g = d.graph
    sub_edges = [e for e in g.edges if e[0] in keep and e[1] in keep]
    sub = Graph(g.n, sub_edges)
    wp = {e: list(d.waypoints[g.edge_index[e]]) for e in sub_edges}
    rules = {}
    old_ids = {e: g.edge_index[e] for e in sub_edges}
    new_of_old = {old_ids[e]: sub.edge_index[e] for e in sub_edges}
    for c in d.crossings():
        ea, sa, eb, sb = c.key
        if ea in new_of_old and eb in new_of_old:
            na, nb = new_of_old[ea], new_of_old[eb]
            if na <= nb:
                rules[(na, sa, nb, sb)] = c.over
            else:
                rules[(nb, sb, na, sa)] = "b" if c.over == "a" else "a"
    # drop part metadata: it described the full graph, not the restriction
    meta = {k: v for k, v in d.meta.items() if k not in ("parts", "construction")}
    return Diagram(sub, d.positions, wp, rules, meta)


def validate_general_position(d: Diagram, tolerance: float = 0.0) -> list[str]:
    """Return a list of violations (empty means ok).

    Exact violations come from the same predicates compute_crossings uses;
    with a positive tolerance, advisory near-degeneracy warnings (crossings
    within tolerance of a vertex or waypoint) are appended as 'near: ...'
    entries.
    """
    violations: list[str] = []
    try:
        crossings = compute_crossings(d)
    except DegeneracyError as e:
        return [str(e)]
    if tolerance > 0:
        special = [(float(p[0]), float(p[1])) for p in d.positions]
        for w in d.waypoints:
            special.extend((float(q[0]), float(q[1])) for q in w)
        for c in crossings:
            cx, cy = float(c.point[0]), float(c.point[1])
            for (sx, sy) in special:
                if abs(cx - sx) <= tolerance and abs(cy - sy) <= tolerance:
                    violations.append(
                        f"near: crossing {c.key} within tolerance of point ({sx},{sy})")
                    break
    return violations


def perturb(d: Diagram, rng, rel_magnitude: Fraction = Fraction(1, 10**6)) -> Diagram:
    """Random rational perturbation of all vertices and waypoints, magnitude
    rel_magnitude of the bounding box.  Used to repair degenerate inputs;
    never applied silently."""
    xs = [p[0] for p in d.positions] + [q[0] for w in d.waypoints for q in w]
    ys = [p[1] for p in d.positions] + [q[1] for w in d.waypoints for q in w]
    span = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1))
    mag = span * rel_magnitude

    def jiggle(p: Point) -> Point:
        return (p[0] + mag * Fraction(rng.randrange(-1000, 1001), 1000),
                p[1] + mag * Fraction(rng.randrange(-1000, 1001), 1000))

    pos = [jiggle(p) for p in d.positions]
    wps = [tuple(jiggle(q) for q in w) for w in d.waypoints]
    return Diagram(d.graph, pos, wps, dict(d.over_rules), d.meta)


def cycle_strand(d: Diagram, cycle: Cycle, orientation: int = 1):
    """Closed traversal of a cycle's edges with ordered crossing events.

    Returns a list of events, each a dict with the crossing, the partner
    edge id, whether this strand is over, and the sign contribution for the
    traversal direction of THIS strand along its edge (partner direction not
    applied).  Reversing orientation reverses event order and flips each
    event's strand direction.
    """
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    verts = list(cycle) if orientation == 1 else [cycle[0], *reversed(cycle[1:])]
    events = []
    k = len(verts)
    for i in range(k):
        u, v = verts[i], verts[(i + 1) % k]
        e = d.graph.edge_index.get((min(u, v), max(u, v)))
        if e is None:
            raise ValueError(f"cycle edge ({u},{v}) not in graph")
        forward = u < v  # traversing in canonical stored direction?
        edge_events = []
        for c in d.crossings():
            ea, sa, eb, sb = c.key
            if ea == e:
                edge_events.append((c.pos_on(e), c, eb))
            elif eb == e:
                edge_events.append((c.pos_on(e), c, ea))
        edge_events.sort(key=lambda t: t[0], reverse=not forward)
        for pos, c, partner in edge_events:
            side = "a" if c.key[0] == e else "b"
            events.append({
                "crossing": c,
                "edge": e,
                "partner": partner,
                "over": c.over == side,
                "dir": 1 if forward else -1,
                "side": side,
            })
    return events
