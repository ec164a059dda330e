"""Whole-diagram analysis: link and knot censuses with breakdowns, the two
linking-pattern classifiers, complete-graph parity audits, verification
against the published tables, and local-search minimization.

Detection caveats (carried on every report): links are detected by nonzero
linking number and knots by a nonzero Conway z^2 coefficient, so split links
with vanishing pairwise linking numbers and knots with a2 = 0 are invisible
to these censuses.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bounds import (
    knot_bound_notes,
    knot_lower_bound,
    link_lower_bound,
    table2_entry,
    table3_entry,
)
from .diagram import DegeneracyError, Diagram
from .graphs import (
    Cycle,
    PartiteGraph,
    build_complete_partite,
    disjoint_cycle_pairs,
    enumerate_cycles,
)
from .invariants import conway_a2, gauss_diagram, linking_number

CAVEAT_LINKS = "links detected by nonzero linking number only"
CAVEAT_KNOTS = "knots detected by nonzero Conway z^2 coefficient only"


class CensusError(ValueError):
    pass


class BoundViolationError(CensusError):
    """A computed count fell below a proven lower bound: a software error."""


class ClassifierViolationError(CensusError):
    """A linking pattern violated one of the classification results."""


@dataclass(frozen=True)
class LinkRecord:
    """One pair of disjoint cycles with nonzero linking number."""

    cycle_a: Cycle
    cycle_b: Cycle
    lk: int

    def to_json_obj(self) -> dict:
        return {"cycle_a": list(self.cycle_a), "cycle_b": list(self.cycle_b),
                "lk": self.lk}


@dataclass(frozen=True)
class KnotRecord:
    """One cycle whose Conway z^2 coefficient is nonzero."""

    cycle: Cycle
    a2: int

    def to_json_obj(self) -> dict:
        return {"cycle": list(self.cycle), "a2": self.a2}


@dataclass
class CensusReport:
    """Census of a diagram: link and/or knot counts with breakdowns, the
    applicable proven lower bounds, and detection caveats.

    ``link_breakdown`` is keyed by (shorter length, longer length, parity of
    lk); ``knot_breakdown`` by cycle length.  Totals always equal the sum of
    the corresponding breakdown.
    """

    parts: list[int] | None
    kind: str  # "links" | "knots" | "both"
    link_total: int | None = None
    link_breakdown: dict[tuple[int, int, str], int] = field(default_factory=dict)
    knot_total: int | None = None
    knot_breakdown: dict[int, int] = field(default_factory=dict)
    bounds: dict = field(default_factory=dict)
    caveats: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.link_total is not None and self.link_total != sum(
            self.link_breakdown.values()
        ):
            raise CensusError("link total does not equal breakdown sum")
        if self.knot_total is not None and self.knot_total != sum(
            self.knot_breakdown.values()
        ):
            raise CensusError("knot total does not equal breakdown sum")

    def to_json_obj(self) -> dict:
        obj: dict = {
            "parts": self.parts,
            "kind": self.kind,
            "caveats": sorted(self.caveats),
            "notes": sorted(self.notes),
            "bounds": self.bounds,
        }
        if self.link_total is not None:
            obj["links"] = {
                "total": self.link_total,
                "breakdown": [
                    {"shape": [m, n], "parity": parity, "count": cnt}
                    for (m, n, parity), cnt in sorted(self.link_breakdown.items())
                ],
            }
        if self.knot_total is not None:
            obj["knots"] = {
                "total": self.knot_total,
                "breakdown": [
                    {"length": length, "count": cnt}
                    for length, cnt in sorted(self.knot_breakdown.items())
                ],
            }
        return obj

    def to_json(self) -> str:
        """Canonical serialization: sorted keys, fixed indentation, trailing
        newline.  CLI and service must emit byte-identical reports."""
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True) + "\n"


def _diagram_parts(d: Diagram) -> list[int] | None:
    if isinstance(d.graph, PartiteGraph):
        return list(d.graph.parts)
    parts = d.meta.get("parts")
    if parts and sum(parts) == d.graph.n:
        return list(parts)
    return None


def _chunked(seq, k):
    size = max(1, (len(seq) + k - 1) // k)
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def link_records(d: Diagram, workers: int = 1) -> list[LinkRecord]:
    """All disjoint cycle pairs with nonzero linking number.

    Only cycles short enough to leave room for a disjoint 3-cycle partner
    are enumerated (pairs with combined length above the vertex count cannot
    exist)."""
    g = d.graph
    if g.n < 6:
        return []
    cycles = enumerate_cycles(g, 3, g.n - 3)
    pairs = disjoint_cycle_pairs(cycles)

    def scan(chunk):
        out = []
        for a, b in chunk:
            lk = linking_number(d, a, b)
            if lk:
                out.append(LinkRecord(a, b, lk))
        return out

    if workers > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(scan, _chunked(pairs, workers))
        records = [r for part in parts for r in part]
    else:
        records = scan(pairs)
    return records


def knot_records(d: Diagram, workers: int = 1) -> list[KnotRecord]:
    """All cycles with nonzero Conway z^2 coefficient."""
    g = d.graph
    cycles = enumerate_cycles(g, 3, g.n) if g.n >= 3 and g.edges else []

    def scan(chunk):
        out = []
        for c in chunk:
            a2 = conway_a2(gauss_diagram(d, c))
            if a2:
                out.append(KnotRecord(c, a2))
        return out

    if workers > 1 and len(cycles) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(scan, _chunked(cycles, workers))
        records = [r for part in parts for r in part]
    else:
        records = scan(cycles)
    return records


def _link_side(d: Diagram, workers: int) -> tuple[int, dict, list[LinkRecord]]:
    records = link_records(d, workers)
    breakdown: dict[tuple[int, int, str], int] = {}
    for r in records:
        key = (len(r.cycle_a), len(r.cycle_b), "odd" if r.lk % 2 else "even")
        breakdown[key] = breakdown.get(key, 0) + 1
    return len(records), breakdown, records


def _knot_side(d: Diagram, workers: int) -> tuple[int, dict, list[KnotRecord]]:
    records = knot_records(d, workers)
    breakdown: dict[int, int] = {}
    for r in records:
        breakdown[len(r.cycle)] = breakdown.get(len(r.cycle), 0) + 1
    return len(records), breakdown, records


def _bound_entry(total: int, bound: int | None) -> dict:
    if bound is None:
        return {"lower_bound": None, "status": "no-bound"}
    if total < bound:
        return {"lower_bound": bound, "status": "violated"}
    return {"lower_bound": bound, "status": "meets" if total == bound else "above"}


def count_census(d: Diagram, kind: str = "both", workers: int = 1) -> CensusReport:
    """Census of a diagram; ``kind`` selects the link side, the knot side, or
    both.  Raises BoundViolationError if a count falls below a proven bound."""
    if kind not in ("links", "knots", "both"):
        raise CensusError(f"unknown census kind {kind!r}")
    parts = _diagram_parts(d)
    report = CensusReport(parts=parts, kind=kind)
    notes: list[str] = []
    if kind in ("links", "both"):
        total, breakdown, _ = _link_side(d, workers)
        report.link_total = total
        report.link_breakdown = breakdown
        report.caveats.append(CAVEAT_LINKS)
        bound = link_lower_bound(parts) if parts else None
        report.bounds["links"] = _bound_entry(total, bound)
        if report.bounds["links"]["status"] == "violated":
            raise BoundViolationError(
                f"{total} links below proven lower bound {bound} for parts {parts}")
    if kind in ("knots", "both"):
        total, breakdown, _ = _knot_side(d, workers)
        report.knot_total = total
        report.knot_breakdown = breakdown
        report.caveats.append(CAVEAT_KNOTS)
        bound = knot_lower_bound(parts) if parts else None
        report.bounds["knots"] = _bound_entry(total, bound)
        if parts:
            notes.extend(knot_bound_notes(parts))
        if report.bounds["knots"]["status"] == "violated":
            raise BoundViolationError(
                f"{total} knots below proven lower bound {bound} for parts {parts}")
    report.notes.extend(notes)
    return report


def count_links(d: Diagram, workers: int = 1) -> CensusReport:
    return count_census(d, "links", workers)


def count_knots(d: Diagram, workers: int = 1) -> CensusReport:
    return count_census(d, "knots", workers)


# -- classifiers --------------------------------------------------------------


def _extract_loop(d: Diagram, base: PartiteGraph) -> Cycle:
    """Validate that d's graph is ``base`` on vertices 0..base.n-1 plus one
    disjoint cycle on the remaining vertices; return that cycle's vertex
    sequence."""
    g = d.graph
    bn = base.n
    if g.n < bn + 3:
        raise CensusError(f"graph too small for {base!r} plus a loop")
    base_edges = {e for e in g.edges if e[0] < bn and e[1] < bn}
    if base_edges != set(base.edges):
        raise CensusError(f"vertices 0..{bn - 1} do not induce {base!r}")
    if any(e[0] < bn <= e[1] for e in g.edges):
        raise CensusError("loop component is not disjoint from the base graph")
    loop_verts = list(range(bn, g.n))
    if any(len(g.neighbors(v)) != 2 for v in loop_verts):
        raise CensusError("extra component is not a single cycle")
    seq = [bn]
    prev = None
    while True:
        a, b = sorted(g.neighbors(seq[-1]))
        nxt = b if a == prev else a
        if nxt == bn:
            break
        prev = seq[-1]
        seq.append(nxt)
    if len(seq) != len(loop_verts):
        raise CensusError("extra component is not a single cycle")
    return tuple(seq)


@dataclass(frozen=True)
class K33Pattern:
    """Odd-linking pattern of a loop against the 15 cycles of a K_{3,3}."""

    kind: str  # "none" | "4+4" | "6+2"
    odd_squares: tuple[Cycle, ...]
    odd_hexagons: tuple[Cycle, ...]


def classify_k33_pattern(d: Diagram) -> K33Pattern:
    """Classify the linking pattern of the loop component against K_{3,3}.

    The diagram's graph must be K_{3,3} on vertices 0..5 plus one disjoint
    cycle.  If the loop has odd linking with any of the 15 cycles, it must
    have odd linking with exactly 8 of them: either 4 squares and 4 hexagons
    or 6 squares and 2 hexagons.  Any other pattern raises
    ClassifierViolationError."""
    base = build_complete_partite([3, 3])
    loop = _extract_loop(d, base)
    odd_sq, odd_hex = [], []
    for c in enumerate_cycles(base):
        if linking_number(d, loop, c) % 2:
            (odd_sq if len(c) == 4 else odd_hex).append(c)
    if not odd_sq and not odd_hex:
        return K33Pattern("none", (), ())
    split = (len(odd_sq), len(odd_hex))
    if split == (4, 4):
        kind = "4+4"
    elif split == (6, 2):
        kind = "6+2"
    else:
        raise ClassifierViolationError(
            f"odd linking with {split[0]} squares and {split[1]} hexagons; "
            "expected 4+4 or 6+2")
    return K33Pattern(kind, tuple(odd_sq), tuple(odd_hex))


@dataclass(frozen=True)
class PyramidType:
    """Odd-linking pattern of a loop against the 13 cycles of a K_{2,2,1}
    (the 1-skeleton of a pyramid: 4 triangles, 5 squares, 4 pentagons)."""

    type_id: int  # 1..6
    odd_triangles: int
    odd_squares: int
    odd_pentagons: int
    base_square_odd: bool

    @property
    def odd_total(self) -> int:
        return self.odd_triangles + self.odd_squares + self.odd_pentagons


# (odd triangles, odd squares, odd pentagons) -> type id; types 1, 5 and 6
# additionally require the base square (the one square avoiding the apex) to
# be among the odd squares.
_PYRAMID_ROWS = {
    (1, 3, 3): 1,
    (2, 2, 2): 2,
    (2, 4, 2): 3,
    (4, 0, 4): 4,
    (3, 3, 1): 5,
    (3, 5, 1): 6,
}
_BASE_REQUIRED = {1, 5, 6}


def classify_pyramid_type(d: Diagram) -> PyramidType | None:
    """Classify the loop's linking pattern against the pyramid K_{2,2,1}.

    The graph must be K_{2,2,1} on vertices 0..4 (apex 4, base square
    0-2-1-3) plus one disjoint cycle.  If the loop has odd linking with a
    face (a triangle or the base square), the odd tallies must match one of
    six patterns, each with at least 6 odd cycles in total; a non-matching
    pattern raises ClassifierViolationError.  Returns None when no face is
    oddly linked."""
    base = build_complete_partite([2, 2, 1])
    loop = _extract_loop(d, base)
    base_square = (0, 2, 1, 3)
    tallies = {3: 0, 4: 0, 5: 0}
    base_odd = False
    face_odd = False
    for c in enumerate_cycles(base):
        odd = linking_number(d, loop, c) % 2 == 1
        if not odd:
            continue
        tallies[len(c)] += 1
        if c == base_square:
            base_odd = True
        if len(c) == 3 or c == base_square:
            face_odd = True
    if not face_odd:
        return None
    key = (tallies[3], tallies[4], tallies[5])
    type_id = _PYRAMID_ROWS.get(key)
    if type_id is None:
        raise ClassifierViolationError(
            f"odd tallies {key} match none of the six pyramid patterns")
    if type_id in _BASE_REQUIRED and not base_odd:
        raise ClassifierViolationError(
            f"pattern {type_id} requires the base square to be oddly linked")
    result = PyramidType(type_id, *key, base_square_odd=base_odd)
    if result.odd_total < 6:
        raise ClassifierViolationError(
            f"only {result.odd_total} odd cycles; every pattern has at least 6")
    return result


# -- complete-graph parity audits ---------------------------------------------


def _require_complete(d: Diagram, n: int) -> None:
    g = d.graph
    if g.n != n or g.edge_count != n * (n - 1) // 2:
        raise CensusError(f"graph is not the complete graph on {n} vertices")


def conway_gordon_parity(d: Diagram) -> dict:
    """Embedding-independent parity audit for complete graphs.

    K_6: sum of linking numbers over the 10 disjoint triangle pairs, mod 2
    (always 1).  K_7: sum of Conway z^2 coefficients over the 360 Hamiltonian
    cycles, mod 2 (always 1)."""
    n = d.graph.n
    if n == 6:
        _require_complete(d, 6)
        triangles = enumerate_cycles(d.graph, 3, 3)
        pairs = disjoint_cycle_pairs(triangles)
        total = sum(linking_number(d, a, b) for a, b in pairs)
        return {"mode": "links", "pairs": len(pairs), "sum": total,
                "parity": total % 2}
    if n == 7:
        _require_complete(d, 7)
        hams = enumerate_cycles(d.graph, 7, 7)
        total = sum(conway_a2(gauss_diagram(d, c)) for c in hams)
        return {"mode": "knots", "cycles": len(hams), "sum": total,
                "parity": total % 2}
    raise CensusError("parity audit requires K_6 or K_7")


# -- table verification --------------------------------------------------------


@dataclass
class TableVerdict:
    parts: list[int]
    link_status: str | None = None
    knot_status: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        bad = {"violated", "exact-mismatch"}
        return self.link_status not in bad and self.knot_status not in bad

    def to_json_obj(self) -> dict:
        return {"parts": self.parts, "link_status": self.link_status,
                "knot_status": self.knot_status, "notes": sorted(self.notes),
                "ok": self.ok}


def _table_status(total: int, entry: dict | None, bound: int | None,
                  verdict: TableVerdict, label: str) -> str:
    if bound is not None and total < bound:
        raise BoundViolationError(
            f"{total} {label} below proven lower bound {bound}")
    if entry and "exact" in entry:
        if total < entry["exact"]:
            raise BoundViolationError(
                f"{total} {label} below known minimum {entry['exact']}")
        if total == entry["exact"]:
            return "meets-exact"
        return "exact-mismatch"
    if entry and "upper" in entry:
        if total <= entry["upper"]:
            if total < entry["upper"]:
                verdict.notes.append(
                    f"improves published upper bound {entry['upper']} -> {total} ({label})")
            return "witnesses-upper-bound"
        return "above-published-upper"
    if bound is not None:
        return "respects-lower-bound"
    return "no-reference"


def verify_against_tables(parts: Sequence[int], report: CensusReport) -> TableVerdict:
    """Compare a census against the published minimum tables and the proven
    bounds.  A count below a proven value raises BoundViolationError; a count
    above a known exact minimum is reported as "exact-mismatch" (the diagram
    is simply not minimal)."""
    parts = [int(p) for p in parts]
    verdict = TableVerdict(parts=parts)
    if report.link_total is not None:
        verdict.link_status = _table_status(
            report.link_total, table2_entry(parts), link_lower_bound(parts),
            verdict, "links")
    if report.knot_total is not None:
        verdict.knot_status = _table_status(
            report.knot_total, table3_entry(parts), knot_lower_bound(parts),
            verdict, "knots")
        verdict.notes.extend(knot_bound_notes(parts))
    return verdict


# -- local search ---------------------------------------------------------------


class _LinkObjective:
    """Incrementally maintained link count.

    A crossing flip between edges ea and eb can only change the linking
    number of pairs where one cycle passes through ea and the other through
    eb, so only those pairs are recounted."""

    def __init__(self, d: Diagram):
        g = d.graph
        self.cycles = enumerate_cycles(g, 3, g.n - 3) if g.n >= 6 else []
        self.pairs = disjoint_cycle_pairs(self.cycles)
        edge_sets = []
        for c in self.cycles:
            es = set()
            k = len(c)
            for i in range(k):
                u, v = c[i], c[(i + 1) % k]
                es.add(g.edge_index[(min(u, v), max(u, v))])
            edge_sets.append(es)
        self._edge_sets = {c: es for c, es in zip(self.cycles, edge_sets)}
        self.lk = {}
        self.count = 0
        for i, (a, b) in enumerate(self.pairs):
            v = linking_number(d, a, b)
            self.lk[i] = v
            if v:
                self.count += 1
        # edge pair -> affected pair indices
        self._by_edges: dict[tuple[int, int], list[int]] = {}
        for i, (a, b) in enumerate(self.pairs):
            for ea in self._edge_sets[a]:
                for eb in self._edge_sets[b]:
                    self._by_edges.setdefault((min(ea, eb), max(ea, eb)), []).append(i)

    def recount_flip(self, d_new: Diagram, key) -> int:
        """Count after a flip of ``key`` (does not mutate stored state)."""
        ea, _, eb, _ = key
        affected = self._by_edges.get((min(ea, eb), max(ea, eb)), [])
        count = self.count
        for i in affected:
            a, b = self.pairs[i]
            v = linking_number(d_new, a, b)
            if bool(v) != bool(self.lk[i]):
                count += 1 if v else -1
        return count

    def apply_flip(self, d_new: Diagram, key) -> None:
        ea, _, eb, _ = key
        for i in self._by_edges.get((min(ea, eb), max(ea, eb)), []):
            a, b = self.pairs[i]
            v = linking_number(d_new, a, b)
            if bool(v) != bool(self.lk[i]):
                self.count += 1 if v else -1
            self.lk[i] = v

    def full_recount(self, d: Diagram) -> int:
        return sum(1 for a, b in self.pairs if linking_number(d, a, b))


class _KnotObjective:
    """Incrementally maintained knot count (nonzero a2 cycles)."""

    def __init__(self, d: Diagram):
        g = d.graph
        self.cycles = enumerate_cycles(g, 3, g.n) if g.n >= 3 and g.edges else []
        self._edge_sets = {}
        for c in self.cycles:
            es = set()
            k = len(c)
            for i in range(k):
                u, v = c[i], c[(i + 1) % k]
                es.add(g.edge_index[(min(u, v), max(u, v))])
            self._edge_sets[c] = es
        self.a2 = {c: conway_a2(gauss_diagram(d, c)) for c in self.cycles}
        self.count = sum(1 for v in self.a2.values() if v)

    def _affected(self, key):
        ea, _, eb, _ = key
        return [c for c in self.cycles
                if ea in self._edge_sets[c] and eb in self._edge_sets[c]]

    def recount_flip(self, d_new: Diagram, key) -> int:
        count = self.count
        for c in self._affected(key):
            v = conway_a2(gauss_diagram(d_new, c))
            if bool(v) != bool(self.a2[c]):
                count += 1 if v else -1
        return count

    def apply_flip(self, d_new: Diagram, key) -> None:
        for c in self._affected(key):
            v = conway_a2(gauss_diagram(d_new, c))
            if bool(v) != bool(self.a2[c]):
                self.count += 1 if v else -1
            self.a2[c] = v

    def full_recount(self, d: Diagram) -> int:
        return sum(1 for c in self.cycles if conway_a2(gauss_diagram(d, c)))


@dataclass
class SearchResult:
    best: Diagram
    best_count: int
    objective: str
    seed: int
    trace: list[dict]

    def trace_ndjson(self) -> str:
        return "".join(json.dumps(ev, sort_keys=True) + "\n" for ev in self.trace)


def _objectives(d: Diagram, objective: str):
    if objective == "links":
        return [_LinkObjective(d)]
    if objective == "knots":
        return [_KnotObjective(d)]
    if objective == "both":
        return [_LinkObjective(d), _KnotObjective(d)]
    raise CensusError(f"unknown objective {objective!r}")


def _proven_bound(d: Diagram, objective: str) -> int:
    parts = _diagram_parts(d)
    if not parts:
        return 0
    bound = 0
    if objective in ("links", "both"):
        bound += link_lower_bound(parts) or 0
    if objective in ("knots", "both"):
        bound += knot_lower_bound(parts) or 0
    return bound


def local_search_minimize(
    d: Diagram,
    objective: str = "links",
    budget: int = 200,
    seed: int = 0,
    annealing: bool = False,
    jitter: bool = False,
    plateau: int = 20,
) -> SearchResult:
    """Seeded local search minimizing the census count by single crossing
    flips (and, optionally, small vertex moves).

    Greedy with a plateau tolerance: equal-count moves are accepted until
    ``plateau`` consecutive accepted moves bring no strict improvement.  With
    ``annealing``, worsening flips are accepted with probability
    exp(-delta/T) under a geometric cooling schedule.  Flips are recounted
    incrementally (only cycle pairs through the flipped crossing's two edges
    can change).  The search is deterministic per seed and raises
    BoundViolationError if the result ever falls below a proven lower bound."""
    import math
    import random as _random

    if budget <= 0:
        raise CensusError("search budget must be positive")
    rng = _random.Random(seed)
    objs = _objectives(d, objective)
    cur = d
    cur_count = sum(o.count for o in objs)
    best, best_count = cur, cur_count
    trace: list[dict] = []
    plateau_run = 0
    temp = 1.0
    for step in range(budget):
        keys = sorted(c.key for c in cur.crossings())
        do_jitter = jitter and (not keys or rng.random() < 0.2)
        if do_jitter:
            v = rng.randrange(cur.graph.n)
            dx = Fraction(rng.randrange(-20, 21), 7)
            dy = Fraction(rng.randrange(-20, 21), 7)
            x, y = cur.positions[v]
            try:
                cand = cur.move_vertex(v, x + dx, y + dy)
            except DegeneracyError:
                continue
            cand_objs = _objectives(cand, objective)
            cand_count = sum(o.count for o in cand_objs)
            move = {"move": "jitter", "vertex": v,
                    "to": [str(x + dx), str(y + dy)]}
        elif keys:
            key = keys[rng.randrange(len(keys))]
            cand = cur.flip_crossing(key)
            cand_count = sum(o.recount_flip(cand, key) for o in objs)
            cand_objs = None
            move = {"move": "flip", "key": list(key)}
        else:
            break
        delta = cand_count - cur_count
        accept = delta < 0 or (delta == 0 and plateau_run < plateau)
        if not accept and annealing and delta > 0:
            accept = rng.random() < math.exp(-delta / max(temp, 1e-9))
        temp *= 0.97
        if not accept:
            continue
        if cand_objs is None:
            flip_key = tuple(move["key"])
            for o in objs:
                o.apply_flip(cand, flip_key)
        else:
            objs = cand_objs
        cur, cur_count = cand, cand_count
        plateau_run = 0 if delta < 0 else plateau_run + 1
        move.update({"step": step, "count": cur_count})
        trace.append(move)
        if cur_count < best_count:
            best, best_count = cur, cur_count
    bound = _proven_bound(d, objective)
    if best_count < bound:
        raise BoundViolationError(
            f"search reached {best_count} {objective}, below proven bound {bound}")
    return SearchResult(best, best_count, objective, seed, trace)
