"""Abstract graphs: complete partite construction, cycle enumeration,
disjoint pair listing and the subgraph censuses used by the lower-bound
calculators.

Vertices are integers 0..n-1.  A cycle is a tuple of vertices in canonical
form: the minimum vertex comes first and the second entry is the smaller of
its two neighbours, so each unoriented simple cycle has exactly one
representative.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

Cycle = tuple[int, ...]
Edge = tuple[int, int]


class InvalidSpecError(ValueError):
    """Raised for malformed graph specifications (empty or non-positive parts)."""


class Graph:
    """Simple undirected graph on vertices 0..n-1 with an explicit edge list."""

    def __init__(self, n: int, edges: Iterable[Edge]):
        self.n = n
        es = set()
        for u, v in edges:
            if u == v:
                raise InvalidSpecError(f"loop edge at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidSpecError(f"edge ({u},{v}) out of range for n={n}")
            es.add((min(u, v), max(u, v)))
        self.edges: tuple[Edge, ...] = tuple(sorted(es))
        self.edge_index: dict[Edge, int] = {e: i for i, e in enumerate(self.edges)}
        self._adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in self.edges:
            self._adj[u].add(v)
            self._adj[v].add(u)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: int) -> set[int]:
        return self._adj[v]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


class PartiteGraph(Graph):
    """Complete multipartite graph: edge iff endpoints lie in different parts.

    Vertex ids are assigned part by part in declaration order, so parts
    ``[3,3,1]`` gives vertices 0-2, 3-5 and 6.
    """

    def __init__(self, parts: Sequence[int]):
        if not parts:
            raise InvalidSpecError("parts list is empty")
        if any(p < 1 for p in parts):
            raise InvalidSpecError(f"part sizes must be positive: {list(parts)}")
        self.parts = tuple(int(p) for p in parts)
        n = sum(self.parts)
        self.part_of: tuple[int, ...] = tuple(
            i for i, p in enumerate(self.parts) for _ in range(p)
        )
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if self.part_of[u] != self.part_of[v]
        ]
        super().__init__(n, edges)

    def part_vertices(self, i: int) -> list[int]:
        lo = sum(self.parts[:i])
        return list(range(lo, lo + self.parts[i]))

    def __repr__(self):
        return f"PartiteGraph({list(self.parts)})"


def build_complete_partite(parts: Sequence[int]) -> PartiteGraph:
    """Build the complete partite graph K_{parts}."""
    return PartiteGraph(parts)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; b's vertices are shifted by a.n."""
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    g = Graph(a.n + b.n, edges)
    return g


def canonical_cycle(seq: Sequence[int]) -> Cycle:
    """Canonical representative of an unoriented cycle given as a vertex sequence."""
    if len(seq) < 3 or len(set(seq)) != len(seq):
        raise ValueError(f"not a simple cycle: {list(seq)}")
    k = len(seq)
    i = min(range(k), key=lambda j: seq[j])
    nxt, prv = seq[(i + 1) % k], seq[(i - 1) % k]
    if nxt <= prv:
        out = tuple(seq[(i + j) % k] for j in range(k))
    else:
        out = tuple(seq[(i - j) % k] for j in range(k))
    return out


def cycle_edges(c: Cycle) -> list[Edge]:
    """Undirected edges of the cycle, endpoints sorted."""
    return [
        (min(c[i], c[(i + 1) % len(c)]), max(c[i], c[(i + 1) % len(c)]))
        for i in range(len(c))
    ]


def enumerate_cycles(g: Graph, min_len: int = 3, max_len: int | None = None) -> list[Cycle]:
    """All simple cycles of g with min_len <= length <= max_len, in canonical
    form, sorted lexicographically.

    Each cycle is rooted at its minimum vertex; the DFS only extends through
    vertices larger than the root, and direction is fixed by requiring the
    second vertex to be smaller than the last, so every cycle is emitted once.
    """
    if max_len is None:
        max_len = g.n
    if not (3 <= min_len <= max_len <= g.n):
        raise ValueError(f"invalid length range [{min_len},{max_len}] for n={g.n}")
    out: list[Cycle] = []
    for root in range(g.n):
        path = [root]
        on_path = {root}

        def extend():
            v = path[-1]
            for w in sorted(g.neighbors(v)):
                if w == root and len(path) >= min_len and path[1] < path[-1]:
                    out.append(tuple(path))
                if w <= root or w in on_path or len(path) >= max_len:
                    continue
                path.append(w)
                on_path.add(w)
                extend()
                path.pop()
                on_path.remove(w)

        extend()
    out.sort()
    return out


def cycle_mask(c: Cycle) -> int:
    m = 0
    for v in c:
        m |= 1 << v
    return m


def disjoint_cycle_pairs(cycles: Sequence[Cycle]) -> list[tuple[Cycle, Cycle]]:
    """Unordered vertex-disjoint pairs; the shorter (then lexicographically
    smaller) cycle first."""
    masks = [cycle_mask(c) for c in cycles]
    pairs = []
    for i in range(len(cycles)):
        mi = masks[i]
        ci = cycles[i]
        for j in range(i + 1, len(cycles)):
            if mi & masks[j]:
                continue
            cj = cycles[j]
            if (len(ci), ci) <= (len(cj), cj):
                pairs.append((ci, cj))
            else:
                pairs.append((cj, ci))
    return pairs


class SubgraphHit:
    """A placement of a pattern inside a host graph.

    For partite patterns, ``assignment`` is a tuple of vertex tuples, one per
    pattern part.  For H8 hits the roles are exposed as top / middles /
    bottoms.
    """

    __slots__ = ("pattern", "assignment")

    def __init__(self, pattern, assignment):
        self.pattern = pattern
        self.assignment = assignment

    def vertices(self) -> set[int]:
        return {v for group in self.assignment for v in group}

    def __eq__(self, other):
        return (
            isinstance(other, SubgraphHit)
            and self.pattern == other.pattern
            and self.assignment == other.assignment
        )

    def __hash__(self):
        return hash((self.pattern, self.assignment))

    def __repr__(self):
        return f"SubgraphHit({self.pattern}, {self.assignment})"


def count_partite_subgraphs(
    g: PartiteGraph, pattern: Sequence[int]
) -> tuple[int, list[SubgraphHit]]:
    """Count placements of the complete partite graph K_{pattern} inside g.

    A placement is a choice of disjoint vertex sets, one per pattern part,
    such that every cross edge of the pattern is present in g.  Since the
    missing edges of g are exactly the within-part pairs, this holds iff no
    host part is split across two pattern parts.  Pattern parts of equal size
    are unordered (placements are deduplicated as sets of sets).
    """
    pattern = tuple(int(p) for p in pattern)
    if sum(pattern) > g.n:
        return 0, []
    k = len(pattern)
    host_parts = [g.part_vertices(i) for i in range(len(g.parts))]
    hits: set[frozenset[frozenset[int]]] = set()

    # slots[j] accumulates vertices for pattern part j; each host part
    # contributes to at most one slot.
    def assign(hp_idx: int, slots: list[list[int]]):
        if hp_idx == len(host_parts):
            if all(len(slots[j]) == pattern[j] for j in range(k)):
                hits.add(frozenset(frozenset(s) for s in slots))
            return
        # prune: remaining supply must cover remaining demand
        remaining = sum(len(p) for p in host_parts[hp_idx:])
        deficit = sum(pattern[j] - len(slots[j]) for j in range(k))
        if deficit > remaining:
            return
        part = host_parts[hp_idx]
        assign(hp_idx + 1, slots)  # contribute nothing
        for j in range(k):
            need = pattern[j] - len(slots[j])
            for take in range(1, min(need, len(part)) + 1):
                for subset in combinations(part, take):
                    slots[j].extend(subset)
                    assign(hp_idx + 1, slots)
                    del slots[j][-take:]

    assign(0, [[] for _ in range(k)])
    out = [
        SubgraphHit(pattern, tuple(sorted((tuple(sorted(s)) for s in h), key=lambda t: (len(t), t))))
        for h in hits
    ]
    out.sort(key=lambda h: h.assignment)
    return len(out), out


H8_PATTERN = "H8"


def enumerate_h8_subgraphs(g: Graph) -> list[SubgraphHit]:
    """All placements of H8 (the Delta-Y child of K7) in g.

    Roles: one top vertex adjacent to the three middles, four bottoms
    mutually adjacent and adjacent to every middle.  Only edge presence is
    required (H8 is taken as a subgraph, not an induced one); middles and
    bottoms are unordered.  Hits are returned as (top, middles, bottoms).
    """
    hits = []
    if g.n < 8:
        return hits
    for top in range(g.n):
        nbrs = sorted(g.neighbors(top))
        for mids in combinations(nbrs, 3):
            rest = [v for v in range(g.n) if v != top and v not in mids]
            for bots in combinations(rest, 4):
                if all(g.adjacent(u, v) for u, v in combinations(bots, 2)) and all(
                    g.adjacent(m, b) for m in mids for b in bots
                ):
                    hits.append(SubgraphHit(H8_PATTERN, ((top,), mids, bots)))
    return hits
