"""Knot diagrams from braid words.

``braid_closure_diagram`` draws the closure of a braid word as a polyline
knot diagram on a triangle graph, with over/under flags set from the braid
generators.  Used to produce diagrams of known knots (trefoil, figure-eight)
and random realizable knot diagrams for cross-checking the invariant code.

A braid word on ``strands`` strands is a sequence of nonzero ints: ``+i``
crosses the strand in position i over the strand in position i+1 (positions
are 1-based), ``-i`` crosses it under.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .diagram import Diagram
from .graphs import Graph


def braid_permutation(word: Sequence[int], strands: int) -> list[int]:
    """Final position of each starting strand after the braid."""
    perm = list(range(strands))
    for g in word:
        i = abs(g) - 1
        if not (0 <= i < strands - 1):
            raise ValueError(f"generator {g} out of range for {strands} strands")
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return perm


def closure_is_knot(word: Sequence[int], strands: int) -> bool:
    """True iff the braid closure has a single component."""
    perm = braid_permutation(word, strands)
    seen = {0}
    v = perm[0]
    while v not in seen:
        seen.add(v)
        v = perm[v]
    return len(seen) == strands


def _closure_polyline(word: Sequence[int], strands: int):
    """Closed polyline of the braid closure plus the over-strand midpoints.

    Strand positions sit at y = 1..strands; generator t occupies x in
    [2t+2, 2t+4].  The return arc for the strand exiting at position p nests
    above the braid with horizontal offset strands-p on both sides and top
    height 2*strands+1-p; offsets and tops both decrease with p, which makes
    the arcs pairwise disjoint and clear of the exit/entry stubs.  The only
    crossings of the closed curve are the braid crossings at (2t+3, i+3/2).
    """
    W = 2 * len(word) + 2  # right edge of the braid block
    strand_pts: list[list[tuple[Fraction, Fraction]]] = [
        [(Fraction(0), Fraction(i + 1))] for i in range(strands)
    ]
    at = list(range(strands))  # at[pos] = strand currently in position pos
    over_mids: list[tuple[tuple[Fraction, Fraction], int]] = []
    for t, g in enumerate(word):
        i = abs(g) - 1
        x0, x1 = Fraction(2 * t + 2), Fraction(2 * t + 4)
        lo, hi = at[i], at[i + 1]
        strand_pts[lo].append((x0, Fraction(i + 1)))
        strand_pts[lo].append((x1, Fraction(i + 2)))
        strand_pts[hi].append((x0, Fraction(i + 2)))
        strand_pts[hi].append((x1, Fraction(i + 1)))
        mid = (x0 + 1, Fraction(2 * i + 3, 2))
        over_mids.append((mid, lo if g > 0 else hi))
        at[i], at[i + 1] = hi, lo
    for pos, s in enumerate(at):
        strand_pts[s].append((Fraction(W), Fraction(pos + 1)))
    # stitch strands into one closed curve via the nested return arcs
    pts: list[tuple[Fraction, Fraction]] = []
    start = 0
    s = start
    while True:
        for p in strand_pts[s]:
            if not pts or pts[-1] != p:
                pts.append(p)
        p = at.index(s)  # exit position; closure re-enters at the same position
        off = Fraction(strands - p)
        top = Fraction(2 * strands + 1 - p)
        pts.append((Fraction(W) + off, Fraction(p + 1)))
        pts.append((Fraction(W) + off, top))
        pts.append((-off, top))
        pts.append((-off, Fraction(p + 1)))
        if p == start:
            break
        pts.append((Fraction(0), Fraction(p + 1)))
        s = p
    over_points = [mid for mid, _ in over_mids]
    return pts, over_points


def braid_closure_diagram(word: Sequence[int], strands: int) -> Diagram:
    """Diagram of the braid closure, which must be a knot (one component).

    The knot is drawn on a cycle graph with one vertex per polyline corner,
    so every edge is a single straight segment; ``closure_cycle`` gives the
    cycle that traverses the whole curve."""
    word = list(word)
    if not closure_is_knot(word, strands):
        raise ValueError("braid closure is not a knot (multiple components)")
    pts, over_points = _closure_polyline(word, strands)
    m = len(pts)
    g = Graph(m, [(i, (i + 1) % m) for i in range(m)])
    d = Diagram(g, pts, meta={"braid": word, "strands": strands})
    # the over strand of a positive generator runs bottom-left to top-right
    # (slope +1); of a negative generator, top-left to bottom-right
    over_set = set(over_points)
    rules = {}
    for c in d.crossings():
        if c.point not in over_set:
            raise RuntimeError(f"unexpected crossing at {c.point}")
        gsign = 1 if word[over_points.index(c.point)] > 0 else -1
        a1, a2 = d.polyline(c.key[0])
        slope_a_up = ((a2[1] - a1[1]) > 0) == ((a2[0] - a1[0]) > 0)
        rules[c.key] = "a" if slope_a_up == (gsign > 0) else "b"
    return d.with_over_rules(rules)


def closure_cycle(d: Diagram) -> tuple[int, ...]:
    """The cycle traversing the whole closed curve of a braid closure diagram."""
    return tuple(range(d.graph.n))
