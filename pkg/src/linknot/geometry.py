"""Exact planar predicates for polyline diagrams.

All coordinates are rationals; predicates are computed with integer
arithmetic after scaling, so crossing signs are never corrupted by
floating-point ties.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

Point = tuple[Fraction, Fraction]


def P(x, y) -> Point:
    """Build an exact point; accepts ints, Fractions or decimal strings."""
    return (Fraction(x), Fraction(y))


def orient(a, b, c) -> int:
    """Sign of the cross product (b-a) x (c-a): +1 ccw, -1 cw, 0 collinear."""
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def cross_sign(u, v) -> int:
    w = u[0] * v[1] - u[1] * v[0]
    return (w > 0) - (w < 0)


def on_segment(p, a, b) -> bool:
    """True iff p lies on the closed segment ab (assumes collinear not required)."""
    if orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


class SegmentContact:
    """Classified contact between two segments."""

    NONE = "none"
    PROPER = "proper"          # transverse interior crossing
    ENDPOINT = "endpoint"      # touch at an endpoint of at least one segment
    OVERLAP = "overlap"        # collinear with overlapping interiors

    __slots__ = ("kind", "t", "u", "point")

    def __init__(self, kind, t=None, u=None, point=None):
        self.kind = kind
        self.t = t
        self.u = u
        self.point = point


def segment_contact(a1, a2, b1, b2) -> SegmentContact:
    """Exact classification of the contact between segments a1a2 and b1b2.

    For a proper crossing, t and u are the parameters along each segment and
    point is the intersection.
    """
    d1 = orient(b1, b2, a1)
    d2 = orient(b1, b2, a2)
    d3 = orient(a1, a2, b1)
    d4 = orient(a1, a2, b2)
    if d1 != d2 and d3 != d4 and 0 not in (d1, d2, d3, d4):
        # transverse interior crossing
        denom = (a2[0] - a1[0]) * (b2[1] - b1[1]) - (a2[1] - a1[1]) * (b2[0] - b1[0])
        tnum = (b1[0] - a1[0]) * (b2[1] - b1[1]) - (b1[1] - a1[1]) * (b2[0] - b1[0])
        unum = (b1[0] - a1[0]) * (a2[1] - a1[1]) - (b1[1] - a1[1]) * (a2[0] - a1[0])
        t = Fraction(tnum, denom)
        u = Fraction(unum, denom)
        pt = (a1[0] + t * (a2[0] - a1[0]), a1[1] + t * (a2[1] - a1[1]))
        return SegmentContact(SegmentContact.PROPER, t, u, pt)
    if d1 == d2 == 0:  # collinear
        lo_a, hi_a = sorted([a1, a2])
        lo_b, hi_b = sorted([b1, b2])
        if hi_a < lo_b or hi_b < lo_a:
            return SegmentContact(SegmentContact.NONE)
        if hi_a == lo_b or hi_b == lo_a:
            pt = hi_a if hi_a == lo_b else hi_b
            return SegmentContact(SegmentContact.ENDPOINT, point=pt)
        return SegmentContact(SegmentContact.OVERLAP)
    # some orientation is zero: an endpoint of one segment lies on the other,
    # or the segments miss entirely
    for p, other in ((a1, (b1, b2)), (a2, (b1, b2)), (b1, (a1, a2)), (b2, (a1, a2))):
        if on_segment(p, *other):
            return SegmentContact(SegmentContact.ENDPOINT, point=p)
    return SegmentContact(SegmentContact.NONE)


def bbox_disjoint(a1, a2, b1, b2) -> bool:
    return (
        max(a1[0], a2[0]) < min(b1[0], b2[0])
        or max(b1[0], b2[0]) < min(a1[0], a2[0])
        or max(a1[1], a2[1]) < min(b1[1], b2[1])
        or max(b1[1], b2[1]) < min(a1[1], a2[1])
    )


def scale_to_integers(points: list[Point]) -> list[tuple[int, int]]:
    """Scale a point set by the lcm of denominators so all coordinates are int."""
    denoms = [c.denominator for p in points for c in p]
    m = lcm(*denoms) if denoms else 1
    return [(int(p[0] * m), int(p[1] * m)) for p in points]
