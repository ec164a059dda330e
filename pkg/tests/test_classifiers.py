"""Odd-linking pattern classifiers for K_{3,3} and the pyramid K_{2,2,1}."""

from __future__ import annotations

import pytest

from conftest import cycle_graph
from linknot.census import (
    classify_k33_pattern,
    classify_pyramid_type,
    CensusError,
)
from linknot.diagram import Diagram
from linknot.embeddings import random_embedding
from linknot.graphs import Graph, build_complete_partite, disjoint_union
from linknot.invariants import linking_number

K33 = build_complete_partite([3, 3])
PYRAMID = build_complete_partite([2, 2, 1])

# All 9 squares and 6 hexagons of K_{3,3} in a fixed labeling (one part
# 0,1,2, the other 3,4,5); index 0 unused so subscripts match the signed
# relations below.
SQUARES = [None, (0, 3, 1, 4), (0, 3, 1, 5), (0, 3, 2, 4), (0, 3, 2, 5),
           (0, 4, 1, 5), (0, 4, 2, 5), (1, 3, 2, 4), (1, 3, 2, 5),
           (1, 4, 2, 5)]
HEXAGONS = [None, (0, 3, 1, 4, 2, 5), (0, 3, 1, 5, 2, 4), (0, 4, 1, 3, 2, 5),
            (0, 4, 1, 5, 2, 3), (0, 5, 1, 3, 2, 4), (0, 5, 1, 4, 2, 3)]

# Signed linear relations tying the linking numbers of a disjoint loop with
# the squares (s) and hexagons (h) of K_{3,3}; every residual must vanish for
# every drawing.  They force the odd-pattern classification: an oddly linked
# loop meets exactly 8 odd cycles, split 4 squares + 4 hexagons or
# 6 squares + 2 hexagons.
RELATIONS = [
    lambda s, h: 3 * s[1] + 2 * h[3] + 2 * h[4] + h[5] + h[6],
    lambda s, h: 3 * s[2] + h[3] + h[4] + 2 * h[5] + 2 * h[6],
    lambda s, h: 3 * s[3] + h[3] + h[4] - h[5] + 2 * h[6],
    lambda s, h: 3 * s[4] - h[3] + 2 * h[4] + h[5] + h[6],
    lambda s, h: 3 * s[5] - h[3] - h[4] + h[5] + h[6],
    lambda s, h: 3 * s[6] - 2 * h[3] + h[4] + 2 * h[5] - h[6],
    lambda s, h: 3 * s[7] - h[3] - h[4] - 2 * h[5] + h[6],
    lambda s, h: 3 * s[8] - 2 * h[3] + h[4] - h[5] - h[6],
    lambda s, h: 3 * s[9] - h[3] + 2 * h[4] + h[5] - 2 * h[6],
    lambda s, h: h[1] + h[4] + h[5],
    lambda s, h: h[2] + h[3] + h[6],
]


def _k33_with_quad(clasped: bool) -> Diagram:
    """K_{3,3} drawn on two horizontal rows plus a small quad whose only
    inter-component crossings are two passes over/under the edge (0, 3)."""
    g = disjoint_union(K33, cycle_graph(4))
    pos = [(0, 10), (9, 11), (23, 10), (0, 0), (12, -1), (21, 0),
           # quad straddling the vertical edge (0,3) at mid-height
           (-1, 4.5), (1, 4.5), (1, 5.5), (-1, 5.5)]
    d = Diagram(g, pos)
    e03 = g.edge_index[(0, 3)]
    rules = {}
    toggle = "a"
    for c in sorted(d.crossings(), key=lambda c: c.key):
        ea, _, eb, _ = c.key
        if e03 in (ea, eb) and (g.edges[ea][0] >= 6 or g.edges[eb][0] >= 6):
            # the two clasp crossings: alternate over/under when clasped
            rules[c.key] = toggle
            if clasped:
                toggle = "b"
        else:
            rules[c.key] = "a"
    return d.with_over_rules(rules)


def test_k33_clasp_is_a_4_plus_4_pattern():
    d = _k33_with_quad(clasped=True)
    loop = (6, 7, 8, 9)
    # only the cycles through edge (0,3) can be oddly linked here
    assert abs(linking_number(d, loop, (0, 3, 1, 4))) == 1
    pattern = classify_k33_pattern(d)
    assert pattern.kind == "4+4"
    assert len(pattern.odd_squares) == 4
    assert len(pattern.odd_hexagons) == 4
    for sq in pattern.odd_squares:
        assert 0 in sq and 3 in sq


def test_k33_unclasped_quad_links_nothing():
    pattern = classify_k33_pattern(_k33_with_quad(clasped=False))
    assert pattern.kind == "none"
    assert pattern.odd_squares == () and pattern.odd_hexagons == ()


def test_k33_classifier_validates_graph_shape():
    with pytest.raises(CensusError):
        classify_k33_pattern(random_embedding(build_complete_partite([3, 3]), 0))
    # two loops instead of one
    g = disjoint_union(disjoint_union(K33, cycle_graph(3)), cycle_graph(3))
    with pytest.raises(CensusError):
        classify_k33_pattern(random_embedding(g, 0))


def test_k33_linking_relations_hold_on_random_drawings():
    g = disjoint_union(K33, cycle_graph(4))
    loop = (6, 7, 8, 9)
    for seed in range(30):
        d = random_embedding(g, seed)
        s = [None] + [linking_number(d, loop, c) for c in SQUARES[1:]]
        h = [None] + [linking_number(d, loop, c) for c in HEXAGONS[1:]]
        for rel in RELATIONS:
            assert rel(s, h) == 0


@pytest.mark.parametrize("loop_len", [3, 4, 5])
def test_k33_random_instances_classify_cleanly(loop_len):
    g = disjoint_union(K33, cycle_graph(loop_len))
    kinds = set()
    for seed in range(80):
        pattern = classify_k33_pattern(random_embedding(g, seed))
        kinds.add(pattern.kind)
        if pattern.kind != "none":
            assert len(pattern.odd_squares) + len(pattern.odd_hexagons) == 8
    assert "none" in kinds  # far-apart placements occur
    assert kinds - {"none"}  # and genuinely linked ones too


def test_pyramid_split_components_have_no_type():
    g = disjoint_union(PYRAMID, cycle_graph(3))
    pos = [(0, 0), (4, 4), (4, 0), (0, 4), (2, 2),
           (100, 0), (104, 0), (102, 3)]
    d = Diagram(g, pos)
    d = d.with_over_rules({c.key: "a" for c in d.crossings()})
    assert classify_pyramid_type(d) is None


def test_pyramid_random_instances_classify_cleanly():
    g = disjoint_union(PYRAMID, cycle_graph(4))
    seen = set()
    for seed in range(300):
        t = classify_pyramid_type(random_embedding(g, seed))
        if t is None:
            continue
        seen.add(t.type_id)
        assert t.odd_total >= 6
        assert (t.odd_triangles, t.odd_squares, t.odd_pentagons) in {
            (1, 3, 3), (2, 2, 2), (2, 4, 2), (4, 0, 4), (3, 3, 1), (3, 5, 1)}
        if t.type_id in (1, 5, 6):
            assert t.base_square_odd
    assert seen  # at least one oddly-linked instance in 300 drawings


def test_pyramid_classifier_validates_graph_shape():
    with pytest.raises(CensusError):
        classify_pyramid_type(random_embedding(PYRAMID, 0))
