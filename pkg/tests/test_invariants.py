"""Linking numbers, Gauss diagrams, the Conway z^2 coefficient and its
skein-resolution oracle, and loop-sum arithmetic."""

from __future__ import annotations

import random

import pytest

from conftest import hopf_triangles
from linknot.audits import random_knot_gauss
from linknot.braids import braid_closure_diagram, closure_cycle, closure_is_knot
from linknot.embeddings import random_embedding
from linknot.graphs import build_complete_partite
from linknot.invariants import (
    CycleSumError,
    GaussDiagram,
    LinkingError,
    a2_skein_from_gauss,
    a2_skein_oracle,
    conway_a2,
    cycle_sum,
    gauss_diagram,
    linking_number,
)

TREFOIL = ([1, 1, 1], 2)
FIGURE_EIGHT = ([1, -2, 1, -2], 3)


def test_hopf_clasp_has_linking_number_one():
    d = hopf_triangles(True)
    a, b = (0, 1, 2), (3, 4, 5)
    assert abs(linking_number(d, a, b)) == 1
    # reversing one cycle's orientation flips the sign
    assert linking_number(d, a, b) == -linking_number(d, a[::-1], b)
    # the unclasped variant is unlinked
    assert linking_number(hopf_triangles(False), a, b) == 0


def test_linking_number_rejects_shared_vertices():
    d = hopf_triangles()
    with pytest.raises(LinkingError):
        linking_number(d, (0, 1, 2), (2, 4, 5))


def test_linking_number_is_symmetric():
    g = build_complete_partite([1] * 6)
    for seed in range(5):
        d = random_embedding(g, seed)
        a, b = (0, 1, 2), (3, 4, 5)
        assert linking_number(d, a, b) == linking_number(d, b, a)


def test_trefoil_and_figure_eight_a2():
    for (word, strands), expected in [(TREFOIL, 1), (FIGURE_EIGHT, -1)]:
        d = braid_closure_diagram(word, strands)
        g = gauss_diagram(d, closure_cycle(d))
        assert conway_a2(g) == expected
        assert a2_skein_from_gauss(g) == expected


def test_unknot_with_kinks_has_zero_a2():
    # one kink, and two cancelling kinks on three strands
    for word, strands in [([1], 2), ([1, -2], 3), ([1, 1, -1], 2)]:
        assert closure_is_knot(word, strands)
        d = braid_closure_diagram(word, strands)
        g = gauss_diagram(d, closure_cycle(d))
        assert conway_a2(g) == 0
        assert a2_skein_from_gauss(g) == 0


def test_a2_is_base_point_invariant():
    rng = random.Random(4)
    for _ in range(25):
        g = random_knot_gauss(rng)
        vals = {conway_a2(g.rotated(k)) for k in range(len(g.events))}
        assert len(vals) == 1


def test_a2_matches_skein_oracle_on_random_knots():
    rng = random.Random(11)
    for _ in range(200):
        g = random_knot_gauss(rng)
        assert g.crossing_count <= 10
        assert conway_a2(g) == a2_skein_from_gauss(g)


def test_a2_skein_oracle_on_diagram_cycles():
    d = braid_closure_diagram(*TREFOIL)
    assert a2_skein_oracle(d, closure_cycle(d)) == 1


def test_skein_oracle_refuses_oversized_diagrams():
    events = tuple((i, b, 1) for i in range(13) for b in (True, False))
    with pytest.raises(ValueError, match="exceeds oracle cap"):
        a2_skein_from_gauss(GaussDiagram(events))


def test_gauss_diagram_validation():
    with pytest.raises(ValueError, match="appears 1 times"):
        GaussDiagram(((0, True, 1),))
    with pytest.raises(ValueError, match="inconsistent signs"):
        GaussDiagram(((0, True, 1), (0, False, -1)))
    with pytest.raises(ValueError, match="over .or under. at both"):
        GaussDiagram(((0, True, 1), (0, True, 1)))


def test_cycle_sum_additivity_of_linking_numbers():
    g = build_complete_partite([1] * 7)
    c, e = (0, 1, 2), (0, 2, 3)
    s = (4, 5, 6)
    for seed in range(10):
        d = random_embedding(g, seed)
        seq, oc, oe = cycle_sum(c, e)
        assert set(seq) == {0, 1, 2, 3}
        assert linking_number(d, s, seq) == (
            oc * linking_number(d, s, c) + oe * linking_number(d, s, e))


def test_cycle_sum_rejects_bad_intersections():
    with pytest.raises(CycleSumError):
        cycle_sum((0, 1, 2), (3, 4, 5))  # disjoint
    with pytest.raises(CycleSumError):
        cycle_sum((0, 1, 2, 3), (0, 1, 2, 3))  # identical
    with pytest.raises(CycleSumError):
        # shared edges (0,1) and (2,3) are two separate runs
        cycle_sum((0, 1, 2, 3), (0, 1, 4, 2, 3, 5))
