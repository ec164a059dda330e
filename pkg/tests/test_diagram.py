"""Diagram geometry: crossing computation, degeneracy detection, editing and
serialization."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import hopf_triangles, two_triangle_graph
from linknot.diagram import (
    DegeneracyError,
    Diagram,
    UnknownCrossingError,
    _dec,
    compute_crossings,
    induced_diagram,
    validate_general_position,
)
from linknot.graphs import Graph


def _x_graph() -> Diagram:
    """Two edges crossing once at the origin."""
    g = Graph(4, [(0, 1), (2, 3)])
    return Diagram(g, [(-1, -1), (1, 1), (-1, 1), (1, -1)])


def test_single_crossing_geometry_and_sign():
    d = _x_graph()
    (c,) = d.crossings()
    assert c.key == (0, 0, 1, 0)
    assert c.point == (Fraction(0), Fraction(0))
    assert c.over == "a"  # default: lower edge id over
    # edge a runs NE, edge b runs SE; cross(a, b) points down: base -1
    assert c.base == -1
    assert c.sign == 1  # a over flips the canonical-direction sign
    flipped = d.flip_crossing(c.key)
    assert flipped.crossings()[0].sign == -1


def test_flip_is_an_involution_and_raises_on_unknown_key():
    d = hopf_triangles()
    key = d.crossings()[0].key
    assert d.flip_crossing(key).flip_crossing(key) == d
    with pytest.raises(UnknownCrossingError):
        d.flip_crossing((9, 9, 9, 9))


@pytest.mark.parametrize(
    "positions,reason",
    [
        ([(0, 0), (2, 2), (1, 1), (3, 3)], "collinear overlap"),
        ([(0, 0), (2, 2), (2, 2), (3, 3)], "coincident"),
        ([(0, 0), (2, 2), (1, 1), (1, -1)], "vertex"),  # vertex 2 on edge 0
        ([(0, 0), (2, 2), (0, 2), (2, 2)], "coincident"),
    ],
)
def test_degenerate_positions_rejected(positions, reason):
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DegeneracyError):
        compute_crossings(Diagram(g, positions))


def test_triple_point_rejected():
    g = Graph(6, [(0, 1), (2, 3), (4, 5)])
    pos = [(-2, 0), (2, 0), (0, -2), (0, 2), (-2, -2), (2, 2)]
    with pytest.raises(DegeneracyError, match="triple point"):
        compute_crossings(Diagram(g, pos))


def test_validate_general_position_reports_instead_of_raising():
    g = Graph(4, [(0, 1), (2, 3)])
    bad = Diagram(g, [(0, 0), (2, 2), (1, 1), (1, -1)])
    assert validate_general_position(bad)
    assert validate_general_position(_x_graph()) == []


def test_move_vertex_validates_new_geometry():
    d = _x_graph()
    moved = d.move_vertex(1, 5, 5)
    assert len(moved.crossings()) == 1
    with pytest.raises(DegeneracyError):
        d.move_vertex(1, -1, 1)  # onto vertex 2


def test_json_round_trip_is_byte_identical():
    d = hopf_triangles()
    text = d.to_json()
    d2 = Diagram.from_json(text)
    assert d2 == d
    assert d2.to_json() == text


def test_json_round_trip_with_waypoints_and_fractions():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    d = Diagram(
        g,
        [(0, 0), (4, 0), (2, 3)],
        {(0, 2): [(Fraction(1, 7), Fraction(5, 3))]},
        meta={"label": "triangle"},
    )
    d2 = Diagram.from_json(d.to_json())
    assert d2 == d


def test_missing_over_rule_warns_and_defaults():
    d = _x_graph()
    obj = d.to_json_obj()
    obj["over_rules"] = []
    with pytest.warns(UserWarning, match="missing over rules"):
        d2 = Diagram.from_json_obj(obj)
    assert d2.crossings()[0].over == "a"


@given(st.integers(-10**6, 10**6), st.integers(1, 10**4))
def test_rational_serialization_round_trips(num, den):
    x = Fraction(num, den)
    assert Fraction(_dec(x)) == x


def test_induced_diagram_keeps_crossings_and_flags():
    d = hopf_triangles()
    full_keys = {c.key for c in d.crossings()}
    sub = induced_diagram(d, range(6))
    assert {c.key for c in sub.crossings()} == full_keys
    only_a = induced_diagram(d, [0, 1, 2])
    assert only_a.crossings() == []
    assert only_a.graph.edge_count == 3


def test_induced_diagram_preserves_over_flags():
    d = hopf_triangles()
    sub = induced_diagram(d, range(6))
    for c in d.crossings():
        assert sub.crossing_by_key(c.key).over == c.over


def test_two_triangles_cross_exactly_twice():
    g = two_triangle_graph()
    d = hopf_triangles()
    assert d.graph == g
    assert len(d.crossings()) == 2
