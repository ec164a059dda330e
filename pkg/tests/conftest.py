"""Shared fixtures and construction helpers for the test suite."""

from __future__ import annotations

import pytest

from linknot.diagram import Diagram
from linknot.graphs import Graph


def cycle_graph(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def two_triangle_graph() -> Graph:
    """Two disjoint triangles: vertices 0-2 and 3-5."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def hopf_triangles(clasped: bool = True) -> Diagram:
    """Two triangles drawn overlapping with exactly two crossings: a clasp
    with linking number +-1 when ``clasped``, unlinked (one triangle fully
    over) otherwise."""
    g = two_triangle_graph()
    pos = [(0, 0), (8, 0), (4, 6), (4, -2), (12, -2), (8, 4)]
    d = Diagram(g, pos)
    keys = sorted(c.key for c in d.crossings())
    assert len(keys) == 2, keys
    rules = {keys[0]: "a", keys[1]: "b" if clasped else "a"}
    return d.with_over_rules(rules)


@pytest.fixture
def hopf() -> Diagram:
    return hopf_triangles(True)
