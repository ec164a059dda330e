"""Lower-bound calculators and the published reference tables."""

from __future__ import annotations

from math import ceil, comb

import pytest

from linknot.bounds import (
    K8_DISCREPANCY_NOTE,
    TABLE4_LOWER,
    TABLE4_UPPER,
    knot_bound_notes,
    knot_lower_bound,
    kn1111_link_lower_bound,
    link_lower_bound,
    table2_entry,
    table3_entry,
    weave_link_upper_bound,
)

# first six rows of the published link-minimum table
TABLE2_FIRST_SIX = {
    (5, 4): 10,
    (5, 3, 1): 20,
    (5, 2, 2): 10,
    (5, 2, 1, 1): 20,
    (5, 1, 1, 1, 1): 34,
    (4, 4, 1): 74,
}

# published knot-minimum lower bounds (per the covering-argument proofs)
KNOT_LOWER = {
    (3, 3, 1, 1): 1,
    (3, 2, 1, 1, 1): 1,
    (3, 1, 1, 1, 1, 1): 3,
    (2, 2, 1, 1, 1, 1): 2,
    (2, 1, 1, 1, 1, 1, 1): 8,
    (1, 1, 1, 1, 1, 1, 1, 1): 15,
}


@pytest.mark.parametrize("parts,expected", sorted(TABLE2_FIRST_SIX.items()))
def test_link_bound_table2_rows(parts, expected):
    assert link_lower_bound(list(parts)) == expected
    assert table2_entry(list(parts))["exact"] == expected


@pytest.mark.parametrize("parts,expected", sorted(KNOT_LOWER.items()))
def test_knot_bound_table3_rows(parts, expected):
    assert knot_lower_bound(list(parts)) == expected


def test_k8_discrepancy_is_flagged():
    assert knot_lower_bound([1] * 8) == 15
    assert knot_bound_notes([1] * 8) == [K8_DISCREPANCY_NOTE]
    assert "18" in K8_DISCREPANCY_NOTE and "15" in K8_DISCREPANCY_NOTE
    assert table3_entry([1] * 8)["note"] == K8_DISCREPANCY_NOTE
    assert knot_bound_notes([3, 3, 1, 1]) == []


@pytest.mark.parametrize("n", range(4, 9))
def test_link_bound_family_formulas(n):
    assert link_lower_bound([n, 4]) == 2 * comb(n, 4)
    assert link_lower_bound([n, 2, 2]) == 2 * comb(n, 4)
    assert link_lower_bound([n, 3, 1]) == comb(n, 3) + 2 * comb(n, 4)
    assert link_lower_bound([n, 2, 1, 1]) == comb(n, 3) + 2 * comb(n, 4)


def test_complete_graph_shorthand():
    # [n] is shorthand for n singleton parts
    assert link_lower_bound([6]) == link_lower_bound([1] * 6) == 1
    assert knot_lower_bound([8]) == 15


def test_no_bound_returns_none_not_zero():
    assert link_lower_bound([2, 2]) is None
    assert link_lower_bound([3, 3]) is None
    assert knot_lower_bound([3, 3]) is None


def test_bound_search_uses_contained_families():
    # K_{4,4,2} contains K_{4,4,1}: the 74 bound propagates upward
    assert link_lower_bound([4, 4, 2]) >= 74
    # K_9 contains K_{4,4,1} by merging parts
    assert link_lower_bound([1] * 9) >= 74


@pytest.mark.parametrize("n", range(3, 13))
def test_table4_rows(n):
    assert TABLE4_LOWER[n] == kn1111_link_lower_bound(n)
    assert TABLE4_UPPER[n] == weave_link_upper_bound(n)
    assert kn1111_link_lower_bound(n) == (
        2 * comb(n, 4) + 2 * comb(n, 3) + ceil((n * n - n) / 6))
    assert weave_link_upper_bound(n) == (
        2 * comb(n, 4) + 2 * comb(n, 3) + ceil((n * n - 2 * n) / 4))
    assert TABLE4_LOWER[n] <= TABLE4_UPPER[n]


def test_table4_published_values():
    assert [TABLE4_LOWER[n] for n in range(3, 13)] == [
        3, 12, 34, 75, 147, 262, 432, 675, 1009, 1452]
    assert [TABLE4_UPPER[n] for n in range(3, 13)] == [
        3, 12, 34, 76, 149, 264, 436, 680, 1015, 1460]
