"""Counting links and knots in drawn embeddings of complete partite graphs:
exact diagram geometry, linking-number and Conway-coefficient censuses,
published-table verification, and the constructions realizing the known
minimal counts."""

from .bounds import (
    K8_DISCREPANCY_NOTE,
    knot_bound_notes,
    knot_lower_bound,
    link_lower_bound,
    table2_entry,
    table3_entry,
    weave_link_upper_bound,
)
from .census import (
    BoundViolationError,
    CensusError,
    CensusReport,
    ClassifierViolationError,
    K33Pattern,
    PyramidType,
    classify_k33_pattern,
    classify_pyramid_type,
    conway_gordon_parity,
    count_census,
    count_knots,
    count_links,
    local_search_minimize,
    verify_against_tables,
)
from .diagram import DegeneracyError, Diagram, UnknownCrossingError, induced_diagram
from .embeddings import (
    LayoutRecipe,
    ManifestMismatchError,
    fan_embedding,
    layout_recipe,
    random_embedding,
    weave_embedding_n1111,
)
from .graphs import Graph, InvalidSpecError, PartiteGraph, build_complete_partite
from .invariants import a2_skein_oracle, conway_a2, gauss_diagram, linking_number

__all__ = [
    "BoundViolationError",
    "CensusError",
    "CensusReport",
    "ClassifierViolationError",
    "DegeneracyError",
    "Diagram",
    "Graph",
    "InvalidSpecError",
    "K33Pattern",
    "K8_DISCREPANCY_NOTE",
    "LayoutRecipe",
    "ManifestMismatchError",
    "PartiteGraph",
    "PyramidType",
    "UnknownCrossingError",
    "a2_skein_oracle",
    "build_complete_partite",
    "classify_k33_pattern",
    "classify_pyramid_type",
    "conway_a2",
    "conway_gordon_parity",
    "count_census",
    "count_knots",
    "count_links",
    "fan_embedding",
    "gauss_diagram",
    "induced_diagram",
    "knot_bound_notes",
    "knot_lower_bound",
    "layout_recipe",
    "link_lower_bound",
    "linking_number",
    "local_search_minimize",
    "random_embedding",
    "table2_entry",
    "table3_entry",
    "verify_against_tables",
    "weave_embedding_n1111",
    "weave_link_upper_bound",
]
