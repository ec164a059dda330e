"""Seeded property-audit campaigns over random diagrams: parity theorems on
complete graphs, the two linking-pattern classifiers, and the a2 oracle
cross-check.  Each audit runs N independent seeded trials and reports every
failure; campaigns are deterministic given (family, trials, seed)."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .braids import braid_closure_diagram, closure_cycle, closure_is_knot
from .census import (
    CensusError,
    classify_k33_pattern,
    classify_pyramid_type,
    conway_gordon_parity,
)
from .embeddings import random_embedding
from .graphs import Graph, build_complete_partite, disjoint_union
from .invariants import a2_skein_from_gauss, conway_a2, gauss_diagram

AUDIT_FAMILIES = (
    "k6-parity",
    "k7-parity",
    "k33-pattern",
    "pyramid-pattern",
    "a2-oracle",
)


@dataclass
class AuditResult:
    family: str
    trials: int
    seed: int
    failures: list[str] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> dict:
        return {"family": self.family, "trials": self.trials, "seed": self.seed,
                "ok": self.ok, "failures": self.failures, "stats": self.stats}


def cycle_graph(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def _audit_parity(n: int, trials: int, seed: int) -> AuditResult:
    result = AuditResult(f"k{n}-parity", trials, seed)
    g = build_complete_partite([1] * n)
    for i in range(trials):
        d = random_embedding(g, seed + i)
        rep = conway_gordon_parity(d)
        if rep["parity"] != 1:
            result.failures.append(f"seed {seed + i}: parity {rep['parity']}")
    result.stats["expected_parity"] = 1
    return result


def _audit_k33(trials: int, seed: int) -> AuditResult:
    result = AuditResult("k33-pattern", trials, seed)
    rng = random.Random(seed)
    base = build_complete_partite([3, 3])
    kinds = {"none": 0, "4+4": 0, "6+2": 0}
    for i in range(trials):
        g = disjoint_union(base, cycle_graph(rng.randint(3, 6)))
        d = random_embedding(g, seed + i)
        try:
            kinds[classify_k33_pattern(d).kind] += 1
        except CensusError as e:
            result.failures.append(f"seed {seed + i}: {e}")
    result.stats = kinds
    return result


def _audit_pyramid(trials: int, seed: int) -> AuditResult:
    result = AuditResult("pyramid-pattern", trials, seed)
    rng = random.Random(seed)
    base = build_complete_partite([2, 2, 1])
    types = {k: 0 for k in ["none", 1, 2, 3, 4, 5, 6]}
    for i in range(trials):
        g = disjoint_union(base, cycle_graph(rng.randint(3, 6)))
        d = random_embedding(g, seed + i)
        try:
            t = classify_pyramid_type(d)
            types[t.type_id if t else "none"] += 1
        except CensusError as e:
            result.failures.append(f"seed {seed + i}: {e}")
    result.stats = {str(k): v for k, v in types.items()}
    return result


def random_knot_gauss(rng: random.Random, max_crossings: int = 10):
    """Gauss diagram of a random braid-closure knot with at most
    ``max_crossings`` crossings, read from a random base point."""
    while True:
        strands = rng.randint(2, 4)
        length = rng.randint(3, max_crossings)
        word = [rng.choice([1, -1]) * rng.randint(1, strands - 1)
                for _ in range(length)]
        if not closure_is_knot(word, strands):
            continue
        d = braid_closure_diagram(word, strands)
        g = gauss_diagram(d, closure_cycle(d))
        return g.rotated(rng.randrange(max(len(g.events), 1)))


def _audit_a2(trials: int, seed: int) -> AuditResult:
    result = AuditResult("a2-oracle", trials, seed)
    rng = random.Random(seed)
    for i in range(trials):
        g = random_knot_gauss(rng)
        fast = conway_a2(g)
        slow = a2_skein_from_gauss(g)
        if fast != slow:
            result.failures.append(
                f"trial {i}: chord-pair {fast} != skein {slow} on {g.events}")
    return result


def run_audit(family: str, trials: int, seed: int = 0) -> AuditResult:
    """Run one audit campaign; see AUDIT_FAMILIES for the valid names."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    if family == "k6-parity":
        return _audit_parity(6, trials, seed)
    if family == "k7-parity":
        return _audit_parity(7, trials, seed)
    if family == "k33-pattern":
        return _audit_k33(trials, seed)
    if family == "pyramid-pattern":
        return _audit_pyramid(trials, seed)
    if family == "a2-oracle":
        return _audit_a2(trials, seed)
    raise ValueError(f"unknown audit family {family!r}; choose from {AUDIT_FAMILIES}")
