"""Topological invariants computed from diagram data: pairwise linking
number, Gauss diagrams of single cycles, the Conway z^2 coefficient via
chord-pair counting, and loop-sum arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .diagram import Diagram
from .graphs import Cycle, canonical_cycle, cycle_edges
from .skein import conway_polynomial


class LinkingError(ValueError):
    pass


class CycleSumError(ValueError):
    pass


def _edge_dirs(d: Diagram, seq: Sequence[int]) -> list[tuple[int, int]]:
    """(edge id, direction) for each step of a closed vertex sequence;
    direction +1 when traversed in the stored u<v order."""
    out = []
    k = len(seq)
    for i in range(k):
        u, v = seq[i], seq[(i + 1) % k]
        e = d.graph.edge_index.get((min(u, v), max(u, v)))
        if e is None:
            raise LinkingError(f"edge ({u},{v}) not in graph")
        out.append((e, 1 if u < v else -1))
    return out


def linking_number(d: Diagram, a: Sequence[int], b: Sequence[int]) -> int:
    """Linking number of two vertex-disjoint cycles (closed vertex sequences,
    oriented as written).

    Computed two ways: half the signed sum over all inter-strand crossings,
    and the signed sum over crossings where a passes over b.  A mismatch
    would indicate corrupted crossing data and raises."""
    if set(a) & set(b):
        raise LinkingError(f"cycles share vertices: {sorted(set(a) & set(b))}")
    da = _edge_dirs(d, a)
    db = dict(_edge_dirs(d, b))
    total = 0
    over_sum = 0
    for ea, dir_a in da:
        for eb, dir_b in db.items():
            for c in d.crossings_between(ea, eb):
                a_side_over = c.over == ("a" if c.key[0] == ea else "b")
                s = c.sign * dir_a * dir_b
                total += s
                if a_side_over:
                    over_sum += s
    if total != 2 * over_sum:
        raise AssertionError(
            f"linking number cross-check failed: half-sum {total}/2 vs over-sum {over_sum}")
    return over_sum


@dataclass(frozen=True)
class GaussDiagram:
    """Self-crossing record of one closed strand: events in traversal order.

    Each event is (crossing id, over flag, sign); every id appears exactly
    twice with equal signs."""

    events: tuple[tuple[int, bool, int], ...]

    def __post_init__(self):
        counts: dict[int, list] = {}
        for cid, over, sign in self.events:
            counts.setdefault(cid, []).append((over, sign))
        for cid, occ in counts.items():
            if len(occ) != 2:
                raise ValueError(f"crossing {cid} appears {len(occ)} times")
            if occ[0][1] != occ[1][1]:
                raise ValueError(f"crossing {cid} has inconsistent signs")
            if occ[0][0] == occ[1][0]:
                raise ValueError(f"crossing {cid} is over (or under) at both passes")

    @property
    def crossing_count(self) -> int:
        return len(self.events) // 2

    def rotated(self, k: int) -> "GaussDiagram":
        k %= max(len(self.events), 1)
        return GaussDiagram(self.events[k:] + self.events[:k])


def gauss_diagram(d: Diagram, cycle: Sequence[int]) -> GaussDiagram:
    """Gauss diagram of a cycle's strand: self-crossings only, in traversal
    order from the cycle's first vertex."""
    dirs = _edge_dirs(d, cycle)
    dir_of = dict(dirs)
    cyc_edges = [e for e, _ in dirs]
    edge_set = set(cyc_edges)
    events = []
    for e, dir_e in dirs:
        step_events = []
        for partner in edge_set:
            for c in d.crossings_between(e, partner):
                side = "a" if c.key[0] == e else "b"
                sign = c.sign * dir_e * dir_of[partner]
                pos = c.pos_on(e)
                step_events.append((pos, c.key, c.over == side, sign))
        step_events.sort(key=lambda t: t[0], reverse=dir_e == -1)
        events.extend((key, over, sign) for _, key, over, sign in step_events)
    # relabel crossing keys to small ids in order of first appearance
    ids: dict = {}
    out = []
    for key, over, sign in events:
        if key not in ids:
            ids[key] = len(ids)
        out.append((ids[key], over, sign))
    return GaussDiagram(tuple(out))


def conway_a2(g: GaussDiagram) -> int:
    """z^2 coefficient of the Conway polynomial of the knot presented by the
    Gauss diagram.

    Chord-pair counting (quadratic time): sum of sign products over
    interleaved crossing pairs (c, d), ordered c d c d from the base point,
    where the strand goes over at the first visit to c and under at the
    first visit to d.  Validated against the skein-resolution oracle."""
    ev = g.events
    pos: dict[int, list[int]] = {}
    for i, (cid, _, _) in enumerate(ev):
        pos.setdefault(cid, []).append(i)
    total = 0
    for c, (c1, c2) in pos.items():
        for d, (d1, d2) in pos.items():
            if not (c1 < d1 < c2 < d2):
                continue
            if ev[c1][1] and not ev[d1][1]:
                total += ev[c1][2] * ev[d1][2]
    return total


def a2_skein_oracle(d: Diagram, cycle: Sequence[int], cap: int = 12) -> int:
    """a2 by exact recursive skein resolution on the cycle's Gauss diagram.

    Exponential; refuses diagrams with more than ``cap`` self-crossings."""
    g = gauss_diagram(d, cycle)
    return a2_skein_from_gauss(g, cap=cap)


def a2_skein_from_gauss(g: GaussDiagram, cap: int = 12) -> int:
    if g.crossing_count > cap:
        raise ValueError(f"{g.crossing_count} self-crossings exceeds oracle cap {cap}")
    comp = tuple((cid, over) for cid, over, _ in g.events)
    signs = {cid: sign for cid, _, sign in g.events}
    poly = conway_polynomial((comp,), signs)
    return poly.get(2, 0)


def cycle_sum(c: Sequence[int], e: Sequence[int]) -> tuple[Cycle, int, int]:
    """Loop sum C + D: closed traversal of the symmetric difference of two
    cycles whose intersection is a nonempty connected path.

    Returns (sum sequence, orientation used for c, orientation used for e);
    with these orientations lk(S, sum) = oc*lk(S, c) + oe*lk(S, e) for any
    cycle S disjoint from both."""
    ec, ee = set(cycle_edges(tuple(c))), set(cycle_edges(tuple(e)))
    shared = ec & ee
    if not shared:
        raise CycleSumError("cycle intersection is empty, not a connected path")
    if shared == ec or shared == ee:
        raise CycleSumError("one cycle is contained in the other; sum is degenerate")
    # the shared edges must form one contiguous run in c
    k = len(c)
    is_shared = [
        (min(c[i], c[(i + 1) % k]), max(c[i], c[(i + 1) % k])) in shared for i in range(k)
    ]
    runs = sum(1 for i in range(k) if is_shared[i] and not is_shared[i - 1])
    if runs != 1:
        raise CycleSumError("cycle intersection is not a connected path")
    start = next(i for i in range(k) if is_shared[i] and not is_shared[i - 1])
    run_len = next(m for m in range(1, k) if not is_shared[(start + m) % k])
    v0 = c[start]                      # shared path runs v0 -> ... -> vk in c
    vk = c[(start + run_len) % k]
    # complement of c: from vk back to v0 the long way, following c's direction
    comp_c = [c[(start + run_len + j) % k] for j in range(k - run_len + 1)]
    # orient e so that it traverses the shared path vk -> v0
    m = len(e)
    eis = [
        (min(e[i], e[(i + 1) % m]), max(e[i], e[(i + 1) % m])) in shared for i in range(m)
    ]
    if sum(eis) != len(shared) or sum(
        1 for i in range(m) if eis[i] and not eis[i - 1]
    ) != 1:
        raise CycleSumError("cycle intersection is not a connected path in the second cycle")
    estart = next(i for i in range(m) if eis[i] and not eis[i - 1])
    erun = next(t for t in range(1, m) if not eis[(estart + t) % m])
    if e[estart] == vk and e[(estart + erun) % m] == v0:
        oe, eseq = 1, list(e)
    elif e[estart] == v0 and e[(estart + erun) % m] == vk:
        oe = -1
        eseq = [e[0], *reversed(e[1:])]
        estart = m - (estart + erun)
    else:
        raise CycleSumError("shared edges do not form the same path in both cycles")
    # complement of e (in its chosen orientation): from v0 back to vk
    comp_e = [eseq[(estart + erun + j) % m] for j in range(m - erun + 1)]
    assert comp_c[0] == vk and comp_c[-1] == v0
    assert comp_e[0] == v0 and comp_e[-1] == vk
    seq = comp_c[:-1] + comp_e[:-1]
    if len(set(seq)) != len(seq):
        raise CycleSumError("symmetric difference is not a simple cycle")
    return tuple(seq), 1, oe


def cycle_sum_canonical(c: Sequence[int], e: Sequence[int]) -> Cycle:
    seq, _, _ = cycle_sum(c, e)
    return canonical_cycle(seq)
