"""Exact Conway polynomial of a link presented by abstract crossing data.

A link is a tuple of components; each component is a cyclic sequence of
(crossing id, over flag) events and every crossing id appears exactly twice
across all components.  The polynomial is computed by recursive crossing
resolution: switching the first "bad" crossing of a descending sweep and
adding sign * z times the oriented smoothing.  Exponential in the number of
crossings -- intended as a trusted oracle for small diagrams, not as the
production path.
"""

from __future__ import annotations

from functools import lru_cache

Component = tuple[tuple[int, bool], ...]
Poly = dict[int, int]


def _poly_add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
        if out[k] == 0:
            del out[k]
    return out


def _poly_shift_scale(a: Poly, eps: int) -> Poly:
    """Multiply by eps * z."""
    return {k + 1: eps * v for k, v in a.items()}


def _first_bad(components: tuple[Component, ...]) -> int | None:
    """First crossing met as an under-pass before its over-pass, sweeping the
    components in order; None when the diagram is descending."""
    seen: set[int] = set()
    for comp in components:
        for cid, over in comp:
            if cid in seen:
                continue
            seen.add(cid)
            if not over:
                return cid
    return None


def _switch(components: tuple[Component, ...], c: int) -> tuple[Component, ...]:
    return tuple(
        tuple((cid, (not over) if cid == c else over) for cid, over in comp)
        for comp in components
    )


def _smooth(components: tuple[Component, ...], c: int) -> tuple[Component, ...]:
    """Oriented smoothing at crossing c: reconnect the two strands so that the
    incoming arc of each pass continues along the outgoing arc of the other."""
    locs = [
        (ci, ei)
        for ci, comp in enumerate(components)
        for ei, (cid, _) in enumerate(comp)
        if cid == c
    ]
    (ci, i), (cj, j) = locs
    if ci == cj:
        comp = components[ci]
        if i > j:
            i, j = j, i
        # the circle splits into the arc between the passes and the rest
        new = (comp[i + 1 : j], comp[j + 1 :] + comp[:i])
        rest = tuple(comp2 for k, comp2 in enumerate(components) if k != ci)
        return rest + new
    x, y = components[ci], components[cj]
    merged = x[i + 1 :] + x[:i] + y[j + 1 :] + y[:j]
    rest = tuple(comp2 for k, comp2 in enumerate(components) if k not in (ci, cj))
    return rest + (merged,)


def conway_polynomial(
    components: tuple[Component, ...], signs: dict[int, int]
) -> Poly:
    """Conway polynomial as {exponent: coefficient}; {} is the zero polynomial.

    Terminates because switching the first bad crossing strictly advances the
    position of the first bad crossing, and smoothing removes a crossing.
    """
    sig = tuple(sorted(signs.items()))

    @lru_cache(maxsize=None)
    def solve(comps: tuple[Component, ...], sgn: tuple[tuple[int, int], ...]) -> tuple:
        bad = _first_bad(comps)
        if bad is None:
            # descending diagrams are unlinks: unknot for one component,
            # split (zero polynomial) otherwise
            return ((0, 1),) if len(comps) == 1 else ()
        eps = dict(sgn)[bad]
        switched = dict(
            solve(
                _switch(comps, bad),
                tuple(sorted((k, -v if k == bad else v) for k, v in sgn)),
            )
        )
        smoothed = dict(
            solve(_smooth(comps, bad), tuple((k, v) for k, v in sgn if k != bad))
        )
        res = _poly_add(switched, _poly_shift_scale(smoothed, eps))
        return tuple(sorted(res.items()))

    return dict(solve(components, sig))
