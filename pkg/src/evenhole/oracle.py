"""Exponential-time ground truth for desk-scale graphs.

Everything here works by enumerating induced cycles or induced paths
directly.  The functions are slow on dense inputs by design; they exist to
check the polynomial procedures in :mod:`evenhole.lemma4`,
:mod:`evenhole.lemma5` and :mod:`evenhole.pipeline`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import holes
from .graph import Graph, Hole, apsp, iter_bits, validate_hole

#: Graphs with no even hole on at most this many vertices are "long".
LONG_THRESHOLD = 22
#: graph_status refuses larger inputs unless forced.
STATUS_MAX_N = 24


class OracleGuardError(RuntimeError):
    """Input too large for an exhaustive oracle without ``force=True``."""


class Lemma6PreconditionError(ValueError):
    """The triple handed to :func:`check_lemma6` does not qualify."""


# --------------------------------------------------------------------------
# induced cycles


def _above(G: Graph, s: int) -> int:
    return G.full_mask & ~((1 << (s + 1)) - 1)


def enumerate_induced_cycles(G: Graph, max_len: int | None = None) -> Iterator[Hole]:
    """Yield every hole of ``G`` with at most ``max_len`` vertices, once each.

    A cycle is grown from its minimum vertex ``s`` through larger vertices
    as an induced path and closes when the newest vertex sees ``s``.
    Requiring the closing vertex to exceed the second one fixes the
    direction, so each hole is produced once and already canonical.
    """
    if max_len is None:
        max_len = G.n
    if max_len < 4:
        return
    masks = G.masks
    for s in range(G.n):
        above = _above(G, s)
        for t in iter_bits(masks[s] & above):
            yield from _grow(masks, s, t, [s, t], (1 << s) | (1 << t), above, max_len)


def _grow(masks, s, t, path, blocked, above, max_len):
    # blocked: path vertices plus neighbors of path vertices other than s
    # and the current last vertex
    last = path[-1]
    s_nbrs = masks[s]
    for w in iter_bits(masks[last] & above & ~blocked):
        if s_nbrs >> w & 1:
            if len(path) >= 3 and w > t:
                yield Hole(len(path) + 1, tuple(path) + (w,))
            continue
        if len(path) + 2 > max_len:
            continue
        path.append(w)
        yield from _grow(masks, s, t, path, blocked | masks[last] | (1 << w), above, max_len)
        path.pop()


def induced_paths(G: Graph, u: int, v: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """Every induced ``uv``-path of length at most ``max_len``."""
    masks = G.masks
    if u == v:
        yield (u,)
        return

    def grow(path: list[int], blocked: int) -> Iterator[tuple[int, ...]]:
        last = path[-1]
        for w in iter_bits(masks[last] & ~blocked):
            if w == v:
                yield tuple(path) + (v,)
            elif len(path) < max_len:
                path.append(w)
                yield from grow(path, blocked | masks[last] | (1 << w))
                path.pop()

    yield from grow([u], 1 << u)


# --------------------------------------------------------------------------
# shortest even holes


def shortest_even_hole_brute(G: Graph) -> Hole | None:
    """Minimum ``(length, canonical cycle)`` even hole, by full enumeration."""
    best = None
    for h in enumerate_induced_cycles(G):
        if h.length % 2 == 0 and (best is None or h < best):
            best = h
    return best


def has_even_hole(G: Graph) -> bool:
    return any(h.length % 2 == 0 for h in enumerate_induced_cycles(G))


def _layer_dist(G: Graph, s: int, allowed: int) -> list[float]:
    dist = [math.inf] * G.n
    dist[s] = 0
    seen = frontier = 1 << s
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= G.masks[w]
        nxt &= allowed & ~seen
        for w in iter_bits(nxt):
            dist[w] = d
        seen |= nxt
        frontier = nxt
    return dist


def bounded_shortest_even_hole(G: Graph, L: int = LONG_THRESHOLD) -> Hole | None:
    """Shortest even hole provided it has at most ``L`` vertices.

    Depth-first growth as in :func:`enumerate_induced_cycles`, but every
    branch is cut once its length plus the distance back to the anchor
    (inside the vertices above the anchor) exceeds ``min(L, best)``.
    ``None`` with ``L = 22`` certifies that ``G`` is long.
    """
    if L < 4:
        raise ValueError("bound must be at least 4")
    masks = G.masks
    best: Hole | None = None

    for s in range(G.n):
        above = _above(G, s)
        if (masks[s] & above).bit_count() < 2:
            continue
        dist = _layer_dist(G, s, above | (1 << s))
        s_nbrs = masks[s]

        def grow(path: list[int], blocked: int, t: int) -> None:
            nonlocal best
            limit = L if best is None else min(L, best.length)
            last = path[-1]
            for w in iter_bits(masks[last] & above & ~blocked):
                k = len(path) + 1
                if s_nbrs >> w & 1:
                    if k >= 4 and k % 2 == 0 and w > t and k <= limit:
                        h = Hole(k, tuple(path) + (w,))
                        if best is None or h < best:
                            best = h
                            limit = min(L, best.length)
                    continue
                if k - 1 + dist[w] > limit:
                    continue
                path.append(w)
                grow(path, blocked | masks[last] | (1 << w), t)
                path.pop()

        for t in iter_bits(s_nbrs & above):
            grow([s, t], (1 << s) | (1 << t), t)
    return best


# --------------------------------------------------------------------------
# graph classification


@dataclass(frozen=True)
class GraphStatus:
    has_even_hole: bool
    shortest_even_length: int | None
    is_long: bool
    is_shallow: bool
    is_anti_shallow: bool
    is_bad: bool
    shortest_even_holes: tuple[Hole, ...] = field(default=(), compare=False, repr=False)
    good_holes: tuple[Hole, ...] = field(default=(), compare=False, repr=False)

    def as_dict(self) -> dict:
        return {
            "has_even_hole": self.has_even_hole,
            "shortest_even_length": self.shortest_even_length,
            "is_long": self.is_long,
            "is_shallow": self.is_shallow,
            "is_anti_shallow": self.is_anti_shallow,
            "is_bad": self.is_bad,
        }


def graph_status(G: Graph, force: bool = False) -> GraphStatus:
    """Evaluate the long / bad / shallow / anti-shallow definitions literally.

    Quantifies over every shortest even hole and every bad shortcut of
    each, so it is exponential; graphs above ``STATUS_MAX_N`` vertices are
    refused unless ``force`` is set.
    """
    if G.n > STATUS_MAX_N and not force:
        raise OracleGuardError(f"graph_status refuses n={G.n} > {STATUS_MAX_N} without force=True")
    even = [h for h in enumerate_induced_cycles(G) if h.length % 2 == 0]
    if not even:
        return GraphStatus(False, None, True, False, True, False)
    length = min(h.length for h in even)
    shortest = sorted(h for h in even if h.length == length)
    shallow = False
    anti_shallow = True
    good = []
    for C in shortest:
        worst = holes.worst_shortcuts(G, C)
        if not worst:
            good.append(C)
        if all(r.is_shallow for r in worst):
            shallow = True
        if any(r.is_shallow for r in worst):
            anti_shallow = False
    return GraphStatus(
        has_even_hole=True,
        shortest_even_length=length,
        is_long=length > LONG_THRESHOLD,
        is_shallow=shallow,
        is_anti_shallow=anti_shallow,
        is_bad=not good,
        shortest_even_holes=tuple(shortest),
        good_holes=tuple(good),
    )


# --------------------------------------------------------------------------
# shallow worst-shortcut checker


@dataclass(frozen=True)
class Lemma6Violation:
    statement: int
    path: tuple[int, ...]
    detail: str


def shallow_worst_shortcuts(G: Graph, C: Hole) -> list[holes.ShortcutRecord]:
    return [r for r in holes.worst_shortcuts(G, C) if r.is_shallow]


def harvest_lemma6_triples(G: Graph, force: bool = False) -> list[tuple[Hole, tuple[int, ...]]]:
    """Every ``(C, P)`` with ``C`` a shortest even hole of ``G`` and ``P`` a
    shallow worst shortcut of ``C``."""
    st = graph_status(G, force=force)
    return [(C, r.path) for C in st.shortest_even_holes for r in shallow_worst_shortcuts(G, C)]


def check_lemma6(G: Graph, C: Hole, P: Sequence[int]) -> list[Lemma6Violation]:
    """Check the four statements about a shallow worst shortcut ``P`` of a
    shortest even hole ``C``; return the violations found (empty if none).

    With ``u, v`` the ends of ``P``, ``C1``/``C2`` the short/long arcs,
    ``x``/``y`` the neighbors of ``u``/``v`` on ``C1`` and ``C3`` the
    ``xy``-subpath of ``C1``:

    1. no ``uv``-path is shorter than ``P``;
    2. every ``uv``-path as long as ``P`` closes a hole with ``C2``;
    3. no ``xy``-path is shorter than ``C3``;
    4. every ``xy``-path as long as ``C3`` closes a hole with ``C2``.

    Paths are enumerated as induced paths; a shorter non-induced path
    always contains a shorter induced one, so (1) and (3) lose nothing.

    Raises
    ------
    Lemma6PreconditionError
        If ``C`` is not a shortest even hole or ``P`` is not a shallow
        worst shortcut of it.
    """
    P = tuple(P)
    if validate_hole(G, C.cycle) != C or not C.is_even:
        raise Lemma6PreconditionError("C is not an even hole of G")
    best = shortest_even_hole_brute(G)
    if best is None or best.length != C.length:
        raise Lemma6PreconditionError("C is not a shortest even hole of G")
    try:
        rec = holes.classify(G, C, P)
    except holes.ShortcutPreconditionError as exc:
        raise Lemma6PreconditionError(str(exc)) from None
    worst_paths = {r.path for r in holes.worst_shortcuts(G, C)}
    if P not in worst_paths and P[::-1] not in worst_paths:
        raise Lemma6PreconditionError("P is not a worst shortcut of C")
    if not rec.is_shallow:
        raise Lemma6PreconditionError("P is not shallow")

    u, v = P[0], P[-1]
    c1, c2 = holes.hole_arcs(C, u, v)
    x, y = c1[1], c1[-2]
    c3_len = len(c1) - 3
    plen = len(P) - 1
    table = apsp(G)
    out: list[Lemma6Violation] = []

    canon = table.path(u, v)
    if canon is not None and len(canon) - 1 < plen:
        out.append(Lemma6Violation(1, canon, "canonical shortest uv-path shorter than P"))
    for q in induced_paths(G, u, v, plen):
        qlen = len(q) - 1
        if qlen < plen:
            if q != canon:
                out.append(Lemma6Violation(1, q, f"uv-path of length {qlen} < {plen}"))
        elif validate_hole(G, holes.close_cycle(q, c2)) is None:
            out.append(Lemma6Violation(2, q, "G[P_uv + C2] is not a hole"))

    wxy = table.dist[x][y]
    if wxy < c3_len:
        out.append(Lemma6Violation(3, table.path(x, y), f"xy-distance {wxy} < {c3_len}"))
    for q in induced_paths(G, x, y, c3_len):
        if len(q) - 1 == c3_len:
            cyc = tuple(q) + tuple(reversed(c2))
            if validate_hole(G, cyc) is None:
                out.append(Lemma6Violation(4, q, "G[P_xy + C2] is not a hole"))
    return out
