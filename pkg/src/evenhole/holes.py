"""Shortcuts of a hole: arcs, the shortcut / good / shallow predicates and
worst-shortcut selection.

Throughout, ``C`` is a :class:`~evenhole.graph.Hole` that the caller takes
to be a shortest even hole of ``G``, and a candidate path ``P`` is an
induced path of ``G`` joining two distinct, nonadjacent vertices of ``C``
whose interior avoids ``C``.  All comparisons against ``|C|/4`` are done
over the integers as ``4 * |P| < |C|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, Hole, is_induced_path, iter_bits, validate_hole


class ShortcutPreconditionError(ValueError):
    """The path does not qualify as a candidate shortcut of the hole."""


@dataclass(frozen=True)
class ShortcutRecord:
    path: tuple[int, ...]
    hole_distance: int
    is_shortcut: bool
    is_good: bool
    is_shallow: bool

    @property
    def length(self) -> int:
        return len(self.path) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.path[0], self.path[-1]


def hole_arcs(C: Hole, u: int, v: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Both ``uv``-paths along ``C``, each oriented from ``u`` to ``v``.

    Returns ``(shorter, longer)``; equal lengths are ordered by vertex
    sequence.  ``len(shorter) - 1`` is the hole distance ``d_C(u, v)``.
    """
    if u == v:
        raise ValueError("arc endpoints must be distinct")
    cyc = C.cycle
    k = len(cyc)
    try:
        i, j = cyc.index(u), cyc.index(v)
    except ValueError:
        raise ValueError(f"vertex {u if u not in cyc else v} is not on the hole") from None
    fwd = tuple(cyc[(i + s) % k] for s in range((j - i) % k + 1))
    bwd = tuple(cyc[(i - s) % k] for s in range((i - j) % k + 1))
    a, b = sorted((fwd, bwd), key=lambda p: (len(p), p))
    return a, b


def hole_distance(C: Hole, u: int, v: int) -> int:
    k = C.length
    d = (C.index(u) - C.index(v)) % k
    return min(d, k - d)


def close_cycle(path: Sequence[int], arc: Sequence[int]) -> tuple[int, ...]:
    """Cyclic sequence formed by ``path`` (u..v) followed by ``arc`` (u..v)
    walked backwards without repeating its ends."""
    return tuple(path) + tuple(arc[-2:0:-1])


def _check_candidate(G: Graph, C: Hole, P: Sequence[int]) -> tuple[int, int]:
    if len(P) < 2:
        raise ShortcutPreconditionError("path needs two distinct endpoints")
    u, v = P[0], P[-1]
    hm = C.mask
    if not (hm >> u & 1 and hm >> v & 1):
        raise ShortcutPreconditionError("path endpoints must lie on the hole")
    if u == v:
        raise ShortcutPreconditionError("path endpoints must be distinct")
    if G.has_edge(u, v):
        raise ShortcutPreconditionError(f"endpoints {u} and {v} are adjacent")
    if any(hm >> w & 1 for w in P[1:-1]):
        raise ShortcutPreconditionError("path interior meets the hole")
    if not is_induced_path(G, P):
        raise ShortcutPreconditionError("not an induced path of the graph")
    return u, v


def is_shortcut(G: Graph, C: Hole, P: Sequence[int]) -> bool:
    """``2 <= |P| <= d_C(u, v)`` and ``4 |P| < |C|``."""
    u, v = _check_candidate(G, C, P)
    length = len(P) - 1
    return 2 <= length <= hole_distance(C, u, v) and 4 * length < C.length


def is_good_path(G: Graph, C: Hole, P: Sequence[int]) -> bool:
    """True iff ``P`` plus one arc of ``C`` is an even hole as long as ``C``."""
    u, v = _check_candidate(G, C, P)
    length = len(P) - 1
    for arc in hole_arcs(C, u, v):
        if length + len(arc) - 1 != C.length:
            continue
        h = validate_hole(G, close_cycle(P, arc))
        if h is not None and h.is_even:
            return True
    return False


def is_shallow_path(G: Graph, C: Hole, P: Sequence[int]) -> bool:
    """``|P| >= d_C(u, v) - 1`` and ``G[P + longer arc]`` is a hole."""
    u, v = _check_candidate(G, C, P)
    short, long_ = hole_arcs(C, u, v)
    if len(P) - 1 < len(short) - 2:
        return False
    return validate_hole(G, close_cycle(P, long_)) is not None


def classify(G: Graph, C: Hole, P: Sequence[int]) -> ShortcutRecord:
    u, v = _check_candidate(G, C, P)
    return ShortcutRecord(
        path=tuple(P),
        hole_distance=hole_distance(C, u, v),
        is_shortcut=is_shortcut(G, C, P),
        is_good=is_good_path(G, C, P),
        is_shallow=is_shallow_path(G, C, P),
    )


def candidate_paths(G: Graph, C: Hole, max_len: int):
    """Yield every induced path of length ``2..max_len`` between nonadjacent
    hole vertices with interior off the hole, once per unordered pair of
    ends (oriented from the smaller end), in lexicographic order."""
    hole = C.mask
    masks = G.masks
    found = []

    def extend(path: list[int], inner: int) -> None:
        # inner: closed neighborhood of every path vertex except the last
        last = path[-1]
        for w in iter_bits(masks[last] & ~inner):
            if hole >> w & 1:
                if len(path) >= 2 and w > path[0] and not masks[w] >> path[0] & 1:
                    found.append(tuple(path) + (w,))
                continue
            if len(path) < max_len:
                path.append(w)
                extend(path, inner | masks[last] | (1 << last))
                path.pop()

    if max_len < 2:
        return iter(())
    for u in C.cycle:
        # u's neighbors stay eligible as the next step only
        extend([u], 1 << u)
    found.sort()
    return iter(found)


def enumerate_bad_shortcuts(G: Graph, C: Hole) -> list[ShortcutRecord]:
    """Every C-bad C-shortcut, found by depth-bounded search over induced
    paths; sorted by vertex sequence."""
    max_len = (C.length - 1) // 4
    out = []
    for P in candidate_paths(G, C, max_len):
        u, v = P[0], P[-1]
        d = hole_distance(C, u, v)
        if len(P) - 1 > d:
            continue
        if is_good_path(G, C, P):
            continue
        out.append(ShortcutRecord(P, d, True, False, is_shallow_path(G, C, P)))
    return out


def worst_shortcuts(G: Graph, C: Hole, bad: list[ShortcutRecord] | None = None) -> list[ShortcutRecord]:
    """Bad shortcuts of minimum length, then maximum hole distance."""
    if bad is None:
        bad = enumerate_bad_shortcuts(G, C)
    if not bad:
        return []
    best = min((r.length, -r.hole_distance) for r in bad)
    return [r for r in bad if (r.length, -r.hole_distance) == best]


def is_good_hole(G: Graph, C: Hole) -> bool:
    return not enumerate_bad_shortcuts(G, C)
