"""Shortest even holes of long graphs from eight canonical shortest paths.

For anchors ``v0, ..., v7`` the candidate is the union of the canonical
shortest paths ``P_i`` from ``v_i`` to ``v_{i+1 mod 8}``; it counts when it
is an even hole and every ``|P_i| >= 3``.  If a long graph has a good
shortest even hole, some anchor tuple reproduces a shortest even hole.

The scan over all 8-tuples is done by backtracking over anchor prefixes.
A prefix survives only while its paths concatenate to an induced path,
which every arc-run of a hole does, so pruning never loses a candidate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import (
    Graph,
    Hole,
    PathTable,
    apsp,
    hole_from_mask,
    iter_bits,
    lowest_bit,
    mask_of,
    validate_hole,
)
from .oracle import LONG_THRESHOLD, bounded_shortest_even_hole

MIN_ARC = 3
# completions enumerated explicitly when the length bound is tight
GEODESIC_CAP = 64


class NotLongError(ValueError):
    """``run_lemma5`` was told (or found) that the graph is not long."""


# --------------------------------------------------------------------------
# eight-way split of a hole


@dataclass(frozen=True)
class EightSplit:
    anchors: tuple[int, ...]
    arc_lengths: tuple[int, ...]
    a: int
    b: int

    @property
    def adjacent_sum_bound(self) -> int:
        return 2 * self.a + -(-self.b // 4)


def eight_split_lengths(length: int) -> tuple[tuple[int, ...], int, int]:
    """Arc lengths for a hole of ``length = 8a + b``.

    The ``b`` arcs of length ``a + 1`` sit at positions ``floor(8k / b)``,
    which keeps two long arcs apart whenever ``b <= 4``.
    """
    a, b = divmod(length, 8)
    longer = {8 * k // b for k in range(b)}
    return tuple(a + 1 if i in longer else a for i in range(8)), a, b


def eight_split(C: Hole) -> EightSplit:
    if C.length % 2 or C.length < 24:
        raise ValueError(f"eight_split needs an even hole of length >= 24, got {C.length}")
    arcs, a, b = eight_split_lengths(C.length)
    anchors = []
    pos = 0
    for arc in arcs:
        anchors.append(C.cycle[pos])
        pos += arc
    return EightSplit(tuple(anchors), arcs, a, b)


def anchor_paths(table: PathTable, anchors) -> list[tuple[int, ...] | None]:
    return [table.path(anchors[i], anchors[(i + 1) % len(anchors)]) for i in range(len(anchors))]


# --------------------------------------------------------------------------
# pair queries


class PairQuery:
    """Constant-size bitset tests over the canonical paths of a PathTable.

    ``joins_as_path(u, v, w)``: ``P(u,v)`` followed by ``P(v,w)`` is an
    induced path.  ``is_disconnected(u, v, x, y)``: ``P(u,v)`` and
    ``P(x,y)`` are disjoint with no edge between them.  Each query is a
    few word operations on precomputed per-pair masks.
    """

    def __init__(self, G: Graph, table: PathTable):
        self.G = G
        self.table = table
        n = G.n
        self._span = {}
        self._closed = {}
        self._open_but_end = {}
        for u in range(n):
            for v in range(n):
                p = table.path(u, v)
                if p is None:
                    continue
                m = mask_of(p)
                closed = m
                head = 0
                for w in p[:-1]:
                    head |= G.masks[w] | (1 << w)
                for w in p:
                    closed |= G.masks[w]
                self._span[u, v] = m
                self._closed[u, v] = closed
                # closed neighborhood of every vertex but the last
                self._open_but_end[u, v] = head

    def joins_as_path(self, u: int, v: int, w: int) -> bool:
        a = self._span.get((u, v))
        b = self._span.get((v, w))
        if a is None or b is None:
            return False
        vb = 1 << v
        rest = b & ~vb
        return (a & b) == vb and not (self._open_but_end[u, v] & rest)

    def is_disconnected(self, u: int, v: int, x: int, y: int) -> bool:
        a = self._closed.get((u, v))
        b = self._span.get((x, y))
        if a is None or b is None:
            return False
        return not (a & b)


def build_pair_query(G: Graph, table: PathTable | None = None) -> PairQuery:
    return PairQuery(G, apsp(G) if table is None else table)


# --------------------------------------------------------------------------
# the search


def _dist_and_parity(G: Graph, s: int, t: int, allowed: int) -> tuple[float, bool]:
    """BFS distance from ``s`` to ``t`` inside ``allowed``, and whether the
    component of ``s`` there is bipartite (then every ``st``-path has the
    parity of the distance)."""
    allowed |= (1 << s) | (1 << t)
    seen = frontier = 1 << s
    d = 0
    dist = math.inf
    bipartite = True
    masks = G.masks
    while frontier:
        if frontier >> t & 1:
            dist = d
        nxt = 0
        for w in iter_bits(frontier):
            m = masks[w]
            if bipartite and m & frontier:
                bipartite = False
            nxt |= m
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
        d += 1
    return dist, bipartite


def _geodesic_layers(G: Graph, s: int, t: int, allowed: int, d: int) -> list[int]:
    """Layer ``i`` holds the vertices at distance ``i`` from ``s`` and
    ``d - i`` from ``t`` inside ``allowed``: the shortest-path DAG."""
    allowed |= (1 << s) | (1 << t)

    def layers(src):
        out = [1 << src]
        seen = 1 << src
        for _ in range(d):
            nxt = 0
            for w in iter_bits(out[-1]):
                nxt |= G.masks[w]
            nxt &= allowed & ~seen
            seen |= nxt
            out.append(nxt)
        return out

    fwd, bwd = layers(s), layers(t)
    return [fwd[i] & bwd[d - i] for i in range(d + 1)]


def _geodesic_masks(G: Graph, layers: list[int], cap: int) -> list[int] | None:
    """Vertex masks of every shortest path through ``layers``; ``None`` if
    there are more than ``cap``."""
    out: list[int] = []
    s = lowest_bit(layers[0])

    def walk(v: int, i: int, acc: int) -> bool:
        if i == len(layers) - 1:
            out.append(acc)
            return len(out) <= cap
        for w in iter_bits(G.masks[v] & layers[i + 1]):
            if not walk(w, i + 1, acc | (1 << w)):
                return False
        return True

    return out if walk(s, 0, 1 << s) else None


def run_lemma5(G: Graph, long_certificate: bool | None = None, table: PathTable | None = None) -> Hole | None:
    """Shortest even hole assembled from eight canonical shortest paths.

    Parameters
    ----------
    G : Graph
        Must be long (no even hole on at most 22 vertices).
    long_certificate : bool, optional
        ``True`` trusts the caller, ``False`` is rejected, ``None`` checks
        with :func:`~evenhole.oracle.bounded_shortest_even_hole`.

    Returns
    -------
    Hole or None
        The minimum ``(length, canonical)`` hole over successful anchor
        tuples.
    """
    if long_certificate is None:
        long_certificate = bounded_shortest_even_hole(G, LONG_THRESHOLD) is None
    if not long_certificate:
        raise NotLongError("run_lemma5 requires a long graph")
    if table is None:
        table = apsp(G)
    return _Search(G, table).run()


class _Search:
    """Backtracking over anchor prefixes ``v0 < v1, ..., v7`` with ``v0``
    the smallest anchor and ``v1 < v7``.

    State per prefix: ``chain`` (mask of the concatenated paths, an induced
    path from ``v0`` to the last anchor), ``inner`` (closed neighborhoods of
    every chain vertex except the two ends) and the chain length.

    Further cuts keep the scan exact:

    * if the leftover region is bipartite every completion has the
      parity of ``d``, so an odd total is hopeless;
    * a completion needs at least ``max(3 * arcs_left, d)`` more edges,
      where ``d`` is the distance from the last anchor back to ``v0``
      avoiding ``inner``; prefixes that cannot reach the best length die;
    * when that bound is tight, every completion runs along a shortest
      path of the leftover region.  If chain and region lie inside an
      already found hole of the best length, they can only rebuild it;
      failing that, up to ``GEODESIC_CAP`` such paths are tried directly
      and the prefix dies unless one closes a hole that beats the best.
    """

    def __init__(self, G: Graph, table: PathTable):
        self.G = G
        self.table = table
        self.dist = table.dist
        self.best: Hole | None = None
        self.best_masks: list[int] = []

    def run(self) -> Hole | None:
        G = self.G
        for v0 in range(G.n):
            self.v0 = v0
            self._extend([v0], 1 << v0, 0, 0)
        return self.best

    def _record(self, hole: Hole) -> None:
        if self.best is None or hole.length < self.best.length:
            self.best = hole
            self.best_masks = [hole.mask]
        elif hole.length == self.best.length:
            if hole.mask not in self.best_masks:
                self.best_masks.append(hole.mask)
            if hole < self.best:
                self.best = hole

    def _prune(self, anchors, chain: int, inner: int, length: int) -> bool:
        left = 8 - (len(anchors) - 1)
        last = anchors[-1]
        allowed = self.G.full_mask & ~inner & ~chain
        d, bipartite = _dist_and_parity(self.G, last, self.v0, allowed)
        if d == math.inf:
            return True
        if bipartite and (length + d) % 2:
            return True
        if self.best is None:
            return False
        need = max(MIN_ARC * left, d)
        target = self.best.length
        if length + need > target:
            return True
        if length + need == target and d >= MIN_ARC * left:
            layers = _geodesic_layers(self.G, last, self.v0, allowed, int(d))
            region = chain
            for layer in layers:
                region |= layer
            if any(region & ~m == 0 for m in self.best_masks):
                return True
            rests = _geodesic_masks(self.G, layers, GEODESIC_CAP)
            if rests is None:
                return False
            for rest in rests:
                h = hole_from_mask(self.G, chain | rest)
                if h is not None and h < self.best:
                    return False
            return True
        return False

    def _extend(self, anchors: list[int], chain: int, inner: int, length: int) -> None:
        G, table, dist = self.G, self.table, self.dist
        v0 = self.v0
        last = anchors[-1]
        k = len(anchors)
        if k > 1 and self._prune(anchors, chain, inner, length):
            return
        if k == 8:
            self._close(anchors, chain, inner, length)
            return
        last_closed = G.masks[last] | (1 << last)
        for w in range(v0 + 1, G.n):
            if chain >> w & 1:
                continue
            d = dist[last][w]
            if d < MIN_ARC or d == math.inf:
                continue
            if k == 7 and w < anchors[1]:
                continue
            if self.best is not None and length + d + MIN_ARC * (8 - k) > self.best.length:
                continue
            p = table.path(last, w)
            seg = table.path_mask(last, w) & ~(1 << last)
            if seg & chain:
                continue
            # new vertices may only touch the chain at `last` (and v0 only
            # when closing, handled in _close)
            if seg & inner:
                continue
            if k > 1 and seg & (G.masks[v0] | (1 << v0)):
                continue
            if G.masks[last] & seg != 1 << p[1]:
                continue
            new_inner = inner
            if k > 1:
                new_inner |= last_closed
            for z in p[1:-1]:
                new_inner |= G.masks[z] | (1 << z)
            anchors.append(w)
            self._extend(anchors, chain | seg, new_inner, length + int(d))
            anchors.pop()

    def _close(self, anchors, chain: int, inner: int, length: int) -> None:
        G, table = self.G, self.table
        v0, v7 = anchors[0], anchors[-1]
        d = self.dist[v7][v0]
        if d < MIN_ARC or d == math.inf:
            return
        total = length + int(d)
        if total % 2:
            return
        if self.best is not None and total > self.best.length:
            return
        p = table.path(v7, v0)
        interior = mask_of(p[1:-1])
        if interior & (chain | inner):
            return
        if G.masks[v0] & interior != 1 << p[-2] or G.masks[v7] & interior != 1 << p[1]:
            return
        seq = []
        for i in range(8):
            seg = table.path(anchors[i], anchors[(i + 1) % 8])
            seq.extend(seg[:-1])
        hole = validate_hole(G, seq)
        if hole is not None and hole.is_even:
            self._record(hole)
