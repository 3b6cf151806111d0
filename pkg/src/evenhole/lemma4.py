"""Shortest even holes in graphs that are not anti-shallow.

For vertex-disjoint edges ``ux`` and ``vy`` whose canonical shortest paths
``P_uv`` and ``P_xy`` differ in length by one, delete the closed
neighborhood of ``P_uv + P_xy`` (keeping ``u`` and ``v``), take the
canonical shortest ``uv``-path ``Q`` of what is left, and test whether
``P_xy`` and ``Q`` close an even hole.  The shortest hole found over all
quadruples is a shortest even hole of ``G`` whenever some bad shortest
even hole has a shallow worst shortcut; anything returned is always a
verified even hole.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    Hole,
    InducedSubgraph,
    PathTable,
    apsp,
    closed_neighborhood_mask,
    induced_subgraph,
    iter_bits,
    mask_of,
    shortest_path_within,
    validate_hole,
)


@dataclass(frozen=True)
class QuadCandidate:
    u: int
    v: int
    x: int
    y: int
    p_uv: tuple[int, ...]
    p_xy: tuple[int, ...]
    q: tuple[int, ...] | None
    candidate_hole: Hole | None


def removal_mask(G: Graph, p_uv, p_xy, u: int, v: int) -> int:
    """Vertices deleted to form ``H(u, v, x, y)``."""
    core = mask_of(p_uv) | mask_of(p_xy)
    core &= ~((1 << u) | (1 << v))
    return closed_neighborhood_mask(G, core) & ~((1 << u) | (1 << v))


def build_H(G: Graph, p_uv, p_xy, u: int, v: int) -> InducedSubgraph:
    """``G`` minus the closed neighborhood of ``V(p_uv + p_xy) - {u, v}``,
    with ``u`` and ``v`` kept."""
    if {p_uv[0], p_uv[-1]} != {u, v}:
        raise ValueError("u and v must be the ends of p_uv")
    keep = G.full_mask & ~removal_mask(G, p_uv, p_xy, u, v)
    return induced_subgraph(G, iter_bits(keep))


def quad_candidate(G: Graph, table: PathTable, u: int, x: int, v: int, y: int) -> QuadCandidate:
    """Evaluate one quadruple (no length filter applied)."""
    p_uv = table.path(u, v)
    p_xy = table.path(x, y)
    if p_uv is None or p_xy is None:
        return QuadCandidate(u, v, x, y, p_uv, p_xy, None, None)
    allowed = G.full_mask & ~removal_mask(G, p_uv, p_xy, u, v)
    q = shortest_path_within(G, u, v, allowed)
    hole = None
    if q is not None:
        hole = validate_hole(G, p_xy + q[::-1])
        if hole is not None and not hole.is_even:
            hole = None
    return QuadCandidate(u, v, x, y, p_uv, p_xy, q, hole)


def iter_quads(G: Graph, table: PathTable):
    """Ordered quadruples ``(u, x, v, y)``: ``ux`` and ``vy`` disjoint edges,
    ``u < v``, and ``|P_uv| - |P_xy| = +-1``.

    The procedure as printed filters on ``|P_uv| = |P_xy| - 1`` while the
    correctness argument needs ``|P_uv| = |P_xy| + 1``; both are taken.
    Swapping ``(u, x)`` with ``(v, y)`` gives the same candidate, hence
    ``u < v``.
    """
    dist = table.dist
    for u in range(G.n):
        for v in range(u + 1, G.n):
            duv = dist[u][v]
            if duv == float("inf"):
                continue
            for x in G.adj[u]:
                if x == v:
                    continue
                row = dist[x]
                for y in G.adj[v]:
                    if y == u or y == x:
                        continue
                    if abs(duv - row[y]) == 1:
                        yield u, x, v, y


def run_lemma4(G: Graph, table: PathTable | None = None) -> Hole | None:
    """Shortest even hole found by the quadruple search, or ``None``.

    Examples
    --------
    >>> G = Graph(13, [(i, (i + 1) % 12) for i in range(12)] + [(0, 12), (3, 12)])
    >>> run_lemma4(G).length
    12
    """
    if table is None:
        table = apsp(G)
    best: Hole | None = None
    for u, x, v, y in iter_quads(G, table):
        p_xy = table.path(x, y)
        if best is not None:
            # the hole has |P_xy| + |Q| + 2 >= |P_xy| + d(u, v) + 2 edges
            if len(p_xy) + 1 + table.dist[u][v] > best.length:
                continue
        cand = quad_candidate(G, table, u, x, v, y).candidate_hole
        if cand is not None and (best is None or cand < best):
            best = cand
    return best
