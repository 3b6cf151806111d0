"""Simple undirected graphs, canonical shortest paths and hole validation.

Vertices are the integers ``0..n-1``.  Adjacency is kept both as sorted
tuples and as integer bitsets (bit ``v`` of ``G.masks[u]`` is set iff
``uv`` is an edge); the bitsets drive every inner loop in the package.

Paths are plain tuples of vertex ids.  A path of ``k`` vertices has length
``k - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed graph files; carries the offending line number."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (int, int)
        Undirected edges.  Self-loops, duplicates and out-of-range ids
        raise ``ValueError``.
    """

    __slots__ = ("n", "adj", "masks", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self.masks: tuple[int, ...] = tuple(mask_of(s) for s in nbrs)
        self._m = m

    @property
    def num_edges(self) -> int:
        return self._m

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


# --------------------------------------------------------------------------
# file format


def load_graph(text: str) -> Graph:
    """Parse the DIMACS-like edge format (1-indexed ids) into a Graph.

    Comment lines start with ``c``; exactly one ``p edge <n> <m>`` header
    must precede exactly ``m`` lines ``e <u> <v>``.
    """
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    header_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError("malformed header, expected 'p edge <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError("non-integer vertex or edge count", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("negative count in header", lineno)
            header_line = lineno
        elif tag == "e":
            if n is None:
                raise GraphFormatError("edge line before header", lineno)
            if len(parts) != 3:
                raise GraphFormatError("malformed edge line, expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("non-integer vertex id", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex id out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"duplicate edge {key[0]} {key[1]}", lineno)
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge <n> <m>' header")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(edges)} given", header_line)
    return Graph(n, edges)


def render_graph(G: Graph, comments: Sequence[str] = ()) -> str:
    """Serialize ``G``; edges written 1-indexed in lexicographic order."""
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {G.n} {G.num_edges}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return load_graph(fh.read())


def write_graph(G: Graph, path, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(render_graph(G, comments))


# --------------------------------------------------------------------------
# subgraphs


@dataclass(frozen=True)
class InducedSubgraph:
    """``G[S]`` together with the id maps between child and parent."""

    graph: Graph
    parent_ids: tuple[int, ...]

    def to_parent(self, v: int) -> int:
        return self.parent_ids[v]

    def to_child(self, v: int) -> int:
        return self.child_ids[v]

    @property
    def child_ids(self) -> dict[int, int]:
        return {p: i for i, p in enumerate(self.parent_ids)}

    def lift(self, seq: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.parent_ids[v] for v in seq)


def _check_ids(G: Graph, S: Iterable[int]) -> list[int]:
    S = list(S)
    for v in S:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range for n={G.n}")
    return S


def induced_subgraph(G: Graph, S: Iterable[int]) -> InducedSubgraph:
    """Return ``G[S]``; child ids follow the increasing order of parent ids."""
    keep = sorted(set(_check_ids(G, S)))
    index = {p: i for i, p in enumerate(keep)}
    edges = [(index[u], index[v]) for u in keep for v in G.adj[u] if u < v and v in index]
    return InducedSubgraph(Graph(len(keep), edges), tuple(keep))


def closed_neighborhood(G: Graph, S: Iterable[int]) -> frozenset[int]:
    """``S`` together with every neighbor of a vertex in ``S``."""
    return frozenset(iter_bits(closed_neighborhood_mask(G, mask_of(_check_ids(G, S)))))


def closed_neighborhood_mask(G: Graph, mask: int) -> int:
    out = mask
    for v in iter_bits(mask):
        out |= G.masks[v]
    return out


# --------------------------------------------------------------------------
# shortest paths


def _bfs_layers(G: Graph, source: int, allowed: int, target: int | None = None) -> list[int]:
    layers = [1 << source]
    seen = 1 << source
    frontier = 1 << source
    masks = G.masks
    while frontier:
        if target is not None and frontier >> target & 1:
            break
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= masks[w]
        nxt &= allowed & ~seen
        if not nxt:
            break
        seen |= nxt
        layers.append(nxt)
        frontier = nxt
    return layers


def _walk_back(G: Graph, layers: list[int], target: int) -> tuple[int, ...]:
    depth = next(d for d, layer in enumerate(layers) if layer >> target & 1)
    path = [target]
    w = target
    for d in range(depth - 1, -1, -1):
        w = lowest_bit(G.masks[w] & layers[d])
        path.append(w)
    path.reverse()
    return tuple(path)


def shortest_path_within(G: Graph, u: int, v: int, allowed: int) -> tuple[int, ...] | None:
    """Canonical shortest ``uv``-path in ``G`` restricted to ``allowed``.

    The search runs from ``min(u, v)``; each vertex steps back to its
    smallest-id neighbor in the previous BFS layer.  The result is oriented
    from ``u`` to ``v``.  ``u`` and ``v`` are always admitted.
    """
    s, t = (u, v) if u <= v else (v, u)
    allowed |= (1 << s) | (1 << t)
    layers = _bfs_layers(G, s, allowed, t)
    if not layers[-1] >> t & 1:
        return None
    path = _walk_back(G, layers, t)
    return path if s == u else path[::-1]


def shortest_path(G: Graph, u: int, v: int) -> tuple[int, ...] | None:
    """Canonical shortest ``uv``-path of ``G``, or ``None`` if disconnected.

    Examples
    --------
    >>> G = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    >>> shortest_path(G, 0, 3)
    (0, 1, 2, 3)
    >>> shortest_path(G, 3, 0)
    (3, 2, 1, 0)
    """
    _check_ids(G, (u, v))
    return shortest_path_within(G, u, v, G.full_mask)


class PathTable:
    """All-pairs distances and canonical shortest paths.

    ``dist[u][v]`` is ``math.inf`` for disconnected pairs.  ``path(u, v)``
    returns the canonical path oriented from ``u`` to ``v``.
    """

    def __init__(self, G: Graph):
        n = G.n
        self.n = n
        self.dist: list[list[float]] = [[math.inf] * n for _ in range(n)]
        self._paths: dict[tuple[int, int], tuple[int, ...]] = {}
        self._masks: dict[tuple[int, int], int] = {}
        for s in range(n):
            layers = _bfs_layers(G, s, G.full_mask)
            row = self.dist[s]
            for d, layer in enumerate(layers):
                for t in iter_bits(layer):
                    row[t] = d
                    if t >= s:
                        p = _walk_back(G, layers, t)
                        self._paths[(s, t)] = p
                        self._masks[(s, t)] = mask_of(p)

    def path(self, u: int, v: int) -> tuple[int, ...] | None:
        if u <= v:
            return self._paths.get((u, v))
        p = self._paths.get((v, u))
        return None if p is None else p[::-1]

    def path_mask(self, u: int, v: int) -> int:
        """Bitset of the canonical path's vertices (0 if disconnected)."""
        return self._masks.get((u, v) if u <= v else (v, u), 0)

    def length(self, u: int, v: int) -> float:
        return self.dist[u][v]


def apsp(G: Graph) -> PathTable:
    return PathTable(G)


# --------------------------------------------------------------------------
# induced paths and holes


def is_induced_path(G: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` is a path of ``G`` with no chords."""
    if not seq:
        return False
    if len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < G.n for v in seq):
        return False
    pos = {v: i for i, v in enumerate(seq)}
    for i, v in enumerate(seq):
        for w in G.adj[v]:
            j = pos.get(w)
            if j is not None and abs(i - j) != 1:
                return False
        if i + 1 < len(seq) and not G.has_edge(v, seq[i + 1]):
            return False
    return True


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect a cyclic sequence to start at its minimum, heading
    toward the smaller of the two neighbors."""
    k = len(seq)
    i = min(range(k), key=seq.__getitem__)
    fwd = tuple(seq[(i + j) % k] for j in range(k))
    if k > 2 and fwd[-1] < fwd[1]:
        return (fwd[0],) + fwd[:0:-1]
    return fwd


@dataclass(frozen=True, order=True)
class Hole:
    """An induced cycle of length at least four, stored canonically.

    Ordering is by length, then lexicographically by the canonical cycle.
    Construct through :func:`validate_hole` unless the input is known valid.
    """

    length: int
    cycle: tuple[int, ...]

    @classmethod
    def from_cycle(cls, seq: Sequence[int]) -> "Hole":
        c = canonical_cycle(seq)
        return cls(len(c), c)

    @property
    def is_even(self) -> bool:
        return self.length % 2 == 0

    @property
    def mask(self) -> int:
        return mask_of(self.cycle)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.cycle)

    def index(self, v: int) -> int:
        return self.cycle.index(v)

    def lift(self, parent_ids: Sequence[int]) -> "Hole":
        return Hole.from_cycle([parent_ids[v] for v in self.cycle])

    def one_indexed(self) -> list[int]:
        return [v + 1 for v in self.cycle]


def validate_hole(G: Graph, seq: Sequence[int]) -> Hole | None:
    """Return the canonical Hole if ``seq`` is an induced cycle of length
    at least four in ``G``; otherwise ``None``."""
    k = len(seq)
    if k < 4 or len(set(seq)) != k:
        return None
    if any(not 0 <= v < G.n for v in seq):
        return None
    cyc = mask_of(seq)
    for i, v in enumerate(seq):
        inside = G.masks[v] & cyc
        if inside != (1 << seq[i - 1]) | (1 << seq[(i + 1) % k]):
            return None
    return Hole.from_cycle(seq)


def hole_from_mask(G: Graph, mask: int) -> Hole | None:
    """The hole induced by a vertex set, or ``None`` if ``G[mask]`` is not
    a single induced cycle of length at least four."""
    verts = list(iter_bits(mask))
    if len(verts) < 4:
        return None
    if any((G.masks[v] & mask).bit_count() != 2 for v in verts):
        return None
    seq = [verts[0]]
    prev, cur = -1, verts[0]
    while True:
        a, b = iter_bits(G.masks[cur] & mask)
        nxt = b if a == prev else a
        if nxt == verts[0]:
            break
        seq.append(nxt)
        prev, cur = cur, nxt
    if len(seq) != len(verts):
        return None
    return Hole.from_cycle(seq)


def is_even_hole(G: Graph, seq: Sequence[int]) -> bool:
    h = validate_hole(G, seq)
    return h is not None and h.is_even
