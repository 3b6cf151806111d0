"""End-to-end driver: existence check, bounded search, cleaning, then the
two polynomial procedures on every cleaned subgraph.

The cleaning step that produces polynomially many induced subgraphs, one
of them shallow and holding a shortest even hole, is not implemented here.
It is a pluggable :class:`CleaningProvider`; the trivial provider returns
``G`` itself.  When no provider subgraph keeps its promise the driver says
``UNRESOLVED`` instead of guessing.
"""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from . import oracle
from .graph import Graph, Hole, induced_subgraph, validate_hole
from .lemma4 import run_lemma4
from .lemma5 import run_lemma5

SUBSETS_MAX_N = 18


class ProviderError(ValueError):
    pass


# --------------------------------------------------------------------------
# cleaning providers


class CleaningProvider:
    """Yields vertex subsets of ``G``; each induces one candidate subgraph."""

    name = "provider"

    def subsets(self, G: Graph) -> Iterator[tuple[int, ...]]:
        raise NotImplementedError

    def __call__(self, G: Graph) -> list[tuple[int, ...]]:
        out = []
        for S in self.subsets(G):
            S = tuple(sorted(set(S)))
            if any(not 0 <= v < G.n for v in S):
                raise ProviderError(f"{self.name}: subset has a vertex outside 1..{G.n}")
            out.append(S)
        return out


class TrivialProvider(CleaningProvider):
    name = "trivial"

    def subsets(self, G):
        yield tuple(range(G.n))


class SubsetsProvider(CleaningProvider):
    """Every vertex subset of size at least four, by size then lexicographically."""

    def __init__(self, max_n: int = SUBSETS_MAX_N):
        self.max_n = min(max_n, SUBSETS_MAX_N)
        self.name = f"subsets:{max_n}"

    def subsets(self, G):
        if G.n > self.max_n:
            raise ProviderError(f"subsets provider refuses n={G.n} > {self.max_n}")
        for k in range(4, G.n + 1):
            yield from itertools.combinations(range(G.n), k)


class FileProvider(CleaningProvider):
    """Subsets read from a file: one subset per line, 1-indexed ids,
    blank lines and ``c`` comments skipped."""

    def __init__(self, path):
        self.path = Path(path)
        self.name = f"file:{path}"
        try:
            text = self.path.read_text(encoding="ascii")
        except OSError as exc:
            raise ProviderError(f"cannot read provider file {path}: {exc}") from None
        self._rows = parse_subsets(text)

    def subsets(self, G):
        for S in self._rows:
            yield tuple(v - 1 for v in S)


def parse_subsets(text: str) -> list[tuple[int, ...]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        try:
            ids = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ProviderError(f"line {lineno}: non-integer vertex id") from None
        if any(v < 1 for v in ids):
            raise ProviderError(f"line {lineno}: vertex ids are 1-indexed")
        rows.append(ids)
    return rows


def make_provider(spec: str) -> CleaningProvider:
    """``trivial``, ``subsets`` / ``subsets:<max_n>`` or ``file:<path>``."""
    kind, _, arg = spec.partition(":")
    if kind == "trivial" and not arg:
        return TrivialProvider()
    if kind == "subsets":
        try:
            return SubsetsProvider(int(arg) if arg else SUBSETS_MAX_N)
        except ValueError:
            raise ProviderError(f"bad subsets bound {arg!r}") from None
    if kind == "file" and arg:
        return FileProvider(arg)
    raise ProviderError(f"unknown provider {spec!r}")


# --------------------------------------------------------------------------
# verdicts


class Status(str, enum.Enum):
    FOUND = "found"
    NO_EVEN_HOLE = "no_even_hole"
    UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class SubgraphRun:
    subset: tuple[int, ...]
    lemma4: Hole | None
    lemma5: Hole | None
    long: bool

    def as_dict(self) -> dict:
        def h(x):
            return None if x is None else x.one_indexed()

        return {
            "subset_size": len(self.subset),
            "lemma4": h(self.lemma4),
            "lemma5": h(self.lemma5),
            "long": self.long,
        }


@dataclass(frozen=True)
class Verdict:
    status: Status
    hole: Hole | None = None
    stage: str | None = None
    long_certificate: bool | None = None
    runs: tuple[SubgraphRun, ...] = field(default=())
    reason: str | None = None

    @property
    def length(self) -> int | None:
        return None if self.hole is None else self.hole.length


def _run_subgraph(G: Graph, S: tuple[int, ...]) -> SubgraphRun:
    sub = induced_subgraph(G, S)
    H = sub.graph
    # an induced subgraph of a long graph is long
    h4 = run_lemma4(H)
    h5 = run_lemma5(H, long_certificate=True)
    lift = lambda h: None if h is None else h.lift(sub.parent_ids)  # noqa: E731
    return SubgraphRun(S, lift(h4), lift(h5), True)


def shortest_even_hole(
    G: Graph,
    provider: CleaningProvider | None = None,
    L: int = oracle.LONG_THRESHOLD,
    workers: int = 1,
) -> Verdict:
    """Shortest even hole of ``G``, ``NO_EVEN_HOLE``, or ``UNRESOLVED``.

    1. no even hole at all gives ``NO_EVEN_HOLE``;
    2. an even hole on at most ``L`` vertices is found directly;
    3. otherwise ``G`` is long, and the quadruple and eight-anchor searches run on
       every provider subgraph; the shortest verified hole wins.

    A ``FOUND`` hole is always an even hole of ``G``.  It is a shortest one
    whenever some provider subgraph is shallow and contains a shortest even
    hole of ``G``.
    """
    if provider is None:
        provider = TrivialProvider()
    if not oracle.has_even_hole(G):
        return Verdict(Status.NO_EVEN_HOLE, stage="existence")
    short = oracle.bounded_shortest_even_hole(G, L)
    if short is not None:
        return Verdict(Status.FOUND, short, stage="bounded", long_certificate=False)
    subsets = provider(G)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            runs = tuple(pool.map(lambda S: _run_subgraph(G, S), subsets))
    else:
        runs = tuple(_run_subgraph(G, S) for S in subsets)
    best = None
    best_stage = None
    for run in runs:
        for stage, h in (("lemma4", run.lemma4), ("lemma5", run.lemma5)):
            if h is None:
                continue
            if validate_hole(G, h.cycle) != h or not h.is_even:
                raise AssertionError(f"{stage} produced a non-hole {h.cycle}")
            if best is None or h < best:
                best, best_stage = h, stage
    if best is None:
        return Verdict(
            Status.UNRESOLVED,
            stage="cleaned",
            long_certificate=True,
            runs=runs,
            reason="no provider subgraph yielded an even hole; its shallow promise failed",
        )
    return Verdict(Status.FOUND, best, stage=best_stage, long_certificate=True, runs=runs)
