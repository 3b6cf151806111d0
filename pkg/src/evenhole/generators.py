"""Deterministic graph corpus.

Random choices come from :class:`XorShift64Star`, fixed here so that a
``(model, params, seed)`` triple produces the same graph file everywhere:

* seeding: ``state = splitmix64(seed)`` (``0`` is replaced by the golden
  ratio constant ``0x9E3779B97F4A7C15``);
* step: ``x ^= x >> 12; x ^= x << 25; x ^= x >> 27`` (64-bit), output
  ``x * 0x2545F4914F6CDD1D mod 2**64``.

``er(n, num, den, seed)`` visits pairs ``(i, j)``, ``i < j``, in lexicographic
order and keeps the edge iff ``next() % den < num``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, render_graph

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK64) or 0x9E3779B97F4A7C15

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def below(self, bound: int) -> int:
        return self.next() % bound


MODELS = ("cycle", "er", "theta", "shortcut_plant", "decorated_long")


@dataclass(frozen=True)
class GenSpec:
    """A generator model and its integer parameters.

    ``er`` takes ``(n, num, den, seed)`` for ``p = num/den``; ``cycle``
    takes ``(n,)``; ``theta`` ``(a, b, c)``; ``shortcut_plant``
    ``(k, d, seed)``; ``decorated_long`` ``(k, extras, seed)``.
    """

    model: str
    params: tuple[int, ...]

    def __post_init__(self):
        _validate(self)

    @classmethod
    def parse(cls, text: str) -> "GenSpec":
        """Parse ``model:p1:p2:...``; ``er`` accepts ``er:12:1/3:7``."""
        head, _, rest = text.strip().partition(":")
        fields = [f for f in rest.split(":") if f] if rest else []
        params: list[int] = []
        try:
            for f in fields:
                if "/" in f:
                    num, den = f.split("/")
                    params.extend((int(num), int(den)))
                else:
                    params.append(int(f))
        except ValueError:
            raise ValueError(f"bad generator spec {text!r}") from None
        return cls(head, tuple(params))

    def comment(self) -> str:
        if self.model == "er":
            n, num, den, seed = self.params
            return f"gen er {n} {num}/{den} {seed}"
        return "gen " + " ".join([self.model, *map(str, self.params)])

    @property
    def name(self) -> str:
        if self.model == "er":
            n, num, den, seed = self.params
            return f"er-{n}-{num}o{den}-{seed}"
        return "-".join([self.model, *map(str, self.params)])


def _validate(spec: GenSpec) -> None:
    m, p = spec.model, spec.params
    arity = {"cycle": 1, "er": 4, "theta": 3, "shortcut_plant": 3, "decorated_long": 3}
    if m not in arity:
        raise ValueError(f"unknown model {m!r}; expected one of {', '.join(MODELS)}")
    if len(p) != arity[m]:
        raise ValueError(f"{m} takes {arity[m]} integer parameters, got {len(p)}")
    if m == "cycle" and p[0] < 3:
        raise ValueError("cycle needs n >= 3")
    if m == "er":
        n, num, den, _ = p
        if n < 0 or den <= 0 or not 0 <= num <= den:
            raise ValueError("er needs n >= 0 and 0 <= num/den <= 1")
    if m == "theta":
        if min(p) < 1 or sum(1 for x in p if x == 1) > 1:
            raise ValueError("theta needs a, b, c >= 1 with at most one equal to 1")
    if m == "shortcut_plant":
        k, d, _ = p
        if k < 10 or k % 2 or d < 2 or d > k // 2:
            raise ValueError("shortcut_plant needs even k >= 10 and 2 <= d <= k/2")
    if m == "decorated_long":
        k, extras, _ = p
        if k < 24 or k % 2 or extras < 0:
            raise ValueError("decorated_long needs even k >= 24 and extras >= 0")


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def er(n: int, num: int, den: int, seed: int) -> Graph:
    """Erdos-Renyi graph with edge probability ``num/den`` (pair used as
    given, not reduced)."""
    rng = XorShift64Star(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.below(den) < num]
    return Graph(n, edges)


def theta(a: int, b: int, c: int) -> Graph:
    """Terminals 0 and 1 joined by internally disjoint paths of lengths a, b, c."""
    edges = []
    nxt = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph(nxt, edges)


def shortcut_plant(k: int, d: int, seed: int = 0) -> Graph:
    """``C_k`` plus a vertex ``k`` adjacent to hole vertices ``0`` and ``d``.

    ``seed`` is recorded in the file comment only.
    """
    return Graph(k + 1, [(i, (i + 1) % k) for i in range(k)] + [(0, k), (d, k)])


def decorated_long(k: int, extras: int, seed: int) -> Graph:
    """``C_k`` with ``extras`` pendant-tree vertices; vertex ``k + i`` hangs
    off a uniformly drawn earlier vertex, so no new cycle appears."""
    rng = XorShift64Star(seed)
    edges = [(i, (i + 1) % k) for i in range(k)]
    for i in range(extras):
        v = k + i
        edges.append((rng.below(v), v))
    return Graph(k + extras, edges)


def generate(spec: GenSpec) -> Graph:
    m, p = spec.model, spec.params
    if m == "cycle":
        return cycle(*p)
    if m == "er":
        return er(*p)
    if m == "theta":
        return theta(*p)
    if m == "shortcut_plant":
        return shortcut_plant(*p)
    return decorated_long(*p)


def render_spec(spec: GenSpec) -> str:
    return render_graph(generate(spec), [spec.comment()])


def expected_flags(spec: GenSpec) -> dict | None:
    """Oracle flags a planted instance is built to have (``d = 3`` only)."""
    if spec.model == "shortcut_plant" and spec.params[1] == 3:
        k = spec.params[0]
        return {
            "has_even_hole": True,
            "shortest_even_length": k,
            "is_long": k > 22,
            "is_bad": True,
            "is_shallow": True,
            "is_anti_shallow": False,
        }
    return None
