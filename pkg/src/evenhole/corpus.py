"""Named corpora shared by the test suite, the bench harness and scripts."""

from __future__ import annotations

from .generators import GenSpec

ER_PROBS = ((1, 5), (3, 10), (1, 2))


def er_specs(count: int = 1000) -> list[GenSpec]:
    """``count`` ER graphs cycling through n = 4..12 and p in {0.2, 0.3, 0.5}."""
    out = []
    for i in range(count):
        n = 4 + i % 9
        num, den = ER_PROBS[(i // 9) % 3]
        out.append(GenSpec("er", (n, num, den, i)))
    return out


def cycle_specs(lo: int = 4, hi: int = 22) -> list[GenSpec]:
    return [GenSpec("cycle", (n,)) for n in range(lo, hi + 1)]


def theta_specs(top: int = 5) -> list[GenSpec]:
    """Sorted triples a <= b <= c <= top with at most one path of length 1."""
    return [
        GenSpec("theta", (a, b, c))
        for a in range(1, top + 1)
        for b in range(max(a, 2), top + 1)
        for c in range(b, top + 1)
    ]


def plant_specs(ks=range(10, 17, 2), d: int = 3, seed: int = 0) -> list[GenSpec]:
    return [GenSpec("shortcut_plant", (k, d, seed)) for k in ks]


def decorated_specs(count: int = 50) -> list[GenSpec]:
    """``count`` decorated long cycles, k even in 24..40, 1..8 pendant vertices."""
    ks = range(24, 41, 2)
    return [GenSpec("decorated_long", (ks[i % len(ks)], 1 + i % 8, i)) for i in range(count)]


def small_corpus() -> list[GenSpec]:
    """Acceptance corpus for the bounded search and quadruple-search checks."""
    return er_specs() + cycle_specs() + theta_specs()


def long_corpus() -> list[GenSpec]:
    return (
        [GenSpec("cycle", (k,)) for k in (24, 25, 26, 27, 30)]
        + plant_specs(range(24, 33, 2))
        + [GenSpec("shortcut_plant", (26, 5, 0)), GenSpec("shortcut_plant", (28, 7, 0))]
        + decorated_specs(12)
    )
