"""Time the eight-anchor search on cycles, decorated cycles and plants."""

import argparse
import time

from evenhole.generators import GenSpec, generate
from evenhole.lemma5 import run_lemma5


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=40)
    args = ap.parse_args()
    ks = range(24, args.kmax + 1, 2)
    specs = (
        [GenSpec("cycle", (k,)) for k in ks]
        + [GenSpec("decorated_long", (k, 6, k)) for k in ks]
        + [GenSpec("shortcut_plant", (k, 3, 0)) for k in ks if k <= 32]
    )
    print(f"{'instance':28} {'n':>4} {'length':>6} {'seconds':>8}")
    for spec in specs:
        G = generate(spec)
        t0 = time.perf_counter()
        h = run_lemma5(G, long_certificate=True)
        dt = time.perf_counter() - t0
        print(f"{spec.name:28} {G.n:>4} {str(h and h.length):>6} {dt:>8.3f}")


if __name__ == "__main__":
    main()
