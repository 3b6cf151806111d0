"""Harvest (graph, shortest even hole, shallow worst shortcut) triples from
planted instances and check them; prints one row per triple."""

import argparse

from evenhole import oracle
from evenhole.corpus import plant_specs
from evenhole.generators import generate
from evenhole.graph import apsp
from evenhole.holes import hole_arcs
from evenhole.lemma4 import quad_candidate


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=108)
    args = ap.parse_args()
    total = failures = 0
    print(f"{'instance':24} {'|P|':>3} {'|C1|':>4} {'|Puv|':>5} {'|Pxy|':>5} {'|Q|':>4} {'|C2|':>4} ok")
    for spec in plant_specs(range(10, args.kmax + 1, 2)):
        G = generate(spec)
        T = apsp(G)
        for C, P in oracle.harvest_lemma6_triples(G, force=True):
            u, v = P[0], P[-1]
            c1, c2 = hole_arcs(C, u, v)
            cand = quad_candidate(G, T, u, c1[1], v, c1[-2])
            q = len(cand.q) - 1 if cand.q else None
            ok = not oracle.check_lemma6(G, C, P)
            total += 1
            failures += not ok
            print(
                f"{spec.name:24} {len(P) - 1:>3} {len(c1) - 1:>4} {len(cand.p_uv) - 1:>5}"
                f" {len(cand.p_xy) - 1:>5} {q!s:>4} {len(c2) - 1:>4} {ok}"
            )
    print(f"{total} triples, {failures} with violations")


if __name__ == "__main__":
    main()
