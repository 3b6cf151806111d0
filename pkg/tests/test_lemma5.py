import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from evenhole import oracle
from evenhole.generators import cycle, decorated_long, shortcut_plant
from evenhole.graph import Graph, Hole, apsp, is_induced_path, validate_hole
from evenhole.lemma5 import (
    NotLongError,
    PairQuery,
    anchor_paths,
    build_pair_query,
    eight_split,
    eight_split_lengths,
    run_lemma5,
)

from .conftest import cycle_plus


def eight_arc_decomposable(G, T, h):
    """Can hole ``h`` be cut into 8 arcs, each of length >= 3 and each the
    canonical shortest path between its ends?  Dynamic programming over
    start positions and arc counts."""
    c = h.cycle
    k = len(c)

    def canonical_arc(i, j):
        arc = tuple(c[(i + s) % k] for s in range((j - i) % k + 1))
        return len(arc) >= 4 and T.path(arc[0], arc[-1]) == arc

    for start in range(k):
        frontier = {0}
        for _ in range(8):
            nxt = set()
            for off in frontier:
                for step in range(3, k - off + 1):
                    if canonical_arc((start + off) % k, (start + off + step) % k):
                        nxt.add(off + step)
            frontier = nxt
        if k in frontier:
            return True
    return False


def eight_arc_oracle(G):
    T = apsp(G)
    best = None
    for h in oracle.enumerate_induced_cycles(G):
        if h.is_even and h.length >= 24 and (best is None or h < best):
            if eight_arc_decomposable(G, T, h):
                best = h
    return best


@st.composite
def decorated_cycles(draw):
    k = draw(st.integers(24, 30))
    extras = draw(st.lists(st.sets(st.integers(0, k - 1), min_size=1, max_size=3), max_size=3))
    return cycle_plus(k, [sorted(s) for s in extras])


class TestEightSplit:
    def test_uniform(self):
        s = eight_split(Hole.from_cycle(range(24)))
        assert (s.a, s.b) == (3, 0)
        assert s.arc_lengths == (3,) * 8
        assert s.anchors == (0, 3, 6, 9, 12, 15, 18, 21)

    def test_26(self):
        arcs, a, b = eight_split_lengths(26)
        assert (a, b) == (3, 2)
        assert arcs == (4, 3, 3, 3, 4, 3, 3, 3)
        assert max(arcs[i] + arcs[(i + 1) % 8] for i in range(8)) <= 7

    @pytest.mark.parametrize("n", [23, 22, 25])
    def test_rejects(self, n):
        with pytest.raises(ValueError):
            eight_split(Hole.from_cycle(range(n)))

    @given(st.integers(24, 400).filter(lambda n: n % 2 == 0))
    def test_invariants(self, n):
        s = eight_split(Hole.from_cycle(range(n)))
        assert set(s.arc_lengths) <= {s.a, s.a + 1}
        assert sum(s.arc_lengths) == n == 8 * s.a + s.b
        assert all(s.arc_lengths[i] + s.arc_lengths[(i + 1) % 8] <= s.adjacent_sum_bound for i in range(8))


class TestPairQuery:
    def test_c6(self):
        G = cycle(6)
        pq = build_pair_query(G)
        assert pq.joins_as_path(0, 2, 4)
        assert not pq.is_disconnected(0, 2, 3, 5)

    def test_c26(self):
        pq = build_pair_query(cycle(26))
        assert pq.is_disconnected(0, 3, 10, 13)
        assert not pq.is_disconnected(0, 3, 4, 7)
        assert not pq.joins_as_path(0, 13, 0)

    def test_disconnected_pairs(self):
        G = Graph(4, [(0, 1), (2, 3)])
        pq = build_pair_query(G)
        assert not pq.joins_as_path(0, 1, 2)
        assert not pq.is_disconnected(0, 2, 1, 3)

    def test_random_against_direct(self):
        rng = random.Random(3)
        G = cycle_plus(14, [(0, 3), (5, 9, 11)])
        T = apsp(G)
        pq = PairQuery(G, T)
        for _ in range(2000):
            u, v, w, x = (rng.randrange(G.n) for _ in range(4))
            a, b = T.path(u, v), T.path(v, w)
            union = set(a) | set(b)
            direct = len(union) == len(a) + len(b) - 1 and is_induced_path(G, a + b[1:])
            assert pq.joins_as_path(u, v, w) == direct
            c = T.path(w, x)
            disc = not (set(a) & set(c)) and not any(G.has_edge(p, q) for p in a for q in c)
            assert pq.is_disconnected(u, v, w, x) == disc


class TestSearch:
    def test_c26(self):
        assert run_lemma5(cycle(26)) == Hole.from_cycle(range(26))

    def test_c25(self):
        assert run_lemma5(cycle(25)) is None

    def test_pendant(self):
        G = Graph(27, [(i, (i + 1) % 26) for i in range(26)] + [(0, 26)])
        st_ = oracle.graph_status(G, force=True)
        assert st_.shortest_even_length == 26 and not st_.is_bad
        assert run_lemma5(G) == Hole.from_cycle(range(26))

    def test_rejects_short_graphs(self):
        with pytest.raises(NotLongError):
            run_lemma5(cycle(8))
        with pytest.raises(NotLongError):
            run_lemma5(cycle(26), long_certificate=False)

    def test_bad_plant(self):
        # anchors that avoid the 0-3 stretch still rebuild the 26-hole
        G = shortcut_plant(26, 3)
        assert run_lemma5(G) == eight_arc_oracle(G) == Hole.from_cycle(range(26))

    @pytest.mark.parametrize("k, extras, seed", [(24, 3, 1), (26, 5, 2), (28, 8, 3)])
    def test_proof_step(self, k, extras, seed):
        G = decorated_long(k, extras, seed)
        T = apsp(G)
        pq = PairQuery(G, T)
        C = Hole.from_cycle(range(k))
        split = eight_split(C)
        paths = anchor_paths(T, split.anchors)
        assert [len(p) - 1 for p in paths] == list(split.arc_lengths)
        a = split.anchors
        for i in range(8):
            assert pq.joins_as_path(a[i], a[(i + 1) % 8], a[(i + 2) % 8])
            assert is_induced_path(G, paths[i] + paths[(i + 1) % 8][1:])
        assert run_lemma5(G).length == k

    @given(decorated_cycles())
    def test_matches_eight_arc_oracle(self, G):
        got = run_lemma5(G, long_certificate=True)
        assert got == eight_arc_oracle(G)
        if got is not None:
            assert validate_hole(G, got.cycle) == got and got.is_even
