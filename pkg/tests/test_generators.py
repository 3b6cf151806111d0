from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from evenhole import oracle
from evenhole.generators import (
    GenSpec,
    XorShift64Star,
    expected_flags,
    generate,
    render_spec,
    splitmix64,
    theta,
)
from evenhole.graph import Graph, Hole, load_graph


def xorshift_reference(seed, count):
    """Independent transcription of the documented generator."""
    M = 2**64
    x = (seed + 0x9E3779B97F4A7C15) % M
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) % M
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) % M
    x ^= x >> 31
    out = []
    for _ in range(count):
        x ^= x >> 12
        x ^= (x << 25) % M
        x ^= x >> 27
        out.append(x * 0x2545F4914F6CDD1D % M)
    return out


def test_rng_matches_reference():
    for seed in (0, 1, 7, 2**63):
        rng = XorShift64Star(seed)
        assert [rng.next() for _ in range(20)] == xorshift_reference(seed, 20)


def test_splitmix_known_value():
    # first output of the public-domain splitmix64 with state 0
    assert splitmix64(0) == 0xE220A8397B1DCDAF


def test_theta_223():
    G = theta(2, 2, 3)
    assert G.n == 6
    counts = Counter(h.length for h in oracle.enumerate_induced_cycles(G))
    assert counts == {4: 1, 5: 2}
    assert oracle.shortest_even_hole_brute(G).length == 4


def test_cycle26():
    assert [h.length for h in oracle.enumerate_induced_cycles(generate(GenSpec("cycle", (26,))))] == [26]


@pytest.mark.parametrize("seed", [0, 5, 99])
def test_plant12_ignores_seed(seed, plant12):
    assert generate(GenSpec("shortcut_plant", (12, 3, seed))) == plant12


@given(st.integers(24, 34).filter(lambda k: k % 2 == 0), st.integers(0, 6), st.integers(0, 10**6))
def test_decorated_long(k, extras, seed):
    G = generate(GenSpec("decorated_long", (k, extras, seed)))
    assert G.n == k + extras and G.num_edges == k + extras
    assert [h.cycle for h in oracle.enumerate_induced_cycles(G)] == [tuple(range(k))]


@pytest.mark.parametrize("k", [10, 12, 14])
def test_plant_flags(k):
    spec = GenSpec("shortcut_plant", (k, 3, 0))
    assert oracle.graph_status(generate(spec)).as_dict() == expected_flags(spec)


def test_er_deterministic_and_density():
    a = generate(GenSpec("er", (40, 1, 2, 11)))
    assert a == generate(GenSpec("er", (40, 1, 2, 11)))
    assert a != generate(GenSpec("er", (40, 1, 2, 12)))
    assert 300 < a.num_edges < 480
    assert generate(GenSpec("er", (6, 0, 3, 1))).num_edges == 0
    assert generate(GenSpec("er", (6, 3, 3, 1))).num_edges == 15


def test_er_reference_edges():
    n, num, den, seed = 9, 3, 10, 4
    draws = iter(xorshift_reference(seed, n * (n - 1) // 2))
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if next(draws) % den < num]
    assert generate(GenSpec("er", (n, num, den, seed))) == Graph(n, edges)


def test_spec_text():
    spec = GenSpec.parse("er:12:1/3:7")
    assert spec == GenSpec("er", (12, 1, 3, 7))
    assert spec.comment() == "gen er 12 1/3 7"
    assert spec.name == "er-12-1o3-7"
    assert GenSpec.parse("theta:2:2:3").comment() == "gen theta 2 2 3"
    text = render_spec(spec)
    assert text.startswith("c gen er 12 1/3 7\n")
    assert load_graph(text) == generate(spec)


@pytest.mark.parametrize(
    "text",
    ["cycle:2", "theta:1:1:3", "shortcut_plant:11:3:0", "shortcut_plant:12:1:0", "decorated_long:22:1:0",
     "er:5:4/3:1", "er:5:1", "wheel:5", "cycle:x"],
)
def test_invalid_specs(text):
    with pytest.raises(ValueError):
        GenSpec.parse(text)


def test_render_is_stable():
    spec = GenSpec("decorated_long", (24, 3, 9))
    assert render_spec(spec) == render_spec(GenSpec.parse(spec.comment()[4:].replace(" ", ":")))
