import random

import networkx as nx
import pytest

from minorspec.graphs import CapacityError, Graph, complete, from_graph6, to_graph6


def random_graph(n, p, rng):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def to_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def test_round_trip_random():
    rng = random.Random(20240917)
    for _ in range(1000):
        n = rng.randrange(0, 17)
        g = random_graph(n, rng.random(), rng)
        s = to_graph6(g)
        assert from_graph6(s) == g
        assert to_graph6(from_graph6(s)) == s


def test_matches_networkx_encoding():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randrange(1, 13)
        g = random_graph(n, rng.random(), rng)
        expect = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
        assert to_graph6(g) == expect


def test_decodes_networkx_output():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randrange(1, 13)
        g = random_graph(n, rng.random(), rng)
        blob = nx.to_graph6_bytes(to_networkx(g), header=True).decode()
        assert from_graph6(blob) == g


def test_large_order_prefix():
    g = complete(63)
    s = to_graph6(g)
    assert s.startswith("~")
    assert from_graph6(s) == g
    g64 = Graph.empty(64)
    assert from_graph6(to_graph6(g64)) == g64


def test_known_strings():
    assert to_graph6(complete(5)) == "D~{"
    assert from_graph6("D~{") == complete(5)
    assert to_graph6(Graph.empty(0)) == "?"


def test_malformed_inputs():
    with pytest.raises(ValueError):
        from_graph6("")
    with pytest.raises(ValueError):
        from_graph6("D~")  # truncated body
    with pytest.raises(ValueError):
        from_graph6("D~{{")  # overlong body
    with pytest.raises(ValueError):
        from_graph6("\x1f")  # character below 63
    with pytest.raises(CapacityError):
        from_graph6("~?@c")  # declares n=100, beyond the 64-vertex capacity


def test_extended_header_zero():
    # 18-bit header is legal for any n it can express; n=0 round-trips
    assert from_graph6("~???") == Graph.empty(0)


def test_padding_bits_must_be_zero():
    # n=5 packs 10 triangle bits into 12, leaving 2 padding bits in the tail
    s = to_graph6(Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]))
    tampered = s[:-1] + chr((((ord(s[-1]) - 63) | 1) + 63))
    assert tampered != s
    with pytest.raises(ValueError):
        from_graph6(tampered)
