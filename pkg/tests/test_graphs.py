import itertools

import networkx as nx
import pytest

from cliquex import (
    Graph,
    Graph6Error,
    Graph6HeaderError,
    Graph6PaddingError,
    Graph6TrailingError,
    Graph6TruncatedError,
    canonical_form,
    canonical_graph,
    construct_bridge,
    construct_krt,
    from_edge_list,
    from_graph6,
    is_isomorphic,
    to_graph6,
)
from conftest import random_connected_graph, random_graph

PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
]


# ── value semantics ───────────────────────────────────────────────


def test_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError, match="asymmetric"):
        Graph(2, (0b10, 0b00))


def test_rejects_self_loop():
    with pytest.raises(ValueError, match="self-loop"):
        Graph(1, (0b1,))
    with pytest.raises(ValueError, match="self-loop"):
        Graph.from_edges(3, [(1, 1)])


def test_rejects_out_of_range():
    with pytest.raises(ValueError):
        Graph(1, (0b10,))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 5)])
    with pytest.raises(ValueError):
        Graph(65, (0,) * 65)


def test_random_graphs_stay_symmetric_irreflexive(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 16))
        for u in range(g.n):
            assert not g.has_edge(u, u)
            for v in range(g.n):
                assert g.has_edge(u, v) == g.has_edge(v, u)
        assert sum(g.degrees()) == 2 * g.m


# ── degrees and subgraphs ─────────────────────────────────────────


def test_degree_sequence_examples():
    assert Graph.complete(4).degree_sequence() == (3, 3, 3, 3)
    assert construct_krt(4, 2).degree_sequence() == (4, 4, 3, 3, 2)
    assert Graph.star(5).degree_sequence() == (4, 1, 1, 1, 1)


def test_connectivity_examples():
    k3_plus_isolated = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
    assert not k3_plus_isolated.is_connected()
    assert Graph.path(6).is_connected()
    c6_minus_edge = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(5)])
    assert c6_minus_edge.is_connected()


def test_induced_subgraph_examples():
    assert is_isomorphic(Graph.complete(5).induced_subgraph([0, 2, 4]), Graph.complete(3))
    assert is_isomorphic(Graph.cycle(5).induced_subgraph([1, 2, 3]), Graph.path(3))
    krt = construct_krt(4, 2)
    assert is_isomorphic(krt.induced_subgraph(range(4)), Graph.complete(4))


def test_induced_subgraph_errors():
    with pytest.raises(ValueError):
        Graph.complete(3).induced_subgraph([])
    with pytest.raises(ValueError):
        Graph.complete(3).induced_subgraph([0, 3])


def test_articulation_examples():
    assert Graph.path(3).articulation_points() == frozenset({1})
    assert Graph.cycle(5).articulation_points() == frozenset()
    b43 = construct_bridge(4, 3, 0)
    cuts = b43.articulation_points()
    assert len(cuts) == 1
    (cut,) = cuts
    assert b43.degree(cut) == max(b43.degrees())


def test_articulation_rejects_disconnected():
    with pytest.raises(ValueError):
        Graph.empty(3).articulation_points()


def test_articulation_matches_bruteforce(rng):
    for _ in range(300):
        g = random_connected_graph(rng, rng.randint(2, 9), 0.35)
        brute = frozenset(
            v for v in range(g.n) if g.n > 1 and not g.remove_vertex(v).is_connected()
        )
        assert g.articulation_points() == brute


# ── graph6 ────────────────────────────────────────────────────────


def test_graph6_hand_encodings():
    assert to_graph6(Graph.complete(1)) == "@"
    assert to_graph6(Graph.complete(3)) == "Bw"
    # order-3 records are one header byte plus one data byte
    rec = to_graph6(Graph.path(3))
    assert rec.startswith("B") and len(rec) == 2


def test_graph6_round_trip_named():
    for text in ["D?{", "@", "Bw", "?"]:
        assert to_graph6(from_graph6(text)) == text
    g = from_graph6("D?{")
    assert (g.n, g.m) == (5, 4)


def test_graph6_optional_prefix():
    assert from_graph6(">>graph6<<Bw") == Graph.complete(3)


def test_graph6_parse_errors_are_distinct():
    with pytest.raises(Graph6HeaderError):
        from_graph6("")
    with pytest.raises(Graph6HeaderError):
        from_graph6("~~??????")  # 8-byte order form is beyond the cap
    with pytest.raises(Graph6Error):
        from_graph6("B\x1f")  # right length, data byte below the alphabet
    with pytest.raises(Graph6TruncatedError):
        from_graph6("D?")
    with pytest.raises(Graph6TrailingError):
        from_graph6("Bw?")
    # zero-padding tail must actually be zero
    with pytest.raises(Graph6PaddingError):
        from_graph6("B`")
    with pytest.raises(Graph6PaddingError):
        from_graph6("Bc")
    with pytest.raises(Graph6HeaderError):
        n65 = "~" + chr(63) + chr(63 + 1) + chr(63 + 1)  # order 65
        from_graph6(n65)


def test_graph6_b_underscore_is_a_valid_record():
    # all three padding bits of "B_" are zero, so it decodes fine:
    # one edge 0-1 plus an isolated vertex
    g = from_graph6("B_")
    assert (g.n, g.m) == (3, 1) and list(g.edges()) == [(0, 1)]
    assert to_graph6(g) == "B_"


def test_graph6_round_trip_randomized(rng):
    for _ in range(10_000):
        n = rng.randint(1, 32)
        g = random_graph(rng, n, rng.random())
        assert from_graph6(to_graph6(g)) == g


def test_graph6_matches_networkx(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 14))
        mine = to_graph6(g)
        theirs = nx.to_graph6_bytes(
            nx.from_graph6_bytes(mine.encode()), header=False
        ).decode().strip()
        assert mine == theirs


def test_graph6_large_orders(rng):
    for n in (62, 63, 64):
        g = random_graph(rng, n, 0.05)
        assert from_graph6(to_graph6(g)) == g


# ── edge-list reader ──────────────────────────────────────────────


def test_edge_list_reader():
    g = from_edge_list("# triangle plus tail\n0 1\n1 2\n0 2\n2 3\n")
    assert (g.n, g.m) == (4, 4)
    with pytest.raises(ValueError):
        from_edge_list("0 1 2\n")
    with pytest.raises(ValueError):
        from_edge_list("#nothing\n")
    with pytest.raises(ValueError):
        from_edge_list("3 3\n")


# ── canonical form ────────────────────────────────────────────────


def test_canonical_form_petersen_relabelings(rng):
    pet = Graph.from_edges(10, PETERSEN_EDGES)
    base = canonical_form(pet)
    for _ in range(5):
        perm = list(range(10))
        rng.shuffle(perm)
        assert canonical_form(pet.relabel(perm)) == base


def test_canonical_form_distinguishes():
    c6 = Graph.cycle(6)
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert canonical_form(c6) != canonical_form(two_triangles)
    assert canonical_form(construct_krt(4, 2)) != canonical_form(construct_bridge(4, 3, 0))


def test_canonical_form_invariant_under_many_permutations(rng):
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 8))
        base = canonical_form(g)
        for _ in range(100):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == base


def test_canonical_graph_is_fixed_point(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 9))
        cg = canonical_graph(g)
        assert canonical_form(cg) == canonical_form(g)
        assert canonical_graph(cg) == cg


def test_isomorphism_agrees_with_networkx(rng):
    for _ in range(300):
        n = rng.randint(2, 7)
        g, h = random_graph(rng, n, 0.5), random_graph(rng, n, 0.5)
        theirs = nx.is_isomorphic(
            nx.from_graph6_bytes(to_graph6(g).encode()),
            nx.from_graph6_bytes(to_graph6(h).encode()),
        )
        assert is_isomorphic(g, h) == theirs


def test_canonical_form_order_cap():
    with pytest.raises(ValueError):
        canonical_form(Graph.empty(13))


def test_canonical_form_exhaustive_small():
    # codes collide exactly on isomorphic pairs for every 4-vertex graph
    graphs = []
    for bits in range(64):
        edges = [
            e for i, e in enumerate(itertools.combinations(range(4), 2)) if bits >> i & 1
        ]
        graphs.append(Graph.from_edges(4, edges))
    for g, h in itertools.combinations(graphs, 2):
        same_code = canonical_form(g) == canonical_form(h)
        theirs = nx.is_isomorphic(
            nx.from_graph6_bytes(to_graph6(g).encode()),
            nx.from_graph6_bytes(to_graph6(h).encode()),
        )
        assert same_code == theirs
