"""Graph representation and graph6 codec."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crdom.graph import (
    Graph,
    Graph6Error,
    add_edge,
    closed_neighborhood,
    closed_neighborhood_of_set,
    complement,
    complete,
    cycle,
    disjoint_union,
    empty,
    from_edges,
    from_graph6,
    mask_to_vertices,
    path,
    remove_edge,
    star,
    to_graph6,
    vertices_to_mask,
    with_isolated,
)
from crdom.oracle import enumerate_labeled


def test_closed_neighborhoods():
    assert closed_neighborhood(complete(3), 0) == 0b111
    assert closed_neighborhood(cycle(4), 0) == vertices_to_mask([3, 0, 1])
    assert closed_neighborhood(empty(1), 0) == 0b1
    assert closed_neighborhood_of_set(cycle(4), 0) == 0
    assert closed_neighborhood_of_set(cycle(4), 0b1) == vertices_to_mask([3, 0, 1])
    assert closed_neighborhood_of_set(cycle(4), 0b101) == 0b1111


def test_mask_helpers():
    assert mask_to_vertices(0b1011) == [0, 1, 3]
    assert vertices_to_mask([3, 1, 0]) == 0b1011


def test_graph6_reference_values():
    assert to_graph6(complete(3)) == "Bw"
    assert to_graph6(empty(1)) == "@"
    assert to_graph6(cycle(4)) == "Cl"
    assert from_graph6("Bw") == complete(3)
    assert from_graph6("@") == empty(1)
    assert from_graph6("Cl") == cycle(4)
    assert from_graph6(">>graph6<<Bw") == complete(3)


def test_graph6_roundtrip_exhaustive_small():
    for n in range(1, 6):
        for g in enumerate_labeled(n):
            assert from_graph6(to_graph6(g)) == g


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 8), st.data())
def test_graph6_roundtrip_sampled(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True))
    g = from_edges(n, chosen)
    assert from_graph6(to_graph6(g)) == g


@pytest.mark.parametrize(
    "text",
    [
        "",
        "~??",  # multi-byte order form
        "Cl extra",  # trailing garbage
        "C",  # truncated body
        "B" + chr(30),  # invalid body byte
        "A@",  # nonzero padding bits (n=2 uses 1 of 6 body bits)
    ],
)
def test_graph6_rejects_malformed(text):
    with pytest.raises(Graph6Error):
        from_graph6(text)


def test_graph6_error_reports_offset():
    with pytest.raises(Graph6Error) as exc:
        from_graph6("~??")
    assert exc.value.offset == 0


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(0, ())
    with pytest.raises(ValueError):
        Graph(63, (0,) * 63)
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b10))  # self-loops
    with pytest.raises(ValueError):
        Graph(2, (0b100, 0))  # bit beyond order


def test_builders():
    assert cycle(4).edge_count() == 4
    u = disjoint_union(cycle(4), empty(3))
    assert (u.n, u.edge_count()) == (7, 4)
    s = star(5)
    assert s.degree(0) == 4 and all(s.degree(v) == 1 for v in range(1, 5))
    assert path(4).edge_count() == 3
    assert complete(5).edge_count() == 10
    assert with_isolated(cycle(4), 2).n == 6
    assert complement(empty(4)) == complete(4)
    assert sorted(cycle(4).edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_edge_mutators():
    g = empty(3)
    g = add_edge(g, 0, 1)
    assert g.has_edge(0, 1) and g.edge_count() == 1
    assert add_edge(g, 0, 1) == g  # idempotent
    with pytest.raises(ValueError):
        add_edge(g, 0, 1, strict=True)
    with pytest.raises(ValueError):
        add_edge(g, 1, 1)
    assert remove_edge(g, 0, 1) == empty(3)


def test_from_edges_validation():
    with pytest.raises(ValueError):
        from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        from_edges(3, [(1, 1)])
