import math

import pytest

from conftest import PETERSEN_EDGES, seeded_graphs
from spectrepack import (
    Graph,
    ParseError,
    ValidationError,
    DomainError,
    boundary,
    cross_edges,
    degree_stats,
    delete_edges,
    from_edge_list,
    girth,
    induced,
    is_bipartite,
    is_connected,
    parse_graph6,
    to_graph6,
)
from spectrepack.graphs import INFINITE, brute_force_girth, connected_components, normalize_partition, to_edge_list
from spectrepack.generators import complete, complete_bipartite, cycle, path


def test_from_edge_list_triangle():
    g = from_edge_list("0 1\n1 2\n2 0")
    assert (g.n, g.m) == (3, 3)
    assert girth(g) == 3


def test_from_edge_list_rejects_self_loop():
    with pytest.raises(ValidationError):
        from_edge_list("0 0")


def test_from_edge_list_rejects_duplicates():
    with pytest.raises(ValidationError):
        from_edge_list("0 1\n1 0")


def test_from_edge_list_parse_error_carries_line_number():
    with pytest.raises(ParseError) as info:
        from_edge_list("0 1\nthis is not an edge\n")
    assert "line 2" in str(info.value)


def test_from_edge_list_header_and_comments():
    g = from_edge_list("# a path plus isolated vertices\nn 5\n0 1\n1 2\n")
    assert (g.n, g.m) == (5, 3 - 1)
    assert g.degree(4) == 0


def test_from_edge_list_header_conflict():
    with pytest.raises(ValidationError):
        from_edge_list("n 2\n0 5\n")


def test_petersen_edge_list(petersen):
    g = from_edge_list(PETERSEN_EDGES)
    assert (g.n, g.m) == (10, 15)
    assert degree_stats(g) == (3, 3, 3.0)
    assert girth(g) == 5
    assert g == petersen


def test_edge_list_round_trip(petersen):
    assert from_edge_list(to_edge_list(petersen)) == petersen


def test_graph_rejects_out_of_range():
    with pytest.raises(ValidationError):
        Graph(2, [(0, 2)])


def test_graph6_base_cases():
    assert parse_graph6("@") == Graph(1, [])
    assert to_graph6(Graph(1, [])) == "@"
    c5 = cycle(5)
    assert parse_graph6(to_graph6(c5)) == c5


def test_graph6_header_accepted():
    c5 = cycle(5)
    assert parse_graph6(">>graph6<<" + to_graph6(c5)) == c5


def test_graph6_bad_input():
    with pytest.raises(ParseError):
        parse_graph6("D")  # truncated body for n=5
    with pytest.raises(ParseError):
        parse_graph6("C" + chr(20))  # character below bias


def test_graph6_round_trip_200_random_graphs():
    for g in seeded_graphs(master_seed=601, count=200, n_lo=0, n_hi=30):
        assert parse_graph6(to_graph6(g)) == g


def test_graph6_large_order_encoding():
    g = path(100)  # order needs the multi-character length form
    assert parse_graph6(to_graph6(g)) == g


def test_girth_examples(petersen):
    assert girth(cycle(5)) == 5
    assert girth(petersen) == 5
    assert girth(path(7)) == INFINITE
    assert girth(Graph(4, [])) == INFINITE


def test_girth_matches_enumeration_oracle():
    for g in seeded_graphs(master_seed=602, count=150, n_lo=3, n_hi=12):
        assert girth(g) == brute_force_girth(g)


def test_bipartite_girth_even_or_infinite():
    for g in seeded_graphs(master_seed=603, count=60, n_lo=3, n_hi=12):
        if is_bipartite(g):
            value = girth(g)
            assert value == INFINITE or value % 2 == 0


def test_degree_stats_examples(petersen):
    assert degree_stats(complete(4)) == (3, 3, 3.0)
    star = complete_bipartite(1, 4)
    assert degree_stats(star) == (1, 4, 8 / 5)
    assert degree_stats(petersen) == (3, 3, 3.0)


def test_boundary_examples(petersen):
    assert boundary(complete(4), {0}) == 3
    assert boundary(cycle(6), {0, 1, 2}) == 2
    assert boundary(petersen, range(5)) == 5  # one spoke per outer vertex


def test_boundary_domain_errors():
    with pytest.raises(DomainError):
        boundary(complete(4), set())
    with pytest.raises(DomainError):
        boundary(complete(4), {0, 1, 2, 3})


def test_cut_symmetry():
    for g in seeded_graphs(master_seed=604, count=50, n_lo=2, n_hi=10):
        x = set(range(0, max(g.n // 2, 1)))
        if 0 < len(x) < g.n:
            complement = set(range(g.n)) - x
            assert boundary(g, x) == boundary(g, complement)


def test_cross_edges_examples(petersen):
    assert cross_edges(complete(4), {0, 1}, {2, 3}) == 4
    assert cross_edges(cycle(4), {0}, {2}) == 0
    assert cross_edges(petersen, range(5), range(5, 10)) == 5


def test_cross_edges_rejects_overlap():
    with pytest.raises(DomainError):
        cross_edges(complete(4), {0, 1}, {1, 2})


def test_partition_boundary_sum_counts_crossings_twice():
    for g in seeded_graphs(master_seed=605, count=40, n_lo=4, n_hi=10):
        blocks = [
            [v for v in range(g.n) if v % 3 == r]
            for r in range(3)
            if any(v % 3 == r for v in range(g.n))
        ]
        normalize_partition(g, blocks)
        block_of = {v: i for i, b in enumerate(blocks) for v in b}
        crossing = sum(1 for u, v in g.edges() if block_of[u] != block_of[v])
        total = sum(boundary(g, b) for b in blocks if len(b) < g.n)
        if all(len(b) < g.n for b in blocks):
            assert total == 2 * crossing


def test_induced_and_delete_examples(petersen):
    assert induced(complete(4), {0, 1, 2}) == complete(3)
    smaller = delete_edges(complete(4), [(0, 1)])
    assert smaller.m == 5
    assert degree_stats(smaller)[0] == 2
    assert induced(petersen, range(5)) == cycle(5)


def test_delete_unknown_edge():
    with pytest.raises(DomainError):
        delete_edges(cycle(4), [(0, 2)])


def test_operations_leave_input_untouched():
    g = complete(4)
    delete_edges(g, [(0, 1)])
    induced(g, {0, 1})
    assert g == complete(4)


def test_is_connected_examples(petersen):
    assert is_connected(complete(4))
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_connected(two_triangles)
    assert is_connected(petersen)
    assert is_connected(Graph(0, []))
    assert is_connected(Graph(1, []))
    assert connected_components(two_triangles) == [frozenset({0, 1, 2}), frozenset({3, 4, 5})]


def test_normalize_partition_validation():
    g = complete(4)
    with pytest.raises(DomainError):
        normalize_partition(g, [[0, 1], [1, 2, 3]])  # overlap
    with pytest.raises(DomainError):
        normalize_partition(g, [[0, 1], [2]])  # missing vertex
    with pytest.raises(DomainError):
        normalize_partition(g, [[0, 1, 2, 3], []])  # empty block
