import math

import pytest

from hyperq.core import (
    Hypergraph3,
    Hypergraph4,
    ParseError,
    read_hypergraph,
    write_hypergraph,
)
from hyperq.constructions import Tournament, gen_random_3hg, gen_tournament_3hg


def regular_t5_seed():
    # smallest seed whose 5-vertex tournament has every out-degree 2
    seed = 0
    while True:
        t = Tournament(5, seed)
        if all(t.out_degree(v) == 2 for v in range(5)):
            return seed
        seed += 1


class TestCountWithin:
    def test_complete_subset(self):
        h = Hypergraph3.complete(6)
        assert h.count_edges_within(range(4)) == math.comb(4, 3)

    def test_empty(self):
        h = Hypergraph3.empty(8)
        assert h.count_edges_within(range(8)) == 0

    def test_regular_tournament_full_set(self):
        seed = regular_t5_seed()
        h = gen_tournament_3hg(5, seed)
        assert h.count_edges_within(range(5)) == 5
        # cyclic triangles = C(n,3) - sum over v of C(outdeg(v), 2)
        t = h.orientation
        assert math.comb(5, 3) - sum(math.comb(t.out_degree(v), 2) for v in range(5)) == 5

    def test_out_of_range_vertex(self):
        h = Hypergraph3.empty(4)
        with pytest.raises(ValueError):
            h.count_edges_within([0, 4])


class TestOrderedTriples:
    def test_complete_disjoint_product(self):
        h = Hypergraph3.complete(9)
        assert h.count_ordered_triples(range(2), range(2, 5), range(5, 9)) == 2 * 3 * 4

    def test_complete_all_equal(self):
        h = Hypergraph3.complete(7)
        full = range(7)
        assert h.count_ordered_triples(full, full, full) == 7 * 6 * 5

    def test_single_edge_overlapping(self):
        h = Hypergraph3.from_edges(3, [(0, 1, 2)])
        assert h.count_ordered_triples([0], [1], [1, 2]) == 1

    def test_matches_subset_count(self):
        for seed in range(5):
            h = gen_random_3hg(10, 2, 5, seed)
            u = [v for v in range(10) if v % 3 != seed % 3]
            assert h.count_ordered_triples(u, u, u) == 6 * h.count_edges_within(u)


class TestLinkGraph:
    def test_complete(self):
        link = Hypergraph3.complete(5).link_graph(0)
        assert link.edge_count == math.comb(4, 2)
        assert not any(link.has_edge(0, v) for v in range(1, 5))

    def test_empty(self):
        assert Hypergraph3.empty(5).link_graph(2).edge_count == 0

    def test_edge_count_difference(self):
        h = gen_tournament_3hg(12, 3)
        everyone = h.count_edges_within(range(12))
        for a in range(12):
            rest = [v for v in range(12) if v != a]
            assert h.link_graph(a).edge_count == everyone - h.count_edges_within(rest)

    def test_links_sum_to_triple_edge_count(self):
        h = gen_random_3hg(11, 3, 10, 4)
        assert sum(h.link_graph(a).edge_count for a in range(11)) == 3 * h.edge_count


class TestInduced:
    def test_identity(self):
        h = gen_random_3hg(9, 1, 2, 0)
        assert h.induced(range(9)).edges() == h.edges()

    def test_complete_restriction(self):
        assert Hypergraph3.complete(6).induced(range(4)).edges() == \
            Hypergraph3.complete(4).edges()

    def test_edge_lost(self):
        h = Hypergraph3.from_edges(4, [(0, 1, 2)])
        sub = h.induced([0, 1, 3])
        assert sub.n == 3 and sub.edge_count == 0


class TestSerialization:
    def test_single_edge(self):
        h = read_hypergraph("3 3 1\n0 1 2\n")
        assert isinstance(h, Hypergraph3)
        assert h.edges() == [(0, 1, 2)]

    def test_round_trip_generated(self):
        h = gen_tournament_3hg(20, 5)
        text = write_hypergraph(h)
        assert write_hypergraph(read_hypergraph(text)) == text

    def test_round_trip_4uniform(self):
        h = Hypergraph4.from_edges(7, [(0, 1, 2, 3), (1, 2, 4, 6), (0, 3, 5, 6)])
        text = write_hypergraph(h)
        again = read_hypergraph(text)
        assert isinstance(again, Hypergraph4)
        assert write_hypergraph(again) == text

    def test_round_trip_generated_4uniform(self):
        from hyperq.constructions import gen_oriented_4hg
        h = gen_oriented_4hg(12, 9)
        text = write_hypergraph(h)
        assert write_hypergraph(read_hypergraph(text)) == text

    @pytest.mark.parametrize("text,fragment", [
        ("5 4 0\n", "arity"),
        ("3 4\n", "header"),
        ("3 4 1\n0 1 9\n", "out of range"),
        ("3 4 2\n0 1 2\n0 1 2\n", "duplicate"),
        ("3 4 2\n0 1 3\n0 1 2\n", "sorted"),
        ("3 4 1\n2 1 0\n", "increasing"),
        ("3 4 2\n0 1 2\n", "edge lines"),
    ])
    def test_parse_errors(self, text, fragment):
        with pytest.raises(ParseError) as err:
            read_hypergraph(text)
        assert fragment in str(err.value)

    def test_parse_error_carries_line_number(self):
        with pytest.raises(ParseError) as err:
            read_hypergraph("3 5 2\n0 1 2\n0 1 7\n")
        assert "line 3" in str(err.value)


class TestHypergraph4:
    def test_pair_link_matches_edges(self):
        edges = [(0, 1, 2, 3), (0, 1, 2, 4), (1, 2, 3, 4)]
        h = Hypergraph4.from_edges(5, edges)
        link = h.pair_link(1, 2)
        assert sorted(link.iter_edges()) == [(0, 3), (0, 4), (3, 4)]
        assert h.edge_count == 3

    def test_ordered_quadruples_complete(self):
        h = Hypergraph4.complete(6)
        assert h.count_ordered_quadruples([0], [1], [2], [3]) == 1
        full = range(6)
        assert h.count_ordered_quadruples(full, full, full, full) == 6 * 5 * 4 * 3

    def test_edge_list_lexicographic(self):
        h = Hypergraph4.complete(5)
        edges = h.edges()
        assert edges == sorted(edges)
        assert len(edges) == math.comb(5, 4)
