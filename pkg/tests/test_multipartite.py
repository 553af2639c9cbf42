from fractions import Fraction

import pytest

from hyperq.core import CapExceeded, ParseError
from hyperq.multipartite import (
    AuxiliaryHypergraph,
    MultipartiteGraph,
    TripartiteTriples,
    count_triangles_mp,
    explore_extremal,
    find_clique_mp,
    find_three_triples,
    find_triangle_mp,
    gen_random_aux_block,
    gen_random_auxiliary,
    gen_random_multipartite,
    half_split,
    mean_square_profile,
    project_auxiliary,
    proof_diagnostics,
    read_multipartite,
    write_multipartite,
)


class TestProfile:
    def test_complete(self):
        g = gen_random_multipartite([5, 6, 7], 1, 1, 0)
        prof = mean_square_profile(g)
        assert all(r == 1 for r in prof.ratios.values())

    def test_empty(self):
        prof = mean_square_profile(MultipartiteGraph([4, 4]))
        assert all(r == 0 for r in prof.ratios.values())

    def test_half_split_exact_quarter(self):
        prof = mean_square_profile(half_split(4, 10))
        assert all(r == Fraction(1, 4) for r in prof.ratios.values())

    def test_empty_part_rejected(self):
        with pytest.raises(ValueError):
            mean_square_profile(MultipartiteGraph([3, 0]))


class TestHalfSplit:
    def test_edge_count(self):
        assert half_split(3, 10).edge_count() == 150

    def test_triangle_free(self):
        for m in (3, 4, 5):
            assert count_triangles_mp(half_split(m, 12)) == 0
            assert find_triangle_mp(half_split(m, 8)) is None
        assert count_triangles_mp(half_split(6, 20)) == 0

    def test_odd_size_rejected(self):
        with pytest.raises(ValueError):
            half_split(3, 7)


class TestTriangleSearch:
    def test_complete_tripartite(self):
        g = gen_random_multipartite([3, 3, 3], 1, 1, 0)
        assert find_triangle_mp(g) == ((0, 0), (1, 0), (2, 0))

    def test_dense_random_always_finds(self):
        for seed in range(10):
            g = gen_random_multipartite([30, 30, 30], 7, 10, seed)
            assert find_triangle_mp(g) is not None

    def test_clique_across_parts(self):
        g = gen_random_multipartite([2, 2, 2, 2], 1, 1, 0)
        clique = find_clique_mp(g, 4)
        assert clique is not None and len(clique) == 4


class TestDiagnostics:
    def test_complete_reaches_cap(self):
        g = gen_random_multipartite([8, 8], 1, 1, 0)
        diag = proof_diagnostics(g, Fraction(1, 10))
        assert diag.r_max == 5
        assert diag.r_value[(0, 1)] == 5

    def test_empty_has_no_valid_r(self):
        diag = proof_diagnostics(MultipartiteGraph([8, 8]), Fraction(1, 10))
        assert diag.r_value[(0, 1)] == 0
        assert all(s == 0 for s in diag.q_sizes[(0, 1)])

    def test_half_split_first_step_empty(self):
        diag = proof_diagnostics(half_split(3, 12), Fraction(1, 20), Fraction(1, 100))
        assert all(sizes[0] == 0 for sizes in diag.q_sizes.values())
        assert not diag.claim_violations

    def test_high_degree_sets_nested(self):
        g = gen_random_multipartite([10, 10], 3, 5, 4)
        diag = proof_diagnostics(g, Fraction(1, 8))
        for sizes in diag.q_sizes.values():
            assert all(a >= b for a, b in zip(sizes, sizes[1:]))

    def test_delta_range(self):
        g = gen_random_multipartite([4, 4], 1, 2, 0)
        with pytest.raises(ValueError):
            proof_diagnostics(g, Fraction(1, 2))


class TestProjection:
    def test_full_block_both_hold(self):
        full = [(a, b, c) for a in range(4) for b in range(4) for c in range(4)]
        rep = project_auxiliary(TripartiteTriples((4, 4, 4), full), Fraction(1, 10))
        assert rep.left_holds and rep.right_holds
        assert rep.colour == "green" and rep.flagged == "both-hold"

    def test_empty_block_flagged(self):
        rep = project_auxiliary(TripartiteTriples((4, 4, 4), []), Fraction(0))
        assert not rep.left_holds and not rep.right_holds
        assert rep.colour is None and rep.flagged == "neither-holds"

    def test_cauchy_schwarz_consequence(self):
        eps = Fraction(1, 20)
        for seed in range(60):
            blk = gen_random_aux_block((8, 9, 10), 2, 5, seed)
            rep = project_auxiliary(blk, eps)
            if rep.premise_holds:
                assert rep.left_holds or rep.right_holds


class TestThreeTriples:
    def test_full_auxiliary(self):
        aux = gen_random_auxiliary(4, 3, 1, 1, 0)
        cfg = find_three_triples(aux)
        assert cfg is not None and cfg.apex_extreme
        assert cfg.indices[3] == 3 and cfg.indices[:3] == (0, 1, 2)

    def test_config_triples_present(self):
        aux = gen_random_auxiliary(5, 4, 3, 5, 1)
        cfg = find_three_triples(aux)
        assert cfg is not None
        i1, i2, i3, hub = cfg.indices
        for x, y in ((i1, i2), (i1, i3), (i2, i3)):
            keys = [tuple(sorted((x, y))), tuple(sorted((x, hub))),
                    tuple(sorted((y, hub)))]
            assert aux.has_triple({k: cfg.vertices[k] for k in keys})

    def test_empty(self):
        sizes = {(i, j): 3 for i in range(4) for j in range(i + 1, 4)}
        assert find_three_triples(AuxiliaryHypergraph(4, sizes, {})) is None

    def test_extreme_hub_preferred_globally(self):
        # one interior-hub configuration inside {0,1,2,3} (hub 1) and one
        # extreme-hub configuration inside {0,1,2,4} (hub 4)
        sizes = {(i, j): 1 for i in range(5) for j in range(i + 1, 5)}
        present = [(0, 1, 2), (0, 1, 3), (1, 2, 3),
                   (0, 1, 4), (0, 2, 4), (1, 2, 4)]
        blocks = {key: [(0, 0, 0)] for key in present}
        cfg = find_three_triples(AuxiliaryHypergraph(5, sizes, blocks))
        assert cfg is not None and cfg.apex_extreme
        assert cfg.indices == (0, 1, 2, 4)

    def test_budget_refusal(self):
        sizes = {(i, j): 3 for i in range(9) for j in range(i + 1, 9)}
        with pytest.raises(CapExceeded):
            find_three_triples(AuxiliaryHypergraph(9, sizes, {}))


class TestExplorer:
    def test_never_below_baseline(self):
        res = explore_extremal(3, 8, restarts=8, seed=3, moves=120)
        assert res.min_ratio >= Fraction(1, 4)
        assert res.triangle_free
        assert count_triangles_mp(res.graph) == 0

    def test_bipartite_reaches_complete(self):
        res = explore_extremal(2, 4, restarts=4, seed=0, moves=400)
        assert res.min_ratio == 1

    def test_budget(self):
        with pytest.raises(CapExceeded):
            explore_extremal(9, 8)


class TestSerialization:
    def test_round_trip(self):
        g = gen_random_multipartite([4, 5, 6], 1, 2, 7)
        text = write_multipartite(g)
        again = read_multipartite(text)
        assert write_multipartite(again) == text

    @pytest.mark.parametrize("text,fragment", [
        ("xx 2 3 3\n", "header"),
        ("mp 2 3\n", "part sizes"),
        ("mp 2 3 3\n1 0 0 0\n", "i < j"),
        ("mp 2 3 3\n0 5 1 0\n", "out of range"),
        ("mp 2 3 3\n0 0 1 0\n0 0 1 0\n", "duplicate"),
    ])
    def test_errors(self, text, fragment):
        with pytest.raises(ParseError) as err:
            read_multipartite(text)
        assert fragment in str(err.value)
