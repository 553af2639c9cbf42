"""Randomized duels: optimized search paths against dumb exhaustive brute
force on instances small enough to enumerate completely."""

import random
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb

from hyperq.core import Graph, Hypergraph3, Hypergraph4, ParseError, write_hypergraph, read_hypergraph
from hyperq.certifiers import weak_deviation
from hyperq.constructions import gen_random_3hg
from hyperq.detectors import (
    check_vanishing_condition,
    embed_small,
    find_clique_graph,
    find_f4,
    find_triangle_graph,
)
from hyperq.multipartite import (
    AuxiliaryHypergraph,
    count_triangles_mp,
    find_three_triples,
    gen_random_multipartite,
)


def random_graph(n, p, rng):
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def test_weak_search_witness_recomputes():
    for seed in range(10):
        h = gen_random_3hg(12, 3, 10, seed)
        d = h.density().density_fraction
        rep = weak_deviation(h, d, mode="search", restarts=3, seed=seed)
        e = h.count_edges_within(rep.witness)
        assert abs(Fraction(e) - d * comb(len(rep.witness), 3)) == rep.max_deviation


def test_clique_graph_vs_brute():
    rng = random.Random(0)
    for trial in range(25):
        g = random_graph(11, 0.55, rng)
        for k in (3, 4, 5):
            found = find_clique_graph(g, k)
            brute = None
            for cand in combinations(range(11), k):
                if all(g.has_edge(u, v) for u, v in combinations(cand, 2)):
                    brute = cand
                    break
            assert (found is None) == (brute is None)
            if found is not None:
                assert found == brute  # both scans are lexicographic


def test_triangle_graph_vs_brute():
    rng = random.Random(1)
    for trial in range(30):
        g = random_graph(10, 0.3, rng)
        found = find_triangle_graph(g)
        brute = next((t for t in combinations(range(10), 3)
                      if all(g.has_edge(u, v) for u, v in combinations(t, 2))),
                     None)
        assert found == brute


def brute_embed(pattern, host, ordered):
    verts = range(host.n)
    pool = (combinations(verts, pattern.n) if ordered
            else permutations(verts, pattern.n))
    for image in pool:
        if all(host.has_edge(*(image[v] for v in e)) for e in pattern.edges()):
            return image
    return None


def test_embed_small_completeness():
    rng = random.Random(2)
    triples4 = list(combinations(range(4), 3))
    for trial in range(40):
        edges = [t for t in triples4 if rng.random() < 0.6]
        pattern = Hypergraph3.from_edges(4, edges)
        host = gen_random_3hg(7, 2, 5, trial)
        for ordered in (False, True):
            fast = embed_small(pattern, host, ordered=ordered)
            slow = brute_embed(pattern, host, ordered)
            assert (fast is None) == (slow is None)
            if fast is not None:
                assert all(host.has_edge(*(fast[v] for v in e))
                           for e in pattern.edges())
                if ordered:
                    assert list(fast) == sorted(fast)


def brute_vanishing(pattern):
    f = pattern.n
    pairs = list(combinations(range(f), 2))
    for perm in permutations(range(f)):
        position = {v: i for i, v in enumerate(perm)}
        for assignment in product((0, 1, 2), repeat=len(pairs)):
            colour = dict(zip(pairs, assignment))
            ok = True
            for edge in pattern.edges():
                a, b, c = sorted(edge, key=position.__getitem__)
                want = (((a, b), 0), ((a, c), 1), ((b, c), 2))
                if any(colour[tuple(sorted(pr))] != col for pr, col in want):
                    ok = False
                    break
            if ok:
                return True
    return False


def test_vanishing_vs_full_brute():
    rng = random.Random(3)
    triples4 = list(combinations(range(4), 3))
    seen = set()
    for trial in range(20):
        edges = tuple(t for t in triples4 if rng.random() < 0.5)
        if edges in seen:
            continue
        seen.add(edges)
        pattern = Hypergraph3.from_edges(4, edges)
        assert (check_vanishing_condition(pattern) is not None) == \
            brute_vanishing(pattern)


def brute_three_triples(aux):
    for quad in combinations(range(aux.m), 4):
        for hub in quad:
            rest = tuple(sorted(set(quad) - {hub}))
            spokes = [tuple(sorted((r, hub))) for r in rest]
            rims = [tuple(sorted((rest[0], rest[1]))),
                    tuple(sorted((rest[0], rest[2]))),
                    tuple(sorted((rest[1], rest[2])))]
            spoke_sizes = [aux.class_sizes[s] for s in spokes]
            rim_sizes = [aux.class_sizes[r] for r in rims]
            for p14, p24, p34 in product(*(range(s) for s in spoke_sizes)):
                for q12, q13, q23 in product(*(range(s) for s in rim_sizes)):
                    cfg = {spokes[0]: p14, spokes[1]: p24, spokes[2]: p34,
                           rims[0]: q12, rims[1]: q13, rims[2]: q23}
                    if (aux.has_triple({k: cfg[k] for k in (rims[0], spokes[0], spokes[1])})
                            and aux.has_triple({k: cfg[k] for k in (rims[1], spokes[0], spokes[2])})
                            and aux.has_triple({k: cfg[k] for k in (rims[2], spokes[1], spokes[2])})):
                        return True
    return False


def test_three_triples_vs_brute():
    for seed in range(12):
        sizes = {(i, j): 2 for i in range(4) for j in range(i + 1, 4)}
        rng = random.Random(seed)
        blocks = {}
        for key in combinations(range(4), 3):
            blocks[key] = [(a, b, c) for a in range(2) for b in range(2)
                           for c in range(2) if rng.random() < 0.4]
        aux = AuxiliaryHypergraph(4, sizes, blocks)
        assert (find_three_triples(aux) is not None) == brute_three_triples(aux)


def test_triangle_count_mp_vs_brute():
    for seed in range(8):
        g = gen_random_multipartite([5, 6, 7], 1, 2, seed)
        parts = [(0, a) for a in range(5)] + [(1, b) for b in range(6)] + \
                [(2, c) for c in range(7)]
        brute = 0
        for (i, a), (j, b), (k, c) in combinations(parts, 3):
            if i != j and j != k and i != k:
                if g.has_edge(i, a, j, b) and g.has_edge(i, a, k, c) \
                        and g.has_edge(j, b, k, c):
                    brute += 1
        assert count_triangles_mp(g) == brute


def test_f4_vs_brute():
    rng = random.Random(5)
    quads9 = list(combinations(range(9), 4))
    for trial in range(10):
        edges = [q for q in quads9 if rng.random() < 0.25]
        h = Hypergraph4.from_edges(9, edges)
        brute = False
        for pair in combinations(range(9), 2):
            others = [v for v in range(9) if v not in pair]
            for tri in combinations(others, 3):
                if all(h.has_edge(*pair, a, b) for a, b in combinations(tri, 2)):
                    brute = True
                    break
            if brute:
                break
        assert (find_f4(h) is not None) == brute


def test_serialization_mutation_fuzz():
    base = write_hypergraph(gen_random_3hg(8, 1, 2, 0))
    rng = random.Random(7)
    alphabet = "0123456789 \n-x"
    for _ in range(300):
        chars = list(base)
        for _ in range(rng.randrange(1, 4)):
            pos = rng.randrange(len(chars))
            chars[pos] = rng.choice(alphabet)
        try:
            read_hypergraph("".join(chars))
        except (ParseError, ValueError):
            pass  # every rejection must be a parse-level error
