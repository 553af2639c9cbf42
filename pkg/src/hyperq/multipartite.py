"""Multipartite graphs: mean-square degree profiles, triangle and clique
search, the half-split extremal pattern, threshold diagnostics, auxiliary
triple blocks with their projections, and a triangle-free local-search
explorer.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .core import CapExceeded, ParseError, iter_bits
from .hashing import TAG_AUX_TRIPLE, TAG_MP_EDGE, bernoulli, subseed


class MultipartiteGraph:
    """Graph on vertex parts V_0..V_{m-1} with edges only between parts.

    ``rows[(i, j)][a]`` is the bitmask over part j of the neighbours of
    vertex a of part i; both directions are stored.
    """

    __slots__ = ("sizes", "rows")

    def __init__(self, sizes: Sequence[int]):
        self.sizes = tuple(sizes)
        if any(s < 0 for s in self.sizes):
            raise ValueError("part sizes must be nonnegative")
        m = len(self.sizes)
        self.rows = {(i, j): [0] * self.sizes[i]
                     for i in range(m) for j in range(m) if i != j}

    @property
    def m(self) -> int:
        return len(self.sizes)

    def _check(self, i: int, a: int) -> None:
        if not (0 <= i < self.m and 0 <= a < self.sizes[i]):
            raise ValueError("no vertex %d in part %d" % (a, i))

    def add_edge(self, i: int, a: int, j: int, b: int) -> None:
        if i == j:
            raise ValueError("edges inside a part are not allowed")
        self._check(i, a)
        self._check(j, b)
        self.rows[(i, j)][a] |= 1 << b
        self.rows[(j, i)][b] |= 1 << a

    def remove_edge(self, i: int, a: int, j: int, b: int) -> None:
        self.rows[(i, j)][a] &= ~(1 << b)
        self.rows[(j, i)][b] &= ~(1 << a)

    def has_edge(self, i: int, a: int, j: int, b: int) -> bool:
        return bool(self.rows[(i, j)][a] >> b & 1)

    def neighbours(self, i: int, a: int, j: int) -> int:
        """Bitmask over part j of the neighbours of vertex (i, a)."""
        return self.rows[(i, j)][a]

    def degree(self, i: int, a: int, j: int) -> int:
        return self.rows[(i, j)][a].bit_count()

    def edge_count(self) -> int:
        total = 0
        for i in range(self.m):
            for j in range(i + 1, self.m):
                total += sum(r.bit_count() for r in self.rows[(i, j)])
        return total

    def iter_edges(self) -> Iterator[tuple[int, int, int, int]]:
        """Edges as (i, a, j, b) with i < j, in lexicographic order."""
        for i in range(self.m):
            for j in range(i + 1, self.m):
                part = self.rows[(i, j)]
                for a in range(self.sizes[i]):
                    for b in iter_bits(part[a]):
                        yield (i, a, j, b)

    def copy(self) -> "MultipartiteGraph":
        g = MultipartiteGraph(self.sizes)
        g.rows = {key: list(val) for key, val in self.rows.items()}
        return g


def gen_random_multipartite(sizes: Sequence[int], p_num: int, p_den: int,
                            seed: int) -> MultipartiteGraph:
    """Each cross-part pair becomes an edge independently with probability
    p_num/p_den; deterministic in the seed."""
    g = MultipartiteGraph(sizes)
    for i in range(g.m):
        for j in range(i + 1, g.m):
            for a in range(sizes[i]):
                for b in range(sizes[j]):
                    if bernoulli(p_num, p_den, seed, TAG_MP_EDGE, i, a, j, b):
                        g.add_edge(i, a, j, b)
    return g


def half_split(m: int, s: int) -> MultipartiteGraph:
    """Each part of size s splits into halves A and B; complete bipartite
    edges join A of one part to B of every other part.  Triangle-free, with
    every mean-square ratio exactly 1/4."""
    if s % 2:
        raise ValueError("part size must be even")
    if m < 1:
        raise ValueError("need at least one part")
    g = MultipartiteGraph([s] * m)
    half = s // 2
    a_mask = (1 << half) - 1
    b_mask = ((1 << s) - 1) ^ a_mask
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            rows = g.rows[(i, j)]
            for a in range(half):
                rows[a] |= b_mask
            for b in range(half, s):
                rows[b] |= a_mask
    return g


@dataclass(frozen=True)
class MeanSquareProfile:
    """Mean-square degree ratios, exact, for every ordered part pair."""

    sizes: tuple[int, ...]
    ratios: dict  # (i, j) -> Fraction, sum of d_j(x)^2 over |V_i||V_j|^2
    threshold: Fraction
    epsilon: Fraction
    satisfied: dict  # (i, j) with i < j -> ratio >= threshold + epsilon
    margins: dict  # (i, j) with i < j -> ratio - (threshold + epsilon)

    def min_ratio(self) -> Fraction:
        return min(self.ratios.values())


def mean_square_profile(g: MultipartiteGraph,
                        threshold: Fraction = Fraction(1, 4),
                        epsilon: Fraction = Fraction(0)) -> MeanSquareProfile:
    """Exact ratio sum d_j(x)^2 / (|V_i| |V_j|^2) for all ordered pairs, and
    the threshold verdict for each pair i < j."""
    if any(s == 0 for s in g.sizes):
        raise ValueError("profile needs nonempty parts")
    ratios = {}
    for i in range(g.m):
        for j in range(g.m):
            if i == j:
                continue
            sq = sum(r.bit_count() ** 2 for r in g.rows[(i, j)])
            ratios[(i, j)] = Fraction(sq, g.sizes[i] * g.sizes[j] ** 2)
    satisfied = {(i, j): ratios[(i, j)] >= threshold + epsilon
                 for i in range(g.m) for j in range(i + 1, g.m)}
    margins = {key: ratios[key] - (threshold + epsilon) for key in satisfied}
    return MeanSquareProfile(g.sizes, ratios, threshold, epsilon, satisfied, margins)


def find_triangle_mp(g: MultipartiteGraph):
    """First triangle in part-and-index scan order, or None."""
    for i in range(g.m):
        for j in range(i + 1, g.m):
            rows_ij = g.rows[(i, j)]
            for k in range(j + 1, g.m):
                rows_ik = g.rows[(i, k)]
                rows_jk = g.rows[(j, k)]
                for a in range(g.sizes[i]):
                    for b in iter_bits(rows_ij[a]):
                        common = rows_ik[a] & rows_jk[b]
                        if common:
                            c = (common & -common).bit_length() - 1
                            return ((i, a), (j, b), (k, c))
    return None


def count_triangles_mp(g: MultipartiteGraph, parts: tuple[int, int, int] | None = None) -> int:
    """Exact triangle count, optionally restricted to one part triple."""
    triples = ([tuple(sorted(parts))] if parts is not None else
               [(i, j, k) for i in range(g.m) for j in range(i + 1, g.m)
                for k in range(j + 1, g.m)])
    total = 0
    for i, j, k in triples:
        rows_ij, rows_ik, rows_jk = g.rows[(i, j)], g.rows[(i, k)], g.rows[(j, k)]
        for a in range(g.sizes[i]):
            rik = rows_ik[a]
            for b in iter_bits(rows_ij[a]):
                total += (rik & rows_jk[b]).bit_count()
    return total


def find_clique_mp(g: MultipartiteGraph, k: int):
    """Clique on k parts, one vertex per part; first found in scan order."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if k > g.m:
        return None
    from itertools import combinations

    for part_tuple in combinations(range(g.m), k):
        chosen: list[tuple[int, int]] = []

        def extend(depth: int, cands: list[int]) -> bool:
            if depth == k:
                return True
            pi = part_tuple[depth]
            mask = cands[depth]
            for v in iter_bits(mask):
                new = list(cands)
                ok = True
                for later in range(depth + 1, k):
                    new[later] &= g.rows[(pi, part_tuple[later])][v]
                    if not new[later]:
                        ok = False
                        break
                if ok:
                    chosen.append((pi, v))
                    if extend(depth + 1, new):
                        return True
                    chosen.pop()
            return False

        init = [(1 << g.sizes[p]) - 1 for p in part_tuple]
        if extend(0, init):
            return chosen
    return None


@dataclass(frozen=True)
class ProofDiagnostics:
    """High-degree set sizes per threshold step and the derived colour value
    for every ordered part pair."""

    delta: Fraction
    epsilon: Fraction | None
    r_max: int
    q_sizes: dict  # (i, j) -> tuple of |Q_ij(r)| for r = 1..r_max
    r_value: dict  # (i, j) -> largest r with |Q_ij(r)| >= delta |V_i|, else 0
    hypothesis_holds: dict  # (i, j), i < j -> mean-square ratio >= 1/4 + eps
    claim_violations: list  # pairs where the first-step size claim fails


def proof_diagnostics(g: MultipartiteGraph, delta: Fraction,
                      epsilon: Fraction | None = None) -> ProofDiagnostics:
    """Sizes of Q_ij(r) = {x in V_i : d_j(x) >= (1/2 + r*delta)|V_j|} and the
    largest usable r per ordered pair.

    When epsilon is given, also checks that every pair i < j whose
    mean-square ratio reaches 1/4 + epsilon has |Q_ij(1)| >= delta |V_i|
    (guaranteed whenever epsilon >= 2*delta + delta^2).
    """
    if not 0 < delta < Fraction(1, 2):
        raise ValueError("delta must lie strictly between 0 and 1/2")
    if any(s == 0 for s in g.sizes):
        raise ValueError("diagnostics need nonempty parts")
    r_max = int(Fraction(1, 2) / delta)
    q_sizes = {}
    r_value = {}
    for i in range(g.m):
        for j in range(g.m):
            if i == j:
                continue
            degs = sorted(r.bit_count() for r in g.rows[(i, j)])
            sizes = []
            for r in range(1, r_max + 1):
                need = (Fraction(1, 2) + r * delta) * g.sizes[j]
                # count degrees >= need by binary search on the sorted list
                lo, hi = 0, len(degs)
                while lo < hi:
                    mid = (lo + hi) // 2
                    if degs[mid] >= need:
                        hi = mid
                    else:
                        lo = mid + 1
                sizes.append(len(degs) - lo)
            q_sizes[(i, j)] = tuple(sizes)
            rv = 0
            for r in range(r_max, 0, -1):
                if sizes[r - 1] >= delta * g.sizes[i]:
                    rv = r
                    break
            r_value[(i, j)] = rv
    hypothesis = {}
    violations = []
    if epsilon is not None:
        profile = mean_square_profile(g, Fraction(1, 4), epsilon)
        for i in range(g.m):
            for j in range(i + 1, g.m):
                holds = profile.ratios[(i, j)] >= Fraction(1, 4) + epsilon
                hypothesis[(i, j)] = holds
                if holds and epsilon >= 2 * delta + delta * delta:
                    if q_sizes[(i, j)][0] < delta * g.sizes[i]:
                        violations.append((i, j))
    return ProofDiagnostics(delta, epsilon, r_max, q_sizes, r_value,
                            hypothesis, violations)


class TripartiteTriples:
    """Triple system over three vertex classes; the auxiliary-block shape."""

    __slots__ = ("sizes", "triples")

    def __init__(self, sizes: tuple[int, int, int], triples):
        self.sizes = tuple(sizes)
        trips = frozenset(tuple(t) for t in triples)
        for a, b, c in trips:
            if not (0 <= a < sizes[0] and 0 <= b < sizes[1] and 0 <= c < sizes[2]):
                raise ValueError("triple %r out of class range" % ((a, b, c),))
        self.triples = trips

    def count(self) -> int:
        return len(self.triples)

    def density(self) -> Fraction:
        slots = self.sizes[0] * self.sizes[1] * self.sizes[2]
        return Fraction(len(self.triples), slots) if slots else Fraction(0)


def gen_random_aux_block(sizes: tuple[int, int, int], p_num: int, p_den: int,
                         seed: int) -> TripartiteTriples:
    triples = [(a, b, c)
               for a in range(sizes[0]) for b in range(sizes[1]) for c in range(sizes[2])
               if bernoulli(p_num, p_den, seed, TAG_AUX_TRIPLE, a, b, c)]
    return TripartiteTriples(tuple(sizes), triples)


@dataclass(frozen=True)
class ProjectionReport:
    """Outcome of projecting an auxiliary block onto its two side graphs."""

    epsilon: Fraction
    triple_density: Fraction
    premise_holds: bool          # triple count >= (1/4 + eps) l1 l2 l3
    sum_left: int                # sum over middle class of left-degree squares
    sum_right: int
    left_holds: bool             # sum_left  >= (1/4 + eps) l1^2 l2
    right_holds: bool            # sum_right >= (1/4 + eps) l3^2 l2
    colour: str | None           # 'red' when left fails, 'green' when right fails
    flagged: str | None          # 'both-hold' or 'neither-holds'


def project_auxiliary(block: TripartiteTriples, epsilon: Fraction) -> ProjectionReport:
    """Project a block onto the bipartite graphs sharing its middle class and
    evaluate the two mean-square estimates at threshold 1/4 + epsilon.

    Whenever the triple count reaches (1/4 + epsilon) l1 l2 l3, the
    Cauchy-Schwarz inequality forces at least one estimate to hold.
    """
    l1, l2, l3 = block.sizes
    if not (l1 and l2 and l3):
        raise ValueError("projection needs nonempty classes")
    left = [0] * l2   # degree of each middle vertex towards class 1
    right = [0] * l2  # towards class 3
    left_adj = [0] * l2
    right_adj = [0] * l2
    for a, b, c in block.triples:
        left_adj[b] |= 1 << a
        right_adj[b] |= 1 << c
    for b in range(l2):
        left[b] = left_adj[b].bit_count()
        right[b] = right_adj[b].bit_count()
    thr = Fraction(1, 4) + epsilon
    sum_left = sum(d * d for d in left)
    sum_right = sum(d * d for d in right)
    left_holds = sum_left >= thr * (l1 * l1 * l2)
    right_holds = sum_right >= thr * (l3 * l3 * l2)
    premise = block.count() >= thr * (l1 * l2 * l3)
    if left_holds and right_holds:
        colour, flagged = "green", "both-hold"
    elif left_holds:
        colour, flagged = "green", None
    elif right_holds:
        colour, flagged = "red", None
    else:
        colour, flagged = None, "neither-holds"
    return ProjectionReport(epsilon, block.density(), premise,
                            sum_left, sum_right, left_holds, right_holds,
                            colour, flagged)


class AuxiliaryHypergraph:
    """Triple system whose vertex classes are indexed by pairs from [m] and
    whose triples live inside blocks indexed by sorted index triples."""

    def __init__(self, m: int, class_sizes: dict, blocks: dict):
        self.m = m
        self.class_sizes = {tuple(sorted(p)): s for p, s in class_sizes.items()}
        for i in range(m):
            for j in range(i + 1, m):
                if (i, j) not in self.class_sizes:
                    raise ValueError("missing class size for pair (%d, %d)" % (i, j))
        self.blocks = {}
        for key, triples in blocks.items():
            i, j, k = sorted(key)
            sizes = (self.class_sizes[(i, j)], self.class_sizes[(i, k)],
                     self.class_sizes[(j, k)])
            self.blocks[(i, j, k)] = TripartiteTriples(sizes, triples)

    def block(self, i: int, j: int, k: int) -> TripartiteTriples:
        key = tuple(sorted((i, j, k)))
        blk = self.blocks.get(key)
        if blk is None:
            sizes = (self.class_sizes[(key[0], key[1])],
                     self.class_sizes[(key[0], key[2])],
                     self.class_sizes[(key[1], key[2])])
            blk = TripartiteTriples(sizes, ())
            self.blocks[key] = blk
        return blk

    def has_triple(self, vertices: dict) -> bool:
        """vertices maps three sorted index pairs covering a sorted index
        triple to class vertices; True when that triple is present."""
        pairs = sorted(vertices)
        idx = tuple(sorted({i for p in pairs for i in p}))
        if len(idx) != 3:
            raise ValueError("vertex keys must cover exactly three indices")
        blk = self.block(*idx)
        want = (vertices[(idx[0], idx[1])], vertices[(idx[0], idx[2])],
                vertices[(idx[1], idx[2])])
        return want in blk.triples


def gen_random_auxiliary(m: int, class_size: int, p_num: int, p_den: int,
                         seed: int) -> AuxiliaryHypergraph:
    sizes = {(i, j): class_size for i in range(m) for j in range(i + 1, m)}
    blocks = {}
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                blocks[(i, j, k)] = [
                    (a, b, c)
                    for a in range(class_size) for b in range(class_size)
                    for c in range(class_size)
                    if bernoulli(p_num, p_den, seed, TAG_AUX_TRIPLE, i, j, k, a, b, c)]
    return AuxiliaryHypergraph(m, sizes, blocks)


@dataclass(frozen=True)
class ThreeTriplesConfig:
    """Three blocks' triples meeting pairwise in the hub-index classes."""

    indices: tuple[int, int, int, int]       # (i1, i2, i3, i4), i1 < i2 < i3
    vertices: dict                           # sorted index pair -> class vertex
    apex_extreme: bool                       # i4 extreme among the four indices


MAX_AUX_M = 8
MAX_AUX_CLASS = 16


def find_three_triples(aux: AuxiliaryHypergraph):
    """Search for indices i1 < i2 < i3 plus a hub index i4 and six class
    vertices so that the three triples through the hub classes all appear.

    All hub choices that are extreme (largest or smallest of the four
    indices) are searched before any interior hub, so the reported
    ``apex_extreme`` flag is False only when no extreme-hub configuration
    exists at all.
    """
    if aux.m > MAX_AUX_M:
        raise CapExceeded("auxiliary search supports m <= %d" % MAX_AUX_M)
    if any(s > MAX_AUX_CLASS for s in aux.class_sizes.values()):
        raise CapExceeded("auxiliary search supports class sizes <= %d" % MAX_AUX_CLASS)
    from itertools import combinations

    # per block, the pairs of (position, position) vertices with a completing third
    joint: dict[tuple, dict[tuple[int, int], set]] = {}

    def joint_pairs(idx: tuple[int, int, int], pos1: int, pos2: int) -> set:
        blk = aux.blocks.get(idx)
        if blk is None:
            return set()
        key = (pos1, pos2)
        cached = joint.setdefault(idx, {})
        if key not in cached:
            cached[key] = {(t[pos1], t[pos2]) for t in blk.triples}
        return cached[key]

    def pair_pos(idx: tuple[int, int, int], pair: tuple[int, int]) -> int:
        order = ((idx[0], idx[1]), (idx[0], idx[2]), (idx[1], idx[2]))
        return order.index(pair)

    quads = list(combinations(range(aux.m), 4))
    plan = [(quad, hub) for quad in quads for hub in (quad[3], quad[0])]
    plan += [(quad, hub) for quad in quads for hub in (quad[1], quad[2])]
    for quad, hub in plan:
        rest = tuple(sorted(set(quad) - {hub}))
        i1, i2, i3 = rest
        extreme = hub == quad[0] or hub == quad[3]
        spokes = [tuple(sorted((r, hub))) for r in rest]
        blocks_idx = [tuple(sorted((i1, i2, hub))),
                      tuple(sorted((i1, i3, hub))),
                      tuple(sorted((i2, i3, hub)))]
        j12 = joint_pairs(blocks_idx[0],
                          pair_pos(blocks_idx[0], spokes[0]),
                          pair_pos(blocks_idx[0], spokes[1]))
        if not j12:
            continue
        j13 = joint_pairs(blocks_idx[1],
                          pair_pos(blocks_idx[1], spokes[0]),
                          pair_pos(blocks_idx[1], spokes[2]))
        if not j13:
            continue
        j23 = joint_pairs(blocks_idx[2],
                          pair_pos(blocks_idx[2], spokes[1]),
                          pair_pos(blocks_idx[2], spokes[2]))
        if not j23:
            continue
        s1 = aux.class_sizes[spokes[0]]
        s2 = aux.class_sizes[spokes[1]]
        s3 = aux.class_sizes[spokes[2]]
        for p14 in range(s1):
            for p24 in range(s2):
                if (p14, p24) not in j12:
                    continue
                for p34 in range(s3):
                    if (p14, p34) in j13 and (p24, p34) in j23:
                        hub_vertices = {spokes[0]: p14, spokes[1]: p24,
                                        spokes[2]: p34}
                        vertices = dict(hub_vertices)
                        # recover one witness vertex in each rim class
                        for (x, y), blk_idx in (((i1, i2), blocks_idx[0]),
                                                ((i1, i3), blocks_idx[1]),
                                                ((i2, i3), blocks_idx[2])):
                            blk = aux.blocks[blk_idx]
                            rim_pos = pair_pos(blk_idx, (x, y))
                            pa = pair_pos(blk_idx, tuple(sorted((x, hub))))
                            pb = pair_pos(blk_idx, tuple(sorted((y, hub))))
                            va = vertices[tuple(sorted((x, hub)))]
                            vb = vertices[tuple(sorted((y, hub)))]
                            for t in blk.triples:
                                if t[pa] == va and t[pb] == vb:
                                    vertices[(x, y)] = t[rim_pos]
                                    break
                        return ThreeTriplesConfig((i1, i2, i3, hub),
                                                  vertices, extreme)
    return None


@dataclass
class ExploreResult:
    graph: MultipartiteGraph
    min_ratio: Fraction
    triangle_free: bool
    restarts: int
    accepted_moves: int


def _creates_triangle(g: MultipartiteGraph, i: int, a: int, j: int, b: int) -> bool:
    for k in range(g.m):
        if k != i and k != j and g.rows[(i, k)][a] & g.rows[(j, k)][b]:
            return True
    return False


def explore_extremal(m: int, s: int, eps_target: Fraction | None = None,
                     restarts: int = 32, seed: int = 0,
                     moves: int = 400) -> ExploreResult:
    """Hill-climb on the minimum mean-square ratio over triangle-free
    m-partite graphs with equal part sizes, starting from the half-split
    pattern.  Moves insert a random cross edge when no triangle appears,
    otherwise swap it against a random existing edge; plateau moves are
    accepted on a seeded coin flip.  The reported instance is re-certified
    triangle-free by exhaustive scan."""
    if m < 2 or s < 2 or s % 2:
        raise ValueError("need m >= 2 parts of even size s >= 2")
    if m > 8 or s > 64:
        raise CapExceeded("explorer budget is m <= 8, s <= 64")
    base = half_split(m, s)
    norm = s * s * s  # all parts share size s, so ratios share one denominator

    def sq_sums(g: MultipartiteGraph) -> dict:
        return {key: sum(r.bit_count() ** 2 for r in rows)
                for key, rows in g.rows.items()}

    best_graph = base
    best_min = min(sq_sums(base).values())
    accepted_total = 0
    for restart in range(restarts):
        rng = random.Random(subseed(seed, restart))
        g = base.copy()
        sums = sq_sums(g)
        cur_min = min(sums.values())
        for _ in range(moves):
            i, j = rng.sample(range(m), 2)
            if i > j:
                i, j = j, i
            a = rng.randrange(s)
            b = rng.randrange(s)
            if g.has_edge(i, a, j, b):
                continue
            removed = None
            if _creates_triangle(g, i, a, j, b):
                edges = list(g.iter_edges())
                removed = edges[rng.randrange(len(edges))]
                g.remove_edge(*removed)
                if _creates_triangle(g, i, a, j, b):
                    g.add_edge(*removed)
                    continue
            g.add_edge(i, a, j, b)
            touched = {(i, j), (j, i)}
            if removed:
                ri, _, rj, _ = removed
                touched |= {(ri, rj), (rj, ri)}
            old = {key: sums[key] for key in touched}
            for key in touched:
                sums[key] = sum(r.bit_count() ** 2 for r in g.rows[key])
            new_min = min(sums.values())
            if new_min > cur_min or (new_min == cur_min and rng.random() < 0.5):
                cur_min = new_min
                accepted_total += 1
            else:
                g.remove_edge(i, a, j, b)
                if removed:
                    g.add_edge(*removed)
                sums.update(old)
            if eps_target is not None and Fraction(cur_min, norm) >= Fraction(1, 4) + eps_target:
                break
        if cur_min > best_min:
            best_min = cur_min
            best_graph = g
    if find_triangle_mp(best_graph) is not None:
        raise RuntimeError("explorer produced a graph with a triangle")
    return ExploreResult(best_graph, Fraction(best_min, norm), True,
                         restarts, accepted_total)


def write_multipartite(g: MultipartiteGraph) -> str:
    """Text format: "mp <m> <s_0> ... <s_{m-1}>" then sorted edge lines."""
    lines = ["mp %d %s" % (g.m, " ".join(str(s) for s in g.sizes))]
    lines.extend("%d %d %d %d" % e for e in g.iter_edges())
    return "\n".join(lines) + "\n"


def read_multipartite(text: str) -> MultipartiteGraph:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("mp"):
        raise ParseError("line 1: expected 'mp' header")
    head = lines[0].split()
    try:
        m = int(head[1])
        sizes = [int(x) for x in head[2:]]
    except (IndexError, ValueError):
        raise ParseError("line 1: header must be 'mp <m> <sizes...>'") from None
    if len(sizes) != m:
        raise ParseError("line 1: expected %d part sizes" % m)
    g = MultipartiteGraph(sizes)
    for ln, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 4:
            raise ParseError("line %d: expected '<i> <a> <j> <b>'" % ln)
        try:
            i, a, j, b = (int(x) for x in parts)
        except ValueError:
            raise ParseError("line %d: fields must be integers" % ln) from None
        if not (0 <= i < m and 0 <= j < m) or i >= j:
            raise ParseError("line %d: need part indices with i < j" % ln)
        if not (0 <= a < sizes[i] and 0 <= b < sizes[j]):
            raise ParseError("line %d: vertex index out of range" % ln)
        if g.has_edge(i, a, j, b):
            raise ParseError("line %d: duplicate edge" % ln)
        g.add_edge(i, a, j, b)
    return g
