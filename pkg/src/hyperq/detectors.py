"""Forbidden-configuration detectors: four vertices spanning three edges
(with an ordered-apex variant), 3-uniform cliques, apex stars, the
three-edge 4-uniform pattern, a generic small-pattern embedder, the
red/blue/green vanishing-condition checker, and link-colouring witnesses.

Witness tie-breaking is lexicographic on the vertex tuple, and counts are
exact rather than early-exit, so reports are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from .core import CapExceeded, Graph, Hypergraph3, Hypergraph4, iter_bits

EMBED_MAX_PATTERN = 8
VANISHING_MAX_VERTICES = 6
CLIQUE_MAX_K = 8


@dataclass(frozen=True)
class Witness:
    """A concrete occurrence of a forbidden pattern."""

    kind: str
    vertices: tuple[int, ...]
    apex: int | None = None
    apex_position: str | None = None  # 'min' | 'max' | 'interior'

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("witness vertices must be distinct")
        if self.apex is not None and self.apex not in self.vertices:
            raise ValueError("apex must be one of the witness vertices")


def _apex_position(vertices: tuple[int, ...], apex: int) -> str:
    if apex == min(vertices):
        return "min"
    if apex == max(vertices):
        return "max"
    return "interior"


def find_triangle_graph(g: Graph, within: int | None = None):
    """Lexicographically least triangle of a graph, or None."""
    full = (1 << g.n) - 1
    within = full if within is None else within
    rows = g.rows
    for x in iter_bits(within):
        row_x = rows[x] & within
        for y in iter_bits(row_x >> (x + 1) << (x + 1)):
            common = row_x & (rows[y] >> (y + 1) << (y + 1))
            if common:
                z = (common & -common).bit_length() - 1
                return (x, y, z)
    return None


def count_triangles_graph(g: Graph, within: int | None = None) -> int:
    full = (1 << g.n) - 1
    within = full if within is None else within
    rows = g.rows
    total = 0
    for x in iter_bits(within):
        row_x = rows[x] & within
        for y in iter_bits(row_x >> (x + 1) << (x + 1)):
            total += (row_x & (rows[y] >> (y + 1) << (y + 1))).bit_count()
    return total


def find_clique_graph(g: Graph, k: int, within: int | None = None):
    """Lexicographically least k-clique of a graph, or None."""
    if k > CLIQUE_MAX_K:
        raise CapExceeded("clique search supports k <= %d" % CLIQUE_MAX_K)
    if k < 1:
        raise ValueError("k must be positive")
    full = (1 << g.n) - 1
    cand0 = full if within is None else within
    rows = g.rows
    chosen: list[int] = []

    def extend(cand: int) -> bool:
        if len(chosen) == k:
            return True
        if len(chosen) + cand.bit_count() < k:
            return False
        for v in iter_bits(cand):
            chosen.append(v)
            if extend(cand & rows[v] & (full >> (v + 1) << (v + 1))):
                return True
            chosen.pop()
        return False

    if extend(cand0):
        return tuple(chosen)
    return None


def find_k4_minus(h: Hypergraph3, ordered: bool = False) -> Witness | None:
    """Least 4-set spanning three edges through one apex vertex.

    In ordered mode only witnesses whose apex is the smallest or largest of
    the four vertices qualify.
    """
    full = (1 << h.n) - 1
    best: tuple[tuple[int, ...], int] | None = None
    for a in range(h.n):
        link = h.link_graph(a)
        if ordered:
            masks = (full >> (a + 1) << (a + 1), (1 << a) - 1)
        else:
            masks = (None,)
        for mask in masks:
            tri = find_triangle_graph(link, mask)
            if tri is None:
                continue
            vertices = tuple(sorted((a,) + tri))
            cand = (vertices, a)
            if best is None or cand < best:
                best = cand
    if best is None:
        return None
    vertices, apex = best
    return Witness("k4minus", vertices, apex, _apex_position(vertices, apex))


def count_k4_minus(h: Hypergraph3) -> int:
    """Exact number of (4-set, apex) pairs whose three apex triples are edges."""
    return sum(count_triangles_graph(h.link_graph(a)) for a in range(h.n))


def find_clique3(h: Hypergraph3, k: int) -> Witness | None:
    """Least vertex set of size k all of whose triples are edges."""
    if k < 4:
        raise ValueError("k must be at least 4")
    if k > CLIQUE_MAX_K:
        raise CapExceeded("clique search supports k <= %d" % CLIQUE_MAX_K)
    n = h.n
    full = (1 << n) - 1
    chosen: list[int] = []

    def extend(cand: int) -> bool:
        if len(chosen) == k:
            return True
        if len(chosen) + cand.bit_count() < k:
            return False
        for v in iter_bits(cand):
            new = cand & (full >> (v + 1) << (v + 1))
            for u in chosen:
                new &= h.link_row(u, v)
                if not new and len(chosen) + 1 < k:
                    break
            chosen.append(v)
            if extend(new):
                return True
            chosen.pop()
        return False

    if extend(full):
        return Witness("clique3", tuple(chosen))
    return None


def find_sk(h: Hypergraph3, k: int) -> Witness | None:
    """Least apex star: a vertex whose link graph contains a k-clique."""
    if k < 3:
        raise ValueError("k must be at least 3")
    best: tuple[tuple[int, ...], int] | None = None
    for a in range(h.n):
        clique = find_clique_graph(h.link_graph(a), k)
        if clique is None:
            continue
        vertices = tuple(sorted((a,) + clique))
        cand = (vertices, a)
        if best is None or cand < best:
            best = cand
    if best is None:
        return None
    vertices, apex = best
    return Witness("sk", vertices, apex, _apex_position(vertices, apex))


def find_f4(h: Hypergraph4) -> Witness | None:
    """Least pair whose link graph contains a triangle: three 4-edges on six
    vertices, all through one pair."""
    for u in range(h.n):
        for v in range(u + 1, h.n):
            rows = h.pair_rows(u, v)
            tri = find_triangle_graph(Graph(h.n, rows))
            if tri is not None:
                return Witness("f4", (u, v) + tri)
    return None


def embed_small(pattern: Hypergraph3, host: Hypergraph3,
                ordered: bool = False) -> tuple[int, ...] | None:
    """Injective embedding of a small 3-uniform pattern into a host, mapping
    pattern edges onto host edges (non-edges are unconstrained).  Ordered
    mode requires the map to preserve the vertex order.
    """
    f = pattern.n
    if f > EMBED_MAX_PATTERN:
        raise CapExceeded("pattern embedder supports up to %d vertices" % EMBED_MAX_PATTERN)
    n = host.n
    if f > n:
        return None
    full = (1 << n) - 1
    edges = pattern.edges()
    if ordered:
        order = list(range(f))
    else:
        degree = [0] * f
        for e in edges:
            for v in e:
                degree[v] += 1
        order = sorted(range(f), key=lambda v: (-degree[v], v))
    placed_at = {v: t for t, v in enumerate(order)}
    # for each placement step, the pattern pairs already placed inside an edge
    # with the new vertex, expressed in step indices
    constraints: list[list[tuple[int, int]]] = [[] for _ in range(f)]
    for x, y, z in edges:
        sx, sy, sz = sorted((placed_at[x], placed_at[y], placed_at[z]))
        constraints[sz].append((sx, sy))
    image: list[int] = []

    def extend(step: int, used: int) -> bool:
        if step == f:
            return True
        cand = full & ~used
        if ordered and step:
            prev = image[step - 1]
            cand &= full >> (prev + 1) << (prev + 1)
        for sx, sy in constraints[step]:
            cand &= host.link_row(image[sx], image[sy])
            if not cand:
                return False
        for v in iter_bits(cand):
            image.append(v)
            if extend(step + 1, used | 1 << v):
                return True
            image.pop()
        return False

    if not extend(0, 0):
        return None
    result = [0] * f
    for t, v in enumerate(order):
        result[v] = image[t]
    return tuple(result)


@dataclass(frozen=True)
class VanishingWitness:
    """An enumeration of the pattern's vertices plus a pair colouring under
    which every edge reads (red, blue, green) along the order."""

    order: tuple[int, ...]
    colours: dict  # sorted vertex pair -> colour index (0 red, 1 blue, 2 green)


def check_vanishing_condition(pattern: Hypergraph3) -> VanishingWitness | None:
    """Search all vertex enumerations for one whose forced three-colouring of
    the covered pairs is conflict-free.

    Each edge, read along the enumeration, forces red on its first pair,
    blue on its second and green on its third, so a single pass per
    enumeration decides it; uncovered pairs default to red.
    """
    f = pattern.n
    if f > VANISHING_MAX_VERTICES:
        raise CapExceeded("vanishing-condition search supports up to %d vertices"
                          % VANISHING_MAX_VERTICES)
    edges = pattern.edges()
    for perm in permutations(range(f)):
        position = {v: i for i, v in enumerate(perm)}
        colours: dict[tuple[int, int], int] = {}
        ok = True
        for edge in edges:
            by_pos = sorted(edge, key=position.__getitem__)
            forced = (((by_pos[0], by_pos[1]), 0),
                      ((by_pos[0], by_pos[2]), 1),
                      ((by_pos[1], by_pos[2]), 2))
            for (u, v), colour in forced:
                key = (u, v) if u < v else (v, u)
                prev = colours.get(key)
                if prev is None:
                    colours[key] = colour
                elif prev != colour:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            for u in range(f):
                for v in range(u + 1, f):
                    colours.setdefault((u, v), 0)
            return VanishingWitness(perm, colours)
    return None


def verify_vanishing(pattern: Hypergraph3, witness: VanishingWitness) -> bool:
    """Independent re-check of a vanishing-condition witness."""
    position = {v: i for i, v in enumerate(witness.order)}
    for edge in pattern.edges():
        a, b, c = sorted(edge, key=position.__getitem__)
        want = (((a, b), 0), ((a, c), 1), ((b, c), 2))
        for (u, v), colour in want:
            key = (u, v) if u < v else (v, u)
            if witness.colours.get(key) != colour:
                return False
    return True


@dataclass(frozen=True)
class LinkColouringReport:
    """Partition of the non-apex vertices into independent classes of the
    apex's link graph, built from the generating pair colouring."""

    apex: int
    classes: tuple[tuple[int, ...], ...]
    independent: bool
    violations: tuple


def link_colouring_witness(h: Hypergraph3, apex: int) -> LinkColouringReport:
    """Classes pairing each colour's earlier neighbours with the cyclically
    next colour's later neighbours; each class is checked independent in the
    apex link graph."""
    colouring = h.colouring
    if colouring is None:
        raise ValueError("hypergraph carries no pair-colouring metadata")
    if not 0 <= apex < h.n:
        raise ValueError("apex out of range")
    kc = colouring.num_colours
    below = (1 << apex) - 1
    above = ((1 << h.n) - 1) >> (apex + 1) << (apex + 1)
    link = h.link_graph(apex)
    classes = []
    violations = []
    for i in range(kc):
        mask = (colouring.colour_mask(apex, i) & below) | \
               (colouring.colour_mask(apex, (i + 1) % kc) & above)
        classes.append(tuple(iter_bits(mask)))
        for x in iter_bits(mask):
            bad = link.rows[x] & mask & ~((1 << (x + 1)) - 1)
            for y in iter_bits(bad):
                violations.append((i, x, y))
    return LinkColouringReport(apex, tuple(classes), not violations,
                               tuple(violations))


def is_linear(pattern: Hypergraph3) -> bool:
    """True when every two edges share at most one vertex."""
    edges = [set(e) for e in pattern.edges()]
    return all(len(e1 & e2) <= 1
               for e1, e2 in combinations(edges, 2))


def _iso_three_edge(edges1: list[tuple[int, ...]], edges2: list[tuple[int, ...]]) -> bool:
    """Isomorphism test specialised to hypergraphs given by <= 3 edges."""
    if len(edges1) != len(edges2):
        return False
    verts1 = sorted({v for e in edges1 for v in e})
    verts2 = sorted({v for e in edges2 for v in e})
    if len(verts1) != len(verts2):
        return False
    sets2 = [set(e) for e in edges2]

    def assign(idx: int, mapping: dict) -> bool:
        if idx == len(edges1):
            return True
        target = sets2[order[idx]]
        source = edges1[idx]
        fixed = [(v, mapping[v]) for v in source if v in mapping]
        if any(img not in target for _, img in fixed):
            return False
        free = [v for v in source if v not in mapping]
        pool = sorted(target - {img for _, img in fixed})
        used = set(mapping.values())
        for perm in permutations(pool, len(free)):
            if any(p in used for p in perm):
                continue
            new = dict(mapping)
            new.update(zip(free, perm))
            if assign(idx + 1, new):
                return True
        return False

    for order in permutations(range(len(edges2))):
        if assign(0, {}):
            return True
    return False


def three_edge_isomorphism_types() -> list[Hypergraph3]:
    """All isomorphism types of 3-uniform hypergraphs with exactly three
    edges, each on a compacted vertex set 0..f-1."""
    first = (0, 1, 2)

    def extensions(existing: int) -> Iterator[tuple[int, ...]]:
        for keep in range(4):
            fresh = tuple(range(existing, existing + 3 - keep))
            for old in combinations(range(existing), keep):
                yield tuple(sorted(old + fresh))

    raw = set()
    for second in extensions(3):
        if second == first:
            continue
        used = max(3, max(second) + 1)
        for third in extensions(used):
            if third in (first, second):
                continue
            edges = tuple(sorted((first, second, third)))
            verts = sorted({v for e in edges for v in e})
            relabel = {v: i for i, v in enumerate(verts)}
            edges = tuple(sorted(tuple(sorted(relabel[v] for v in e)) for e in edges))
            raw.add(edges)

    types: list[tuple] = []
    buckets: dict[tuple, list[tuple]] = {}
    for edges in sorted(raw):
        degree: dict[int, int] = {}
        for e in edges:
            for v in e:
                degree[v] = degree.get(v, 0) + 1
        overlap = tuple(sorted(len(set(a) & set(b))
                               for a, b in combinations(edges, 2)))
        key = (tuple(sorted(degree.values())), overlap)
        known = buckets.setdefault(key, [])
        if not any(_iso_three_edge(list(edges), list(other)) for other in known):
            known.append(edges)
            types.append(edges)
    result = []
    for edges in types:
        f = max(v for e in edges for v in e) + 1
        result.append(Hypergraph3.from_edges(f, edges))
    return result
