"""Hypergraph data model: 3- and 4-uniform hypergraphs on ordered vertices.

Vertices are always the integers 0..n-1 carrying their natural order.  Triple
and quadruple membership is held in per-pair bitset rows (Python ints), which
make link lookups, subset counting and pattern scans cheap; sorted edge lists
are derived lazily from the rows rather than stored.  All objects are treated
as immutable once constructed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

N3_CAP = 4096
N4_CAP = 512


class CapExceeded(Exception):
    """A requested exact computation or size exceeds its configured cap."""


class ParseError(ValueError):
    """Malformed serialized input; message carries a 1-based line number."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a nonnegative int, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_mask(vertices: Iterable[int] | int, n: int) -> int:
    """Pack a vertex collection into a bitmask, checking the range [0, n)."""
    if isinstance(vertices, int):
        if vertices < 0 or vertices >> n:
            raise ValueError("vertex mask out of range for n=%d" % n)
        return vertices
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError("vertex %r out of range [0, %d)" % (v, n))
        mask |= 1 << v
    return mask


def _pair_base(n: int) -> list[int]:
    # base[u] + (v - u - 1) indexes the unordered pair {u < v} in a flat list
    base = [0] * n
    for u in range(1, n):
        base[u] = base[u - 1] + n - u
    return base


class Graph:
    """Simple undirected graph on 0..n-1 with bitmask adjacency rows."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: list[int] | None = None):
        self.n = n
        self.rows = rows if rows is not None else [0] * n

    def add_edge(self, u: int, v: int) -> None:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError("bad edge (%r, %r)" % (u, v))
        self.rows[u] |= 1 << v
        self.rows[v] |= 1 << u

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbours(self, v: int) -> int:
        return self.rows[v]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def iter_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.rows[u] >> (u + 1) << (u + 1)
            for v in iter_bits(row):
                yield (u, v)


@dataclass(frozen=True)
class DensityReport:
    """Edge count and edge density relative to all C(n, arity) slots."""

    edge_count: int
    slots: int
    density_fraction: Fraction
    density: float

    @classmethod
    def of(cls, edge_count: int, n: int, arity: int) -> "DensityReport":
        slots = math.comb(n, arity)
        frac = Fraction(edge_count, slots) if slots else Fraction(0)
        return cls(edge_count, slots, frac, float(frac))


class Hypergraph3:
    """A 3-uniform hypergraph backed by per-pair link rows.

    ``link_row(u, v)`` is the bitmask of vertices w with {u, v, w} an edge.
    The sorted edge list is derived from the rows on demand.
    """

    __slots__ = ("n", "_rows", "_base", "edge_count", "colouring", "orientation")

    def __init__(self, n: int, rows: list[int], colouring=None, orientation=None):
        if not 0 <= n <= N3_CAP:
            raise ValueError("n=%d outside supported range [0, %d]" % (n, N3_CAP))
        if len(rows) != n * (n - 1) // 2:
            raise ValueError("expected %d link rows, got %d" % (n * (n - 1) // 2, len(rows)))
        self.n = n
        self._rows = rows
        self._base = _pair_base(n)
        bits = sum(r.bit_count() for r in rows)
        if bits % 3:
            raise ValueError("inconsistent link rows: total bit count not divisible by 3")
        self.edge_count = bits // 3
        self.colouring = colouring
        self.orientation = orientation

    @classmethod
    def empty(cls, n: int) -> "Hypergraph3":
        return cls(n, [0] * (n * (n - 1) // 2))

    @classmethod
    def complete(cls, n: int) -> "Hypergraph3":
        full = (1 << n) - 1
        rows = []
        for u in range(n):
            for v in range(u + 1, n):
                rows.append(full & ~(1 << u) & ~(1 << v))
        return cls(n, rows)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph3":
        if not 0 <= n <= N3_CAP:
            raise ValueError("n=%d outside supported range [0, %d]" % (n, N3_CAP))
        base = _pair_base(n)
        rows = [0] * (n * (n - 1) // 2)
        seen = set()
        for edge in edges:
            x, y, z = triple = tuple(sorted(edge))
            if x == y or y == z:
                raise ValueError("edge %r has repeated vertices" % (triple,))
            if x < 0 or z >= n:
                raise ValueError("edge %r out of range [0, %d)" % (triple, n))
            if triple in seen:
                raise ValueError("duplicate edge %r" % (triple,))
            seen.add(triple)
            rows[base[x] + y - x - 1] |= 1 << z
            rows[base[x] + z - x - 1] |= 1 << y
            rows[base[y] + z - y - 1] |= 1 << x
        return cls(n, rows)

    def link_row(self, u: int, v: int) -> int:
        """Bitmask of vertices completing an edge with the pair {u, v}."""
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError("bad pair (%r, %r)" % (u, v))
        if u > v:
            u, v = v, u
        return self._rows[self._base[u] + v - u - 1]

    def has_edge(self, x: int, y: int, z: int) -> bool:
        return bool(self.link_row(x, y) >> z & 1)

    def iter_edges(self) -> Iterator[tuple[int, int, int]]:
        """Edges as sorted triples, in lexicographic order."""
        base = self._base
        for u in range(self.n):
            for v in range(u + 1, self.n):
                row = self._rows[base[u] + v - u - 1] >> (v + 1) << (v + 1)
                for w in iter_bits(row):
                    yield (u, v, w)

    def edges(self) -> list[tuple[int, int, int]]:
        return list(self.iter_edges())

    def density(self) -> DensityReport:
        return DensityReport.of(self.edge_count, self.n, 3)

    def count_edges_within(self, vertices: Iterable[int] | int) -> int:
        """Number of edges with all three vertices inside the given set."""
        umask = vertex_mask(vertices, self.n)
        base = self._base
        total = 0
        members = list(iter_bits(umask))
        for i, u in enumerate(members):
            row_base = base[u] - u - 1
            for v in members[i + 1:]:
                above_v = umask >> (v + 1) << (v + 1)
                total += (self._rows[row_base + v] & above_v).bit_count()
        return total

    def count_ordered_triples(self, xs, ys, zs) -> int:
        """Ordered (x, y, z) in X x Y x Z with {x, y, z} an edge."""
        xmask = vertex_mask(xs, self.n)
        ymask = vertex_mask(ys, self.n)
        zmask = vertex_mask(zs, self.n)
        total = 0
        for x in iter_bits(xmask):
            for y in iter_bits(ymask):
                if y == x:
                    continue
                total += (self.link_row(x, y) & zmask).bit_count()
        return total

    def link_graph(self, a: int) -> Graph:
        """Graph on the other vertices whose edges complete hyperedges with a."""
        if not 0 <= a < self.n:
            raise ValueError("vertex %r out of range" % a)
        rows = [0] * self.n
        for v in range(self.n):
            if v != a:
                rows[v] = self.link_row(a, v)
        return Graph(self.n, rows)

    def induced(self, vertices: Iterable[int] | int) -> "Hypergraph3":
        """Sub-hypergraph on the given vertices, relabelled 0..|U|-1 in order."""
        umask = vertex_mask(vertices, self.n)
        members = list(iter_bits(umask))
        relabel = {v: i for i, v in enumerate(members)}
        edges = []
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                row = self.link_row(u, v) & (umask >> (v + 1) << (v + 1))
                edges.extend((relabel[u], relabel[v], relabel[w]) for w in iter_bits(row))
        return Hypergraph3.from_edges(len(members), edges)


class Hypergraph4:
    """A 4-uniform hypergraph backed by per-pair link graphs.

    ``pair_rows(u, v)[x]`` is the bitmask of vertices y with {u, v, x, y} an
    edge, so each pair carries the adjacency rows of its link graph.
    """

    __slots__ = ("n", "_rows", "_base", "edge_count", "orientation")

    def __init__(self, n: int, rows: list[list[int]], orientation=None):
        if not 0 <= n <= N4_CAP:
            raise ValueError("n=%d outside supported range [0, %d]" % (n, N4_CAP))
        if len(rows) != n * (n - 1) // 2:
            raise ValueError("expected %d pair rows" % (n * (n - 1) // 2))
        self.n = n
        self._rows = rows
        self._base = _pair_base(n)
        bits = sum(r.bit_count() for pair in rows for r in pair)
        if bits % 12:
            raise ValueError("inconsistent pair rows: total bit count not divisible by 12")
        self.edge_count = bits // 12
        self.orientation = orientation

    @classmethod
    def empty(cls, n: int) -> "Hypergraph4":
        return cls(n, [[0] * n for _ in range(n * (n - 1) // 2)])

    @classmethod
    def complete(cls, n: int) -> "Hypergraph4":
        full = (1 << n) - 1
        rows = []
        for u in range(n):
            for v in range(u + 1, n):
                other = full & ~(1 << u) & ~(1 << v)
                pair = [other & ~(1 << x) if other >> x & 1 else 0 for x in range(n)]
                rows.append(pair)
        return cls(n, rows)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph4":
        if not 0 <= n <= N4_CAP:
            raise ValueError("n=%d outside supported range [0, %d]" % (n, N4_CAP))
        base = _pair_base(n)
        rows = [[0] * n for _ in range(n * (n - 1) // 2)]
        seen = set()
        for edge in edges:
            quad = tuple(sorted(edge))
            if len(set(quad)) != 4:
                raise ValueError("edge %r must have 4 distinct vertices" % (tuple(edge),))
            if quad[0] < 0 or quad[3] >= n:
                raise ValueError("edge %r out of range [0, %d)" % (quad, n))
            if quad in seen:
                raise ValueError("duplicate edge %r" % (quad,))
            seen.add(quad)
            a, b, c, d = quad
            for (u, v), (x, y) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c)),
                                   ((b, c), (a, d)), ((b, d), (a, c)), ((c, d), (a, b))):
                pair = rows[base[u] + v - u - 1]
                pair[x] |= 1 << y
                pair[y] |= 1 << x
        return cls(n, rows)

    def pair_rows(self, u: int, v: int) -> list[int]:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError("bad pair (%r, %r)" % (u, v))
        if u > v:
            u, v = v, u
        return self._rows[self._base[u] + v - u - 1]

    def pair_link(self, u: int, v: int) -> Graph:
        """Link graph of the pair {u, v}: edge {x, y} iff {u, v, x, y} is an edge."""
        return Graph(self.n, list(self.pair_rows(u, v)))

    def has_edge(self, a: int, b: int, c: int, d: int) -> bool:
        return bool(self.pair_rows(a, b)[c] >> d & 1)

    def iter_edges(self) -> Iterator[tuple[int, int, int, int]]:
        """Edges as sorted quadruples, in lexicographic order."""
        for a in range(self.n):
            for b in range(a + 1, self.n):
                pair = self.pair_rows(a, b)
                for c in range(b + 1, self.n):
                    row = pair[c] >> (c + 1) << (c + 1)
                    for d in iter_bits(row):
                        yield (a, b, c, d)

    def edges(self) -> list[tuple[int, int, int, int]]:
        return list(self.iter_edges())

    def density(self) -> DensityReport:
        return DensityReport.of(self.edge_count, self.n, 4)

    def count_ordered_quadruples(self, u1, u2, u3, u4) -> int:
        """Ordered tuples in U1 x U2 x U3 x U4 whose vertex set is an edge."""
        m1 = vertex_mask(u1, self.n)
        m2 = vertex_mask(u2, self.n)
        m3 = vertex_mask(u3, self.n)
        m4 = vertex_mask(u4, self.n)
        total = 0
        cache: dict[tuple[int, int], int] = {}
        for a in iter_bits(m1):
            for b in iter_bits(m2):
                if a == b:
                    continue
                key = (a, b) if a < b else (b, a)
                inner = cache.get(key)
                if inner is None:
                    rows = self.pair_rows(*key)
                    inner = sum((rows[x] & m4).bit_count() for x in iter_bits(m3))
                    cache[key] = inner
                total += inner
        return total

    def induced(self, vertices: Iterable[int] | int) -> "Hypergraph4":
        umask = vertex_mask(vertices, self.n)
        members = list(iter_bits(umask))
        relabel = {v: i for i, v in enumerate(members)}
        edges = [tuple(relabel[v] for v in e) for e in self.iter_edges()
                 if all(umask >> v & 1 for v in e)]
        return Hypergraph4.from_edges(len(members), edges)


def write_hypergraph(h: Hypergraph3 | Hypergraph4) -> str:
    """Serialize to the text format: "<arity> <n> <m>" then sorted edge lines."""
    arity = 3 if isinstance(h, Hypergraph3) else 4
    lines = ["%d %d %d" % (arity, h.n, h.edge_count)]
    lines.extend(" ".join(map(str, e)) for e in h.iter_edges())
    return "\n".join(lines) + "\n"


def read_hypergraph(text: str) -> Hypergraph3 | Hypergraph4:
    """Parse the text format; raises ParseError with a 1-based line number."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("line 1: missing header")
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError("line 1: header must be '<arity> <n> <m>'")
    try:
        arity, n, m = (int(x) for x in head)
    except ValueError:
        raise ParseError("line 1: header fields must be integers") from None
    if arity not in (3, 4):
        raise ParseError("line 1: unsupported arity %d" % arity)
    if n < 0 or m < 0:
        raise ParseError("line 1: negative n or m")
    if len(lines) != m + 1:
        raise ParseError("line %d: expected %d edge lines, found %d"
                         % (len(lines) + 1, m, len(lines) - 1))
    edges: list[tuple[int, ...]] = []
    prev: tuple[int, ...] | None = None
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != arity:
            raise ParseError("line %d: expected %d vertices" % (i, arity))
        try:
            edge = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError("line %d: vertices must be integers" % i) from None
        if any(not 0 <= v < n for v in edge):
            raise ParseError("line %d: vertex out of range [0, %d)" % (i, n))
        if any(edge[j] >= edge[j + 1] for j in range(arity - 1)):
            raise ParseError("line %d: vertices must be strictly increasing" % i)
        if prev is not None and edge <= prev:
            if edge == prev:
                raise ParseError("line %d: duplicate edge" % i)
            raise ParseError("line %d: edges not sorted lexicographically" % i)
        prev = edge
        edges.append(edge)
    if arity == 3:
        return Hypergraph3.from_edges(n, edges)
    return Hypergraph4.from_edges(n, edges)
