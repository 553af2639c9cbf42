"""Quasirandomness certification: deviation maxima for vertex-subset,
triple-of-sets, set-and-pair-set, and four-set edge counts, plus bipartite
regularity deviation, exact tripartite triangle counting with the counting
bound, and relative density of a hypergraph against a tripartite graph.

Exact modes enumerate subsets in Gray-code order with incremental updates
and are refused (never silently downgraded) beyond their caps.  Heuristic
modes report certified lower bounds on the true maximum.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .core import CapExceeded, Hypergraph3, Hypergraph4, iter_bits
from .hashing import subseed
from .multipartite import MultipartiteGraph

WEAK_EXACT_HARD_CAP = 24
PAIR_EXACT_HARD_CAP = 20
BIPARTITE_EXACT_HARD_CAP = 24


@dataclass(frozen=True)
class DeviationReport:
    """Largest observed deviation of an edge count from its expectation.

    ``max_deviation`` is in raw edge-count units; ``eta`` divides it by the
    stated normalizer (n^3, n^4, or |X||Y|).  Exact methods return the true
    maximum; search and sampling methods return a certified lower bound.
    """

    kind: str
    reference_density: Fraction
    max_deviation: Fraction
    eta: float
    normalizer: int
    witness: tuple
    method: str
    trials: dict = field(default_factory=dict)

    @property
    def is_exact(self) -> bool:
        return self.method == "exact"


def _as_fraction(value, default: Fraction) -> Fraction:
    if value is None:
        return default
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value).limit_denominator(10 ** 9)
    raise ValueError("cannot interpret %r as a density" % (value,))


def _gray_toggle_order(n: int):
    """Vertex toggled at each step of the reflected Gray walk over subsets."""
    for i in range(1, 1 << n):
        yield (i & -i).bit_length() - 1


def weak_deviation(h: Hypergraph3, d=None, mode: str = "exact",
                   cap: int = WEAK_EXACT_HARD_CAP, restarts: int = 32,
                   seed: int = 0, max_steps: int = 10 ** 4) -> DeviationReport:
    """Maximum of |e(U) - d*C(|U|,3)| over vertex subsets U.

    Exact mode walks all 2^n subsets in Gray-code order, maintaining e(U)
    incrementally through single-vertex toggles; it is refused above the cap.
    Search mode runs seeded steepest-toggle hill climbs from random subsets.
    """
    n = h.n
    d = _as_fraction(d, h.density().density_fraction)
    p, q = d.numerator, d.denominator
    norm = n ** 3
    if mode == "exact":
        if cap > WEAK_EXACT_HARD_CAP:
            raise ValueError("cap above hard limit %d" % WEAK_EXACT_HARD_CAP)
        if n > cap:
            raise CapExceeded("exact subset enumeration refused for n=%d > cap %d"
                              % (n, cap))
        target = [math.comb(s, 3) * p for s in range(n + 1)]
        best = 0
        best_mask = 0
        e = 0
        size = 0
        mask = 0
        row = h.link_row
        for v in _gray_toggle_order(n):
            bit = 1 << v
            if mask & bit:
                mask ^= bit
                size -= 1
                gained = 0
                for x in iter_bits(mask):
                    gained += (row(v, x) & mask).bit_count()
                e -= gained // 2
            else:
                gained = 0
                for x in iter_bits(mask):
                    gained += (row(v, x) & mask).bit_count()
                e += gained // 2
                mask ^= bit
                size += 1
            val = abs(e * q - target[size])
            if val > best:
                best = val
                best_mask = mask
        witness = tuple(iter_bits(best_mask))
        return DeviationReport("weak", d, Fraction(best, q), best / (q * norm),
                               norm, witness, "exact", {"subsets": 1 << n})

    if mode != "search":
        raise ValueError("mode must be 'exact' or 'search'")
    best = Fraction(0)
    best_witness: tuple = ()
    row = h.link_row
    for r in range(restarts):
        rng = random.Random(subseed(seed, r))
        mask = rng.getrandbits(n) & ((1 << n) - 1)
        # cnt[v]: edges through v with both other vertices in the current set
        cnt = [0] * n
        for v in range(n):
            acc = 0
            for x in iter_bits(mask & ~(1 << v)):
                acc += (row(v, x) & mask & ~(1 << v)).bit_count()
            cnt[v] = acc // 2
        e = sum(cnt[v] for v in iter_bits(mask)) // 3
        size = mask.bit_count()
        for _ in range(max_steps):
            cur = abs(e * q - math.comb(size, 3) * p)
            move_v = -1
            move_val = cur
            for v in range(n):
                if mask >> v & 1:
                    nv = abs((e - cnt[v]) * q - math.comb(size - 1, 3) * p)
                else:
                    nv = abs((e + cnt[v]) * q - math.comb(size + 1, 3) * p)
                if nv > move_val:
                    move_val = nv
                    move_v = v
            if move_v < 0:
                break
            bit = 1 << move_v
            if mask & bit:
                e -= cnt[move_v]
                mask ^= bit
                size -= 1
                for v in range(n):
                    if v != move_v:
                        cnt[v] -= (row(v, move_v) & mask & ~(1 << v)).bit_count()
            else:
                e += cnt[move_v]
                for v in range(n):
                    if v != move_v:
                        cnt[v] += (row(v, move_v) & mask & ~(1 << v)).bit_count()
                mask ^= bit
                size += 1
        final = Fraction(abs(e * q - math.comb(size, 3) * p), q)
        if final > best:
            best = final
            best_witness = tuple(iter_bits(mask))
    return DeviationReport("weak", d, best, float(best) / norm, norm,
                           best_witness, "local-search",
                           {"restarts": restarts, "max_steps": max_steps})


def sample_set_triple(rng: random.Random, n: int,
                      disjoint: bool = False) -> tuple[int, int, int]:
    """Random (X, Y, Z) masks; in disjoint mode each vertex joins at most one
    of the three sets."""
    if not disjoint:
        full = (1 << n) - 1
        return (rng.getrandbits(n) & full, rng.getrandbits(n) & full,
                rng.getrandbits(n) & full)
    masks = [0, 0, 0]
    for v in range(n):
        slot = rng.randrange(4)
        if slot < 3:
            masks[slot] |= 1 << v
    return tuple(masks)


def xyz_deviation(h: Hypergraph3, d=None, samples: int = 200, seed: int = 0,
                  improve_steps: int = 32, disjoint: bool = False) -> DeviationReport:
    """Largest |e(X,Y,Z) - d|X||Y||Z|| over sampled set triples, with a
    steepest-toggle improvement pass from the best sample.

    The sieve consequence of subset quasirandomness bounds this deviation by
    7 eta n^3 for disjoint X, Y, Z; ``disjoint=True`` samples within that
    regime (overlapping triples can exceed the factor-7 bound).
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    n = h.n
    d = _as_fraction(d, h.density().density_fraction)
    p, q = d.numerator, d.denominator
    norm = n ** 3
    rng = random.Random(subseed(seed, 0x585954))

    def value(xm, ym, zm):
        cnt = h.count_ordered_triples(xm, ym, zm)
        return abs(cnt * q - p * xm.bit_count() * ym.bit_count() * zm.bit_count())

    best = -1
    best_masks = (0, 0, 0)
    for _ in range(samples):
        masks = sample_set_triple(rng, n, disjoint)
        val = value(*masks)
        if val > best:
            best = val
            best_masks = masks
    improved = 0
    masks = list(best_masks)
    for _ in range(improve_steps):
        step_best = best
        step_move = None
        for which in range(3):
            for v in range(n):
                trial = list(masks)
                if disjoint:
                    # reassign v to set `which` (or drop it), keeping the sets disjoint
                    for i in range(3):
                        trial[i] &= ~(1 << v)
                    if not masks[which] >> v & 1:
                        trial[which] |= 1 << v
                else:
                    trial[which] ^= 1 << v
                val = value(*trial)
                if val > step_best:
                    step_best = val
                    step_move = tuple(trial)
        if step_move is None:
            break
        masks = list(step_move)
        best = step_best
        improved += 1
    witness = tuple(tuple(iter_bits(m)) for m in masks)
    return DeviationReport("xyz", d, Fraction(best, q), best / (q * norm), norm,
                           witness, "sampled",
                           {"samples": samples, "improve_steps": improved})


def pair_deviation(h: Hypergraph3, d=None, mode: str = "exact",
                   cap: int = PAIR_EXACT_HARD_CAP, restarts: int = 32,
                   seed: int = 0, max_steps: int = 200) -> DeviationReport:
    """Maximum of |e(U, X) - d|U||X|| over vertex sets U and pair sets X.

    Uses the decomposition e(U, X) - d|U||X| = sum over pairs p in X of
    (deg_U(p) - d|U|): for any fixed U the maximizing X collects all pairs
    whose residual shares one sign, so only U is enumerated.  Exact mode
    walks subsets U in Gray-code order with a vectorised residual update and
    is refused above the cap.
    """
    n = h.n
    d = _as_fraction(d, h.density().density_fraction)
    p, q = d.numerator, d.denominator
    norm = n ** 3
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    incidence = np.zeros((n, len(pairs)), dtype=np.int64)
    for idx, (u, v) in enumerate(pairs):
        row = h.link_row(u, v)
        for w in iter_bits(row):
            incidence[w, idx] = 1

    def optimal_value(deg: np.ndarray, size: int) -> int:
        r = deg * q - p * size
        pos = int(r[r > 0].sum())
        neg = int(-r[r < 0].sum())
        return max(pos, neg)

    def winning_pairs(deg: np.ndarray, size: int) -> tuple:
        r = deg * q - p * size
        pos = int(r[r > 0].sum())
        neg = int(-r[r < 0].sum())
        keep = (r > 0) if pos >= neg else (r < 0)
        return tuple(pairs[i] for i in np.nonzero(keep)[0])

    if mode == "exact":
        if cap > PAIR_EXACT_HARD_CAP:
            raise ValueError("cap above hard limit %d" % PAIR_EXACT_HARD_CAP)
        if n > cap:
            raise CapExceeded("exact pair deviation refused for n=%d > cap %d"
                              % (n, cap))
        deg = np.zeros(len(pairs), dtype=np.int64)
        mask = 0
        size = 0
        best = 0
        best_mask = 0
        for v in _gray_toggle_order(n):
            bit = 1 << v
            if mask & bit:
                deg -= incidence[v]
                size -= 1
            else:
                deg += incidence[v]
                size += 1
            mask ^= bit
            val = optimal_value(deg, size)
            if val > best:
                best = val
                best_mask = mask
        deg = incidence[list(iter_bits(best_mask))].sum(axis=0) if best_mask \
            else np.zeros(len(pairs), dtype=np.int64)
        witness = (tuple(iter_bits(best_mask)),
                   winning_pairs(deg, best_mask.bit_count()))
        return DeviationReport("pair", d, Fraction(best, q), best / (q * norm),
                               norm, witness, "exact", {"subsets": 1 << n})

    if mode != "search":
        raise ValueError("mode must be 'exact' or 'search'")
    best = 0
    best_mask = 0
    for r in range(restarts):
        rng = random.Random(subseed(seed, r))
        mask = rng.getrandbits(n) & ((1 << n) - 1)
        members = list(iter_bits(mask))
        deg = incidence[members].sum(axis=0) if members else \
            np.zeros(len(pairs), dtype=np.int64)
        size = len(members)
        cur = optimal_value(deg, size)
        for _ in range(max_steps):
            move = None
            move_val = cur
            for v in range(n):
                if mask >> v & 1:
                    val = optimal_value(deg - incidence[v], size - 1)
                else:
                    val = optimal_value(deg + incidence[v], size + 1)
                if val > move_val:
                    move_val = val
                    move = v
            if move is None:
                break
            if mask >> move & 1:
                deg -= incidence[move]
                size -= 1
            else:
                deg += incidence[move]
                size += 1
            mask ^= 1 << move
            cur = move_val
        if cur > best:
            best = cur
            best_mask = mask
    members = list(iter_bits(best_mask))
    deg = incidence[members].sum(axis=0) if members else \
        np.zeros(len(pairs), dtype=np.int64)
    witness = (tuple(members), winning_pairs(deg, len(members)))
    return DeviationReport("pair", d, Fraction(best, q), best / (q * norm),
                           norm, witness, "local-search", {"restarts": restarts})


def quad_vertex_deviation(h: Hypergraph4, d=None, samples: int = 100,
                          seed: int = 0, improve_steps: int = 0) -> DeviationReport:
    """Largest |e(U1..U4) - d prod |Ui|| over sampled vertex-set quadruples,
    optionally followed by a steepest-toggle improvement pass."""
    if samples < 1:
        raise ValueError("need at least one sample")
    n = h.n
    d = _as_fraction(d, h.density().density_fraction)
    p, q = d.numerator, d.denominator
    norm = n ** 4
    rng = random.Random(subseed(seed, 0x51554144))
    full = (1 << n) - 1

    def value(ms):
        cnt = h.count_ordered_quadruples(*ms)
        prod = 1
        for m in ms:
            prod *= m.bit_count()
        return abs(cnt * q - p * prod)

    best = -1
    best_masks = (0, 0, 0, 0)
    for _ in range(samples):
        ms = tuple(rng.getrandbits(n) & full for _ in range(4))
        val = value(ms)
        if val > best:
            best = val
            best_masks = ms
    masks = list(best_masks)
    improved = 0
    for _ in range(improve_steps):
        step_best = best
        step_move = None
        for which in range(4):
            for v in range(n):
                trial = list(masks)
                trial[which] ^= 1 << v
                val = value(trial)
                if val > step_best:
                    step_best = val
                    step_move = (which, v)
        if step_move is None:
            break
        masks[step_move[0]] ^= 1 << step_move[1]
        best = step_best
        improved += 1
    witness = tuple(tuple(iter_bits(m)) for m in masks)
    return DeviationReport("quad", d, Fraction(best, q), best / (q * norm), norm,
                           witness, "sampled",
                           {"samples": samples, "improve_steps": improved})


def bipartite_regularity_deviation(g: MultipartiteGraph, d2=None,
                                   mode: str = "exact",
                                   parts: tuple[int, int] = (0, 1),
                                   cap: int = BIPARTITE_EXACT_HARD_CAP,
                                   restarts: int = 32, seed: int = 0,
                                   max_steps: int = 200) -> DeviationReport:
    """Maximum of |e(X', Y') - d2 |X'||Y'|| over subsets of the two sides.

    For a fixed X' the maximizing Y' collects the vertices whose degree
    residual shares one sign, so exact mode enumerates X' subsets only
    (Gray-code order, vectorised degree updates) and is refused above the
    cap.  The eta field is the deviation normalized by |X||Y|.
    """
    i, j = parts
    nx, ny = g.sizes[i], g.sizes[j]
    edges = sum(r.bit_count() for r in g.rows[(i, j)])
    d2 = _as_fraction(d2, Fraction(edges, nx * ny) if nx and ny else Fraction(0))
    p, q = d2.numerator, d2.denominator
    norm = nx * ny
    cols = np.zeros((nx, ny), dtype=np.int64)
    for a in range(nx):
        for b in iter_bits(g.rows[(i, j)][a]):
            cols[a, b] = 1

    def optimal_value(deg: np.ndarray, size: int) -> int:
        r = deg * q - p * size
        pos = int(r[r > 0].sum())
        neg = int(-r[r < 0].sum())
        return max(pos, neg)

    def winning_side(deg: np.ndarray, size: int) -> tuple:
        r = deg * q - p * size
        pos = int(r[r > 0].sum())
        neg = int(-r[r < 0].sum())
        keep = (r > 0) if pos >= neg else (r < 0)
        return tuple(int(b) for b in np.nonzero(keep)[0])

    if mode == "exact":
        if cap > BIPARTITE_EXACT_HARD_CAP:
            raise ValueError("cap above hard limit %d" % BIPARTITE_EXACT_HARD_CAP)
        if nx > cap:
            raise CapExceeded("exact bipartite deviation refused for |X|=%d > cap %d"
                              % (nx, cap))
        deg = np.zeros(ny, dtype=np.int64)
        mask = 0
        size = 0
        best = 0
        best_mask = 0
        for a in _gray_toggle_order(nx):
            bit = 1 << a
            if mask & bit:
                deg -= cols[a]
                size -= 1
            else:
                deg += cols[a]
                size += 1
            mask ^= bit
            val = optimal_value(deg, size)
            if val > best:
                best = val
                best_mask = mask
        members = list(iter_bits(best_mask))
        deg = cols[members].sum(axis=0) if members else np.zeros(ny, dtype=np.int64)
        witness = (tuple(members), winning_side(deg, len(members)))
        return DeviationReport("bipartite", d2, Fraction(best, q),
                               best / (q * norm), norm, witness, "exact",
                               {"subsets": 1 << nx})

    if mode != "search":
        raise ValueError("mode must be 'exact' or 'search'")
    best = 0
    best_mask = 0
    for r in range(restarts):
        rng = random.Random(subseed(seed, r))
        mask = rng.getrandbits(nx) & ((1 << nx) - 1)
        members = list(iter_bits(mask))
        deg = cols[members].sum(axis=0) if members else np.zeros(ny, dtype=np.int64)
        size = len(members)
        cur = optimal_value(deg, size)
        for _ in range(max_steps):
            move = None
            move_val = cur
            for a in range(nx):
                if mask >> a & 1:
                    val = optimal_value(deg - cols[a], size - 1)
                else:
                    val = optimal_value(deg + cols[a], size + 1)
                if val > move_val:
                    move_val = val
                    move = a
            if move is None:
                break
            if mask >> move & 1:
                deg -= cols[move]
                size -= 1
            else:
                deg += cols[move]
                size += 1
            mask ^= 1 << move
            cur = move_val
        if cur > best:
            best = cur
            best_mask = mask
    members = list(iter_bits(best_mask))
    deg = cols[members].sum(axis=0) if members else np.zeros(ny, dtype=np.int64)
    witness = (tuple(members), winning_side(deg, len(members)))
    return DeviationReport("bipartite", d2, Fraction(best, q), best / (q * norm),
                           norm, witness, "local-search", {"restarts": restarts})


@dataclass(frozen=True)
class TriangleBoundReport:
    """Exact triangle count of a tripartite graph against the counting bound
    d2^3 |X||Y||Z| + 3 delta2 |X||Y||Z|."""

    count: int
    d2: Fraction
    delta2_hat: Fraction
    bound: Fraction
    holds: bool
    per_pair_delta: tuple


def triangle_count_tripartite(g: MultipartiteGraph,
                              parts: tuple[int, int, int] = (0, 1, 2)) -> int:
    """Exact number of triangles with one vertex in each of the three parts."""
    i, j, k = parts
    rows_ij, rows_ik, rows_jk = g.rows[(i, j)], g.rows[(i, k)], g.rows[(j, k)]
    total = 0
    for a in range(g.sizes[i]):
        rik = rows_ik[a]
        if not rik:
            continue
        for b in iter_bits(rows_ij[a]):
            total += (rik & rows_jk[b]).bit_count()
    return total


def _restricted_bipartite(g: MultipartiteGraph, i: int, j: int,
                          limit: int) -> MultipartiteGraph:
    keep = min(g.sizes[i], limit)
    sub = MultipartiteGraph((keep, g.sizes[j]))
    sub.rows[(0, 1)] = [g.rows[(i, j)][a] for a in range(keep)]
    rev = [0] * g.sizes[j]
    for a in range(keep):
        for b in iter_bits(sub.rows[(0, 1)][a]):
            rev[b] |= 1 << a
    sub.rows[(1, 0)] = rev
    return sub


def triangle_bound_check(g: MultipartiteGraph, d2,
                         parts: tuple[int, int, int] = (0, 1, 2),
                         enum_side: int = 16, seed: int = 0) -> TriangleBoundReport:
    """Compare the exact triangle count with d2^3 + 3*delta2_hat (scaled by
    |X||Y||Z|), where delta2_hat is the largest of the three pairwise
    regularity deviations measured exactly on an enumeration side capped at
    ``enum_side`` vertices (full opposite side)."""
    i, j, k = parts
    if d2 is None:
        edges = sum(r.bit_count() for r in g.rows[(i, j)])
        d2 = Fraction(edges, g.sizes[i] * g.sizes[j])
    else:
        d2 = _as_fraction(d2, Fraction(0))
    deltas = []
    for (a, b) in ((i, j), (i, k), (j, k)):
        sub = _restricted_bipartite(g, a, b, enum_side)
        rep = bipartite_regularity_deviation(
            sub, d2, mode="exact", parts=(0, 1), seed=seed)
        deltas.append(Fraction(rep.max_deviation, rep.normalizer))
    delta_hat = max(deltas)
    count = triangle_count_tripartite(g, parts)
    volume = g.sizes[i] * g.sizes[j] * g.sizes[k]
    bound = (d2 ** 3) * volume + 3 * delta_hat * volume
    return TriangleBoundReport(count, d2, delta_hat, bound, count <= bound,
                               tuple(deltas))


def relative_density(h: Hypergraph3, g: MultipartiteGraph,
                     part_vertices: Sequence[Sequence[int]],
                     parts: tuple[int, int, int] = (0, 1, 2)) -> Fraction:
    """Fraction of the tripartite graph's triangles that are hyperedges.

    ``part_vertices[t]`` lists the hypergraph vertices behind the local
    indices of part ``parts[t]``.  Returns 0 when there are no triangles.
    """
    i, j, k = parts
    vi, vj, vk = (list(part_vertices[0]), list(part_vertices[1]),
                  list(part_vertices[2]))
    if (len(vi), len(vj), len(vk)) != (g.sizes[i], g.sizes[j], g.sizes[k]):
        raise ValueError("part vertex lists must match the part sizes")
    rows_ij, rows_ik, rows_jk = g.rows[(i, j)], g.rows[(i, k)], g.rows[(j, k)]
    triangles = 0
    matched = 0
    for a in range(g.sizes[i]):
        rik = rows_ik[a]
        if not rik:
            continue
        for b in iter_bits(rows_ij[a]):
            common = rik & rows_jk[b]
            if not common:
                continue
            triangles += common.bit_count()
            hrow = h.link_row(vi[a], vj[b])
            for c in iter_bits(common):
                if hrow >> vk[c] & 1:
                    matched += 1
    if triangles == 0:
        return Fraction(0)
    return Fraction(matched, triangles)
