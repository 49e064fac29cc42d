"""Shared fixtures: named graphs, seeded random graphs, and brute-force
oracles kept deliberately independent of the library's algorithms."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from regfree.graph import Graph


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def cube_graph() -> Graph:
    """Q_3: vertices are 3-bit strings, edges flip one bit."""
    edges = [
        (u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)
    ]
    return Graph(8, edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_tree(rng: random.Random, n: int) -> Graph:
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return Graph(n, edges)


# --- brute-force oracles ---------------------------------------------------


def brute_degeneracy(g: Graph) -> int:
    """Least t such that every induced subgraph has a vertex of degree <= t,
    by scanning all vertex subsets."""
    worst = 0
    for mask in range(1, 1 << g.n):
        min_deg = min(
            (g.adj_mask[v] & mask).bit_count()
            for v in range(g.n)
            if mask >> v & 1
        )
        worst = max(worst, min_deg)
    return worst


def brute_k_core(g: Graph, k: int) -> list[int]:
    """Maximal subset inducing min degree >= k, over all subsets."""
    best = 0
    for mask in range(1 << g.n):
        if mask and any(
            (g.adj_mask[v] & mask).bit_count() < k
            for v in range(g.n)
            if mask >> v & 1
        ):
            continue
        if mask.bit_count() > best.bit_count():
            best = mask
    return [v for v in range(g.n) if best >> v & 1]


def brute_triangle_exists(g: Graph) -> bool:
    return any(
        g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        for a, b, c in itertools.combinations(range(g.n), 3)
    )


def subset_scan(g: Graph, weights=None):
    """Yield (mask, vertex list, induced edge count, total weight) for every
    nonempty vertex subset.  Integer weights only (pre-scale rationals)."""
    adj = g.adj_mask
    for mask in range(1, 1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        e = sum((adj[v] & mask).bit_count() for v in vs) // 2
        w = sum(weights[v] for v in vs) if weights is not None else None
        yield mask, vs, e, w


def brute_max_density(g: Graph) -> Fraction:
    best = Fraction(0)
    for _, vs, e, _ in subset_scan(g):
        best = max(best, Fraction(e, len(vs)))
    return best


def brute_mwis(g: Graph, w: dict[int, Fraction]):
    """(best weight, lexicographically smallest argmax as sorted tuple)."""
    best = Fraction(0)
    best_set: tuple = ()
    for mask in range(1 << g.n):
        vs = tuple(v for v in range(g.n) if mask >> v & 1)
        if any(g.adj_mask[v] & mask for v in vs):
            continue
        wt = sum((w[v] for v in vs), Fraction(0))
        if wt > best or (wt == best and vs < best_set):
            best, best_set = wt, vs
    return best, best_set


def brute_k_regular_exists(g: Graph, k: int) -> bool:
    """Exhaustive enumeration over (vertex subset, edge subset) pairs,
    organized as per-vertex exact-degree selection."""
    for mask in range(1, 1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if len(vs) < k + 1:
            continue
        if any((g.adj_mask[v] & mask).bit_count() < k for v in vs):
            continue
        if _has_k_factor(g, vs, k):
            return True
    return False


def _has_k_factor(g: Graph, vs: list[int], k: int) -> bool:
    """Does G[vs] admit a spanning k-regular edge subset?  Backtracking over
    each vertex's choice of forward edges."""
    index = {v: i for i, v in enumerate(vs)}
    fwd = [
        [index[u] for u in g.adj[v] if u in index and index[u] > i]
        for i, v in enumerate(vs)
    ]
    need = [k] * len(vs)

    def place(i: int) -> bool:
        if i == len(vs):
            return True
        want = need[i]
        if want < 0:
            return False
        options = [j for j in fwd[i] if need[j] > 0]
        if want > len(options):
            return False
        for combo in itertools.combinations(options, want):
            for j in combo:
                need[j] -= 1
            if place(i + 1):
                for j in combo:
                    need[j] += 1
                return True
            for j in combo:
                need[j] += 1
        return False

    return place(0)
