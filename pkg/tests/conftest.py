"""Shared test helpers: independent brute-force oracles and random graphs.

Everything here deliberately avoids the library's counting/canonical code
paths so tests compare two unrelated computations."""

from __future__ import annotations

import random
from itertools import combinations, permutations

from genturan.graphs import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, adj)


def naive_count_copies(g: Graph, h: Graph) -> int:
    """Copies of h in g by explicit subsets and permutations.

    For every |V(h)|-subset of hosts, every bijection to the pattern is
    tried; distinct surviving edge sets are distinct copies."""
    if h.n > g.n:
        return 0
    h_edges = list(h.edges())
    total = 0
    for subset in combinations(range(g.n), h.n):
        seen: set[frozenset] = set()
        for perm in permutations(subset):
            mapped = []
            ok = True
            for a, b in h_edges:
                u, v = perm[a], perm[b]
                if not g.adj[u] >> v & 1:
                    ok = False
                    break
                mapped.append((u, v) if u < v else (v, u))
            if ok:
                seen.add(frozenset(mapped))
        total += len(seen)
    return total


def naive_count_induced(g: Graph, h: Graph) -> int:
    """Vertex subsets of g inducing a graph isomorphic to h, by permutations."""
    if h.n > g.n:
        return 0
    count = 0
    for subset in combinations(range(g.n), h.n):
        if any(_is_induced_iso(g, subset, h, perm)
               for perm in permutations(range(h.n))):
            count += 1
    return count


def _is_induced_iso(g: Graph, subset: tuple[int, ...], h: Graph,
                    perm: tuple[int, ...]) -> bool:
    for i in range(h.n):
        for j in range(i + 1, h.n):
            if bool(g.adj[subset[i]] >> subset[j] & 1) != bool(h.adj[perm[i]] >> perm[j] & 1):
                return False
    return True


def naive_automorphisms(g: Graph) -> int:
    count = 0
    for perm in permutations(range(g.n)):
        if all((g.adj[u] >> v & 1) == (g.adj[perm[u]] >> perm[v] & 1)
               for u in range(g.n) for v in range(u + 1, g.n)):
            count += 1
    return count if g.n else 1


def naive_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    return any(_is_induced_iso(g, tuple(range(g.n)), h, perm)
               for perm in permutations(range(h.n)))


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices (2^C(n,2) of them)."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        adj = [0] * n
        for idx, (u, v) in enumerate(pairs):
            if bits >> idx & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, adj)


def naive_isomorphism_classes(n: int) -> list[Graph]:
    """Representatives of all n-vertex classes via pairwise permutation tests."""
    buckets: dict[tuple, list[Graph]] = {}
    for g in all_labeled_graphs(n):
        key = (g.edge_count(), tuple(sorted(g.degrees())))
        reps = buckets.setdefault(key, [])
        if not any(naive_isomorphic(g, r) for r in reps):
            reps.append(g)
    return [g for reps in buckets.values() for g in reps]


def naive_copy_vertex_sets(g: Graph, f: Graph) -> list[int]:
    """Vertex sets spanning a copy of f, by subsets and permutations."""
    f_edges = list(f.edges())
    out = []
    for subset in combinations(range(g.n), f.n):
        hit = False
        for perm in permutations(subset):
            if all(g.adj[perm[a]] >> perm[b] & 1 for a, b in f_edges):
                hit = True
                break
        if hit:
            out.append(sum(1 << v for v in subset))
    return out


def naive_max_packing(g: Graph, f: Graph) -> int:
    """Largest family of disjoint copy vertex sets, by explicit combinations."""
    masks = naive_copy_vertex_sets(g, f)
    upper = g.n // f.n if f.n else 0
    for k in range(min(upper, len(masks)), 0, -1):
        for combo in combinations(masks, k):
            used = 0
            ok = True
            for m in combo:
                if m & used:
                    ok = False
                    break
                used |= m
            if ok:
                return k
    return 0
