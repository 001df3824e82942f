"""Exact subgraph-copy counting.

A copy of a pattern H in a host G is a subgraph of G isomorphic to H (not
necessarily induced).  The copy count is the number of injective
edge-preserving maps V(H) -> V(G) divided by |Aut(H)|; the division is always
exact and is asserted.  Induced counting, the family of all induced subgraphs
of a pattern, and freeness tests live here too.

The core is a bitmask backtracker: pattern vertices are mapped in a
connectivity-respecting order chosen to maximize the number of already-mapped
neighbors, so candidate sets shrink to neighborhood intersections as early as
possible.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph, automorphism_count, canonical_cert, empty_graph


@lru_cache(maxsize=1024)
def _pattern_order(h: Graph) -> tuple[int, ...]:
    """Mapping order: components one after another, greedy max back-degree."""
    n = h.n
    placed = 0
    order: list[int] = []
    while len(order) < n:
        best = -1
        best_key = (-1, -1, n)
        for v in range(n):
            if placed >> v & 1:
                continue
            back = (h.adj[v] & placed).bit_count()
            key = (back, h.adj[v].bit_count(), -v)
            if key > best_key:
                best_key = key
                best = v
        order.append(best)
        placed |= 1 << best
    return tuple(order)


def count_injections(g: Graph, h: Graph) -> int:
    """Number of injective edge-preserving maps V(h) -> V(g)."""
    if h.n > g.n:
        return 0
    if h.n == 0:
        return 1
    order = _pattern_order(h)
    return _inject(g, h, order, limit=None)


def _inject(g: Graph, h: Graph, order: tuple[int, ...], limit: int | None,
            meet_mask: int = 0, meet_target: int = -1) -> int:
    """Backtracking count of injective edge-preserving maps.

    With `limit` set the search stops as soon as that many maps are found.
    With `meet_target >= 0` only maps whose image meets `meet_mask` in exactly
    that many vertices are counted.
    """
    gadj = g.adj
    hadj = h.adj
    hn = h.n
    full = (1 << g.n) - 1
    # earlier mapped neighbors of each pattern vertex, as positions in `order`
    pos_of = {v: i for i, v in enumerate(order)}
    backs: list[list[int]] = []
    for i, v in enumerate(order):
        backs.append([pos_of[u] for u in range(hn) if hadj[v] >> u & 1 and pos_of[u] < i])

    images = [0] * hn
    count = 0

    def rec(depth: int, used: int, met: int) -> bool:
        nonlocal count
        if depth == hn:
            if meet_target < 0 or met == meet_target:
                count += 1
                if limit is not None and count >= limit:
                    return True
            return False
        if meet_target >= 0:
            if met > meet_target or met + (hn - depth) < meet_target:
                return False
        cand = full & ~used
        for b in backs[depth]:
            cand &= gadj[images[b]]
            if not cand:
                return False
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            images[depth] = w
            if rec(depth + 1, used | (1 << w), met + (meet_mask >> w & 1)):
                return True
        return False

    rec(0, 0, 0)
    return count


def count_copies(g: Graph, h: Graph) -> int:
    """Number of subgraphs of g isomorphic to h."""
    if h.n < 1:
        raise ValueError("pattern needs at least one vertex")
    total = count_injections(g, h)
    aut = automorphism_count(h)
    assert total % aut == 0, f"injection count {total} not divisible by |Aut|={aut}"
    return total // aut


def count_copies_meeting(g: Graph, h: Graph, meet: int, exactly: int) -> int:
    """Copies of h in g whose vertex set meets the vertex set `meet` in
    exactly the given number of vertices.  `meet` is a bitmask or an iterable
    of vertex indices."""
    if h.n < 1:
        raise ValueError("pattern needs at least one vertex")
    if not isinstance(meet, int):
        meet = sum(1 << v for v in meet)
    if meet & ~((1 << g.n) - 1):
        raise ValueError("meet set has vertices outside the host")
    if not 0 <= exactly <= h.n:
        return 0
    if h.n > g.n:
        return 0
    order = _pattern_order(h)
    total = _inject(g, h, order, limit=None, meet_mask=meet, meet_target=exactly)
    aut = automorphism_count(h)
    assert total % aut == 0
    return total // aut


def contains(g: Graph, f: Graph) -> bool:
    """Whether g has at least one copy of f, with early exit."""
    if f.n > g.n or f.edge_count() > g.edge_count():
        return False
    if f.n == 0:
        return True
    order = _pattern_order(f)
    return _inject(g, f, order, limit=1) > 0


def is_free(g: Graph, f: Graph) -> bool:
    return not contains(g, f)


def is_family_free(g: Graph, family) -> bool:
    return all(is_free(g, f) for f in family)


def count_induced_copies(g: Graph, h: Graph) -> int:
    """Number of vertex subsets of g inducing a graph isomorphic to h."""
    if h.n < 1:
        raise ValueError("pattern needs at least one vertex")
    if h.n > g.n:
        return 0
    order = _pattern_order(h)
    gadj = g.adj
    hadj = h.adj
    hn = h.n
    full = (1 << g.n) - 1
    pos_of = {v: i for i, v in enumerate(order)}
    rows = [[(pos_of[u], hadj[v] >> u & 1) for u in range(hn) if pos_of[u] < i]
            for i, v in enumerate(order)]
    images = [0] * hn
    count = 0

    def rec(depth: int, used: int) -> None:
        nonlocal count
        if depth == hn:
            count += 1
            return
        cand = full & ~used
        for b, adjacent in rows[depth]:
            if adjacent:
                cand &= gadj[images[b]]
            else:
                cand &= ~gadj[images[b]]
            if not cand:
                return
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            images[depth] = w
            rec(depth + 1, used | (1 << w))

    rec(0, 0)
    aut = automorphism_count(h)
    assert count % aut == 0
    return count // aut


def induced_family(h: Graph) -> list[Graph]:
    """All induced subgraphs of h up to isomorphism, the 0-vertex graph included.

    Returned in a deterministic order (vertex count, then certificate)."""
    if h.n > 12:
        raise ValueError("induced family is enumerated over all vertex subsets; "
                         f"{h.n} vertices is past the supported 12")
    seen: dict[tuple[int, tuple[int, ...]], Graph] = {}
    for mask in range(1 << h.n):
        sub = h.induced_mask(mask)
        key = (sub.n, canonical_cert(sub))
        if key not in seen:
            seen[key] = sub
    members = [seen[k] for k in sorted(seen)]
    if not members or members[0].n != 0:
        members.insert(0, empty_graph(0))
    return members


@lru_cache(maxsize=256)
def _induced_family_cached(h: Graph) -> tuple[Graph, ...]:
    return tuple(induced_family(h))


def count_induced_family(g: Graph, h: Graph) -> int:
    """Total copies in g of all members of h's induced-subgraph family.

    Members are deduplicated up to isomorphism; the 0-vertex member
    contributes exactly one copy."""
    total = 0
    for member in _induced_family_cached(h):
        if member.n == 0:
            total += 1
        else:
            total += count_copies(g, member)
    return total
