"""Maximum vertex-disjoint packings and the induced two-part split.

A packing of a pattern F in a host G is a family of pairwise vertex-disjoint
vertex sets, each spanning a copy of F.  The exact maximum is found by branch
and bound over the hypergraph of copy vertex sets, seeded with a greedy lower
bound.  The partition built from a maximum packing puts the packed vertices
on one side (L) and the rest (R); the R-induced subgraph is always F-free,
which is asserted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, _bits
from .counting import _pattern_order, is_free


@dataclass(frozen=True)
class Packing:
    """Vertex sets of pairwise disjoint copies, sorted for determinism."""

    copies: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.copies)

    def support(self) -> int:
        mask = 0
        for c in self.copies:
            for v in c:
                mask |= 1 << v
        return mask


@dataclass(frozen=True)
class CanonicalPartition:
    """Split of the host vertices into packed side L and remainder R."""

    L: tuple[int, ...]
    R: tuple[int, ...]
    packing: Packing


def copy_vertex_sets(g: Graph, f: Graph) -> list[int]:
    """Distinct vertex sets (as bitmasks, ascending) spanning a copy of f in g."""
    if f.n < 1:
        raise ValueError("pattern needs at least one vertex")
    if f.n > g.n:
        return []
    order = _pattern_order(f)
    gadj = g.adj
    fadj = f.adj
    fn = f.n
    full = (1 << g.n) - 1
    pos_of = {v: i for i, v in enumerate(order)}
    backs = [[pos_of[u] for u in range(fn) if fadj[v] >> u & 1 and pos_of[u] < i]
             for i, v in enumerate(order)]
    images = [0] * fn
    found: set[int] = set()

    def rec(depth: int, used: int) -> None:
        if depth == fn:
            found.add(used)
            return
        cand = full & ~used
        for b in backs[depth]:
            cand &= gadj[images[b]]
            if not cand:
                return
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            images[depth] = w
            rec(depth + 1, used | (1 << w))

    rec(0, 0)
    return sorted(found)


def _max_packing_size(masks: list[int], free_mask: int, copy_size: int,
                      stop_at: int | None = None) -> int:
    """Branch and bound for the maximum number of pairwise disjoint masks.

    Branches on the lowest covered vertex: either some copy through it is
    used, or the vertex stays uncovered.  Seeded with the first-fit greedy
    value; `stop_at` short-circuits once a packing of that size is known."""
    order = sorted(masks)
    best = 0
    avail = free_mask
    for m in order:
        if m & ~avail == 0:
            best += 1
            avail &= ~m
    if stop_at is not None and best >= stop_at:
        return best

    def rec(avail: int, cands: list[int], have: int) -> bool:
        nonlocal best
        if have > best:
            best = have
            if stop_at is not None and best >= stop_at:
                return True
        # Disjoint copies have distinct lowest vertices, so the number of
        # distinct lowest bits among candidates bounds the remaining packing;
        # this collapses universal-vertex hosts immediately.
        lows = 0
        for m in cands:
            lows |= m & -m
        bound = have + min(len(cands), avail.bit_count() // copy_size,
                           lows.bit_count())
        if bound <= best:
            return False
        pivot = lows & -lows
        for m in cands:
            if m & pivot:
                rest = [c for c in cands if c & m == 0]
                if rec(avail & ~m, rest, have + 1):
                    return True
        without = [c for c in cands if not c & pivot]
        if without and rec(avail & ~pivot, without, have):
            return True
        return False

    rec(free_mask, order, 0)
    return best


def max_packing_size(g: Graph, f: Graph) -> int:
    masks = copy_vertex_sets(g, f)
    if not masks:
        return 0
    return _max_packing_size(masks, (1 << g.n) - 1, f.n)


def _packable(masks: list[int], avail: int, copy_size: int, want: int) -> bool:
    """Whether `want` pairwise disjoint masks fit inside avail."""
    if want <= 0:
        return True
    cands = [m for m in masks if m & ~avail == 0]
    if len(cands) < want or avail.bit_count() < want * copy_size:
        return False
    return _max_packing_size(cands, avail, copy_size, stop_at=want) >= want


def max_disjoint_packing(g: Graph, f: Graph) -> Packing:
    """A maximum packing, deterministically the lexicographically least one.

    After the optimum size is established by branch and bound, copies are
    committed greedily in ascending vertex-set order, keeping only choices
    that still extend to the optimum."""
    masks = copy_vertex_sets(g, f)
    if not masks:
        return Packing(())
    size = _max_packing_size(masks, (1 << g.n) - 1, f.n)
    chosen: list[int] = []
    avail = (1 << g.n) - 1
    remaining = masks
    need = size
    for i, m in enumerate(remaining):
        if need == 0:
            break
        if m & ~avail:
            continue
        tail = [c for c in remaining[i + 1:] if c & m == 0 and c & ~avail == 0]
        if _packable(tail, avail & ~m, f.n, need - 1):
            chosen.append(m)
            avail &= ~m
            need -= 1
    assert need == 0, "lexicographic reconstruction lost the optimum"
    return Packing(tuple(tuple(_bits(m)) for m in chosen))


def greedy_packing(g: Graph, f: Graph) -> Packing:
    """First-fit packing over ascending copy vertex sets; a fast lower bound."""
    chosen: list[int] = []
    used = 0
    for m in copy_vertex_sets(g, f):
        if m & used == 0:
            chosen.append(m)
            used |= m
    return Packing(tuple(tuple(_bits(m)) for m in chosen))


def is_kF_free(g: Graph, k: int, f: Graph) -> bool:
    """True when g has no k pairwise vertex-disjoint copies of f."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if f.n * k > g.n:
        return True
    masks = copy_vertex_sets(g, f)
    if len(masks) < k:
        return True
    return _max_packing_size(masks, (1 << g.n) - 1, f.n, stop_at=k) < k


def canonical_partition(g: Graph, f: Graph) -> CanonicalPartition:
    """Partition of V(g) into the support L of a maximum f-packing and the
    rest R.  The subgraph induced by R is f-free (asserted)."""
    packing = max_disjoint_packing(g, f)
    support = packing.support()
    L = tuple(_bits(support))
    R = tuple(v for v in range(g.n) if not support >> v & 1)
    assert is_free(g.induced(R), f), "remainder side contains the pattern"
    return CanonicalPartition(L, R, packing)
