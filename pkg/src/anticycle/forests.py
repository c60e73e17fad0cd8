"""Constructive lemmas about families of subtrees of a forest."""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .graph import (
    Graph,
    GraphInputError,
    bits,
    canonical_path,
    components_mask,
    find_cycle,
    is_forest,
    is_path,
    mask_of,
    popcount,
)


@dataclass(frozen=True)
class SubtreeFamily:
    """A forest plus a list of nonempty vertex sets, each inducing a tree."""

    host: Graph
    members: tuple[frozenset[int], ...]

    def __init__(self, host: Graph, members: Iterable[Iterable[int]]):
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "members", tuple(frozenset(m) for m in members))
        if not is_forest(host):
            raise GraphInputError("host graph is not a forest")
        for i, m in enumerate(self.members):
            if not m:
                raise GraphInputError(f"member {i} is empty")
            mm = host.check_vertices(m)
            if len(components_mask(host, mm)) != 1:
                raise GraphInputError(f"member {i} is not connected in the host")

    @property
    def masks(self) -> list[int]:
        return [mask_of(m) for m in self.members]


def intersection_conflict_graph(fam: SubtreeFamily, mode: str = "anticomplete") -> Graph:
    """Graph on member indices: adjacent iff the members share a vertex
    (``mode="disjoint"``) or are not anticomplete (``mode="anticomplete"``)."""
    if mode not in ("disjoint", "anticomplete"):
        raise GraphInputError(f"unknown mode {mode!r}")
    ms = fam.masks
    reach = ms if mode == "disjoint" else [fam.host.neighbourhood_mask(m) for m in ms]
    edges = [
        (i, j)
        for i in range(len(ms))
        for j in range(i + 1, len(ms))
        if reach[i] & ms[j]
    ]
    return Graph(len(ms), edges)


def two_colouring(h: Graph) -> list[int] | None:
    """Proper 2-colouring (0/1 per vertex), or None if ``h`` is not bipartite."""
    colour = [-1] * h.n
    for r in range(h.n):
        if colour[r] >= 0:
            continue
        colour[r] = 0
        queue = deque([r])
        while queue:
            v = queue.popleft()
            for w in h.adj[v]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    return colour


def check_ring(fam: SubtreeFamily) -> tuple[int, ...] | None:
    """If the non-anticomplete graph of the family is bipartite it must be a
    forest. Returns None when that holds, else a cycle of it (a violation)."""
    h = intersection_conflict_graph(fam, "anticomplete")
    if two_colouring(h) is None:
        return None
    return find_cycle(h)


def balanced_stable_set(h: Graph, part_a: Iterable[int], part_b: Iterable[int], n: int) -> frozenset[int]:
    """Stable set ``X`` of the forest ``h`` with ``|X| = |A|`` and ``|X & A| = n``.

    Leaf peeling: take a vertex of degree <= 1, pair it with its neighbour (or
    the lowest-id vertex of the other side), keep it, and recurse.
    """
    a, b = set(part_a), set(part_b)
    am, bm = h.check_vertices(a), h.check_vertices(b)
    if am & bm or (am | bm) != h.all_mask:
        raise GraphInputError("(A, B) is not a partition of the vertex set")
    if any(h.masks[v] & am for v in a) or any(h.masks[v] & bm for v in b):
        raise GraphInputError("(A, B) is not a bipartition")
    if len(a) != len(b):
        raise GraphInputError(f"|A| = {len(a)} differs from |B| = {len(b)}")
    if not 0 <= n <= len(a):
        raise GraphInputError(f"n = {n} outside [0, {len(a)}]")
    if not is_forest(h):
        raise GraphInputError("h is not a forest")

    alive = h.all_mask
    x: set[int] = set()
    need = n
    while True:
        if need == len(a):
            x |= a
            break
        if need == 0:
            x |= b
            break
        v = next(u for u in bits(alive) if popcount(h.masks[u] & alive) <= 1)
        own, other = (b, a) if v in b else (a, b)
        nb = bits(h.masks[v] & alive)
        u = nb[0] if nb else min(other)
        x.add(v)
        own.discard(v)
        other.discard(u)
        alive &= ~((1 << v) | (1 << u))
        if own is a:
            need -= 1
    xm = mask_of(x)
    assert all(not h.masks[v] & xm for v in x)
    assert popcount(xm) == h.n // 2 and popcount(xm & am) == n
    return frozenset(x)


def select_anticomplete_paths(
    host: Graph, families: Sequence[Sequence[Sequence[int]]], k: int
) -> list[list[tuple[int, ...]]]:
    """Pick ``k`` paths from each of ``s`` families so all ``s*k`` are pairwise
    anticomplete.

    Each family must hold at least ``s!*k`` pairwise anticomplete paths of the
    forest ``host``; only the first ``s!*k`` in canonical (lexicographic) order
    are used.
    """
    if not is_forest(host):
        raise GraphInputError("host graph is not a forest")
    s = len(families)
    if k < 0:
        raise GraphInputError(f"k must be >= 0, got {k}")
    fams = []
    for i, fam in enumerate(families):
        if len(fam) < math.factorial(s) * k:
            raise GraphInputError(f"family {i} has {len(fam)} paths, expected at least {math.factorial(s) * k}")
        paths = sorted(canonical_path(p) for p in fam)
        for p in paths:
            if not is_path(host, p):
                raise GraphInputError(f"{p} is not a path of the host")
        ms = [mask_of(p) for p in paths]
        for x in range(len(ms)):
            for y in range(x + 1, len(ms)):
                if host.neighbourhood_mask(ms[x]) & ms[y]:
                    raise GraphInputError(f"family {i} is not pairwise anticomplete")
        fams.append(paths[: math.factorial(s) * k])
    out = _select(host, fams, k)
    return [sorted(ps) for ps in out]


def _select(host: Graph, fams: list[list[tuple[int, ...]]], k: int) -> list[list[tuple[int, ...]]]:
    s = len(fams)
    if s == 0:
        return []
    if s == 1:
        return [fams[0][:k]]
    big = math.factorial(s) * k
    small = math.factorial(s - 1) * k
    first = fams[0]
    first_ms = [mask_of(p) for p in first]
    first_reach = [host.neighbourhood_mask(m) for m in first_ms]
    keep_first = set(range(big))
    reduced = []
    for fam in fams[1:]:
        ms = [mask_of(p) for p in fam]
        edges = [(i, big + j) for i in range(big) for j in range(big) if first_reach[i] & ms[j]]
        if not edges:
            reduced.append(fam[:small])
            continue
        h = Graph(2 * big, edges)
        x = balanced_stable_set(h, range(big), range(big, 2 * big), big - small)
        keep_first &= {v for v in x if v < big}
        reduced.append([fam[v - big] for v in sorted(x) if v >= big])
    assert len(keep_first) >= small
    rest = _select(host, reduced, k)
    return [[first[i] for i in sorted(keep_first)][:k]] + rest


def _rooted(host: Graph) -> tuple[list[int], list[int]]:
    """Depth and parent of each vertex, each component rooted at its least vertex."""
    depth = [-1] * host.n
    parent = [-1] * host.n
    for r in range(host.n):
        if depth[r] >= 0:
            continue
        depth[r] = 0
        queue = deque([r])
        while queue:
            v = queue.popleft()
            for w in sorted(host.adj[v]):
                if depth[w] < 0:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    queue.append(w)
    return depth, parent


def _disjoint_pack_or_hit(host: Graph, ms: list[int], n: int) -> tuple[str, list[int] | frozenset[int]]:
    depth, _ = _rooted(host)
    tops = [min(bits(m), key=lambda v: (depth[v], v)) for m in ms]
    order = sorted(range(len(ms)), key=lambda i: (-depth[tops[i]], i))
    hit = 0
    picked = []
    for i in order:
        if ms[i] & hit:
            continue
        hit |= 1 << tops[i]
        picked.append(i)
    if len(picked) >= n:
        return "packing", sorted(picked[:n])
    return "hit", frozenset(bits(hit))


def subtree_hitting_set(fam: SubtreeFamily, n: int, mode: str = "disjoint") -> tuple[str, list[int] | frozenset[int]]:
    """Packing of ``n`` members or a small hitting set.

    Returns ``("packing", indices)`` with ``n`` pairwise disjoint (or pairwise
    anticomplete) members, or ``("hit", X)`` where ``X`` meets every member and
    ``|X| <= n - 1`` (disjoint mode) or ``|X| <= 2(n - 1)`` (anticomplete mode).
    """
    if n < 1:
        raise GraphInputError(f"n must be >= 1, got {n}")
    if mode == "disjoint":
        return _disjoint_pack_or_hit(fam.host, fam.masks, n)
    if mode != "anticomplete":
        raise GraphInputError(f"unknown mode {mode!r}")
    # subdivide every edge once; members grow by the subdivision vertices of
    # edges with an end inside them
    host = fam.host
    sub_id = {e: host.n + i for i, e in enumerate(host.edges)}
    edges = []
    for (u, v), x in sub_id.items():
        edges += [(u, x), (x, v)]
    split = Graph(host.n + host.m, edges)
    grown = []
    for m in fam.masks:
        g = m
        for (u, v), x in sub_id.items():
            if m >> u & 1 or m >> v & 1:
                g |= 1 << x
        grown.append(g)
    kind, result = _disjoint_pack_or_hit(split, grown, n)
    if kind == "packing":
        return kind, result
    hit = set()
    for x in result:
        if x < host.n:
            hit.add(x)
        else:
            hit.update(host.edges[x - host.n])
    return "hit", frozenset(hit)
