"""Simple graphs and multigraphs over dense integer vertex ids.

Vertex subsets are handled two ways: as Python sets/frozensets at the API
surface, and as int bitmasks internally (bit ``v`` set iff ``v`` is a member).
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence

MAX_VERTICES = 10**6


class GraphInputError(ValueError):
    """Malformed graph, vertex id out of range, or a violated precondition."""


class CapExceeded(RuntimeError):
    """A configured search cap was hit; the answer is inconclusive."""

    def __init__(self, cap: str, limit: int):
        super().__init__(f"cap '{cap}' exceeded (limit {limit})")
        self.cap = cap
        self.limit = limit


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    """Members of a bitmask in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Stores adjacency three ways: ``adj`` (frozensets), ``masks`` (bitmasks)
    and ``edges`` (sorted ``(u, v)`` pairs with ``u < v``).
    """

    __slots__ = ("n", "edges", "adj", "masks")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise GraphInputError(f"vertex count must be a nonnegative int, got {n!r}")
        if n > MAX_VERTICES:
            raise GraphInputError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")
        masks = [0] * n
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at {u} in a simple graph")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise GraphInputError(f"parallel edge ({u}, {v}) in a simple graph")
            seen.add((u, v))
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.edges = tuple(sorted(seen))
        self.masks = tuple(masks)
        self.adj = tuple(frozenset(bits(m)) for m in masks)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        n = len(masks)
        return cls(n, ((u, v) for u in range(n) for v in bits(masks[u] >> (u + 1) << (u + 1))))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def closed_mask(self, v: int) -> int:
        return self.masks[v] | (1 << v)

    def neighbourhood_mask(self, vertex_mask: int) -> int:
        """Closed neighbourhood of a vertex set, as a mask."""
        out = vertex_mask
        for v in bits(vertex_mask):
            out |= self.masks[v]
        return out

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v!r} out of range for n={self.n}")

    def check_vertices(self, vs: Iterable[int]) -> int:
        m = 0
        for v in vs:
            self.check_vertex(v)
            m |= 1 << v
        return m

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Multigraph:
    """Immutable undirected multigraph; loops and parallel edges allowed.

    Each edge is ``(u, v, label)``. Labels default to the insertion index and
    must be unique.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise GraphInputError(f"vertex count must be a nonnegative int, got {n!r}")
        out = []
        labels = set()
        for i, e in enumerate(edges):
            u, v = int(e[0]), int(e[1])
            label = int(e[2]) if len(e) > 2 else i
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if label in labels:
                raise GraphInputError(f"duplicate edge label {label}")
            labels.add(label)
            out.append((min(u, v), max(u, v), label))
        self.n = n
        self.edges = tuple(out)

    @classmethod
    def from_graph(cls, g: Graph) -> Multigraph:
        return cls(g.n, g.edges)

    def edge(self, label: int) -> tuple[int, int]:
        for u, v, lab in self.edges:
            if lab == label:
                return u, v
        raise KeyError(label)

    def __repr__(self):
        return f"Multigraph(n={self.n}, m={len(self.edges)})"


def anticomplete(g: Graph, x: Iterable[int], y: Iterable[int]) -> bool:
    """True iff ``x`` and ``y`` are disjoint with no edge between them."""
    xm = g.check_vertices(x)
    ym = g.check_vertices(y)
    return not (g.neighbourhood_mask(xm) & ym)


def anticomplete_masks(g: Graph, xm: int, ym: int) -> bool:
    return not (g.neighbourhood_mask(xm) & ym)


def components_mask(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as masks, ordered by least vertex."""
    rest = g.all_mask if within is None else within
    out = []
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.masks[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[list[int]]:
    return [bits(c) for c in components_mask(g)]


def is_forest(g: Graph, within: int | None = None) -> bool:
    sub = g.all_mask if within is None else within
    m = sum(popcount(g.masks[v] & sub) for v in bits(sub)) // 2
    return m == popcount(sub) - len(components_mask(g, sub))


def is_stable(g: Graph, s: Iterable[int]) -> bool:
    sm = g.check_vertices(s)
    return all(not (g.masks[v] & sm) for v in bits(sm))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Restrict ``g`` to ``s``; new ids follow ascending old ids.

    Returns the subgraph and the old-to-new index map.
    """
    keep = bits(g.check_vertices(s))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(keep), edges), index


def delete_vertices(g: Graph, vs: Iterable[int]) -> tuple[Graph, list[int]]:
    """``g`` minus ``vs``; returns the graph and the new-to-old id list."""
    gone = g.check_vertices(vs)
    keep = [v for v in range(g.n) if not gone >> v & 1]
    h, _ = induced_subgraph(g, keep)
    return h, keep


def find_cycle(g: Graph, within: int | None = None) -> tuple[int, ...] | None:
    """Some cycle of ``g[within]`` as a vertex sequence, or None if acyclic."""
    sub = g.all_mask if within is None else within
    parent: dict[int, int] = {}
    for root in bits(sub):
        if root in parent:
            continue
        parent[root] = -1
        stack = [root]
        while stack:
            v = stack.pop()
            for w in bits(g.masks[v] & sub):
                if w == parent[v]:
                    continue
                if w in parent:
                    # v and w are both in this DFS tree; splice the tree paths.
                    pv, pw = [v], [w]
                    while pv[-1] != -1:
                        pv.append(parent[pv[-1]])
                    while pw[-1] != -1:
                        pw.append(parent[pw[-1]])
                    common = set(pv) & set(pw)
                    a = [x for x in pv if x not in common]
                    b = [x for x in pw if x not in common]
                    top = next(x for x in pv if x in common)
                    return tuple(a + [top] + b[::-1])
                parent[w] = v
                stack.append(w)
    return None


def shortest_cycle(g: Graph, within: int | None = None) -> tuple[int, ...] | None:
    """A shortest cycle of ``g[within]``; shortest cycles are always induced."""
    sub = g.all_mask if within is None else within
    best: tuple[int, ...] | None = None
    for root in bits(sub):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= len(best):
                break
            for w in bits(g.masks[v] & sub):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif w != parent[v] and dist[w] >= dist[v]:
                    pv, pw = [v], [w]
                    while pv[-1] != root:
                        pv.append(parent[pv[-1]])
                    while pw[-1] != root:
                        pw.append(parent[pw[-1]])
                    if set(pv[:-1]) & set(pw[:-1]):
                        continue
                    cyc = tuple(pv[::-1] + pw[:-1])
                    if best is None or len(cyc) < len(best):
                        best = cyc
    return best


def is_cycle(g: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` lists >= 3 distinct vertices, cyclically adjacent."""
    k = len(seq)
    if k < 3 or len(set(seq)) != k:
        return False
    return all(0 <= v < g.n for v in seq) and all(
        g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)
    )


def is_induced_cycle(g: Graph, seq: Sequence[int]) -> bool:
    if not is_cycle(g, seq):
        return False
    m = mask_of(seq)
    return all(popcount(g.masks[v] & m) == 2 for v in seq)


def is_path(g: Graph, seq: Sequence[int]) -> bool:
    k = len(seq)
    if k == 0 or len(set(seq)) != k or not all(0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(seq[i], seq[i + 1]) for i in range(k - 1))


def is_induced_path(g: Graph, seq: Sequence[int]) -> bool:
    if not is_path(g, seq):
        return False
    pos = {v: i for i, v in enumerate(seq)}
    return all(abs(pos[u] - pos[v]) == 1 for u, v in g.edges if u in pos and v in pos)


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect so the least vertex is first and its smaller neighbour second."""
    k = len(seq)
    i = min(range(k), key=seq.__getitem__)
    fwd = tuple(seq[(i + j) % k] for j in range(k))
    back = tuple(seq[(i - j) % k] for j in range(k))
    return min(fwd, back)


def canonical_path(seq: Sequence[int]) -> tuple[int, ...]:
    t = tuple(seq)
    return min(t, t[::-1])
