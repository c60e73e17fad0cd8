"""Induced paths and induced cycles: enumeration, counting, 4-cycle heads."""

from __future__ import annotations

from collections.abc import Iterator, Sequence

from .graph import (
    CapExceeded,
    Graph,
    GraphInputError,
    bits,
    canonical_cycle,
    is_induced_path,
    mask_of,
)

Path = tuple[int, ...]
Cycle = tuple[int, ...]


def enumerate_induced_paths_from(
    g: Graph, v: int, max_len: int | None = None
) -> Iterator[Path]:
    """Yield every ordered induced path with first vertex ``v`` exactly once.

    Depth-first, neighbours in ascending order, the one-vertex path first.
    ``max_len`` caps the number of vertices (default ``g.n``).
    """
    g.check_vertex(v)
    limit = g.n if max_len is None else max_len
    if limit < 1:
        return
    masks = g.masks
    path = [v]
    yield (v,)
    # stack entries: remaining candidate mask after path[-1], blocked mask
    # (closed neighbourhoods of every path vertex except the last)
    stack = [(masks[v] if limit > 1 else 0, 1 << v)]
    while stack:
        cands, blocked = stack[-1]
        if not cands:
            stack.pop()
            path.pop()
            continue
        low = cands & -cands
        stack[-1] = (cands ^ low, blocked)
        w = low.bit_length() - 1
        nb = blocked | masks[path[-1]] | (1 << path[-1])
        path.append(w)
        yield tuple(path)
        nxt = masks[w] & ~nb if len(path) < limit else 0
        stack.append((nxt, nb))


def _count_from(g: Graph, v: int, limit: int, unordered: bool, budget: list[int] | None = None) -> int:
    """Count ordered induced paths from ``v`` (or those with last vertex > v).

    ``budget`` is a one-element list of remaining DFS steps, shared between
    calls; running out raises CapExceeded.
    """
    if limit < 1:
        return 0
    masks = g.masks
    total = 1
    above = ~((2 << v) - 1)  # vertices with id > v
    stack = [(v, masks[v], 1 << v, 1)]
    while stack:
        last, cands, blocked, length = stack.pop()
        if length >= limit:
            continue
        nb = blocked | masks[last] | (1 << last)
        while cands:
            low = cands & -cands
            cands ^= low
            w = low.bit_length() - 1
            if not unordered or low & above:
                total += 1
            if budget is not None:
                budget[0] -= 1
                if budget[0] < 0:
                    raise CapExceeded("max_paths", budget[1])
            stack.append((w, masks[w] & ~nb, nb, length + 1))
    return total


def count_induced_paths(
    g: Graph, ordered: bool = False, max_len: int | None = None, max_steps: int | None = None
) -> int:
    """Exact number of induced paths.

    ``ordered=True`` counts each path with an edge twice (once per first
    vertex); one-vertex paths are counted once either way. ``max_steps``
    caps the number of ordered paths visited.
    """
    limit = g.n if max_len is None else max_len
    budget = None if max_steps is None else [max_steps, max_steps]
    return sum(_count_from(g, v, limit, not ordered, budget) for v in range(g.n))


def induced_cycles_extending(g: Graph, p: Sequence[int]) -> list[Cycle]:
    """Induced cycles made of the induced path ``p`` plus one extra vertex."""
    if not is_induced_path(g, p):
        raise GraphInputError(f"{tuple(p)} is not an induced path")
    if len(p) < 2:
        return []
    pm = mask_of(p)
    inner = mask_of(p[1:-1])
    inner_nb = 0
    for x in p[1:-1]:
        inner_nb |= g.masks[x]
    cands = g.masks[p[0]] & g.masks[p[-1]] & ~pm & ~inner_nb
    return [canonical_cycle(tuple(p) + (w,)) for w in bits(cands)]


def enumerate_induced_cycles(g: Graph, max_cycles: int | None = None) -> Iterator[Cycle]:
    """Yield each induced cycle once, in canonical form.

    Canonical form: least vertex first, then its smaller cycle neighbour.
    Raises CapExceeded after ``max_cycles`` cycles.
    """
    masks = g.masks
    found = 0
    for v in range(g.n):
        above = g.all_mask & ~((2 << v) - 1)
        nv = masks[v]
        for a in bits(nv & above):
            # grow induced paths a=q1, q2, ... inside `above`; interior vertices
            # must avoid N(v); a vertex in N(v) closes the cycle.
            # blocked: closed neighbourhoods of every path vertex but the last
            stack = [((a,), 1 << v)]
            while stack:
                path, blocked = stack.pop()
                last = path[-1]
                cands = masks[last] & above & ~blocked
                nb = blocked | masks[last] | (1 << last)
                for w in reversed(bits(cands)):
                    if nv >> w & 1:
                        if w > a:
                            found += 1
                            if max_cycles is not None and found > max_cycles:
                                raise CapExceeded("max_cycles", max_cycles)
                            yield (v,) + path + (w,)
                    else:
                        stack.append((path + (w,), nb))


def four_cycle_sets(g: Graph) -> list[int]:
    """Vertex sets (masks) of all 4-cycles of ``g``, chords allowed, sorted."""
    masks = g.masks
    out = set()
    for u in range(g.n):
        for w in range(u + 1, g.n):
            common = bits(masks[u] & masks[w])
            for i, x in enumerate(common):
                for y in common[i + 1:]:
                    out.add((1 << u) | (1 << w) | (1 << x) | (1 << y))
    return sorted(out)


def exclusion_set(g: Graph, c: Sequence[int]) -> frozenset[int]:
    """Vertices outside the 4-cycle ``c`` with no neighbour on it."""
    if len(c) != 4 or len(set(c)) != 4:
        raise GraphInputError(f"{tuple(c)} is not a 4-cycle")
    for v in c:
        g.check_vertex(v)
    if not all(g.has_edge(c[i], c[(i + 1) % 4]) for i in range(4)):
        raise GraphInputError(f"{tuple(c)} is not a 4-cycle of the graph")
    return frozenset(bits(g.all_mask & ~g.neighbourhood_mask(mask_of(c))))


def head(g: Graph, p: Sequence[int]) -> Path | None:
    """Longest prefix of ``p`` inside the exclusion set of some 4-cycle.

    None when no 4-cycle has ``p[0]`` in its exclusion set.
    """
    best = 0
    for cm in four_cycle_sets(g):
        x = g.all_mask & ~g.neighbourhood_mask(cm)
        j = 0
        while j < len(p) and x >> p[j] & 1:
            j += 1
        best = max(best, j)
        if best == len(p):
            break
    return tuple(p[:best]) if best else None
