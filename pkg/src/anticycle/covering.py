"""Counting z-covering paths: induced paths that contain all of ``z`` and
have both ends in ``z``.

A z-covering path is pinned down by the set ``D`` of its edges between ``z``
and the forest ``F = g - z`` (plus, when ``z`` is not stable, its edges
inside ``z``): the rest of it is a linear forest of ``F`` whose end-multiset
is read off ``D``, and a forest has at most one linear forest with a given
end-multiset. So the counter enumerates feasible edge sets, rebuilds the
unique candidate from each and keeps the candidates that are genuinely
induced paths.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from itertools import combinations
from math import comb

from . import bounds
from .graph import (
    Graph,
    GraphInputError,
    bits,
    canonical_path,
    components_mask,
    find_cycle,
    is_forest,
    mask_of,
    popcount,
)
from .plantation import NotCycleHitting, Plantation

LinearForest = list[tuple[int, ...]]


def reconstruct_linear_forest(f: Graph, x: Mapping[int, int]) -> LinearForest | None:
    """The unique linear forest of ``f`` with end-multiset ``x``, or None.

    ``x`` maps vertices to multiplicities; a single-vertex component counts
    its vertex twice. Components come back as canonical paths, sorted.
    """
    if not is_forest(f):
        raise GraphInputError("host graph is not a forest")
    f.check_vertices(x)
    if any(c < 0 for c in x.values()):
        raise GraphInputError("multiplicities must be nonnegative")
    mult = {v: c for v, c in x.items() if c}
    if any(c >= 3 for c in mult.values()) or sum(mult.values()) % 2:
        return None
    out: LinearForest = []
    alive = f.all_mask
    for v in sorted(mult):
        if mult[v] == 2:
            out.append((v,))
            alive &= ~(1 << v)
    ends = mask_of(v for v, c in mult.items() if c == 1)
    masks = f.masks

    def deg(v: int) -> int:
        return popcount(masks[v] & alive)

    while True:
        # drop leaves and isolated vertices that are not ends
        changed = True
        while changed:
            changed = False
            for v in bits(alive & ~ends):
                if deg(v) <= 1:
                    alive &= ~(1 << v)
                    changed = True
        if not alive:
            break
        if any(deg(v) == 0 for v in bits(alive)):
            return None

        comp = piece = None
        for leaf in bits(alive):
            if deg(leaf) != 1:
                continue
            path = [leaf]
            prev, cur = -1, leaf
            while True:
                nxt = next(w for w in bits(masks[cur] & alive) if w != prev)
                prev, cur = cur, nxt
                path.append(cur)
                if ends >> cur & 1 or deg(cur) != 2:
                    break
            if ends >> cur & 1:
                piece = path
                break
        if piece is None:
            # every shoot runs into a branch vertex outside x; a branch vertex
            # of the pruned tree owning two shoots is the middle of a component
            comp = components_mask(f, alive)[0]
            shoot = 0
            for leaf in bits(comp):
                if deg(leaf) != 1:
                    continue
                prev, cur = -1, leaf
                while deg(cur) <= 2:
                    shoot |= 1 << cur
                    nxt = [w for w in bits(masks[cur] & alive) if w != prev]
                    prev, cur = cur, nxt[0]
            core = comp & ~shoot
            u = next(v for v in bits(core) if popcount(masks[v] & core) <= 1)
            arms = bits(masks[u] & shoot)
            if len(arms) != 2:
                return None
            halves = []
            for start in arms:
                arm = [u, start]
                prev, cur = u, start
                while deg(cur) == 2:
                    nxt = next(w for w in bits(masks[cur] & alive) if w != prev)
                    prev, cur = cur, nxt
                    arm.append(cur)
                halves.append(arm)
            piece = list(reversed(halves[0])) + halves[1][1:]
        out.append(canonical_path(piece))
        pm = mask_of(piece)
        alive &= ~pm
        ends &= ~(1 << piece[0]) & ~(1 << piece[-1])
        if ends & pm:
            return None
    if ends:
        return None
    return sorted(out)


def end_multiset(lf: LinearForest) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in lf:
        for v in (p[0], p[-1]):
            out[v] = out.get(v, 0) + 1
    return out


def _covering_paths(g: Graph, zm: int) -> list[tuple[int, ...]]:
    zs = bits(zm)
    if not zs:
        return []
    if len(zs) == 1:
        # only the one-vertex path can have both ends equal to the lone z
        return [(zs[0],)]
    fm = g.all_mask & ~zm
    forest_edges = [(u, v) for u, v in g.edges if fm >> u & 1 and fm >> v & 1]
    f = Graph(g.n, forest_edges)
    boundary = [(u, v) for u, v in g.edges if (zm >> u & 1) != (zm >> v & 1)]
    inner = [(u, v) for u, v in g.edges if zm >> u & 1 and zm >> v & 1]
    cand = sorted(boundary + inner)
    last = {}
    for i, (u, v) in enumerate(cand):
        for w in (u, v):
            if zm >> w & 1:
                last[w] = i
    if set(last) != set(zs):
        return []  # some z-vertex has no neighbour at all
    closing: dict[int, list[int]] = {}
    for w, i in last.items():
        closing.setdefault(i, []).append(w)

    deg = [0] * g.n
    chosen: list[tuple[int, int]] = []
    found: list[tuple[int, ...]] = []

    def go(i: int, ones: int) -> None:
        # ones: settled z-vertices (no edges left to decide) used exactly once
        if i == len(cand):
            if ones == 2:
                p = _rebuild(g, f, zm, chosen)
                if p is not None:
                    found.append(p)
            return
        u, v = cand[i]
        for take in (False, True):
            if take:
                if deg[u] >= 2 or deg[v] >= 2:
                    continue
                deg[u] += 1
                deg[v] += 1
                chosen.append((u, v))
            settled = [deg[w] for w in closing.get(i, ())]
            if 0 not in settled:
                now = ones + settled.count(1)
                if now <= 2:
                    go(i + 1, now)
            if take:
                deg[u] -= 1
                deg[v] -= 1
                chosen.pop()

    go(0, 0)
    return sorted(found)


def _rebuild(g: Graph, f: Graph, zm: int, chosen: list[tuple[int, int]]) -> tuple[int, ...] | None:
    x: dict[int, int] = {}
    for u, v in chosen:
        for w in (u, v):
            if not zm >> w & 1:
                x[w] = x.get(w, 0) + 1
    lf = reconstruct_linear_forest(f, x)
    if lf is None:
        return None
    edges = set(chosen)
    for p in lf:
        edges.update(tuple(sorted(e)) for e in zip(p, p[1:]))
    vm = zm
    for p in lf:
        vm |= mask_of(p)
    # induced in g: every edge of g inside the vertex set must be used
    inside = sum(popcount(g.masks[v] & vm) for v in bits(vm)) // 2
    if inside != len(edges) or len(edges) != popcount(vm) - 1:
        return None
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    ends = [v for v in bits(vm) if len(adj.get(v, ())) == 1]
    if len(ends) != 2 or any(not zm >> v & 1 for v in ends):
        return None
    path = [ends[0]]
    prev = -1
    while len(path) < popcount(vm):
        nxt = [w for w in adj[path[-1]] if w != prev]
        if not nxt:
            return None
        prev = path[-1]
        path.append(nxt[0])
    if path[-1] != ends[1]:
        return None
    return canonical_path(path)


def z_covering_paths(p: Plantation) -> list[tuple[int, ...]]:
    """All z-covering paths of ``p`` as canonical vertex sequences, sorted."""
    return _covering_paths(p.g, p.z_mask)


def count_z_covering(p: Plantation) -> int:
    return len(z_covering_paths(p))


@dataclass(frozen=True)
class FinalCount:
    n: int
    bound: int
    holds: bool


def verify_finalcount_bound(p: Plantation, phi_table: dict[int, int] | None = None) -> FinalCount:
    """Exact number of z-covering paths against ``|G|^d1 * 2^(d2|Z| + d3)``."""
    n = count_z_covering(p)
    bound = bounds.covering_bound(p.s, p.g.n, len(p.z), bounds.phi(p.s, phi_table))
    return FinalCount(n, bound, n <= bound)


def _stubs(g: Graph, fm: int, pm: int, a: int) -> list[int]:
    """Vertex masks of the forest paths that can hang off end ``a`` of the
    middle path ``pm``: start next to ``a`` only, then stay away from it."""
    out = []
    near = 0
    for v in bits(pm):
        near |= g.masks[v]
    free = fm & ~pm & ~near
    for u in bits(g.masks[a] & fm & ~pm):
        if g.masks[u] & pm != 1 << a:
            continue
        out.append(1 << u)
        seen = {u: 1 << u}
        stack = [u]
        while stack:
            v = stack.pop()
            for w in bits(g.masks[v] & free):
                if w not in seen:
                    seen[w] = seen[v] | 1 << w
                    out.append(seen[w])
                    stack.append(w)
    return out


def count_induced_paths_via_z(g: Graph, z, s: int = 1) -> int:
    """Number of induced paths of ``g`` (unordered), counted through ``z``.

    Paths missing ``z`` are pairs of vertices in a common forest component.
    Every other path splits at its first and last ``z``-vertex into a stub,
    a covering middle for ``z' = z & V(P)`` in ``g - (z - z')``, and a stub.
    """
    if s < 1:
        raise GraphInputError(f"s must be >= 1, got {s}")
    zm = g.check_vertices(z)
    fm = g.all_mask & ~zm
    cyc = find_cycle(g, fm)
    if cyc is not None:
        raise NotCycleHitting(cyc)
    total = 0
    for comp in components_mask(g, fm):
        c = popcount(comp)
        total += c + comb(c, 2)
    zs = bits(zm)
    for r in range(1, len(zs) + 1):
        for sub in combinations(zs, r):
            sm = mask_of(sub)
            keep = g.all_mask & ~(zm & ~sm)
            h = Graph(g.n, [(u, v) for u, v in g.edges if keep >> u & 1 and keep >> v & 1])
            for mid in _covering_paths(h, sm):
                pm = mask_of(mid)
                left = [0] + _stubs(g, fm, pm, mid[0])
                right = [0] + _stubs(g, fm, pm, mid[-1])
                pairs = 0
                for lm in left:
                    reach = g.neighbourhood_mask(lm) if lm else 0
                    pairs += sum(1 for rm in right if not reach & rm)
                total += pairs if len(mid) > 1 else (pairs + 1) // 2
    return total
