"""Cycle packing or cycle cover on multigraphs, and its use on transitions.

In a multigraph a loop is a cycle of length one and two parallel edges form
a cycle of length two. ``pack_or_cover`` first looks for ``s`` vertex-disjoint
cycles; only when none exist does it compute a minimum feedback vertex set,
whose size is then checked against the configured phi(s).
"""

from __future__ import annotations

from collections import Counter, deque
from collections.abc import Sequence
from dataclasses import dataclass

from ._search import first_stable_set
from .bounds import PhiTableError, phi
from .enumeration import enumerate_induced_cycles
from .graph import CapExceeded, Graph, GraphInputError, Multigraph, mask_of
from .plantation import Plantation, Transition, is_monic, normality_problems
from .recognizer import PackingWitness

DEFAULT_MAX_NODES = 10**6


@dataclass(frozen=True)
class WalkCycle:
    """A multigraph cycle: ``vertices[i]`` and ``vertices[i+1]`` (cyclically)
    are joined by the edge labelled ``labels[i]``."""

    vertices: tuple[int, ...]
    labels: tuple[int, ...]

    def problems(self, h: Multigraph) -> list[str]:
        out = []
        if len(self.vertices) != len(self.labels) or not self.vertices:
            return [f"{self} has mismatched vertices and labels"]
        if len(set(self.vertices)) != len(self.vertices):
            out.append(f"{self.vertices} repeats a vertex")
        if len(set(self.labels)) != len(self.labels):
            out.append(f"{self.labels} repeats an edge")
        by_label = {lab: (u, v) for u, v, lab in h.edges}
        k = len(self.vertices)
        for i, lab in enumerate(self.labels):
            a, b = self.vertices[i], self.vertices[(i + 1) % k]
            if by_label.get(lab) != (min(a, b), max(a, b)):
                out.append(f"edge {lab} does not join {a} and {b}")
        return out


@dataclass(frozen=True)
class PackOrCover:
    packing: tuple[WalkCycle, ...] | None = None
    cover: frozenset[int] | None = None

    @property
    def is_packing(self) -> bool:
        return self.packing is not None


def _candidate_cycles(h: Multigraph, max_cycles: int | None) -> list[WalkCycle]:
    """Cycles with minimal vertex sets: loops, parallel pairs, and induced
    cycles of the underlying simple graph that contain neither."""
    loops: dict[int, int] = {}
    pairs: dict[tuple[int, int], list[int]] = {}
    for u, v, lab in h.edges:
        if u == v:
            loops[u] = min(lab, loops.get(u, lab))
        else:
            pairs.setdefault((u, v), []).append(lab)
    out = [WalkCycle((u,), (lab,)) for u, lab in sorted(loops.items())]
    for (u, v), labs in sorted(pairs.items()):
        if len(labs) >= 2:
            a, b = sorted(labs)[:2]
            out.append(WalkCycle((u, v), (a, b)))
    looped = mask_of(loops)
    doubled = {e for e, labs in pairs.items() if len(labs) >= 2}
    simple = Graph(h.n, pairs.keys())
    for cyc in enumerate_induced_cycles(simple, max_cycles):
        if mask_of(cyc) & looped:
            continue
        steps = [tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)]))) for i in range(len(cyc))]
        if any(e in doubled for e in steps):
            continue
        out.append(WalkCycle(cyc, tuple(min(pairs[e]) for e in steps)))
    out.sort(key=lambda c: (len(c.vertices), c.vertices))
    return out


def find_disjoint_cycles(h: Multigraph, s: int, max_cycles: int | None = None) -> tuple[WalkCycle, ...] | None:
    cands = _candidate_cycles(h, max_cycles)
    ms = [mask_of(c.vertices) for c in cands]
    rows = [0] * len(ms)
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            if ms[i] & ms[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    pick = first_stable_set(rows, s)
    return None if pick is None else tuple(cands[i] for i in pick)


# minimum feedback vertex set -------------------------------------------------

class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise CapExceeded("max_nodes", self.limit)


def _adjacency(h: Multigraph) -> dict[int, Counter]:
    adj: dict[int, Counter] = {}
    for u, v, _ in h.edges:
        adj.setdefault(u, Counter())[v] += 1
        if u != v:
            adj.setdefault(v, Counter())[u] += 1
    return adj


def _remove(adj: dict[int, Counter], v: int) -> None:
    for w in adj.pop(v):
        if w != v:
            del adj[w][v]


def _kernel(adj: dict[int, Counter], forced: list[int]) -> None:
    """Apply forced moves in place: loops go to the cover, vertices of degree
    at most one are dropped, degree-two vertices are bypassed."""
    queue = deque(sorted(adj))
    while queue:
        v = queue.popleft()
        if v not in adj:
            continue
        nb = adj[v]
        if nb[v]:
            forced.append(v)
            touched = [w for w in nb if w != v]
            _remove(adj, v)
            queue.extend(touched)
            continue
        deg = sum(nb.values())
        if deg <= 1:
            touched = list(nb)
            _remove(adj, v)
            queue.extend(touched)
        elif deg == 2:
            ends = sorted(nb.elements())
            a, b = ends
            _remove(adj, v)
            if a == b:
                adj[a][a] += 1
            else:
                adj[a][b] += 1
                adj[b][a] += 1
            queue.extend(sorted({a, b}))


def _shortest_cycle_vertices(adj: dict[int, Counter]) -> list[int]:
    best: list[int] | None = None
    for r in sorted(adj):
        parent = {r: None}
        queue = deque([r])
        found = None
        while queue and found is None:
            v = queue.popleft()
            for w in sorted(adj[v]):
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    found = (v, w)
                    break
        if found is None:
            continue
        v, w = found
        left, right = [v], [w]
        while left[-1] != r:
            left.append(parent[left[-1]])
        while right[-1] != r:
            right.append(parent[right[-1]])
        cyc = sorted(set(left) | set(right))
        if best is None or len(cyc) < len(best):
            best = cyc
    assert best is not None, "kernel with min degree 3 must contain a cycle"
    return best


def _fvs_within(adj: dict[int, Counter], k: int, budget: _Budget) -> list[int] | None:
    budget.tick()
    adj = {v: Counter(nb) for v, nb in adj.items()}
    forced: list[int] = []
    _kernel(adj, forced)
    if len(forced) > k:
        return None
    k -= len(forced)
    if not adj:
        return forced
    if k == 0:
        return None
    parallel = next(((v, w) for v in sorted(adj) for w in sorted(adj[v]) if w > v and adj[v][w] >= 2), None)
    branch = list(parallel) if parallel else _shortest_cycle_vertices(adj)
    for v in branch:
        sub = {u: Counter(nb) for u, nb in adj.items()}
        _remove(sub, v)
        rest = _fvs_within(sub, k - 1, budget)
        if rest is not None:
            return forced + [v] + rest
    return None


def is_feedback_set(h: Multigraph, x: frozenset[int] | set[int]) -> bool:
    """True iff deleting ``x`` leaves no loop, no parallel pair and no cycle."""
    seen = set()
    parent = list(range(h.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v, _ in h.edges:
        if u in x or v in x:
            continue
        if u == v or (u, v) in seen:
            return False
        seen.add((u, v))
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def min_feedback_vertex_set(h: Multigraph, max_nodes: int = DEFAULT_MAX_NODES) -> frozenset[int]:
    """Exact minimum set of vertices meeting every cycle of ``h``."""
    adj = _adjacency(h)
    budget = _Budget(max_nodes)
    k = 0
    while True:
        found = _fvs_within(adj, k, budget)
        if found is not None:
            cover = frozenset(found)
            assert len(cover) == k
            assert is_feedback_set(h, cover)
            return cover
        k += 1


def pack_or_cover(
    h: Multigraph,
    s: int,
    phi_table: dict[int, int] | None = None,
    max_cycles: int | None = None,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> PackOrCover:
    """``s`` vertex-disjoint cycles, or a minimum cover of size at most phi(s).

    Raises PhiTableError when no packing exists yet the minimum cover is
    larger than the configured phi(s).
    """
    if s < 1:
        raise GraphInputError(f"s must be >= 1, got {s}")
    packing = find_disjoint_cycles(h, s, max_cycles)
    if packing is not None:
        for c in packing:
            assert not c.problems(h), c.problems(h)
        return PackOrCover(packing=packing)
    cover = min_feedback_vertex_set(h, max_nodes)
    limit = phi(s, phi_table)
    if len(cover) > limit:
        raise PhiTableError(
            f"minimum cycle cover has size {len(cover)} but phi({s}) = {limit}, "
            f"and there are no {s} disjoint cycles; the phi table is too small"
        )
    return PackOrCover(cover=cover)


# transitions ---------------------------------------------------------------

def feet_multigraph(p: Plantation, trans: Sequence[Transition]) -> Multigraph:
    """One edge per transition joining its feet; the label is its index.

    Vertex ids are those of ``p.g``; vertices outside ``z`` stay isolated.
    """
    edges = []
    for i, t in enumerate(trans):
        if not 1 <= len(t.feet) <= 2 or any(f not in p.z for f in t.feet):
            raise GraphInputError(f"transition {t.path} has feet {t.feet}; expected one or two z-vertices")
        edges.append((t.feet[0], t.feet[-1], i))
    return Multigraph(p.g.n, edges)


@dataclass(frozen=True)
class HittingResult:
    x: frozenset[int] | None = None
    uncovered: tuple[Transition, ...] = ()
    witness: PackingWitness | None = None


def _lift(p: Plantation, trans: Sequence[Transition], c: WalkCycle) -> set[int]:
    """Vertex set of ``p.g`` spanning a cycle whose z-part lies in ``c`` and
    whose other vertices lie on the transitions of ``c``."""
    vs = set(c.vertices)
    for lab in c.labels:
        vs.update(trans[lab].path)
    return vs


def apply_ep(p: Plantation, normal: Sequence[Transition], phi_table: dict[int, int] | None = None) -> HittingResult:
    """Feet in a set ``X`` of at most phi(s) z-vertices for all but ``|z|``
    members of a normal set, or ``s`` pairwise anticomplete cycles."""
    if not is_monic(p):
        raise GraphInputError("plantation is not monic")
    problems = normality_problems(p, normal)
    if problems:
        raise GraphInputError("transition set is not normal: " + "; ".join(problems))
    h = feet_multigraph(p, normal)
    result = pack_or_cover(h, p.s, phi_table)
    if result.is_packing:
        return HittingResult(witness=p.witness([_lift(p, normal, c) for c in result.packing]))
    x = result.cover
    uncovered = tuple(t for t in normal if not set(t.feet) & x)
    assert len(uncovered) <= len(p.z), (len(uncovered), len(p.z))
    return HittingResult(x=x, uncovered=uncovered)
