"""Plantations: a graph together with a cycle-hitting set ``z``.

Notation used throughout: ``F`` is the forest ``g - z``; ``N`` is the set of
forest vertices with a neighbour in ``z``; a transition is a path of ``F``
with at least one edge, both ends in ``N`` and no interior vertex in ``N``.
Its feet are the ``z``-vertices adjacent to its ends.

Reductions (explode, delete, contract) build new plantations on compacted
vertex ids. Every plantation remembers, per vertex, which vertices of the
original (root) graph it stands for, so witnesses are always reported in
original ids.
"""

from __future__ import annotations

from collections import Counter, deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .graph import (
    Graph,
    GraphInputError,
    bits,
    canonical_cycle,
    canonical_path,
    components_mask,
    find_cycle,
    is_forest,
    mask_of,
    popcount,
    shortest_cycle,
)
from .recognizer import PackingWitness


class NotCycleHitting(GraphInputError):
    """``g - z`` still has a cycle; ``cycle`` is one of them."""

    def __init__(self, cycle: tuple[int, ...]):
        super().__init__(f"z is not cycle-hitting: {cycle} avoids it")
        self.cycle = cycle


@dataclass(frozen=True)
class Transition:
    path: tuple[int, ...]
    feet: tuple[int, ...]

    @property
    def ends(self) -> tuple[int, int]:
        return self.path[0], self.path[-1]

    @property
    def is_self(self) -> bool:
        return len(self.feet) == 1

    def edges(self) -> set[tuple[int, int]]:
        return {tuple(sorted(e)) for e in zip(self.path, self.path[1:])}


@dataclass
class ReductionTrace:
    """Exploded and deleted vertices (original ids) plus contracted z-edges.

    ``maps`` holds, after each step, the original id standing for each
    vertex of the intermediate plantation.
    """

    exploded: list[int] = field(default_factory=list)
    deleted: list[int] = field(default_factory=list)
    contracted: list[tuple[int, int]] = field(default_factory=list)
    maps: list[tuple[int, ...]] = field(default_factory=list)

    def extend(self, other: ReductionTrace) -> None:
        self.exploded += other.exploded
        self.deleted += other.deleted
        self.contracted += other.contracted
        self.maps += other.maps


@dataclass(frozen=True, eq=False)
class Plantation:
    g: Graph
    z: frozenset[int]
    s: int
    members: tuple[tuple[int, ...], ...]
    root: Graph

    @cached_property
    def z_mask(self) -> int:
        return mask_of(self.z)

    @cached_property
    def forest_mask(self) -> int:
        return self.g.all_mask & ~self.z_mask

    @cached_property
    def forest(self) -> Graph:
        """``F`` on the same vertex ids; ``z``-vertices left isolated."""
        fm = self.forest_mask
        return Graph(self.g.n, [(u, v) for u, v in self.g.edges if fm >> u & 1 and fm >> v & 1])

    @cached_property
    def z_degree(self) -> tuple[int, ...]:
        zm = self.z_mask
        return tuple(popcount(self.g.masks[v] & zm) for v in range(self.g.n))

    @cached_property
    def n_mask(self) -> int:
        return mask_of(v for v in bits(self.forest_mask) if self.z_degree[v])

    @property
    def frontier(self) -> frozenset[int]:
        return frozenset(bits(self.n_mask))

    @cached_property
    def ids(self) -> tuple[int, ...]:
        """Representative original id of each vertex (least member)."""
        return tuple(m[0] for m in self.members)

    @cached_property
    def _index(self) -> dict[int, int]:
        return {r: i for i, r in enumerate(self.ids)}

    def local(self, original_ids: Iterable[int]) -> list[int]:
        return [self._index[r] for r in original_ids]

    def z_neighbours(self, v: int) -> list[int]:
        return bits(self.g.masks[v] & self.z_mask)

    def witness(self, vertex_sets: Sequence[Iterable[int]]) -> PackingWitness:
        """Turn vertex sets that each span a cycle into a validated witness
        of pairwise anticomplete induced cycles of the root graph."""
        cycles = []
        for vs in vertex_sets:
            rm = 0
            for v in vs:
                rm |= mask_of(self.members[v])
            cyc = shortest_cycle(self.root, rm)
            if cyc is None:
                raise AssertionError(f"vertex set {sorted(vs)} spans no cycle")
            cycles.append(canonical_cycle(cyc))
        w = PackingWitness(tuple(cycles))
        problems = w.problems(self.root)
        if problems:
            raise AssertionError("reconstructed witness is invalid: " + "; ".join(problems))
        return w


def make_plantation(g: Graph, z: Iterable[int], s: int) -> Plantation:
    zm = g.check_vertices(z)
    if s < 1:
        raise GraphInputError(f"s must be >= 1, got {s}")
    cyc = find_cycle(g, g.all_mask & ~zm)
    if cyc is not None:
        raise NotCycleHitting(cyc)
    return Plantation(g, frozenset(bits(zm)), s, tuple((v,) for v in range(g.n)), g)


def restrict(p: Plantation, keep: int) -> Plantation:
    """Induced sub-plantation on the vertex mask ``keep`` (compacted ids)."""
    order = bits(keep)
    index = {v: i for i, v in enumerate(order)}
    g = Graph(len(order), [(index[u], index[v]) for u, v in p.g.edges if u in index and v in index])
    z = frozenset(index[v] for v in p.z if v in index)
    return Plantation(g, z, p.s, tuple(p.members[v] for v in order), p.root)


def explode(p: Plantation, v: int) -> tuple[Plantation, ReductionTrace]:
    """Delete ``v`` in ``z`` and its neighbours outside ``z``."""
    if v not in p.z:
        raise GraphInputError(f"{v} is not in z")
    gone = (1 << v) | (p.g.masks[v] & p.forest_mask)
    q = restrict(p, p.g.all_mask & ~gone)
    trace = ReductionTrace(exploded=[p.ids[v]], maps=[q.ids])
    return q, trace


def delete(p: Plantation, vs: Iterable[int]) -> tuple[Plantation, ReductionTrace]:
    """Delete forest vertices ``vs``."""
    gone = p.g.check_vertices(vs)
    if gone & p.z_mask:
        raise GraphInputError("only vertices outside z may be deleted")
    q = restrict(p, p.g.all_mask & ~gone)
    return q, ReductionTrace(deleted=[p.ids[v] for v in bits(gone)], maps=[q.ids])


def is_monic(p: Plantation) -> bool:
    """``z`` stable and every frontier vertex has exactly one ``z``-neighbour."""
    zm = p.z_mask
    if any(p.g.masks[v] & zm for v in p.z):
        return False
    return all(p.z_degree[v] == 1 for v in bits(p.n_mask))


def is_dyadic(p: Plantation) -> bool:
    zm = p.z_mask
    if any(p.g.masks[v] & zm for v in p.z):
        return False
    return all(p.z_degree[v] <= 2 for v in bits(p.forest_mask))


def binary_vertices(p: Plantation) -> list[int]:
    return [v for v in bits(p.forest_mask) if p.z_degree[v] == 2]


def transitions(p: Plantation) -> list[Transition]:
    """All transitions, paths oriented least end first, sorted."""
    masks, fm, nm = p.g.masks, p.forest_mask, p.n_mask
    out = []
    for a in bits(nm):
        stack = [(a, -1, (a,))]
        while stack:
            v, parent, path = stack.pop()
            for w in bits(masks[v] & fm):
                if w == parent:
                    continue
                if nm >> w & 1:
                    if a < w:
                        out.append(_transition(p, path + (w,)))
                else:
                    stack.append((w, v, path + (w,)))
    return sorted(out, key=lambda t: t.path)


def _transition(p: Plantation, path: Sequence[int]) -> Transition:
    path = canonical_path(path)
    feet = bits((p.g.masks[path[0]] | p.g.masks[path[-1]]) & p.z_mask)
    return Transition(path, tuple(feet))


def self_transitions(p: Plantation) -> list[Transition]:
    return [t for t in transitions(p) if t.is_self]


def is_selfless(p: Plantation) -> bool:
    return not self_transitions(p)


def multiplicity(p: Plantation, z1: int, z2: int, trans: Sequence[Transition] | None = None) -> int:
    """Number of transitions whose feet are exactly ``{z1, z2}``."""
    want = tuple(sorted({z1, z2}))
    trans = transitions(p) if trans is None else trans
    return sum(1 for t in trans if t.feet == want)


def thickness(p: Plantation, trans: Sequence[Transition] | None = None) -> int:
    trans = transitions(p) if trans is None else trans
    counts = Counter(t.feet for t in trans)
    return max(counts.values(), default=0)


def transitions_anticomplete(p: Plantation, a: Transition, b: Transition) -> bool:
    return not (p.g.neighbourhood_mask(mask_of(a.path)) & mask_of(b.path))


def normality_problems(p: Plantation, family: Sequence[Transition]) -> list[str]:
    out = []
    for i, a in enumerate(family):
        for b in family[i + 1:]:
            if not transitions_anticomplete(p, a, b) and not set(a.ends) & set(b.ends):
                out.append(f"{a.path} and {b.path} clash without a common end")
    edge_sets = [t.edges() for t in family]
    for i, t in enumerate(family):
        others = set().union(*(e for j, e in enumerate(edge_sets) if j != i))
        if not edge_sets[i] - others:
            out.append(f"{t.path} has no private edge")
    return out


def is_normal(p: Plantation, family: Sequence[Transition]) -> bool:
    return not normality_problems(p, family)


def normal_transition_set(p: Plantation) -> list[Transition]:
    """A normal set of at least ``|N|/4`` transitions.

    Every forest component must contain two or more frontier vertices. Each
    component is rooted at its least frontier vertex and edges point to the
    root; directed transitions are bucketed by the number of frontier
    vertices on their route to the root, modulo 3, and the largest bucket is
    kept.
    """
    nm = p.n_mask
    chosen: list[Transition] = []
    for comp in components_mask(p.forest, p.forest_mask):
        front = comp & nm
        if popcount(front) < 2:
            raise GraphInputError(
                f"forest component {bits(comp)} has {popcount(front)} frontier vertices; need >= 2"
            )
        root = bits(front)[0]
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in bits(p.g.masks[v] & comp):
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        height: dict[int, int] = {root: 1}

        def height_of(v: int) -> int:
            # number of frontier vertices on the route v -> root
            chain = []
            while v not in height:
                chain.append(v)
                v = parent[v]
            h = height[v]
            for x in reversed(chain):
                h += nm >> x & 1
                height[x] = h
            return height[chain[0]] if chain else h

        buckets: dict[int, list[Transition]] = {0: [], 1: [], 2: []}
        for a in bits(front):
            if a == root:
                continue
            path = [a]
            v = parent[a]
            while not nm >> v & 1:
                path.append(v)
                v = parent[v]
            path.append(v)
            buckets[height_of(a) % 3].append(_transition(p, path))
        best = max(buckets, key=lambda r: (len(buckets[r]), -r))
        chosen += buckets[best]
    chosen.sort(key=lambda t: t.path)
    problems = normality_problems(p, chosen)
    assert not problems, problems
    assert 4 * len(chosen) >= popcount(nm)
    return chosen


def check_cycle_hitting(p: Plantation) -> None:
    if not is_forest(p.g, p.forest_mask):
        raise NotCycleHitting(find_cycle(p.g, p.forest_mask))
