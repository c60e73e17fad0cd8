"""Bound-or-witness reductions on plantations.

Each reduction either returns a smaller plantation together with a trace of
what was exploded and deleted, or a witness of ``s`` pairwise anticomplete
cycles in the original graph. All witnesses are re-validated before they are
returned.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from . import bounds
from ._search import first_stable_set
from .forests import SubtreeFamily, select_anticomplete_paths, subtree_hitting_set, two_colouring
from .graph import Graph, GraphInputError, Multigraph, bits, components_mask, mask_of, popcount
from .hitting import apply_ep, pack_or_cover
from .plantation import (
    Plantation,
    ReductionTrace,
    Transition,
    binary_vertices,
    delete,
    explode,
    is_dyadic,
    is_monic,
    is_selfless,
    normal_transition_set,
    self_transitions,
    thickness,
    transitions,
    transitions_anticomplete,
)
from .recognizer import PackingWitness


@dataclass
class Outcome:
    """Reduced plantation and trace, or a witness (then ``plantation`` is None)."""

    plantation: Plantation | None
    trace: ReductionTrace = field(default_factory=ReductionTrace)
    witness: PackingWitness | None = None
    count_zero: bool = False


@dataclass(frozen=True)
class BoundCheck:
    name: str
    value: int
    bound: int
    op: str = "<="
    stage: str = ""

    @property
    def holds(self) -> bool:
        if self.op == "<":
            return self.value < self.bound
        if self.op == "<=":
            return self.value <= self.bound
        if self.op == ">=":
            return self.value >= self.bound
        raise ValueError(self.op)

    def __str__(self):
        mark = "ok" if self.holds else "FAILED"
        return f"{self.name}: {_short(self.value)} {self.op} {_short(self.bound)} {mark}"


def _short(x: int) -> str:
    digits = str(x)
    if len(digits) <= 18:
        return digits
    return f"{digits[0]}.{digits[1:4]}e{len(digits) - 1}"


def _explode_all(q: Plantation, reps: list[int], trace: ReductionTrace) -> Plantation:
    for r in reps:
        (v,) = q.local([r])
        q, t = explode(q, v)
        trace.extend(t)
    return q


def _delete_all(q: Plantation, vs: list[int], trace: ReductionTrace) -> Plantation:
    if not vs:
        return q
    q, t = delete(q, vs)
    trace.extend(t)
    return q


def _conflict_rows(p: Plantation, family: list[Transition]) -> list[int]:
    rows = [0] * len(family)
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            if not transitions_anticomplete(p, family[i], family[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def _anticomplete_subfamily(p: Plantation, family: list[Transition], k: int) -> list[Transition] | None:
    pick = first_stable_set(_conflict_rows(p, family), k)
    return None if pick is None else [family[i] for i in pick]


def _to_root(q: Plantation, vs) -> tuple[int, ...]:
    return tuple(q.ids[v] for v in vs)


# self-transitions ------------------------------------------------------------

def make_selfless(p: Plantation) -> Outcome:
    """Explode fewer than ``s`` and delete fewer than ``2s*s!`` vertices to
    remove every self-transition, or find ``s`` anticomplete cycles."""
    if not is_monic(p):
        raise GraphInputError("plantation is not monic")
    s = p.s
    need = math.factorial(s)
    trace = ReductionTrace()
    q = p
    important: list[tuple[int, list[tuple[int, ...]]]] = []
    while True:
        selfs = self_transitions(q)
        found = None
        for z in sorted(q.z):
            fam = [t for t in selfs if t.feet == (z,)]
            if len(fam) >= need:
                sub = _anticomplete_subfamily(q, fam, need)
                if sub is not None:
                    found = z, sub
                    break
        if found is None:
            break
        z, sub = found
        important.append((q.ids[z], [_to_root(q, t.path) for t in sub]))
        if len(important) == s:
            # these vertices are just as important in p, so select there
            families = [[tuple(p.local(path)) for path in paths] for _, paths in important]
            chosen = select_anticomplete_paths(p.forest, families, 1)
            sets = [set(paths[0]) | set(p.local([zr])) for (zr, _), paths in zip(important, chosen)]
            return Outcome(None, trace, p.witness(sets))
        q = _explode_all(q, [q.ids[z]], trace)

    selfs = self_transitions(q)
    if selfs:
        limit = s * need
        fam = SubtreeFamily(q.forest, [t.path for t in selfs])
        kind, result = subtree_hitting_set(fam, limit, "anticomplete")
        if kind == "packing":
            picked: dict[int, Transition] = {}
            for i in result:
                picked.setdefault(selfs[i].feet[0], selfs[i])
            assert len(picked) >= s, "pigeonhole: some foot would be s!-self-important"
            sets = [set(t.path) | {z} for z, t in sorted(picked.items())[:s]]
            return Outcome(None, trace, q.witness(sets))
        q = _delete_all(q, sorted(result), trace)
    assert is_selfless(q)
    assert len(trace.exploded) < bounds.selfless_explode_limit(s)
    assert len(trace.deleted) < bounds.selfless_delete_limit(s)
    return Outcome(q, trace)


# thickness --------------------------------------------------------------------

def _by_feet(trans: list[Transition]) -> dict[tuple[int, ...], list[Transition]]:
    out: dict[tuple[int, ...], list[Transition]] = {}
    for t in trans:
        out.setdefault(t.feet, []).append(t)
    return out


def _greedy_disjoint(pairs: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    used: set[int] = set()
    out = []
    for pr in pairs:
        if not used & set(pr):
            out.append(pr)
            used.update(pr)
    return out


def provable_thickness_bound(s: int) -> int:
    """What the linkage/star argument certifies after ``reduce_thickness``:
    fewer than ``2*(2s!)`` matched ends and fewer than ``2s!+s`` per centre."""
    f = math.factorial(s)
    return (4 * f - 1) * (2 * f + s - 1)


def reduce_thickness(p: Plantation) -> Outcome:
    """Explode at most ``6s-4`` vertices so no pair of feet carries a large
    linkage or star, or find ``s`` anticomplete cycles."""
    if not is_monic(p) or not is_selfless(p):
        raise GraphInputError("plantation must be monic and selfless")
    s = p.s
    f = math.factorial(s)
    link_size, star_size = 2 * f, 2 * f + s
    groups = _by_feet(transitions(p))

    linkages: dict[tuple[int, ...], list[Transition]] = {}
    stars: dict[tuple[int, ...], tuple[int, list[Transition]]] = {}
    for pair, fam in sorted(groups.items()):
        if len(fam) >= link_size:
            sub = _anticomplete_subfamily(p, fam, link_size)
            if sub is not None:
                linkages[pair] = sub
        ends = Counter(v for t in fam for v in t.ends)
        centres = sorted(v for v, c in ends.items() if c >= star_size)
        if centres:
            a = centres[0]
            stars[pair] = a, [t for t in fam if a in t.ends]

    link_pairs = _greedy_disjoint(sorted(linkages))
    if len(link_pairs) >= s:
        families = [[t.path for t in linkages[pr]] for pr in link_pairs[:s]]
        chosen = select_anticomplete_paths(p.forest, families, 2)
        sets = [set(a) | set(b) | set(pr) for (a, b), pr in zip(chosen, link_pairs)]
        return Outcome(None, ReductionTrace(), p.witness(sets))

    star_pairs = _greedy_disjoint(sorted(stars))
    if len(star_pairs) >= 2 * s:
        return Outcome(None, ReductionTrace(), _star_witness(p, [(pr, *stars[pr]) for pr in star_pairs[: 2 * s]]))

    x = sorted({z for pr in link_pairs + star_pairs for z in pr})
    assert len(x) <= bounds.thickness_explode_bound(s)
    trace = ReductionTrace()
    q = _explode_all(p, _to_root(p, x), trace)
    assert thickness(q) <= provable_thickness_bound(s)
    return Outcome(q, trace)


def _star_witness(p: Plantation, stars: list[tuple[tuple[int, ...], int, list[Transition]]]) -> PackingWitness:
    s = p.s
    f = math.factorial(s)
    centres = [a for _, a, _ in stars]
    sub = Graph(len(centres), [(i, j) for i in range(len(centres)) for j in range(i) if p.g.has_edge(centres[i], centres[j])])
    colour = two_colouring(sub)
    assert colour is not None, "centres lie in a forest"
    side = 0 if colour.count(0) >= colour.count(1) else 1
    keep = [i for i in range(len(stars)) if colour[i] == side][:s]
    families = []
    for i in keep:
        pair, a, members = stars[i]
        others = mask_of(centres[j] for j in keep if j != i)
        near = p.g.neighbourhood_mask(others)
        clean = [t for t in members if not mask_of(t.path) & near]
        assert len(clean) >= 2 * f
        truncs = [tuple(v for v in t.path if v != a) for t in clean[: 2 * f]]
        families.append(truncs)
    chosen = select_anticomplete_paths(p.forest, families, 2)
    sets = []
    for i, (qa, qb) in zip(keep, chosen):
        pair, a, _ = stars[i]
        sets.append(set(qa) | set(qb) | {a} | set(pair))
    return p.witness(sets)


# dyadic plantations -------------------------------------------------------------

def _contract(p: Plantation, u: int, v: int) -> Plantation:
    """Merge adjacent z-vertices ``v`` into ``u`` (``u < v``)."""
    common = p.g.masks[u] & p.g.masks[v]
    assert not common, "contracted z-vertices must have no common neighbour"
    keep = [w for w in range(p.g.n) if w != v]
    index = {w: i for i, w in enumerate(keep)}
    index[v] = index[u]
    edges = {tuple(sorted((index[a], index[b]))) for a, b in p.g.edges if {a, b} != {u, v}}
    g = Graph(len(keep), sorted(edges))
    members = [p.members[w] for w in keep]
    members[index[u]] = tuple(sorted(p.members[u] + p.members[v]))
    z = frozenset(index[w] for w in p.z)
    return Plantation(g, z, p.s, tuple(members), p.root)


def z_triangle(p: Plantation) -> tuple[int, int, int] | None:
    zm = p.z_mask
    for a in sorted(p.z):
        for b in bits(p.g.masks[a] & zm):
            if b <= a:
                continue
            common = p.g.masks[a] & p.g.masks[b] & zm
            c = next((c for c in bits(common) if c > b), None)
            if c is not None:
                return a, b, c
    return None


def make_dyadic(p: Plantation) -> Outcome:
    """Delete vertices that lie on no z-covering path and contract edges
    inside z until the plantation is dyadic. If z holds a triangle there is
    no z-covering path at all; the result is then flagged ``count_zero``."""
    trace = ReductionTrace()
    q = p
    while True:
        zm = q.z_mask
        heavy = [v for v in bits(q.forest_mask) if q.z_degree[v] >= 3]
        if heavy:
            q = _delete_all(q, heavy, trace)
            continue
        clash = []
        for v in binary_vertices(q):
            a, b = q.z_neighbours(v)
            if q.g.has_edge(a, b):
                clash.append(v)
        if clash:
            q = _delete_all(q, clash, trace)
            continue
        if z_triangle(q) is not None:
            return Outcome(q, trace, count_zero=True)
        inner = [(a, b) for a, b in q.g.edges if zm >> a & 1 and zm >> b & 1]
        if not inner:
            break
        a, b = inner[0]
        trace.contracted.append((q.ids[a], q.ids[b]))
        q = _contract(q, a, b)
        trace.maps.append(q.ids)
    assert is_dyadic(q)
    return Outcome(q, trace)


def reduce_binary(p: Plantation, phi_table: dict[int, int] | None = None) -> Outcome:
    """Explode at most ``2*phi(s)`` vertices so that at most ``2|z|`` binary
    vertices remain, or find ``s`` anticomplete cycles."""
    if not is_dyadic(p):
        raise GraphInputError("plantation is not dyadic")
    n2 = binary_vertices(p)
    if not n2:
        return Outcome(p)
    colour = two_colouring(p.forest)
    x: set[int] = set()
    for side in (0, 1):
        ys = [y for y in n2 if colour[y] == side]
        if not ys:
            continue
        h_edges = []
        for y in ys:
            a, b = p.z_neighbours(y)
            h_edges.append((a, b, y))
        result = pack_or_cover(Multigraph(p.g.n, h_edges), p.s, phi_table)
        if result.is_packing:
            sets = [set(c.vertices) | set(c.labels) for c in result.packing]
            return Outcome(None, ReductionTrace(), p.witness(sets))
        x |= result.cover
    phi_s = bounds.phi(p.s, phi_table)
    assert len(x) <= bounds.binary_explode_bound(phi_s)
    trace = ReductionTrace()
    q = _explode_all(p, _to_root(p, sorted(x)), trace)
    assert len(binary_vertices(q)) <= bounds.binary_count_bound(len(p.z))
    return Outcome(q, trace)


# the composed boundary reduction ---------------------------------------------------

@dataclass
class BoundaryResult:
    x: frozenset[int] = frozenset()
    y: frozenset[int] = frozenset()
    n0: frozenset[int] = frozenset()
    n1: frozenset[int] = frozenset()
    n2: frozenset[int] = frozenset()
    boundary_edges: int = 0
    checks: list[BoundCheck] = field(default_factory=list)
    witness: PackingWitness | None = None
    stage: str = ""
    traces: dict[str, ReductionTrace] = field(default_factory=dict)

    @property
    def edge_bound_holds(self) -> bool:
        return all(c.holds for c in self.checks if c.name == "boundary edges")

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)


def boundary_reduction(p: Plantation, phi_table: dict[int, int] | None = None) -> BoundaryResult:
    """Sets ``X`` in z and ``Y`` outside z after which few edges leave
    ``z - X`` towards forest vertices that are not isolated frontier vertices.

    Runs the binary, selfless and thickness reductions in turn and checks
    every intermediate bound; any stage may instead produce a witness.
    """
    if not is_dyadic(p):
        raise GraphInputError("plantation is not dyadic")
    s = p.s
    phi_s = bounds.phi(s, phi_table)
    checks: list[BoundCheck] = []

    r1 = reduce_binary(p, phi_table)
    if r1.witness is not None:
        return BoundaryResult(witness=r1.witness, stage="binary")
    q1 = r1.plantation
    traces = {"binary": r1.trace}
    x1 = r1.trace.exploded
    y1 = binary_vertices(q1)
    checks.append(BoundCheck("binary explosions", len(x1), bounds.binary_explode_bound(phi_s), stage="binary"))
    checks.append(BoundCheck("binary vertices left", len(y1), bounds.binary_count_bound(len(p.z)), stage="binary"))
    # read as edges between the leftover binary vertices and z
    y1_edges = sum(q1.z_degree[v] for v in y1)
    checks.append(BoundCheck("binary vertex edges", y1_edges, 4 * len(p.z), stage="binary"))
    q1m = _delete_all(q1, y1, ReductionTrace())
    assert is_monic(q1m)

    r2 = make_selfless(q1m)
    if r2.witness is not None:
        return BoundaryResult(witness=r2.witness, stage="selfless", checks=checks, traces=traces)
    x2, y = r2.trace.exploded, r2.trace.deleted
    traces["selfless"] = r2.trace
    checks.append(BoundCheck("selfless explosions", len(x2), bounds.selfless_explode_limit(s), "<", stage="selfless"))
    checks.append(BoundCheck("selfless deletions", len(y), bounds.selfless_delete_limit(s), "<", stage="selfless"))

    r3 = reduce_thickness(r2.plantation)
    if r3.witness is not None:
        return BoundaryResult(witness=r3.witness, stage="thickness", checks=checks, traces=traces)
    q3 = r3.plantation
    x3 = r3.trace.exploded
    traces["thickness"] = r3.trace
    checks.append(BoundCheck("thickness explosions", len(x3), bounds.thickness_explode_bound(s), stage="thickness"))
    checks.append(BoundCheck("thickness", thickness(q3), bounds.thickness_bound(s), stage="thickness"))

    y3 = [v for comp in components_mask(q3.forest, q3.forest_mask) if popcount(comp & q3.n_mask) <= 1 for v in bits(comp)]
    q4 = _delete_all(q3, y3, ReductionTrace())
    normal = normal_transition_set(q4)
    n_size = popcount(q4.n_mask)
    checks.append(BoundCheck("normal set size x4", 4 * len(normal), n_size, ">=", stage="normal set"))
    ep = apply_ep(q4, normal, phi_table)
    if ep.witness is not None:
        return BoundaryResult(witness=ep.witness, stage="cycle cover", checks=checks, traces=traces)
    checks.append(BoundCheck("cover size", len(ep.x), phi_s, stage="cycle cover"))
    checks.append(BoundCheck("transitions missing the cover", len(ep.uncovered), len(q4.z), stage="cycle cover"))
    checks.append(BoundCheck("frontier size", n_size, bounds.nbound(thickness(q4), len(q4.z), phi_s), stage="cycle cover"))

    x = frozenset(p.local(x1 + x2 + x3))
    ys = frozenset(p.local(y))
    checks.append(BoundCheck("exploded in total", len(x), bounds.boundary_x_bound(s, phi_s), stage="boundary"))
    checks.append(BoundCheck("deleted in total", len(ys), bounds.boundary_y_bound(s), stage="boundary"))

    n0, n1, n2, edges = boundary_partition(p, x, ys)
    checks.append(BoundCheck("boundary edges", edges, bounds.boundary_edge_bound(s, len(p.z), phi_s), stage="boundary"))
    return BoundaryResult(x, ys, n0, n1, n2, edges, checks, traces=traces)


def boundary_partition(
    p: Plantation, x: frozenset[int], y: frozenset[int]
) -> tuple[frozenset[int], frozenset[int], frozenset[int], int]:
    """``(N0, N1, N2, e)`` where ``N_i`` are forest vertices outside
    ``Y + N(X)`` with ``i`` neighbours in z, ``N0`` holds the members of
    ``N1`` alone in their component of ``F - (Y + N(X) + N2)``, and ``e``
    counts edges between ``z - X`` and ``F - (N(X) + N0)``."""
    fm = p.forest_mask
    xm, ym = mask_of(x), mask_of(y)
    nx = 0
    for v in x:
        nx |= p.g.masks[v]
    nx &= fm
    rest = fm & ~ym & ~nx
    n1 = mask_of(v for v in bits(rest) if p.z_degree[v] == 1)
    n2 = mask_of(v for v in bits(rest) if p.z_degree[v] == 2)
    n0 = 0
    for comp in components_mask(p.g, rest & ~n2):
        if popcount(comp & n1) == 1:
            n0 |= comp & n1
    far = fm & ~nx & ~n0
    zrest = p.z_mask & ~xm
    edges = sum(popcount(p.g.masks[v] & zrest) for v in bits(far))
    return frozenset(bits(n0)), frozenset(bits(n1)), frozenset(bits(n2)), edges
