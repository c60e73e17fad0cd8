"""Brute-force reference implementations, written independently of the
library so test comparisons are meaningful. Exponential; small inputs only."""

from __future__ import annotations

import itertools
import random

import networkx as nx

from anticycle.graph import Graph, Multigraph


def adjacency(g: Graph) -> list[int]:
    m = [0] * g.n
    for u, v in g.edges:
        m[u] |= 1 << v
        m[v] |= 1 << u
    return m


def _members(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _connected(adj: list[int], mask: int) -> bool:
    if not mask:
        return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        nxt = 0
        for v in _members(frontier):
            nxt |= adj[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def induced_cycle_sets(g: Graph) -> list[int]:
    """Vertex masks of induced cycles: connected, 2-regular, >= 3 vertices."""
    adj = adjacency(g)
    out = []
    for mask in range(1, 1 << g.n):
        if bin(mask).count("1") < 3:
            continue
        if all(bin(adj[v] & mask).count("1") == 2 for v in _members(mask)) and _connected(adj, mask):
            out.append(mask)
    return out


def has_anticomplete_cycles(g: Graph, s: int) -> bool:
    adj = adjacency(g)
    cyc = induced_cycle_sets(g)
    reach = {}
    for c in cyc:
        r = c
        for v in _members(c):
            r |= adj[v]
        reach[c] = r
    for combo in itertools.combinations(cyc, s):
        if all(not reach[a] & b for a, b in itertools.combinations(combo, 2)):
            return True
    return False


def induced_path_sets(g: Graph) -> list[int]:
    """Vertex masks inducing a path (a tree with maximum degree 2)."""
    adj = adjacency(g)
    out = []
    for mask in range(1, 1 << g.n):
        vs = _members(mask)
        degs = [bin(adj[v] & mask).count("1") for v in vs]
        if max(degs) <= 2 and sum(degs) == 2 * (len(vs) - 1) and _connected(adj, mask):
            out.append(mask)
    return out


def path_order(g: Graph, mask: int) -> tuple[int, ...]:
    adj = adjacency(g)
    vs = _members(mask)
    if len(vs) == 1:
        return (vs[0],)
    start = min(v for v in vs if bin(adj[v] & mask).count("1") == 1)
    order = [start]
    prev = -1
    while len(order) < len(vs):
        cur = order[-1]
        nxt = [w for w in _members(adj[cur] & mask) if w != prev]
        prev = cur
        order.append(nxt[0])
    return tuple(order)


def ordered_induced_paths(g: Graph) -> set[tuple[int, ...]]:
    """Every ordered induced path, by checking every vertex sequence."""
    adj = adjacency(g)
    out = set()
    for k in range(1, g.n + 1):
        for seq in itertools.permutations(range(g.n), k):
            ok = True
            for i in range(k):
                for j in range(i + 1, k):
                    edge = bool(adj[seq[i]] >> seq[j] & 1)
                    if edge != (j == i + 1):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.add(seq)
    return out


def covering_paths(g: Graph, z: set[int]) -> set[tuple[int, ...]]:
    """Induced paths containing z with both ends in z (unordered, canonical)."""
    if not z:
        return set()
    zm = sum(1 << v for v in z)
    out = set()
    for mask in induced_path_sets(g):
        if mask & zm != zm:
            continue
        p = path_order(g, mask)
        if p[0] in z and p[-1] in z:
            out.add(min(p, p[::-1]))
    return out


def is_feedback(h: Multigraph, x: set[int]) -> bool:
    parent = list(range(h.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v, _ in h.edges:
        if u in x or v in x:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def min_fvs_size(h: Multigraph) -> int:
    for k in range(h.n + 1):
        for xs in itertools.combinations(range(h.n), k):
            if is_feedback(h, set(xs)):
                return k
    raise AssertionError("unreachable")


def max_disjoint_multicycles(h: Multigraph, limit: int) -> int:
    """Largest k <= limit with k vertex-disjoint cycles (loops and digons count)."""
    cycles = set()
    counts = {}
    for u, v, _ in h.edges:
        if u == v:
            cycles.add(1 << u)
        else:
            counts[(u, v)] = counts.get((u, v), 0) + 1
    for (u, v), c in counts.items():
        if c >= 2:
            cycles.add(1 << u | 1 << v)
    simple = nx.Graph([(u, v) for (u, v) in counts])
    for cyc in nx.simple_cycles(simple):
        if len(cyc) >= 3:
            cycles.add(sum(1 << v for v in cyc))
    cycles = sorted(cycles)
    best = 0

    def go(start, used, k):
        nonlocal best
        best = max(best, k)
        if best >= limit:
            return
        for i in range(start, len(cycles)):
            if not cycles[i] & used:
                go(i + 1, used | cycles[i], k + 1)

    go(0, 0, 0)
    return best


def linear_forests(f: Graph) -> list[list[tuple[int, ...]]]:
    """Every linear-forest subgraph of the forest ``f`` (as sorted path lists)."""
    out = []
    edges = list(f.edges)
    for k in range(len(edges) + 1):
        for es in itertools.combinations(edges, k):
            deg = [0] * f.n
            for u, v in es:
                deg[u] += 1
                deg[v] += 1
            if max(deg, default=0) > 2:
                continue
            sub = nx.Graph()
            sub.add_edges_from(es)
            paths = []
            for comp in nx.connected_components(sub):
                ends = sorted(v for v in comp if deg[v] == 1)
                p = nx.shortest_path(sub, ends[0], ends[1])
                paths.append(tuple(min(p, p[::-1])))
            free = [v for v in range(f.n) if deg[v] == 0]
            for r in range(len(free) + 1):
                for singles in itertools.combinations(free, r):
                    out.append(sorted(paths + [(v,) for v in singles]))
    return out


def end_multiset(paths: list[tuple[int, ...]]) -> dict[int, int]:
    x: dict[int, int] = {}
    for p in paths:
        for v in (p[0], p[-1]):
            x[v] = x.get(v, 0) + 1
    return x


def unlabeled_forests(n: int):
    """One labelled representative of every forest on n vertices up to isomorphism."""
    trees = {k: [nx.empty_graph(1)] if k == 1 else list(nx.nonisomorphic_trees(k)) for k in range(1, n + 1)}

    def parts(rem, maxk):
        if rem == 0:
            yield []
            return
        for k in range(min(rem, maxk), 0, -1):
            for rest in parts(rem - k, k):
                yield [k] + rest

    for sizes in parts(n, n):
        # choose trees as a multiset per size
        groups = {}
        for k in sizes:
            groups[k] = groups.get(k, 0) + 1
        choice_lists = [
            list(itertools.combinations_with_replacement(range(len(trees[k])), c)) for k, c in sorted(groups.items())
        ]
        for choice in itertools.product(*choice_lists):
            edges = []
            base = 0
            for (k, _), picks in zip(sorted(groups.items()), choice):
                for t in picks:
                    edges += [(base + u, base + v) for u, v in trees[k][t].edges]
                    base += k
            yield Graph(n, edges)


def random_forest(n: int, rng: random.Random, attach: float = 0.8) -> list[tuple[int, int]]:
    perm = list(range(n))
    rng.shuffle(perm)
    return [(perm[rng.randrange(i)], perm[i]) for i in range(1, n) if rng.random() < attach]


def random_graph_with_fvs(n: int, k: int, rng: random.Random, extra: float = 0.3) -> tuple[Graph, list[int]]:
    """A graph whose first ``k`` vertices (after shuffling) hit every cycle:
    a random forest on the rest, plus random edges touching the hitting set."""
    perm = list(range(n))
    rng.shuffle(perm)
    z = sorted(perm[:k])
    rest = perm[k:]
    edges = set()
    for i in range(1, len(rest)):
        if rng.random() < 0.85:
            u, v = rest[rng.randrange(i)], rest[i]
            edges.add((min(u, v), max(u, v)))
    for a in z:
        for v in range(n):
            if v != a and rng.random() < extra:
                edges.add((min(a, v), max(a, v)))
    return Graph(n, sorted(edges)), z
