"""Seeded random graph families for experiments."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, GraphInputError, canonical_cycle

GENERATORS = ("gnp", "c4free", "forest-plus", "packed")


@dataclass(frozen=True)
class GenParams:
    n: int = 16
    p: float = 0.2
    k: int = 3
    s: int = 2
    length: int = 3


def instance_rng(generator: str, seed: int, index: int) -> random.Random:
    return random.Random(f"{generator}-{seed}-{index}")


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


def lowest_four_cycle(g: Graph) -> tuple[int, ...] | None:
    """Least 4-cycle (chords allowed) in canonical form, or None."""
    best = None
    for a in range(g.n):
        for b in range(a + 1, g.n):
            common = sorted(g.adj[a] & g.adj[b])
            for i, c in enumerate(common):
                for d in common[i + 1:]:
                    cyc = canonical_cycle((a, c, b, d))
                    if best is None or cyc < best:
                        best = cyc
    return best


def c4free(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p), then drop the first edge of the lowest 4-cycle until none is left."""
    g = gnp(n, p, rng)
    edges = set(g.edges)
    while True:
        cyc = lowest_four_cycle(g)
        if cyc is None:
            return g
        edges.discard(tuple(sorted(cyc[:2])))
        g = Graph(n, sorted(edges))


def random_forest(n: int, rng: random.Random, attach: float = 0.9) -> list[tuple[int, int]]:
    return [(rng.randrange(v), v) for v in range(1, n) if rng.random() < attach]


def forest_plus(n: int, k: int, rng: random.Random) -> Graph:
    """A random forest plus ``k`` extra edges, so ``k`` vertices hit every cycle."""
    edges = set(random_forest(n, rng))
    extra = 0
    possible = n * (n - 1) // 2 - len(edges)
    while extra < min(k, possible):
        u, v = sorted(rng.sample(range(n), 2))
        if (u, v) not in edges:
            edges.add((u, v))
            extra += 1
    return Graph(n, sorted(edges))


def packed(s: int, length: int) -> Graph:
    """``s`` disjoint cycles of the given length, no edges between them."""
    if length < 3:
        raise GraphInputError("cycles need length >= 3")
    edges = []
    for c in range(s):
        base = c * length
        edges += [(base + i, base + (i + 1) % length) for i in range(length)]
    return Graph(s * length, edges)


def generate(generator: str, params: GenParams, seed: int, index: int = 0) -> Graph:
    rng = instance_rng(generator, seed, index)
    if generator == "gnp":
        return gnp(params.n, params.p, rng)
    if generator == "c4free":
        return c4free(params.n, params.p, rng)
    if generator == "forest-plus":
        return forest_plus(params.n, params.k, rng)
    if generator == "packed":
        return packed(params.s, params.length)
    raise GraphInputError(f"unknown generator {generator!r}; choose from {', '.join(GENERATORS)}")
