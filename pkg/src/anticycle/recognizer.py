"""Deciding whether a graph has ``s`` pairwise anticomplete cycles.

Any family of pairwise anticomplete cycles can be shrunk to one of pairwise
anticomplete *induced* cycles, so every search here runs over induced cycles
only.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ._search import first_stable_set, max_stable_set_size
from .enumeration import (
    Cycle,
    enumerate_induced_cycles,
    enumerate_induced_paths_from,
    induced_cycles_extending,
)
from .graph import CapExceeded, Graph, GraphInputError, is_cycle, mask_of

DEFAULT_MAX_CYCLES = 10**5


@dataclass(frozen=True)
class PackingWitness:
    """``s`` cycles of a graph, pairwise vertex-disjoint and anticomplete."""

    cycles: tuple[Cycle, ...]

    def __len__(self):
        return len(self.cycles)

    def problems(self, g: Graph) -> list[str]:
        out = []
        for c in self.cycles:
            if not is_cycle(g, c):
                out.append(f"{c} is not a cycle of the graph")
        ms = [mask_of(c) for c in self.cycles]
        for i in range(len(ms)):
            for j in range(i + 1, len(ms)):
                if g.neighbourhood_mask(ms[i]) & ms[j]:
                    out.append(f"cycles {self.cycles[i]} and {self.cycles[j]} are not anticomplete")
        return out

    def is_valid(self, g: Graph, s: int | None = None) -> bool:
        if s is not None and len(self.cycles) < s:
            return False
        return not self.problems(g)


@dataclass(frozen=True)
class Recognition:
    free: bool
    witness: PackingWitness | None = None


def induced_cycles(g: Graph, max_cycles: int | None = DEFAULT_MAX_CYCLES) -> list[Cycle]:
    """All induced cycles in canonical form, sorted lexicographically."""
    return sorted(enumerate_induced_cycles(g, max_cycles))


def _conflicts(g: Graph, cycles: Sequence[Cycle]) -> list[int]:
    ms = [mask_of(c) for c in cycles]
    closed = [g.neighbourhood_mask(m) for m in ms]
    k = len(ms)
    rows = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if closed[i] & ms[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def is_sO_free(g: Graph, s: int, max_cycles: int | None = DEFAULT_MAX_CYCLES) -> Recognition:
    """Free, or the lexicographically first witness of ``s`` anticomplete cycles.

    Raises CapExceeded when ``g`` has more than ``max_cycles`` induced cycles.
    """
    if s < 1:
        raise GraphInputError(f"s must be >= 1, got {s}")
    cycles = induced_cycles(g, max_cycles)
    if s == 1:
        return Recognition(True) if not cycles else Recognition(False, PackingWitness((cycles[0],)))
    pick = first_stable_set(_conflicts(g, cycles), s)
    if pick is None:
        return Recognition(True)
    return Recognition(False, PackingWitness(tuple(cycles[i] for i in pick)))


def is_2O_free_via_paths(g: Graph, max_cycles: int | None = DEFAULT_MAX_CYCLES) -> Recognition:
    """The three-step test: induced paths per start vertex, close each with one
    vertex, then look for an anticomplete pair among the closed cycles."""
    found: set[Cycle] = set()
    for v in range(g.n):
        for p in enumerate_induced_paths_from(g, v):
            if len(p) >= 2:
                found.update(induced_cycles_extending(g, p))
        if max_cycles is not None and len(found) > max_cycles:
            raise CapExceeded("max_cycles", max_cycles)
    cycles = sorted(found)
    ms = [mask_of(c) for c in cycles]
    closed = [g.neighbourhood_mask(m) for m in ms]
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            if not closed[i] & ms[j]:
                return Recognition(False, PackingWitness((cycles[i], cycles[j])))
    return Recognition(True)


def max_anticomplete_cycle_packing(
    g: Graph, limit: int, max_cycles: int | None = DEFAULT_MAX_CYCLES
) -> tuple[int, PackingWitness | None]:
    """Largest ``k <= limit`` with ``k`` pairwise anticomplete cycles, plus a witness."""
    if limit < 1:
        raise GraphInputError(f"limit must be >= 1, got {limit}")
    cycles = induced_cycles(g, max_cycles)
    if not cycles:
        return 0, None
    rows = _conflicts(g, cycles)
    k = max_stable_set_size(rows, limit)
    pick = first_stable_set(rows, k)
    return k, PackingWitness(tuple(cycles[i] for i in pick))
