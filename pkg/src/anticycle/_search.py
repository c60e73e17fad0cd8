"""Exact stable-set search on small conflict graphs given as bitmask rows.

``conflict[i]`` is the mask of items that clash with item ``i`` (never
including ``i`` itself). Items are ordered; "first" means lexicographically
least index sequence.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

from .graph import bits, popcount


def first_stable_set(conflict: Sequence[int], k: int) -> list[int] | None:
    """Lexicographically first ``k`` pairwise non-conflicting items, or None."""
    if k <= 0:
        return []
    n = len(conflict)
    full = (1 << n) - 1
    chosen: list[int] = []

    def go(cands: int) -> bool:
        need = k - len(chosen)
        if need == 0:
            return True
        if popcount(cands) < need:
            return False
        for i in bits(cands):
            rest = cands & ~((2 << i) - 1) & ~conflict[i]
            if popcount(rest) < need - 1:
                continue
            chosen.append(i)
            if go(rest):
                return True
            chosen.pop()
        return False

    return list(chosen) if go(full) else None


def _colour_bound(conflict: Sequence[int], cands: int) -> int:
    """Upper bound on a stable set inside ``cands`` via greedy clique cover."""
    cover = 0
    rest = cands
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        clique = low
        pool = rest & conflict[v]
        while pool:
            w_low = pool & -pool
            w = w_low.bit_length() - 1
            clique |= w_low
            pool &= conflict[w]
        rest &= ~clique
        cover += 1
    return cover


def max_stable_set_size(conflict: Sequence[int], limit: int, tick: Callable[[], None] | None = None) -> int:
    """Size of a maximum stable set, capped at ``limit``."""
    n = len(conflict)
    best = 0

    def go(cands: int, size: int) -> None:
        nonlocal best
        if tick is not None:
            tick()
        if size > best:
            best = size
        if best >= limit or not cands:
            return
        if size + _colour_bound(conflict, cands) <= best:
            return
        for i in bits(cands):
            if best >= limit:
                return
            go(cands & ~((2 << i) - 1) & ~conflict[i], size + 1)
            cands &= ~(1 << i)
            if size + _colour_bound(conflict, cands) <= best:
                return

    go((1 << n) - 1, 0)
    return min(best, limit)
