"""Numeric bounds used by the reductions, and the Erdős–Pósa table phi(s).

phi(s) bounds the size of a cycle cover of any multigraph without ``s``
vertex-disjoint cycles. It is configuration, not derived: defaults are
phi(1)=0, phi(2)=3, phi(3)=6, overridable through a file named by the
``ANTICYCLE_PHI_TABLE`` environment variable (lines ``s value``).
"""

from __future__ import annotations

import os
from math import factorial

DEFAULT_PHI = {1: 0, 2: 3, 3: 6}
PHI_ENV = "ANTICYCLE_PHI_TABLE"


class PhiTableError(RuntimeError):
    """phi(s) is missing, or a computed minimum cover exceeds the table value."""


def load_phi_table(path: str) -> dict[int, int]:
    table = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise PhiTableError(f"{path}:{lineno}: expected 's value', got {line!r}")
            try:
                s, value = int(parts[0]), int(parts[1])
            except ValueError:
                raise PhiTableError(f"{path}:{lineno}: entries must be integers") from None
            if s < 1 or value < 0:
                raise PhiTableError(f"{path}:{lineno}: bad entry {line!r}")
            table[s] = value
    return table


def phi_table() -> dict[int, int]:
    table = dict(DEFAULT_PHI)
    path = os.environ.get(PHI_ENV)
    if path:
        table.update(load_phi_table(path))
    return table


def phi(s: int, table: dict[int, int] | None = None) -> int:
    table = phi_table() if table is None else table
    try:
        return table[s]
    except KeyError:
        raise PhiTableError(f"phi({s}) is not configured; add it to the table in ${PHI_ENV}") from None


# reductions on monic plantations
def selfless_explode_limit(s: int) -> int:
    """Exploded vertices stay strictly below this."""
    return s


def selfless_delete_limit(s: int) -> int:
    """Deleted vertices stay strictly below this."""
    return 2 * s * factorial(s)


def thickness_explode_bound(s: int) -> int:
    return 6 * s - 4


def thickness_bound(s: int) -> int:
    return 2 * factorial(s) * (2 * factorial(s) + s)


def nbound(thickness: int, z_size: int, phi_s: int) -> int:
    return 4 * (thickness * phi_s + 1) * z_size


# dyadic plantations
def binary_explode_bound(phi_s: int) -> int:
    return 2 * phi_s


def binary_count_bound(z_size: int) -> int:
    return 2 * z_size


def boundary_x_bound(s: int, phi_s: int) -> int:
    return 2 * phi_s + 7 * s - 4


def boundary_y_bound(s: int) -> int:
    return 2 * s * factorial(s)


def boundary_edge_bound(s: int, z_size: int, phi_s: int) -> int:
    f = factorial(s)
    return 8 * (f * (2 * f + s) * phi_s + 1) * z_size + 4 * s * f


# covering-path counts
def covering_exponents(s: int, phi_s: int) -> tuple[int, int, int]:
    """``(d1, d2, d3)`` with ``n(G, Z) <= |G|**d1 * 2**(d2*|Z| + d3)``."""
    f = factorial(s)
    d1 = 6 * (2 * phi_s + 7 * s - 4) + 4 * s * f
    d2 = 8 * f * (2 * f + s) * phi_s + 8
    d3 = 4 * s * f
    return d1, d2, d3


def covering_bound(s: int, n_vertices: int, z_size: int, phi_s: int) -> int:
    d1, d2, d3 = covering_exponents(s, phi_s)
    return n_vertices**d1 * 2 ** (d2 * z_size + d3)
