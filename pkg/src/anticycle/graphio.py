"""Reading and writing graphs: plain edge lists and graph6."""

from __future__ import annotations

import sys
from collections.abc import Iterable, Iterator

from .graph import Graph, GraphInputError, Multigraph

GRAPH6_HEADER = ">>graph6<<"


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _parse_edgelist(text: str) -> tuple[int, list[tuple[int, int]]]:
    rows = list(_lines(text))
    if not rows:
        raise GraphInputError("empty edge list: expected a first line 'n m'")
    lineno, head = rows[0]
    if len(head) != 2:
        raise GraphInputError(f"line {lineno}: expected 'n m', got {' '.join(head)!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphInputError(f"line {lineno}: 'n m' must be integers") from None
    if n < 0 or m < 0:
        raise GraphInputError(f"line {lineno}: negative size")
    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected 'u v', got {' '.join(parts)!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphInputError(f"line {lineno}: vertex ids must be integers") from None
    if len(edges) != m:
        raise GraphInputError(f"header promises {m} edges, found {len(edges)}")
    return n, edges


def parse_edgelist(text: str) -> Graph:
    n, edges = _parse_edgelist(text)
    return Graph(n, edges)


def parse_multigraph(text: str) -> Multigraph:
    """Edge list where repeated lines and ``u u`` loops are allowed."""
    n, edges = _parse_edgelist(text)
    return Multigraph(n, edges)


def format_edgelist(g: Graph | Multigraph) -> str:
    edges = [(e[0], e[1]) for e in g.edges]
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def _n_to_graph6(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphInputError(f"graph6 cannot encode n={n}")


def format_graph6(g: Graph) -> str:
    bitlist = []
    for j in range(1, g.n):
        row = g.masks[j]
        for i in range(j):
            bitlist.append(row >> i & 1)
    while len(bitlist) % 6:
        bitlist.append(0)
    body = "".join(
        chr(63 + int("".join(map(str, bitlist[k : k + 6])), 2)) for k in range(0, len(bitlist), 6)
    )
    return _n_to_graph6(g.n) + body


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise GraphInputError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d < 64 for d in data):
        raise GraphInputError(f"invalid graph6 character in {s!r}")
    if data[0] != 63:
        n, rest = data[0], data[1:]
    elif len(data) > 1 and data[1] == 63:
        if len(data) < 8:
            raise GraphInputError("truncated graph6 size field")
        n, rest = 0, data[8:]
        for d in data[2:8]:
            n = n << 6 | d
    else:
        if len(data) < 4:
            raise GraphInputError("truncated graph6 size field")
        n, rest = 0, data[4:]
        for d in data[1:4]:
            n = n << 6 | d
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise GraphInputError(f"graph6 body has {len(rest)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if rest[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def parse_graphs(text: str, fmt: str = "edgelist") -> list[Graph]:
    """Every graph in ``text``: one graph6 string per line, or edge lists
    separated by blank lines."""
    if fmt == "graph6":
        return [parse_graph6(line) for line in text.splitlines() if line.strip()]
    if fmt != "edgelist":
        raise GraphInputError(f"unknown format {fmt!r}")
    blocks, cur = [], []
    for line in text.splitlines():
        if line.strip():
            cur.append(line)
        elif cur:
            blocks.append("\n".join(cur))
            cur = []
    if cur:
        blocks.append("\n".join(cur))
    return [parse_edgelist(b) for b in blocks]


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    graphs = parse_graphs(text, fmt)
    if len(graphs) != 1:
        raise GraphInputError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def format_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return format_edgelist(g)
    if fmt == "graph6":
        return format_graph6(g) + "\n"
    raise GraphInputError(f"unknown format {fmt!r}")


def parse_vertex_list(text: str) -> list[int]:
    out = []
    for lineno, parts in _lines(text):
        for tok in parts:
            try:
                out.append(int(tok))
            except ValueError:
                raise GraphInputError(f"line {lineno}: {tok!r} is not a vertex id") from None
    return out


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def write_graphs(graphs: Iterable[Graph], fmt: str = "edgelist") -> str:
    parts = [format_graph(g, fmt) for g in graphs]
    return ("\n" if fmt == "edgelist" else "").join(parts)
