"""graph6 codec and the ``i : [j, k, ...]`` adjacency-list notation.

graph6 layout: a size prefix N(n), then the upper triangle of the adjacency
matrix read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
six bits per byte, each byte offset by 63.
"""

from __future__ import annotations

import re

from .graphs import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _size_prefix(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 2**36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise Graph6Error("graph too large for graph6")


def _read_size(data: list[int]) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 63:
        return data[0], 1
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6Error("truncated size field")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated size field")
    n = 0
    for x in data[1:4]:
        n = (n << 6) | x
    return n, 4


def encode_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6))
    return _size_prefix(g.n) + body


def decode_graph6(s: str, strict: bool = True) -> Graph:
    """Decode one graph6 string.

    Surrounding whitespace and an optional ``>>graph6<<`` header are
    stripped.  With ``strict`` the padding bits after the last adjacency bit
    must be zero.
    """
    s = s.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    data = []
    for pos, ch in enumerate(s):
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(f"bad character {ch!r} at position {pos}")
        data.append(o - 63)
    n, start = _read_size(data)
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    payload = data[start:]
    if len(payload) < need:
        raise Graph6Error(f"truncated payload: need {need} bytes, got {len(payload)}")
    if len(payload) > need:
        raise Graph6Error(f"{len(payload) - need} trailing bytes after payload")
    stream = []
    for x in payload:
        stream.extend((x >> (5 - b)) & 1 for b in range(6))
    if strict and any(stream[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if stream[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


_ENTRY = re.compile(r"(\d+)\s*:\s*\[([^\]]*)\]")


def parse_adjacency_list(text: str, n: int | None = None) -> Graph:
    """Parse ``0 : [2, 3, 5], 1 : [3, 4], ...`` where each pair appears once with ``i < j``.

    ``n`` defaults to one more than the largest label mentioned.  Braces
    around the whole list are allowed.
    """
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    edges = []
    top = -1
    pos = 0
    for m in _ENTRY.finditer(body):
        gap = body[pos:m.start()].strip().strip(",").strip()
        if gap:
            raise ValueError(f"malformed adjacency entry near {gap!r}")
        pos = m.end()
        i = int(m.group(1))
        top = max(top, i)
        items = [t.strip() for t in m.group(2).split(",") if t.strip()]
        for t in items:
            if not t.isdigit():
                raise ValueError(f"malformed neighbour {t!r} in entry {i}")
            j = int(t)
            if j <= i:
                raise ValueError(f"entry {i} lists {j}; neighbours must exceed the entry label")
            top = max(top, j)
            edges.append((i, j))
    if body[pos:].strip().strip(","):
        raise ValueError(f"malformed adjacency entry near {body[pos:].strip()!r}")
    size = top + 1 if n is None else n
    if top >= size:
        raise ValueError(f"vertex {top} out of range for n={size}")
    return Graph(size, edges)


def format_adjacency_list(g: Graph) -> str:
    """Non-redundant adjacency list, skipping vertices with no higher neighbour."""
    parts = []
    for i in range(g.n):
        higher = sorted(j for j in g.adj[i] if j > i)
        if higher:
            parts.append(f"{i} : [{', '.join(map(str, higher))}]")
    return ", ".join(parts)
