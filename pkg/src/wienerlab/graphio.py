"""Graph interchange: a plain edge-list text format and graph6 strings.

Edge-list format: first non-comment line is ``n m``, followed by ``m``
lines ``u v`` with 0-based vertex ids; ``#`` starts a comment.  graph6 is
the printable-ASCII upper-triangle encoding used by the usual graph
enumeration tools, supported up to the package's 64-vertex cap.
"""

from __future__ import annotations

from .graphs import Graph

GRAPH6_HEADER = ">>graph6<<"


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"expected header 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(rows) - 1}")
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)


def _g6_size_bytes(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    # 63..258047: '~' then 18 bits across three bytes
    return [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 string (no trailing newline, no header)."""
    n = g.n
    out = _g6_size_bytes(n)
    bits = []
    for j in range(n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        out.append(value + 63)
    return "".join(chr(c) for c in out)


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string; an optional >>graph6<< header is accepted."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    data = [ord(c) - 63 for c in s]
    if not data:
        raise ValueError("empty graph6 input")
    if any(b < 0 or b > 63 for b in data):
        raise ValueError("graph6 characters must be in chr(63)..chr(126)")
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    else:
        if len(data) < 4 or data[1] == 63:
            raise ValueError("unsupported or truncated graph6 size field")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    if n < 1:
        raise ValueError("graph6 with zero vertices is not supported here")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for value in body:
        for shift in range(5, -1, -1):
            bits.append(value >> shift & 1)
    edges = []
    k = 0
    for j in range(n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[npairs:]):
        raise ValueError("nonzero padding bits in graph6 body")
    return Graph.from_edges(n, edges)
