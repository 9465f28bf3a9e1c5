"""graph6 and DOT.

graph6 follows the nauty format description: a size prefix N(n), then the
upper triangle of the adjacency matrix in column order (x(0,1), x(0,2),
x(1,2), x(0,3), ...), six bits per printable byte offset by 63.
"""
from __future__ import annotations

from .errors import InputError
from .graph import Graph
from .labels import Original, Subdiv, Apex

HEADER = ">>graph6<<"


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise InputError("negative graph order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise InputError("graph too large for graph6")


def _decode_size(data: bytes):
    if not data:
        raise InputError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        chunk, offset = data[2:8], 8
    else:
        chunk, offset = data[1:4], 4
    if len(chunk) != (6 if offset == 8 else 3):
        raise InputError("truncated graph6 size prefix")
    n = 0
    for byte in chunk:
        n = (n << 6) | (byte - 63)
    return n, offset


def to_graph6(G: Graph, header: bool = False) -> str:
    """Encode ``G`` using its sorted vertex order."""
    index = G.index
    n = G.n
    bits = []
    for j in range(1, n):
        vj = G.vertices[j]
        nb = {index[w] for w in G.neighbors(vj)}
        bits.extend(1 if i in nb else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = bytearray(_encode_size(n))
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        body.append(value + 63)
    text = body.decode("ascii")
    return HEADER + text if header else text


def from_graph6(text, labels=None) -> Graph:
    """Decode a graph6 string; vertices become ``Original(0..n-1)`` unless
    ``labels`` (one per position) is given."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    text = text.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    data = text.encode("ascii")
    if any(b < 63 or b > 126 for b in data):
        raise InputError("graph6 data contains bytes outside 63..126")
    n, offset = _decode_size(data)
    need = (n * (n - 1) // 2 + 5) // 6
    payload = data[offset:]
    if len(payload) != need:
        raise InputError(f"graph6 body has {len(payload)} bytes, expected {need}")
    vertices = list(labels) if labels is not None else [Original(i) for i in range(n)]
    if len(vertices) != n:
        raise InputError(f"{len(vertices)} labels given for a graph of order {n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((vertices[i], vertices[j]))
            k += 1
    return Graph(vertices, edges)


def read_graph6_file(path) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        lines = [line.strip() for line in fh if line.strip()]
    if len(lines) != 1:
        raise InputError(f"{path}: expected exactly one graph6 line, found {len(lines)}")
    return from_graph6(lines[0])


_PALETTE = ["#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3",
            "#937860", "#da8bc3", "#8c8c8c", "#ccb974", "#64b5cd"]


def to_dot(G: Graph, colors=None, name: str = "G") -> str:
    """DOT text.  ``colors`` maps a vertex to a list of part indices; a vertex
    in several parts gets a striped fill.  Subdivision vertices are squares,
    apex vertices double circles."""
    colors = colors or {}
    lines = [f"graph {name} {{", "  node [style=filled, fillcolor=white];"]
    for v in G.vertices:
        attrs = [f'label="{v}"']
        if isinstance(v, Subdiv):
            attrs.append("shape=square")
        elif isinstance(v, Apex):
            attrs.append("shape=doublecircle")
        else:
            attrs.append("shape=circle")
        parts = colors.get(v, ())
        if len(parts) == 1:
            attrs.append(f'fillcolor="{_PALETTE[parts[0] % len(_PALETTE)]}"')
        elif len(parts) > 1:
            stripes = ":".join(_PALETTE[p % len(_PALETTE)] for p in parts)
            attrs.append(f'style="striped", fillcolor="{stripes}"')
        lines.append(f'  "{v}" [{", ".join(attrs)}];')
    for u, v in G.edges:
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
