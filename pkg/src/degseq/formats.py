"""graph6, edge-list and DOT text formats."""

from __future__ import annotations

from .graph_core import Graph, GraphError, build_graph

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Malformed serialized graph."""


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Standard graph6 encoding (no header, no newline)."""
    bits = []
    masks = g.masks
    for j in range(1, g.order):
        row = masks[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        body.append(chr(v + 63))
    return _encode_size(g.order) + "".join(body)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise FormatError("graph6 characters must lie in '?'..'~'")
    vals = [ord(c) - 63 for c in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) > 1 and vals[1] == 63:
        if len(vals) < 8:
            raise FormatError("truncated graph6 size field")
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise FormatError("truncated graph6 size field")
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v
    nbits = n * (n - 1) // 2
    body = vals[pos:]
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise FormatError("nonzero graph6 padding bits")
    return build_graph(n, edges)


def to_edgelist(g: Graph) -> str:
    lines = [str(g.order)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("empty edge list")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise FormatError(f"malformed edge list: {exc}") from None
    if n < 0:
        raise FormatError("negative vertex count")
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def to_dot(g: Graph, degrees: bool = False, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for v in range(g.order):
        if degrees:
            out.append(f'  {v} [label="{v} (deg {g.degrees[v]})"];')
        else:
            out.append(f'  {v} [label="{v}"];')
    out.extend(f"  {u} -- {v};" for u, v in g.edges())
    out.append("}")
    return "\n".join(out) + "\n"


def sniff_format(text: str) -> str:
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    if first.startswith(GRAPH6_HEADER):
        return "graph6"
    return "edgelist" if first.split("#", 1)[0].strip().isdigit() else "graph6"


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = sniff_format(text)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise FormatError(f"expected one graph6 line, got {len(lines)}")
        return from_graph6(lines[0])
    if fmt == "edgelist":
        return from_edgelist(text)
    raise FormatError(f"unknown input format {fmt!r}")


def emit_graph(g: Graph, fmt: str = "graph6", degrees: bool = False) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "dot":
        return to_dot(g, degrees=degrees)
    raise FormatError(f"unknown output format {fmt!r}")
