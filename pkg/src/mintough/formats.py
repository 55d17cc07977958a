"""Edge-list text, graph6 and DOT."""
from __future__ import annotations

from mintough.errors import ParseError
from mintough.graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines, with an optional leading ``n <count>`` line.

    Blank lines and ``#`` comments are skipped.  Without ``n`` the vertex
    count is one more than the largest id seen.
    """
    declared = None
    edges: list[tuple[int, int]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if seen_content:
                raise ParseError("'n' line must come first", lineno)
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError(f"malformed vertex count {line!r}", lineno)
            declared = int(tokens[1])
            seen_content = True
            continue
        seen_content = True
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise ParseError(f"expected two nonnegative integers, got {line!r}", lineno)
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if declared is not None and max(u, v) >= declared:
            raise ParseError(f"vertex id {max(u, v)} >= n = {declared}", lineno)
        edges.append((u, v))
    n = declared if declared is not None else 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)


def emit_edge_list(G: Graph) -> str:
    lines = [f"n {G.n}"] + [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n < 258048:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d < 64 for d in data):
        raise ParseError("graph6 byte outside 63..126")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    else:
        raise ParseError("truncated graph6 vertex count")
    nbits = n * (n - 1) // 2
    if len(data) - pos != (nbits + 5) // 6:
        raise ParseError(f"graph6 length mismatch for n={n}")
    if nbits % 6 and data[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("nonzero graph6 padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            d = data[pos + k // 6]
            if (d >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def emit_graph6(G: Graph) -> str:
    """Headerless graph6; bit ``k`` follows the column-major upper triangle."""
    bits = []
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            bits.append(1 if i in row else 0)
    bits.extend([0] * (-len(bits) % 6))
    out = [_encode_n(G.n)]
    for k in range(0, len(bits), 6):
        d = 0
        for b in bits[k:k + 6]:
            d = (d << 1) | b
        out.append(chr(63 + d))
    return "".join(out)


def graph6_from_edge_mask(n: int, emask: int) -> str:
    """graph6 of the labelled graph whose pair bits (graph6 order) are ``emask``."""
    nbits = n * (n - 1) // 2
    out = [_encode_n(n)]
    for k in range(0, nbits, 6):
        d = 0
        for b in range(k, k + 6):
            d = (d << 1) | ((emask >> b) & 1 if b < nbits else 0)
        out.append(chr(63 + d))
    return "".join(out)


def to_dot(G: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(G.n)]
    lines += [f"  {u} -- {v};" for u, v in G.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(text: str, fmt: str) -> Graph:
    """``fmt`` is ``edges`` or ``graph6``; graph6 input takes the first nonblank line."""
    if fmt == "graph6":
        for line in text.splitlines():
            if line.strip():
                return parse_graph6(line)
        raise ParseError("no graph6 line in input")
    if fmt == "edges":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}")
