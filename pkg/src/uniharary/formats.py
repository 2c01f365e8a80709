"""graph6 and plain edge-list serialisation."""

from __future__ import annotations

from uniharary.graph import Graph, GraphError, build_graph

GRAPH6_MAX_N = 62


class FormatError(GraphError):
    pass


class Graph6CharError(FormatError):
    pass


class Graph6LengthError(FormatError):
    pass


class Graph6PaddingError(FormatError):
    pass


class EdgeListHeaderError(FormatError):
    pass


class EdgeCountError(FormatError):
    pass


def _upper_bits(g: Graph):
    # graph6 order: column-major over the upper triangle
    for j in range(1, g.n):
        for i in range(j):
            yield 1 if g.has_edge(i, j) else 0


def emit_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise FormatError(f"graph6 output supports n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = list(_upper_bits(g))
    bits += [0] * (-len(bits) % 6)
    chars = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return "".join(chars)


def parse_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6LengthError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6CharError(f"character {ch!r} outside graph6 range 63..126")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise Graph6LengthError(f"multi-byte graph6 header (n > {GRAPH6_MAX_N}) is not supported")
    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    body = s[1:]
    if len(body) != nchars:
        raise Graph6LengthError(f"graph6 for n={n} needs {nchars} data characters, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6PaddingError("non-zero padding bits in graph6 string")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines of ``"u v"`` (0-based ids)."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise EdgeListHeaderError("edge list must start with a 'n m' header line")
    try:
        n, m = (int(x) for x in rows[0])
    except ValueError:
        raise EdgeListHeaderError(f"bad edge list header: {' '.join(rows[0])!r}") from None
    if n < 0 or m < 0:
        raise EdgeListHeaderError("edge list header values must be non-negative")
    body = rows[1:]
    if len(body) != m:
        raise EdgeCountError(f"header declares {m} edges, found {len(body)}")
    edges = []
    for row in body:
        if len(row) != 2:
            raise FormatError(f"edge line must have two ids: {' '.join(row)!r}")
        try:
            edges.append((int(row[0]), int(row[1])))
        except ValueError:
            raise FormatError(f"non-integer vertex id in {' '.join(row)!r}") from None
    return build_graph(n, edges)


def looks_like_edge_list(text: str) -> bool:
    for line in text.splitlines():
        if line.strip():
            parts = line.split()
            return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)
    return False


def parse_graphs(text: str, fmt: str | None = None) -> list[Graph]:
    """Parse one edge list, or one graph6 string per non-empty line.

    ``fmt`` of ``None`` sniffs the format from the first non-empty line.
    """
    if fmt is None:
        fmt = "edgelist" if looks_like_edge_list(text) else "graph6"
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    if fmt == "graph6":
        graphs = [parse_graph6(line) for line in text.splitlines() if line.strip()]
        if not graphs:
            raise Graph6LengthError("no graph6 strings in input")
        return graphs
    raise FormatError(f"unknown graph format {fmt!r}")
