"""graph6 and edge-list text formats."""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .errors import GraphError
from .graph import MAX_N, Graph

HEADER = b">>graph6<<"


def _as_bytes(text: bytes | str) -> bytes:
    if isinstance(text, str):
        text = text.encode("ascii", errors="strict")
    return text.strip()


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 line (header optional).

    >>> parse_graph6("Bw").edges()
    [(0, 1), (0, 2), (1, 2)]
    """
    data = _as_bytes(text)
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise GraphError("empty graph6 line")
    if any(b < 63 or b > 126 for b in data):
        raise GraphError("graph6 byte outside 63..126")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise GraphError(f"graph6 8-byte size field: n exceeds the {MAX_N}-vertex cap")
        if len(data) < 4:
            raise GraphError("truncated graph6 size field")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_N:
        raise GraphError(f"n={n} exceeds the {MAX_N}-vertex cap")
    if n == 0:
        raise GraphError("graph6 encodes an empty graph")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    stream = 0
    for b in body:
        stream = (stream << 6) | (b - 63)
    total = 6 * len(body)
    if stream & ((1 << (total - nbits)) - 1):
        raise GraphError("graph6 padding bits are not zero")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if stream >> (total - 1 - k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)


def emit_graph6(g: Graph, header: bool = False) -> str:
    if g.large:
        raise GraphError("graph6 output is limited to the vertex cap")
    n = g.n
    if n <= 62:
        out = [n + 63]
    else:
        out = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    stream = []
    for j in range(1, n):
        for i in range(j):
            stream.append(g.adj[i] >> j & 1)
    stream += [0] * (-len(stream) % 6)
    for k in range(0, len(stream), 6):
        val = 0
        for bit in stream[k:k + 6]:
            val = (val << 1) | bit
        out.append(val + 63)
    text = bytes(out).decode("ascii")
    return (HEADER.decode() + text) if header else text


def parse_edge_list(text: str, *, allow_large: bool = False) -> Graph:
    """``n`` on the first line, then one ``u v`` pair per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge list")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    return Graph.from_edges(n, edges, allow_large=allow_large)


def emit_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def read_graph6_lines(stream: IO[str] | Iterable[str]) -> Iterator[tuple[int, str, Graph | GraphError]]:
    """Yield ``(line_number, text, graph_or_error)`` for each non-blank line.

    Malformed lines yield the :class:`GraphError` instead of raising, so a
    corpus scan can record them and keep going.
    """
    for lineno, raw in enumerate(stream, start=1):
        text = raw.strip()
        if text.startswith(HEADER.decode()):
            text = text[len(HEADER):]
        if not text:
            continue
        try:
            yield lineno, text, parse_graph6(text)
        except GraphError as exc:
            yield lineno, text, exc


def read_graph(text: str) -> Graph:
    """Parse a single graph given either as graph6 or as an edge list."""
    stripped = text.strip()
    first = stripped.splitlines()[0].strip() if stripped else ""
    if "\n" in stripped or first.isdigit():
        return parse_edge_list(stripped)
    return parse_graph6(stripped)
