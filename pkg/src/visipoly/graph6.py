"""graph6 reading and writing for graphs of order at most 62."""

from __future__ import annotations

from typing import Iterator, TextIO

from .graph import Graph, GraphError

HEADER = ">>graph6<<"
MAX_ORDER = 62


class Graph6Error(GraphError):
    """Malformed graph6 text."""


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    # column-major over the upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    data = text.strip("\r\n")
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 record")
    for pos, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} at offset {pos} outside 63..126")
    n = ord(data[0]) - 63
    if n > MAX_ORDER:
        raise Graph6Error("multi-byte order encoding is not supported (n > 62)")
    if n == 0:
        raise Graph6Error("graph of order 0")
    num_bits = n * (n - 1) // 2
    expected = -(-num_bits // 6)
    payload = data[1:]
    if len(payload) != expected:
        raise Graph6Error(
            f"order {n} needs {expected} payload bytes, got {len(payload)}"
        )
    bits = 0
    for ch in payload:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = 6 * expected - num_bits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    edges = [
        pair
        for k, pair in enumerate(_pairs(n))
        if bits >> (num_bits - 1 - k) & 1
    ]
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_ORDER:
        raise Graph6Error(f"order {g.n} exceeds the supported maximum {MAX_ORDER}")
    out = [chr(63 + g.n)]
    chunk = nbits = 0
    for i, j in _pairs(g.n):
        chunk = (chunk << 1) | g.has_edge(i, j)
        nbits += 1
        if nbits == 6:
            out.append(chr(63 + chunk))
            chunk = nbits = 0
    if nbits:
        out.append(chr(63 + (chunk << (6 - nbits))))
    return "".join(out)


def read_graph6_lines(stream: TextIO) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, record)`` for each nonblank line (1-based numbering)."""
    for lineno, line in enumerate(stream, 1):
        record = line.strip()
        if record:
            yield lineno, record
