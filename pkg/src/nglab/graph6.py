"""graph6 encoding (the nauty/McKay printable format)."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .errors import Graph6Error
from .graph import Graph, pair_count

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_n(data: list[int]) -> tuple[int, int]:
    """Return (n, number of header bytes consumed)."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 63:
        return data[0], 1
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size header")
        n = 0
        for d in data[2:8]:
            n = n << 6 | d
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte size header")
    return data[1] << 12 | data[2] << 6 | data[3], 4


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    data = []
    for ch in s:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126")
        data.append(code - 63)
    n, pos = _decode_n(data)
    total = pair_count(n)
    need = (total + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"graph6 body too short for n={n}: {len(body)} < {need} bytes")
    if len(body) > need:
        raise Graph6Error(f"trailing garbage after graph6 body ({len(body) - need} extra bytes)")
    if n > 64:
        raise Graph6Error(f"n={n} exceeds the 64-vertex limit")
    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return Graph(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    bits = []
    for v in range(1, g.n):
        row = g.adj[v]
        bits.extend(row >> u & 1 for u in range(v))
    bits.extend([0] * (-len(bits) % 6))
    chunks = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        chunks.append(chr(val + 63))
    return _encode_n(g.n) + "".join(chunks)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one graph per line, skipping blanks and bare ``>>graph6<<`` headers."""
    for line in lines:
        line = line.strip()
        if not line or line == HEADER:
            continue
        yield parse_graph6(line)


def read_graph6_file(path: str | Path) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return list(read_graph6_lines(fh))


def write_graph6_file(path: str | Path, graphs: Iterable[Graph], header: bool = False) -> None:
    with open(path, "w", encoding="ascii") as fh:
        if header:
            fh.write(HEADER)
        for g in graphs:
            fh.write(emit_graph6(g) + "\n")

