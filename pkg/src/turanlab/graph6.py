"""graph6 encoding and decoding for dense undirected graphs.

The format packs the upper triangle of the adjacency matrix column by column
((0,1), (0,2), (1,2), (0,3), ...) into 6-bit groups, each stored as one
printable ASCII character offset by 63. The leading character(s) encode n:
a single char for n <= 62, a '~' followed by three chars for larger n. One
graph per line in files. Graphs beyond 2**16 vertices are rejected to match
the dense representation cap.
"""

from __future__ import annotations

from turanlab.core import MAX_VERTICES, SimpleGraph

_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """graph6 parse failure; ``kind`` names the failure class."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def graph6_encode(g: SimpleGraph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr(((n >> 12) & 63) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    acc = 0
    nbits = 0
    for v in range(1, n):
        col = g.rows[v] & ((1 << v) - 1)
        for u in range(v):
            acc = (acc << 1) | ((col >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def graph6_decode(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("malformed-header", "empty graph6 string")
    vals = []
    for i, ch in enumerate(s):
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(
                "malformed-header" if i == 0 else "bad-character",
                f"character {ch!r} at position {i} outside graph6 range",
            )
        vals.append(o - 63)
    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
    else:
        if len(vals) >= 2 and vals[1] == 63:
            raise Graph6Error("too-large", "8-byte graph6 size form exceeds the supported range")
        if len(vals) < 4:
            raise Graph6Error("malformed-header", "truncated multi-character size field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
        if n > MAX_VERTICES:
            raise Graph6Error("too-large", f"n={n} exceeds the dense representation cap")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error("truncated", f"need {need} data characters for n={n}, got {len(body)}")
    if len(body) > need:
        raise Graph6Error("trailing-garbage", f"{len(body) - need} unexpected characters after graph data")
    g = SimpleGraph(n)
    idx = 0
    for v in range(1, n):
        for u in range(v):
            word = body[idx // 6]
            bit = (word >> (5 - idx % 6)) & 1
            if bit:
                g.add_edge(u, v)
            idx += 1
    if need:
        tail = body[-1] & ((1 << (need * 6 - nbits)) - 1)
        if tail:
            raise Graph6Error("trailing-garbage", "nonzero padding bits in final character")
    return g


def read_graph6_file(path) -> list[SimpleGraph]:
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                graphs.append(graph6_decode(line))
            except Graph6Error as exc:
                raise Graph6Error(exc.kind, f"{path}:{lineno}: {exc}") from exc
    return graphs


def write_graph6_file(path, graphs) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + "\n")
