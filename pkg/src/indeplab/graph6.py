"""graph6 codec, short form only (n <= 62).

Layout: one length byte ``chr(63 + n)`` followed by the upper-triangle
adjacency bits in column order ((0,1), (0,2), (1,2), (0,3), ...), packed
big-endian into 6-bit groups, each offset by 63.  Unused padding bits in
the final group must be zero.
"""

from __future__ import annotations

from .errors import GraphInputError
from .graph import Graph

_HEADER = ">>graph6<<"


def encode_graph6(G: Graph) -> str:
    if G.n > 62:
        raise GraphInputError(
            f"short-form graph6 supports at most 62 vertices, got {G.n}")
    out = [chr(63 + G.n)]
    group = 0
    nbits = 0
    for v in range(1, G.n):
        col = G.adj[v]
        for u in range(v):
            group = group << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + group))
                group = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (group << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; raises GraphInputError with a byte offset."""
    line = text.strip()
    if line.startswith(_HEADER):
        line = line[len(_HEADER):]
    if not line:
        raise GraphInputError("empty graph6 line", offset=0)
    first = ord(line[0])
    if first == 126:
        raise GraphInputError(
            "long-form graph6 (n > 62) is not supported", offset=0)
    if not 63 <= first <= 125:
        raise GraphInputError(
            f"invalid graph6 length byte {line[0]!r}", offset=0)
    n = first - 63
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    if len(line) != 1 + ngroups:
        if len(line) > 1 + ngroups:
            raise GraphInputError(
                f"trailing garbage after graph6 payload for n={n}",
                offset=1 + ngroups)
        raise GraphInputError(
            f"truncated graph6 line: expected {ngroups} payload bytes for "
            f"n={n}, got {len(line) - 1}", offset=len(line))
    bits = 0
    for i, ch in enumerate(line[1:]):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise GraphInputError(
                f"invalid graph6 payload byte {ch!r}", offset=1 + i)
        bits = bits << 6 | (code - 63)
    pad = ngroups * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise GraphInputError(
            "nonzero padding bits in final graph6 byte", offset=len(line) - 1)
    bits >>= pad
    adj = [0] * n
    pos = nbits
    for v in range(1, n):
        for u in range(v):
            pos -= 1
            if bits >> pos & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))
