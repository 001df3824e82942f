"""graph6 text serialization (header-free variant, bit-exact).

Encoding: N(n) followed by the upper-triangle adjacency bits in column order
x(0,1) x(0,2) x(1,2) x(0,3) ..., packed big-endian into 6-bit groups, each
offset by 63.  N(n) is chr(n+63) for n <= 62 and '~' plus three 6-bit groups
for larger n (we never need the 8-byte form below 64 vertices).
"""

from __future__ import annotations

from .graphs import Graph


class Graph6Error(ValueError):
    pass


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12 & 63) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    bits = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits = (bits << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = nbits = 0
    if nbits:
        out.append(chr((bits << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = []
    for ch in s:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}")
        vals.append(o - 63)
    if vals[0] < 63:
        n = vals[0]
        data = vals[1:]
    else:
        if len(vals) < 4 or vals[1] == 63:
            raise Graph6Error("unsupported or truncated graph6 size prefix")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        data = vals[4:]
    if n > 64:
        raise Graph6Error(f"{n} vertices exceed the 64-vertex limit")
    nbits = n * (n - 1) // 2
    if len(data) != (nbits + 5) // 6:
        raise Graph6Error(f"graph6 body has {len(data)} groups, expected {(nbits + 5) // 6}")
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            group, off = divmod(idx, 6)
            if data[group] >> (5 - off) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    if data and nbits % 6:
        tail = data[-1] & ((1 << (6 - nbits % 6)) - 1)
        if tail:
            raise Graph6Error("nonzero padding bits in graph6 body")
    return Graph(n, adj)
