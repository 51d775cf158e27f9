"""graph6 encoding and decoding.

Format: optional ">>graph6<<" header, a 6-bit size field (one byte n + 63 for
n <= 62, or 0x7E plus three bytes for n <= 258047), then the upper triangle of
the adjacency matrix column by column, packed big-endian into 6-bit groups,
each offset by 63 into the printable range.
"""

from __future__ import annotations

from .errors import Graph6Error
from .spectra import Graph

HEADER = ">>graph6<<"


def _triangle_bits(g: Graph) -> list[int]:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    return bits


def encode(g: Graph) -> str:
    """graph6 string for a graph (no header)."""
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise ValueError("graph too large for this encoder")
    bits = _triangle_bits(g)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i : i + 6]:
            group = group << 1 | b
        out.append(group + 63)
    return "".join(chr(b) for b in out)


def decode(text: str | bytes) -> Graph:
    """Parse one graph6 line; raises Graph6Error with the offending offset."""
    if isinstance(text, bytes):
        raw = text.decode("ascii", errors="surrogateescape")
    else:
        raw = text
    raw = raw.rstrip("\r\n")
    base = 0
    if raw.startswith(HEADER):
        raw = raw[len(HEADER) :]
        base = len(HEADER)
    if not raw:
        raise Graph6Error("empty graph6 string", base)
    codes = []
    for i, ch in enumerate(raw):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside graph6 range", base + i)
        codes.append(c - 63)
    pos = 0
    if codes[0] == 63:  # 0x7E marker: extended size field
        if len(codes) >= 4 and codes[1] != 63:
            n = codes[1] << 12 | codes[2] << 6 | codes[3]
            pos = 4
        else:
            raise Graph6Error("unsupported or truncated size field", base)
    else:
        n = codes[0]
        pos = 1
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    if len(codes) - pos < need_bytes:
        raise Graph6Error(
            f"need {need_bytes} data bytes for n={n}, have {len(codes) - pos}",
            base + len(raw),
        )
    if len(codes) - pos > need_bytes:
        raise Graph6Error("trailing bytes after graph data", base + pos + need_bytes)
    bits = []
    for c in codes[pos:]:
        for shift in range(5, -1, -1):
            bits.append(c >> shift & 1)
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    for extra in range(idx, len(bits)):
        if bits[extra]:
            raise Graph6Error("nonzero padding bits", base + pos + extra // 6)
    return Graph(n, tuple(rows))
