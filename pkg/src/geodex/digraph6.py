"""digraph6 encoding: '&', the size N(n), then the n*n adjacency bits.

Bits are taken row by row, padded with zeros to a multiple of six and
written six at a time as ``chr(63 + value)``.
"""

from __future__ import annotations

from .digraph import Digraph

__all__ = ["Digraph6Error", "HEADER", "emit_digraph6", "parse_digraph6"]

HEADER = ">>digraph6<<"


class Digraph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_size(n: int) -> str:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"order {n} too large for digraph6")


def emit_digraph6(g: Digraph, header: bool = False) -> str:
    n = g.n
    bits = []
    for u in range(n):
        row = g.rows[u]
        bits.extend(row >> v & 1 for v in range(n))
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3 | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5]))
        for i in range(0, len(bits), 6)
    )
    return (HEADER if header else "") + "&" + _encode_size(n) + body


def _value(text: str, pos: int) -> int:
    c = ord(text[pos])
    if not 63 <= c <= 126:
        raise Digraph6Error(f"invalid character {text[pos]!r}", pos)
    return c - 63


def parse_digraph6(line: str) -> Digraph:
    """Parse one digraph6 line (trailing newline and header allowed)."""
    text = line.rstrip("\r\n")
    pos = 0
    if text.startswith(HEADER):
        pos = len(HEADER)
    if pos >= len(text) or text[pos] != "&":
        raise Digraph6Error("expected '&'", pos)
    pos += 1
    if pos >= len(text):
        raise Digraph6Error("missing order", pos)

    if text[pos] == "~":
        if pos + 1 < len(text) and text[pos + 1] == "~":
            start, width = pos + 2, 6
        else:
            start, width = pos + 1, 3
        if start + width > len(text):
            raise Digraph6Error("truncated order", len(text))
        n = 0
        for i in range(start, start + width):
            n = n << 6 | _value(text, i)
        pos = start + width
    else:
        n = _value(text, pos)
        pos += 1

    nbits = n * n
    nchars = -(-nbits // 6)
    if len(text) - pos != nchars:
        raise Digraph6Error(f"expected {nchars} adjacency characters for n={n}, found {len(text) - pos}",
                            min(len(text), pos + nchars))
    rows = [0] * n
    for ci in range(nchars):
        val = _value(text, pos + ci)
        for b in range(6):
            if not val >> (5 - b) & 1:
                continue
            idx = ci * 6 + b
            if idx >= nbits:
                raise Digraph6Error("nonzero padding bits", pos + ci)
            u, v = divmod(idx, n)
            if u == v:
                raise Digraph6Error(f"loop at vertex {u}", pos + ci)
            rows[u] |= 1 << v
    return Digraph(n, tuple(rows))
