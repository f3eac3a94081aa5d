"""graph6 encoder and decoder."""

import logging
from functools import lru_cache
from typing import Tuple

from shared.exceptions import ParseError
from shared.settings import get_settings
from shared.validators import validate_vertex_count

from .models import Graph

logger = logging.getLogger(__name__)

# Printable range used by graph6: every byte is a 6-bit group plus 63
BYTE_OFFSET = 63
BYTE_MAX = 126
GROUP_BITS = 6

# Sizes up to this value use the single-byte form
SHORT_SIZE_MAX = 62
# Sizes up to this value use the 4-byte form '~' + 18 bits
MEDIUM_SIZE_MAX = 258047


@lru_cache(maxsize=None)
def upper_triangle_pairs(n: int) -> Tuple[Tuple[int, int], ...]:
    """
    Vertex pairs in graph6 bit order: x(0,1), x(0,2), x(1,2), x(0,3), ...

    Args:
        n: Vertex count

    Returns:
        Pairs (i, j) with i < j, column-major over the upper triangle
    """
    return tuple((i, j) for j in range(1, n) for i in range(j))


def encode_graph6(g: Graph) -> str:
    """
    Encode a graph as canonical graph6 (shortest size form, zero padding).

    Args:
        g: Graph to encode

    Returns:
        graph6 string without header or newline

    Raises:
        VertexLimitError: If g.n exceeds the configured cap
    """
    n = validate_vertex_count(g.n, get_settings().max_vertices)

    value = 0
    nbits = 0
    for i, j in upper_triangle_pairs(n):
        value = value << 1 | (g.adj[i] >> j & 1)
        nbits += 1

    nbytes = -(-nbits // GROUP_BITS)
    value <<= nbytes * GROUP_BITS - nbits

    groups = [
        value >> (GROUP_BITS * (nbytes - 1 - k)) & 0x3F
        for k in range(nbytes)
    ]
    return _encode_size(n) + "".join(chr(group + BYTE_OFFSET) for group in groups)


def parse_graph6(line: str) -> Graph:
    """
    Decode a graph6 string.

    Args:
        line: graph6 string without header or trailing newline

    Returns:
        The decoded graph

    Raises:
        ParseError: If the string is malformed (offset of the bad byte is reported)
        VertexLimitError: If the encoded vertex count exceeds the configured cap
    """
    if not line:
        raise ParseError("Empty graph6 string", offset=0)

    for offset, char in enumerate(line):
        if not BYTE_OFFSET <= ord(char) <= BYTE_MAX:
            raise ParseError(f"Byte {char!r} outside the graph6 range", offset=offset)

    n, pos = _decode_size(line)
    validate_vertex_count(n, get_settings().max_vertices)

    pairs = upper_triangle_pairs(n)
    nbits = len(pairs)
    nbytes = -(-nbits // GROUP_BITS)
    body = line[pos:]

    if len(body) < nbytes:
        raise ParseError(
            f"Truncated edge data: {n} vertices need {nbytes} bytes, found {len(body)}",
            offset=len(line),
        )
    if len(body) > nbytes:
        raise ParseError("Trailing garbage after edge data", offset=pos + nbytes)

    value = 0
    for char in body:
        value = value << GROUP_BITS | (ord(char) - BYTE_OFFSET)

    padding = nbytes * GROUP_BITS - nbits
    if value & ((1 << padding) - 1):
        raise ParseError("Non-canonical padding bits set", offset=len(line) - 1)
    value >>= padding

    adj = [0] * n
    for k, (i, j) in enumerate(pairs):
        if value >> (nbits - 1 - k) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i

    return Graph.trusted(n, adj)


def _encode_size(n: int) -> str:
    """Size field for n vertices."""
    if n <= SHORT_SIZE_MAX:
        return chr(n + BYTE_OFFSET)
    if n <= MEDIUM_SIZE_MAX:
        return "~" + _groups(n, 3)
    return "~~" + _groups(n, 6)


def _groups(value: int, count: int) -> str:
    """Big-endian 6-bit groups of value as printable bytes."""
    return "".join(
        chr((value >> (GROUP_BITS * (count - 1 - k)) & 0x3F) + BYTE_OFFSET)
        for k in range(count)
    )


def _decode_size(line: str) -> Tuple[int, int]:
    """Return (n, offset of the first edge byte)."""
    first = ord(line[0]) - BYTE_OFFSET
    if first <= SHORT_SIZE_MAX:
        return first, 1

    if len(line) > 1 and line[1] == "~":
        width, start = 6, 2
    else:
        width, start = 3, 1

    if len(line) < start + width:
        raise ParseError("Truncated size field", offset=len(line))

    n = 0
    for char in line[start:start + width]:
        n = n << GROUP_BITS | (ord(char) - BYTE_OFFSET)
    if n <= (SHORT_SIZE_MAX if width == 3 else MEDIUM_SIZE_MAX):
        raise ParseError("Non-canonical size field", offset=0)
    return n, start + width
