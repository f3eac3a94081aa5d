"""Bit-indexed vertex set helpers. Vertex v is bit 1 << v of a Python int."""

from typing import Iterable, Iterator


def full_mask(n: int) -> int:
    """Mask containing every vertex of [0, n)."""
    return (1 << n) - 1


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the members of a vertex set in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    """Smallest member of a nonempty vertex set."""
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    """Cardinality of a vertex set."""
    return mask.bit_count()


def bits_from(vertices: Iterable[int]) -> int:
    """Pack vertices into a mask."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask
