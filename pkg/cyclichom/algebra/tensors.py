"""Lexicographic bases of tensor powers: leftmost factor most significant."""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence, Tuple


def encode_index(indices: Sequence[int], dim: int) -> int:
    flat = 0
    for i in indices:
        if not 0 <= i < dim:
            raise IndexError(f"basis index {i} outside 0..{dim - 1}")
        flat = flat * dim + i
    return flat


def decode_index(flat: int, dim: int, arity: int) -> Tuple[int, ...]:
    if not 0 <= flat < dim ** arity:
        raise IndexError(f"flat index {flat} outside a space of dimension {dim ** arity}")
    out = [0] * arity
    for pos in range(arity - 1, -1, -1):
        flat, out[pos] = divmod(flat, dim)
    return tuple(out)


def basis_tuples(dim: int, arity: int) -> Iterator[Tuple[int, ...]]:
    """All index tuples in flat-index order."""
    return itertools.product(range(dim), repeat=arity)
