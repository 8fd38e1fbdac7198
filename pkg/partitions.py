from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Any, Iterator, List, Sequence, Tuple

from errors import InputError
from kernel import delta_n, kfun_prod


@dataclass(frozen=True)
class Partition2:
    first: Tuple[Any, ...]
    second: Tuple[Any, ...]
    origin: Tuple[Any, ...]


def enum_partition_indices(n: int, sizes: Sequence[int]) -> Iterator[List[Tuple[int, ...]]]:
    if sum(sizes) != n or any(s < 0 for s in sizes):
        raise InputError(f"block sizes {list(sizes)} do not add up to {n}")
    yield from _index_blocks(tuple(range(n)), tuple(sizes))


def _index_blocks(pool: Tuple[int, ...], sizes: Tuple[int, ...]) -> Iterator[List[Tuple[int, ...]]]:
    if not sizes:
        yield []
        return
    head, rest = sizes[0], sizes[1:]
    for chosen in combinations(pool, head):
        taken = set(chosen)
        remaining = tuple(i for i in pool if i not in taken)
        for tail in _index_blocks(remaining, rest):
            yield [chosen] + tail


def enum_partitions(xs: Sequence[Any], sizes: Sequence[int]) -> Iterator[List[Tuple[Any, ...]]]:
    """Every split of xs into blocks of the given sizes; blocks keep the order of xs."""
    xs = tuple(xs)
    for blocks in enum_partition_indices(len(xs), sizes):
        yield [tuple(xs[i] for i in block) for block in blocks]


def enum_pair_partitions(xs: Sequence[Any], k: int) -> Iterator[Partition2]:
    xs = tuple(xs)
    if not 0 <= k <= len(xs):
        raise InputError(f"first block of size {k} out of range for {len(xs)} elements")
    for first, second in enum_partitions(xs, (k, len(xs) - k)):
        yield Partition2(first, second, xs)


def enum_all_pairs(xs: Sequence[Any]) -> Iterator[Partition2]:
    """Two-block partitions of every first-block size, smallest first."""
    for k in range(len(xs) + 1):
        yield from enum_pair_partitions(xs, k)


def multinomial(sizes: Sequence[int]) -> int:
    out = factorial(sum(sizes))
    for s in sizes:
        out //= factorial(s)
    return out


def partition_sign(p: Partition2, ctx: Any) -> Any:
    return (
        kfun_prod("g", p.second, p.first, ctx)
        * delta_n(p.first, ctx)
        * delta_n(p.second, ctx)
        / delta_n(p.origin, ctx)
    )


def permutation_parity(origin: Sequence[Any], first: Sequence[Any], second: Sequence[Any]) -> int:
    position = {x: i for i, x in enumerate(origin)}
    order = [position[x] for x in list(first) + list(second)]
    if sorted(order) != list(range(len(origin))):
        raise InputError("blocks do not partition the origin set")
    inversions = sum(1 for i in range(len(order)) for j in range(i + 1, len(order)) if order[i] > order[j])
    return -1 if inversions % 2 else 1


def parity_scalar(p: Partition2) -> Fraction:
    return Fraction(permutation_parity(p.origin, p.first, p.second))
