"""Small multiset combinatorics helpers (multidegrees are multisets)."""

from __future__ import annotations

import itertools
from typing import Iterator, Mapping


def md_from_list(mults) -> dict[int, int]:
    """Multidegree from a multiplicity list for x1..xk (zeros dropped)."""
    return {i + 1: m for i, m in enumerate(mults) if m}


def md_total(md: Mapping[int, int]) -> int:
    return sum(md.values())


def md_sub(md: Mapping[int, int], part: Mapping[int, int]) -> dict[int, int]:
    out = {}
    for g, m in md.items():
        r = m - part.get(g, 0)
        if r < 0:
            raise ValueError("not a sub-multiset")
        if r:
            out[g] = r
    return out


def sub_multisets(md: Mapping[int, int]) -> Iterator[dict[int, int]]:
    """All sub-multisets of md (including the empty one)."""
    gens = sorted(md)
    ranges = [range(md[g] + 1) for g in gens]
    for counts in itertools.product(*ranges):
        yield {g: c for g, c in zip(gens, counts) if c}


def ordered_partitions(md: Mapping[int, int], nblocks: int,
                       allow_empty_rest: bool = True) -> Iterator[tuple[list[dict[int, int]], dict[int, int]]]:
    """Split md into ``nblocks`` nonempty labeled sub-multisets plus a rest.

    Yields (blocks, rest); rest may be empty.
    """
    def rec(remaining: dict[int, int], k: int):
        if k == 0:
            yield [], dict(remaining)
            return
        for block in sub_multisets(remaining):
            if not block:
                continue
            if md_total(remaining) - md_total(block) < k - 1:
                continue
            rest0 = md_sub(remaining, block)
            for blocks, rest in rec(rest0, k - 1):
                yield [block] + blocks, rest

    yield from rec(dict(md), nblocks)


def distinct_permutations(items) -> Iterator[tuple]:
    """Distinct permutations of a multiset, in sorted order."""
    yield from sorted(set(itertools.permutations(items)))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of n, parts weakly decreasing."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest
