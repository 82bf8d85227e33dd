"""Brute-force counts of partitions into ordered blocks.

Set partitions of {0, ..., n+r-1} are generated as restricted growth strings.
Elements 0..r-1 are the distinguished ones. A partition with block sizes
s_1..s_b is counted with weight prod s_i!, the number of ways to linearly
order every block, instead of listing the orderings themselves.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

ORACLE_CAP = 10


def restricted_growth_strings(size: int) -> Iterator[list[int]]:
    """Yield every a[0..size-1] with a[0] = 0 and a[i] <= 1 + max(a[:i]).

    The same list object is mutated between yields; copy it to keep it.
    """
    if size == 0:
        yield []
        return
    a = [0] * size
    m = [0] * size  # m[i] = max(a[:i+1])
    while True:
        yield a
        i = size - 1
        while i > 0 and a[i] == m[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, size):
            a[j] = 0
            m[j] = m[i]


@dataclass(frozen=True)
class OrderedPartitionCount:
    n: int
    r: int
    counts_by_k: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts_by_k.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "counts_by_k": {str(k): self.counts_by_k[k] for k in sorted(self.counts_by_k)},
            "total": self.total,
        }


def enumerate_ordered_partitions(n: int, r: int) -> OrderedPartitionCount:
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    if n + r > ORACLE_CAP:
        raise ValueError(f"oracle cap exceeded: n + r = {n + r} > {ORACLE_CAP}")
    size = n + r
    counts: Counter[int] = Counter()
    for rgs in restricted_growth_strings(size):
        if len(set(rgs[:r])) < r:
            continue
        sizes = Counter(rgs)
        weight = 1
        for s in sizes.values():
            weight *= math.factorial(s)
        counts[len(sizes) - r] += weight
    return OrderedPartitionCount(n, r, dict(sorted(counts.items())))
