"""Integer partitions, used as factorization types."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable

MAX_PARTITION_M = 30


@dataclass(frozen=True)
class Partition:
    """A partition of m as a non-increasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("a partition needs at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be non-increasing")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        return cls(tuple(sorted((int(p) for p in parts), reverse=True)))

    @property
    def m(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@functools.lru_cache(maxsize=None)
def partitions(m: int) -> tuple[Partition, ...]:
    """All partitions of m in reverse-lexicographic order: (m) first, (1,...,1) last."""
    if not 1 <= m <= MAX_PARTITION_M:
        raise ValueError(f"m must be in [1, {MAX_PARTITION_M}]")

    out: list[Partition] = []

    def descend(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            descend(remaining - part, part, prefix)
            prefix.pop()

    descend(m, m, [])
    return tuple(out)
