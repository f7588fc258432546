"""Colored perfect matchings on [2n] and their crossing/nesting numbers."""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Iterable, Iterator

Arc = tuple[int, int, int]  # (opener, closer, color)


@dataclass(frozen=True)
class ColoredMatching:
    n: int
    m: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        arcs = tuple(sorted((min(i, j), max(i, j), c) for i, j, c in self.arcs))
        object.__setattr__(self, "arcs", arcs)
        ends = sorted(v for i, j, _ in arcs for v in (i, j))
        if ends != list(range(1, 2 * self.n + 1)):
            raise ValueError(f"arcs do not partition [1..{2 * self.n}]")
        if any(not 1 <= c <= self.m for _, _, c in arcs):
            raise ValueError(f"colors must lie in 1..{self.m}")

    @classmethod
    def from_arcs(cls, arcs: Iterable[Arc], m: int) -> "ColoredMatching":
        arcs = tuple(arcs)
        return cls(len(arcs), m, arcs)

    def color_class(self, color: int) -> list[tuple[int, int]]:
        return [(i, j) for i, j, c in self.arcs if c == color]

    def partner(self, v: int) -> tuple[int, int]:
        """(other endpoint, color) of the arc through v."""
        for i, j, c in self.arcs:
            if v == i:
                return j, c
            if v == j:
                return i, c
        raise KeyError(v)


def _longest_increasing(seq: list[int]) -> int:
    tails: list[int] = []
    for x in seq:
        k = bisect.bisect_left(tails, x)
        if k == len(tails):
            tails.append(x)
        else:
            tails[k] = x
    return len(tails)


def _max_crossing(arcs: list[tuple[int, int]]) -> int:
    # pairwise-crossing arcs all straddle the gap just after their last
    # opener; among arcs straddling a fixed gap, crossing = increasing closers
    best = 0
    for i, _ in arcs:
        spanning = sorted(a for a in arcs if a[0] <= i < a[1])
        best = max(best, _longest_increasing([j for _, j in spanning]))
    return best


def _max_nesting(arcs: list[tuple[int, int]]) -> int:
    return _longest_increasing([-j for _, j in sorted(arcs)])


def crossing_number(M: ColoredMatching) -> int:
    return max((_max_crossing(M.color_class(c)) for c in range(1, M.m + 1)), default=0)


def nesting_number(M: ColoredMatching) -> int:
    return max((_max_nesting(M.color_class(c)) for c in range(1, M.m + 1)), default=0)


def is_noncrossing(M: ColoredMatching) -> bool:
    """No two arcs of the same color cross."""
    return crossing_number(M) <= 1


def enumerate_matchings(n: int, m: int, first_partner: int | None = None) -> Iterator[ColoredMatching]:
    """Stream all (2n-1)!! * m**n colored matchings on [2n].

    Order is lexicographic in (smallest open vertex, its partner, color).
    ``first_partner`` restricts to the shard where vertex 1 pairs with it.
    """
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")

    def extend(free: tuple[int, ...], arcs: tuple[Arc, ...]) -> Iterator[tuple[Arc, ...]]:
        if not free:
            yield arcs
            return
        v, rest = free[0], free[1:]
        for k, w in enumerate(rest):
            if not arcs and first_partner is not None and w != first_partner:
                continue
            others = rest[:k] + rest[k + 1:]
            for c in range(1, m + 1):
                yield from extend(others, arcs + ((v, w, c),))

    for arcs in extend(tuple(range(1, 2 * n + 1)), ()):
        yield ColoredMatching(n, m, arcs)
