"""Dyck path packings, Guy's walks, and their maps to domino tableaux and matchings.

Paths are stored as height sequences.  A packing is a Dyck path D together
with a dispersed Dyck path E (flat steps allowed only at height 0) lying
weakly below D.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from rimhook import shapes
from rimhook.matchings import ColoredMatching, is_noncrossing
from rimhook.oscillating import OscillatingTableau

STEPS = {"R": (1, 0), "L": (-1, 0), "U": (0, 1), "D": (0, -1)}


@dataclass(frozen=True)
class DyckPath:
    heights: tuple[int, ...]

    def __post_init__(self):
        h = self.heights
        if not h or h[0] != 0 or h[-1] != 0 or min(h) < 0:
            raise ValueError(f"not a Dyck path: {h}")
        if any(abs(b - a) != 1 for a, b in zip(h, h[1:])):
            raise ValueError(f"Dyck path steps must be +-1: {h}")


@dataclass(frozen=True)
class DispersedDyckPath:
    heights: tuple[int, ...]

    def __post_init__(self):
        h = self.heights
        if not h or h[0] != 0 or h[-1] != 0 or min(h) < 0:
            raise ValueError(f"not a dispersed Dyck path: {h}")
        for a, b in zip(h, h[1:]):
            if abs(b - a) > 1 or (a == b and a != 0):
                raise ValueError(f"flat steps only on the axis: {h}")


@dataclass(frozen=True)
class DyckPathPacking:
    D: DyckPath
    E: DispersedDyckPath

    def __post_init__(self):
        if len(self.D.heights) != len(self.E.heights):
            raise ValueError("D and E must have the same length")
        if any(b > a for a, b in zip(self.D.heights, self.E.heights)):
            raise ValueError("E rises above D")

    @classmethod
    def of(cls, d, e) -> "DyckPathPacking":
        return cls(DyckPath(tuple(d)), DispersedDyckPath(tuple(e)))


@dataclass(frozen=True)
class GuyWalk:
    """First-quadrant walk from the origin back to it, as a word over RLUD."""

    steps: str

    def __post_init__(self):
        x = y = 0
        for s in self.steps:
            if s not in STEPS:
                raise ValueError(f"unknown step {s!r}")
            dx, dy = STEPS[s]
            x, y = x + dx, y + dy
            if x < 0 or y < 0:
                raise ValueError(f"walk leaves the quadrant: {self.steps}")
        if (x, y) != (0, 0):
            raise ValueError(f"walk does not return to the origin: {self.steps}")

    @property
    def vectors(self) -> list[tuple[int, int]]:
        return [STEPS[s] for s in self.steps]


def in_two_column_set(o: OscillatingTableau) -> bool:
    return o.m == 2 and all(not p or p[0] <= 2 for p in o.shapes)


def to_packing(o: OscillatingTableau) -> DyckPathPacking:
    """Packing of a domino oscillating tableau with at most two columns."""
    if o.m != 2:
        raise ValueError("packings need domino tableaux (m = 2)")
    if not in_two_column_set(o):
        raise ValueError("every shape must have at most two columns")
    d, e = [], []
    for p in o.shapes:
        rows = shapes.conjugate(p) + (0, 0)
        u, v = rows[0], rows[1]
        assert (u + v) % 2 == 0
        d.append((u + v) // 2)
        e.append((u - v) // 2)
    return DyckPathPacking.of(d, e)


def from_packing(pk: DyckPathPacking) -> OscillatingTableau:
    seq = []
    for a, b in zip(pk.D.heights, pk.E.heights):
        seq.append(shapes.conjugate(shapes.partition((a + b, a - b))))
    return OscillatingTableau(2, tuple(seq))


def to_guy_walk(M: ColoredMatching) -> GuyWalk:
    if M.m != 2:
        raise ValueError("Guy's walks need 2-colored matchings")
    if not is_noncrossing(M):
        raise ValueError("matching has a monochromatic crossing")
    word = [""] * (2 * M.n)
    for i, j, c in M.arcs:
        word[i - 1], word[j - 1] = ("R", "L") if c == 1 else ("U", "D")
    return GuyWalk("".join(word))


def from_guy_walk(w: GuyWalk) -> ColoredMatching:
    """Pair every closer with the latest open arc of its color."""
    pending: dict[int, list[int]] = {1: [], 2: []}
    arcs = []
    for v, s in enumerate(w.steps, 1):
        color = 1 if s in "RL" else 2
        if s in "RU":
            pending[color].append(v)
        else:
            arcs.append((pending[color].pop(), v, color))
    return ColoredMatching(len(w.steps) // 2, 2, tuple(arcs))


# -- direct generators --------------------------------------------------------

def dyck_paths(n: int) -> Iterator[DyckPath]:
    def walk(h: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        left = 2 * n - (len(h) - 1)
        if left == 0:
            yield h
            return
        for step in (1, -1):
            nxt = h[-1] + step
            if 0 <= nxt <= left - 1:
                yield from walk(h + (nxt,))

    for h in walk((0,)):
        yield DyckPath(h)


def dispersed_under(D: DyckPath) -> Iterator[DispersedDyckPath]:
    """Dispersed Dyck paths weakly below D."""
    cap = D.heights
    last = len(cap) - 1

    def walk(h: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        i = len(h) - 1
        if i == last:
            if h[-1] == 0:
                yield h
            return
        cur = h[-1]
        for step in (1, 0, -1):
            if step == 0 and cur != 0:
                continue
            nxt = cur + step
            if 0 <= nxt <= cap[i + 1] and nxt <= last - (i + 1):
                yield from walk(h + (nxt,))

    for h in walk((0,)):
        yield DispersedDyckPath(h)


def packings(n: int) -> Iterator[DyckPathPacking]:
    for D in dyck_paths(n):
        for E in dispersed_under(D):
            yield DyckPathPacking(D, E)


def guy_walks(n: int) -> Iterator[GuyWalk]:
    """All 2n-step Guy's walks, generated without reference to matchings."""
    def walk(word: str, x: int, y: int) -> Iterator[str]:
        left = 2 * n - len(word)
        if left == 0:
            yield word
            return
        for s, (dx, dy) in STEPS.items():
            nx, ny = x + dx, y + dy
            if nx >= 0 and ny >= 0 and nx + ny <= left - 1:
                yield from walk(word + s, nx, ny)

    for word in walk("", 0, 0):
        yield GuyWalk(word)
