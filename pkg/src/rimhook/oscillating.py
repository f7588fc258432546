"""Oscillating m-rim hook tableaux and their bijection with colored matchings."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from rimhook import shapes
from rimhook.matchings import ColoredMatching
from rimhook.shapes import Partition, RimHook, addable_rim_hooks, removable_rim_hooks
from rimhook.tableaux import HookTableau, RimHookTableau, insert, uninsert


@dataclass(frozen=True)
class OscillatingTableau:
    m: int
    shapes: tuple[Partition, ...]

    @classmethod
    def of(cls, m: int, seq: Iterable[Iterable[int]]) -> "OscillatingTableau":
        return cls(m, tuple(shapes.partition(p) for p in seq))

    @property
    def n(self) -> int:
        return (len(self.shapes) - 1) // 2

    @property
    def max_rows(self) -> int:
        return max(len(p) for p in self.shapes)

    @property
    def max_columns(self) -> int:
        return max((p[0] for p in self.shapes if p), default=0)


def check(o: OscillatingTableau) -> str | None:
    seq = o.shapes
    if not seq or len(seq) % 2 == 0:
        return "length must be even"
    if seq[0] or seq[-1]:
        return "must start and end with the empty shape"
    for i, (prev, cur) in enumerate(zip(seq, seq[1:]), 1):
        if not shapes.is_partition(cur):
            return f"step {i}: {cur} is not a partition"
        grown = {h.cell_set for h in addable_rim_hooks(prev, o.m)}
        shrunk = {h.cell_set for h in removable_rim_hooks(prev, o.m)}
        diff = frozenset(shapes.cells(cur) ^ shapes.cells(prev))
        if diff not in grown and diff not in shrunk:
            return f"step {i}: {prev} -> {cur} is not one {o.m}-rim hook"
    return None


def validate(o: OscillatingTableau) -> bool:
    return check(o) is None


def conjugate(o: OscillatingTableau) -> OscillatingTableau:
    return OscillatingTableau(o.m, tuple(shapes.conjugate(p) for p in o.shapes))


def to_matching(o: OscillatingTableau) -> ColoredMatching:
    """Read a colored matching off an oscillating tableau.

    Growth steps fill the new rim hook with the step index; shrink steps
    uninsert a hook whose content opens the arc closed at this step and
    whose arm gives its color.
    """
    problem = check(o)
    if problem:
        raise ValueError(problem)
    T = RimHookTableau.empty(o.m)
    arcs = []
    for i, (prev, cur) in enumerate(zip(o.shapes, o.shapes[1:]), 1):
        if sum(cur) > sum(prev):
            T = T.with_hook(i, RimHook.of(shapes.cells(cur) - shapes.cells(prev)))
        else:
            T, H = uninsert(T, cur)
            arcs.append((H.content, i, H.arm))
    return ColoredMatching(o.n, o.m, tuple(arcs))


def tableau_sequence(M: ColoredMatching) -> list[RimHookTableau]:
    """T_0, ..., T_2n built backwards from the empty tableau at the end."""
    T = RimHookTableau.empty(M.m)
    seq = [T]
    for v in range(2 * M.n, 0, -1):
        w, color = M.partner(v)
        if w < v:
            T = insert(T, HookTableau(M.m, color, w))
        else:
            assert T.contents[-1] == v, (M, v)
            T = T.without(v)
        seq.append(T)
    seq.reverse()
    return seq


def from_matching(M: ColoredMatching) -> OscillatingTableau:
    return OscillatingTableau(M.m, tuple(T.shape for T in tableau_sequence(M)))


def enumerate_oscillating(
    m: int, n: int, max_columns: int | None = None, prefix: Iterable[Iterable[int]] = ()
) -> Iterator[OscillatingTableau]:
    """Depth-first stream of oscillating m-rim hook tableaux of length 2n.

    ``max_columns`` prunes shapes wider than the bound.  ``prefix`` fixes the
    first shapes after the empty one, for sharding.
    """
    fixed = [shapes.partition(p) for p in prefix]
    steps = 2 * n

    def grow(seq: list[Partition]) -> Iterator[tuple[Partition, ...]]:
        left = steps - (len(seq) - 1)
        cur = seq[-1]
        if left == 0:
            if not cur:
                yield tuple(seq)
            return
        nxt = [shapes.add_hook(cur, h) for h in addable_rim_hooks(cur, m)]
        nxt += [shapes.remove_hook(cur, h) for h in removable_rim_hooks(cur, m)]
        depth = len(seq) - 1
        for p in sorted(nxt, key=lambda q: (-sum(q), q)):
            if depth < len(fixed) and p != fixed[depth]:
                continue
            if sum(p) > m * (left - 1):
                continue
            if max_columns is not None and p and p[0] > max_columns:
                continue
            yield from grow(seq + [p])

    for seq in grow([()]):
        yield OscillatingTableau(m, seq)
