"""Partitions, outside borders and rim hooks.

Partitions are plain tuples of weakly decreasing positive integers and cells
are ``(row, col)`` pairs, 1-based, in English orientation (row 1 on top).

The outside border of a partition holds exactly one cell on every diagonal
``col - row = k``: the first cell on that diagonal that is not in the
diagram.  Border order is therefore increasing content, and a run of ``m``
consecutive border cells is addressed by the content of its tail.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

Cell = tuple[int, int]
Partition = tuple[int, ...]


def content(cell: Cell) -> int:
    return cell[1] - cell[0]


def is_partition(parts: Iterable[int]) -> bool:
    parts = tuple(parts)
    if any(p < 1 for p in parts):
        return False
    return all(parts[k] >= parts[k + 1] for k in range(len(parts) - 1))


def partition(parts: Iterable[int]) -> Partition:
    """Normalise ``parts`` to a Partition, dropping trailing zeros."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


def size(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for part in p if part >= k) for k in range(1, p[0] + 1))


def contains(p: Partition, cell: Cell) -> bool:
    i, j = cell
    return 1 <= i <= len(p) and 1 <= j <= p[i - 1]


def cells(p: Partition) -> set[Cell]:
    return {(i, j) for i, row in enumerate(p, 1) for j in range(1, row + 1)}


def from_cells(cell_set: Iterable[Cell]) -> Partition | None:
    """The partition whose diagram is exactly ``cell_set``, or None."""
    cell_set = set(cell_set)
    rows = Counter(i for i, _ in cell_set)
    p = tuple(rows[i] for i in range(1, len(rows) + 1))
    if not is_partition(p) or cells(p) != cell_set:
        return None
    return p


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


# -- outside border ---------------------------------------------------------

def is_border_cell(p: Partition, cell: Cell) -> bool:
    i, j = cell
    if i < 1 or j < 1 or contains(p, cell):
        return False
    return i == 1 or j == 1 or contains(p, (i - 1, j - 1))


def is_border_cell_prose(p: Partition, cell: Cell) -> bool:
    """Border membership read off the prose definition.

    Outside ``p`` and directly below, right of, or diagonally below-right of
    a diagram cell; or in the first row/column beyond the diagram.  The
    diagonal neighbour is what makes the ribbon connected at outer corners.
    """
    i, j = cell
    if i < 1 or j < 1 or contains(p, cell):
        return False
    if i == 1 or j == 1:
        return True
    return any(contains(p, (i - di, j - dj)) for di, dj in ((1, 0), (0, 1), (1, 1)))


def border_cell(p: Partition, k: int) -> Cell:
    """The outside-border cell of ``p`` with content ``k``."""
    i = 1 if k >= 0 else 1 - k
    while contains(p, (i, i + k)):
        i += 1
    return (i, i + k)


def outside_border(p: Partition, extent: int) -> list[Cell]:
    """Border cells in border order, first row and column cut at ``extent``.

    Cells run from the deepest materialised column-1 cell up the staircase
    to the rightmost materialised row-1 cell.  ``extent`` must exceed the
    diagram's bounding box for the cut to fall on the straight parts.
    """
    if extent < 1:
        raise ValueError("extent must be positive")
    return [border_cell(p, k) for k in range(1 - extent, extent)]


# -- rim hooks ----------------------------------------------------------------

@dataclass(frozen=True)
class RimHook:
    """A ribbon of cells stored tail to head (increasing content)."""

    cells: tuple[Cell, ...]

    def __post_init__(self):
        if not self.cells:
            raise ValueError("a rim hook needs at least one cell")
        for (i0, j0), (i1, j1) in zip(self.cells, self.cells[1:]):
            if (i1 - i0, j1 - j0) not in ((-1, 0), (0, 1)):
                raise ValueError(f"cells are not a ribbon run: {self.cells}")

    @classmethod
    def of(cls, cell_set: Iterable[Cell]) -> "RimHook":
        return cls(tuple(sorted(set(cell_set), key=content)))

    @property
    def head(self) -> Cell:
        return self.cells[-1]

    @property
    def tail(self) -> Cell:
        return self.cells[0]

    @property
    def tail_content(self) -> int:
        return content(self.cells[0])

    @property
    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.cells)

    def __len__(self) -> int:
        return len(self.cells)


def border_run(p: Partition, tail_content: int, m: int) -> RimHook:
    return RimHook(tuple(border_cell(p, k) for k in range(tail_content, tail_content + m)))


def _run_contents(p: Partition, cell_set: set[Cell]) -> list[int] | None:
    """Contents of ``cell_set`` if it is a consecutive run of p's border."""
    if not cell_set:
        return None
    ks = sorted(content(c) for c in cell_set)
    if ks != list(range(ks[0], ks[0] + len(ks))):
        return None
    if any(border_cell(p, content(c)) != c for c in cell_set):
        return None
    return ks


def has_legal_head(p: Partition, hook: RimHook) -> bool:
    i, j = hook.head
    return not is_border_cell(p, (i - 1, j))


def has_legal_tail(p: Partition, hook: RimHook) -> bool:
    i, j = hook.tail
    return not is_border_cell(p, (i, j - 1))


def _is_rim_hook_by_ends(p: Partition, cell_set: set[Cell]) -> bool:
    if _run_contents(p, cell_set) is None:
        return False
    hook = RimHook.of(cell_set)
    return has_legal_head(p, hook) and has_legal_tail(p, hook)


def _edge_connected(cell_set: set[Cell]) -> bool:
    start = next(iter(cell_set))
    seen, stack = {start}, [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cell_set and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cell_set)


def _is_rim_hook_by_union(p: Partition, cell_set: set[Cell]) -> bool:
    if not cell_set or not all(is_border_cell(p, c) for c in cell_set):
        return False
    if not _edge_connected(cell_set):
        return False
    return from_cells(cells(p) | cell_set) is not None


def is_rim_hook_outside(p: Partition, cell_set: Iterable[Cell]) -> bool:
    """True iff the cells are a rim hook outside ``p``.

    Checked two ways, a contiguous border run with legal head and tail, and
    contiguous border cells whose union with ``p`` is a partition; the two
    must agree.
    """
    cell_set = set(cell_set)
    by_ends = _is_rim_hook_by_ends(p, cell_set)
    by_union = _is_rim_hook_by_union(p, cell_set)
    assert by_ends == by_union, (p, sorted(cell_set))
    return by_ends


def addable_rim_hooks(p: Partition, m: int) -> list[RimHook]:
    """All m-rim hooks outside p, ordered bottom-up by tail."""
    if m < 1:
        raise ValueError("m must be positive")
    out = []
    lo = -(len(p) + m - 1)
    hi = p[0] if p else 0
    for c in range(lo, hi + 1):
        hook = border_run(p, c, m)
        if has_legal_head(p, hook) and has_legal_tail(p, hook):
            out.append(hook)
    return out


def last_cell_on_diagonal(p: Partition, k: int) -> Cell | None:
    i, j = border_cell(p, k)
    cell = (i - 1, j - 1)
    return cell if contains(p, cell) else None


def removable_rim_hooks(p: Partition, m: int) -> list[RimHook]:
    """All outer m-rim hooks of p, ordered bottom-up by tail."""
    if m < 1:
        raise ValueError("m must be positive")
    out = []
    if not p:
        return out
    for c in range(1 - len(p), p[0] - m + 1):
        run = [last_cell_on_diagonal(p, k) for k in range(c, c + m)]
        if any(cell is None for cell in run):
            continue
        hook = RimHook.of(run)
        inner = from_cells(cells(p) - hook.cell_set)
        if inner is not None and _is_rim_hook_by_ends(inner, set(hook.cells)):
            out.append(hook)
    return out


def removable_rim_hook_at(p: Partition, tail_content: int, m: int) -> RimHook | None:
    for hook in removable_rim_hooks(p, m):
        if hook.tail_content == tail_content:
            return hook
    return None


def add_hook(p: Partition, hook: RimHook) -> Partition:
    out = from_cells(cells(p) | hook.cell_set)
    if out is None or hook.cell_set & cells(p):
        raise ValueError(f"{hook.cells} is not addable to {p}")
    return out


def remove_hook(p: Partition, hook: RimHook) -> Partition:
    out = from_cells(cells(p) - hook.cell_set)
    if out is None or not hook.cell_set <= cells(p):
        raise ValueError(f"{hook.cells} is not removable from {p}")
    return out


# -- sliding and bumping ------------------------------------------------------

def _require_run(p: Partition, hook: RimHook) -> None:
    if _run_contents(p, set(hook.cells)) is None:
        raise ValueError(f"{hook.cells} is not a run of the border of {p}")


def slitherup(p: Partition, hook: RimHook) -> RimHook:
    """The |hook| border cells of p directly after the hook's head."""
    _require_run(p, hook)
    return border_run(p, hook.tail_content + len(hook), len(hook))


def slitherdown(p: Partition, hook: RimHook) -> RimHook:
    """The |hook| border cells of p directly before the hook's tail."""
    _require_run(p, hook)
    return border_run(p, hook.tail_content - len(hook), len(hook))


def bumpout(cell_set: Iterable[Cell]) -> set[Cell]:
    return {(i + 1, j + 1) for i, j in cell_set}


def bump_hook(lam: Partition, sigma: RimHook, tau: RimHook) -> RimHook:
    """sigma displaced past tau, a rim hook outside ``lam`` plus tau.

    Keeps the cells of sigma that tau does not use and pushes the shared
    cells one step down the diagonal.
    """
    shared = sigma.cell_set & tau.cell_set
    if sigma == tau:
        raise ValueError("bump_hook needs two distinct rim hooks")
    if not shared:
        raise ValueError("bump_hook needs overlapping rim hooks")
    bumped = RimHook.of((sigma.cell_set - shared) | bumpout(shared))
    grown = add_hook(lam, tau)
    assert is_rim_hook_outside(grown, bumped.cells), (lam, sigma, tau)
    return bumped

