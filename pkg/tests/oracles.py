"""Slow, independent reference implementations used only by the tests.

None of these touch the border machinery in ``rimhook.shapes``; they work
from the bare definitions (cell sets, chains of arcs, recurrences).
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from rimhook import tableaux
from rimhook.tableaux import HookTableau


def cell_set(p):
    return {(r, c) for r, length in enumerate(p, 1) for c in range(1, length + 1)}


def shape_of(cells):
    """Partition with exactly these cells, or None."""
    rows: dict[int, list[int]] = {}
    for r, c in cells:
        rows.setdefault(r, []).append(c)
    lengths = []
    for r in range(1, len(rows) + 1):
        cols = sorted(rows.get(r, []))
        if not cols or cols != list(range(1, len(cols) + 1)):
            return None
        lengths.append(len(cols))
    if any(a < b for a, b in zip(lengths, lengths[1:])):
        return None
    return tuple(lengths)


def connected(cells):
    cells = set(cells)
    if not cells:
        return False
    stack, seen = [next(iter(cells))], set()
    while stack:
        r, c = stack.pop()
        if (r, c) in seen:
            continue
        seen.add((r, c))
        stack.extend(n for n in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)) if n in cells)
    return seen == cells


def has_square(cells):
    return any({(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cells for r, c in cells)


def is_ribbon(cells):
    """Connected skew cell set without a 2x2 block."""
    return connected(cells) and not has_square(set(cells))


def removable_hooks(p, m):
    """All m-cell sets S of p with p - S a partition and S a ribbon."""
    full = cell_set(p)
    out = set()
    for sub in combinations(sorted(full), m):
        s = set(sub)
        if shape_of(full - s) is not None and is_ribbon(s):
            out.add(frozenset(s))
    return out


def addable_hooks(p, m):
    """All m-cell ribbons S outside p whose union with p is a partition."""
    full = cell_set(p)
    rows, cols = len(p) + m, (p[0] if p else 0) + m
    candidates = [(r, c) for r in range(1, rows + 1) for c in range(1, cols + 1) if (r, c) not in full]
    out = set()
    for sub in combinations(candidates, m):
        s = set(sub)
        if shape_of(full | s) is not None and is_ribbon(s):
            out.add(frozenset(s))
    return out


@lru_cache(maxsize=None)
def count_tableaux(p, m):
    if not p:
        return 1
    full = cell_set(p)
    return sum(count_tableaux(shape_of(full - s), m) for s in removable_hooks(p, m))


def brute_crossing_nesting(M):
    """(cr, ne) straight from the chain definitions, over all arc subsets."""
    cr = ne = 0
    for color in range(1, M.m + 1):
        arcs = sorted(M.color_class(color))
        for k in range(1, len(arcs) + 1):
            for sub in combinations(arcs, k):
                opens = [i for i, _ in sub]
                closes = [j for _, j in sub]
                before = max(opens) < min(closes)
                if before and closes == sorted(closes):
                    cr = max(cr, k)
                if before and closes == sorted(closes, reverse=True):
                    ne = max(ne, k)
    return cr, ne


def brute_uninsert(T, target):
    """Every (P, H) with shape(P) == target and insert(P, H) == T."""
    found = []
    for x in T.contents:
        rest = [c for c in T.contents if c != x]
        for arm in range(1, T.m + 1):
            H = HookTableau(T.m, arm, x)
            for P in tableaux.rim_hook_tableaux(target, T.m, rest):
                if tableaux.insert(P, H) == T:
                    found.append((P, H))
    return found


def catalan_convolution(n):
    c = [1]
    for k in range(n):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return c


def catalan_ratio(n):
    c = [1]
    for k in range(n):
        c.append(c[-1] * 2 * (2 * k + 1) // (k + 2))
    return c


def count_perfect_matchings(n):
    # vertex 1 pairs with any of the other 2n-1
    return 1 if n == 0 else (2 * n - 1) * count_perfect_matchings(n - 1)


def oscillating_count(m, n):
    """Walks of length 2n from and to the empty shape, via the brute hook lists."""
    @lru_cache(maxsize=None)
    def walks(p, left):
        if left == 0:
            return 1 if not p else 0
        full = cell_set(p)
        total = 0
        for s in addable_hooks(p, m) | removable_hooks(p, m):
            total += walks(shape_of(full ^ s), left - 1)
        return total

    return walks((), 2 * n)
