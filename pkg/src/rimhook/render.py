"""Monospace drawings of diagrams, tableaux, arc diagrams, paths and walks."""
from __future__ import annotations

from rimhook.matchings import ColoredMatching
from rimhook.oscillating import OscillatingTableau
from rimhook.paths import DyckPathPacking, GuyWalk
from rimhook.tableaux import RimHookTableau

ARC_STROKES = "-=~:+*#%"


def young_diagram(shape, filling: dict | None = None) -> str:
    """English-convention cell grid; ``filling`` maps (row, col) to a label."""
    shape = tuple(shape)
    if not shape:
        return "(empty)"
    filling = filling or {}
    width = max([len(str(v)) for v in filling.values()] + [1]) + 2
    rule = lambda k: "+" + "+".join("-" * width for _ in range(k)) + "+"
    lines = [rule(shape[0])]
    for r, length in enumerate(shape, 1):
        labels = (str(filling.get((r, c), "")).center(width) for c in range(1, length + 1))
        lines.append("|" + "|".join(labels) + "|")
        lines.append(rule(length))
    return "\n".join(lines)


def tableau(T: RimHookTableau) -> str:
    return young_diagram(T.shape, T.filling)


def oscillating(o: OscillatingTableau) -> str:
    """Shapes side by side as dot diagrams, with the step index underneath."""
    blocks = []
    for p in o.shapes:
        rows = ["o" * k for k in p] or ["."]
        blocks.append(rows)
    height = max(len(b) for b in blocks)
    widths = [max(max(len(r) for r in b), len(str(i))) for i, b in enumerate(blocks)]
    lines = []
    for h in range(height):
        cells = (b[h] if h < len(b) else "" for b in blocks)
        lines.append("  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip())
    lines.append("  ".join(str(i).ljust(w) for i, w in enumerate(widths)).rstrip())
    return "\n".join(lines)


def arcs(M: ColoredMatching) -> str:
    """One line per arc over a numbered vertex ruler; stroke encodes color."""
    size = 2 * M.n
    if size == 0:
        return "(empty matching)"
    step = len(str(size)) + 1
    col = lambda v: (v - 1) * step
    ruler = "".join(str(v).ljust(step) for v in range(1, size + 1)).rstrip()
    lines = [ruler]
    for i, j, c in sorted(M.arcs, key=lambda a: (a[2], a[0])):
        row = [" "] * (col(size) + 1)
        stroke = ARC_STROKES[(c - 1) % len(ARC_STROKES)]
        for x in range(col(i), col(j) + 1):
            row[x] = stroke
        row[col(i)] = row[col(j)] = "o"
        lines.append("".join(row).ljust(len(ruler)) + f"  c{c}")
    return "\n".join(lines)


def _mountain(heights, flat: str = "_") -> list[str]:
    # an up step from height a is drawn on text row a, so rows 0..max-1 suffice
    grid = [[" "] * (len(heights) - 1) for _ in range(max(max(heights), 1))]
    for x, (a, b) in enumerate(zip(heights, heights[1:])):
        if b > a:
            grid[a][x] = "/"
        elif b < a:
            grid[b][x] = "\\"
        else:
            grid[a][x] = flat
    return ["".join(row).rstrip() for row in reversed(grid)]


def packing(pk: DyckPathPacking) -> str:
    d = _mountain(pk.D.heights)
    e = _mountain(pk.E.heights)
    return "\n".join(["D:", *d, "E:", *e])


def walk(w: GuyWalk) -> str:
    """Visited lattice points in the quadrant; the origin is marked O."""
    x = y = 0
    seen = {(0, 0)}
    for dx, dy in w.vectors:
        x, y = x + dx, y + dy
        seen.add((x, y))
    width = max(p[0] for p in seen) + 1
    height = max(p[1] for p in seen) + 1
    lines = [w.steps or "(empty walk)"]
    for yy in range(height - 1, -1, -1):
        row = ("O" if (xx, yy) == (0, 0) else "*" if (xx, yy) in seen else "." for xx in range(width))
        lines.append(" ".join(row))
    return "\n".join(lines)
