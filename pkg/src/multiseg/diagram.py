"""Aligned text rendering of multisegments as rows of dots."""

from __future__ import annotations

from .core import Multisegment

CELL = 3


def render_text(blocks: list[tuple[str, Multisegment]]) -> str:
    segs = [s for _, m in blocks for s in m]
    if not segs:
        return "(empty)"
    lo = min(s.b for s in segs)
    hi = max(s.e for s in segs)
    width = max(len(title) for title, _ in blocks) if blocks else 0
    pad = " " * (width + 1 if width else 0)
    lines = [pad + "".join(f"{x:>{CELL}}" for x in range(lo, hi + 1))]
    for title, m in blocks:
        prefix = f"{title:<{width}} " if width else ""
        for s in m:
            cells = []
            for x in range(lo, hi + 1):
                if s.b <= x <= s.e:
                    cells.append(("-" * (CELL - 1) if x > s.b else " " * (CELL - 1)) + "o")
                else:
                    cells.append(" " * CELL)
            lines.append((prefix + "".join(cells)).rstrip())
            prefix = " " * len(prefix)
    return "\n".join(lines)
