"""Matplotlib figures: dot-row diagrams and verification summaries."""

from __future__ import annotations

import io

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .core import Multisegment  # noqa: E402

RC = {
    "font.size": 10,
    "axes.titlesize": 11,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "svg.hashsalt": "multiseg",
    "svg.fonttype": "none",
}

# fixed metadata keeps svg/png output byte-stable
_METADATA = {
    "svg": {"Date": None, "Creator": None},
    "png": {"Software": None},
}


def _save(fig, fmt: str) -> bytes:
    buf = io.BytesIO()
    fig.savefig(buf, format=fmt, metadata=_METADATA.get(fmt), bbox_inches="tight")
    plt.close(fig)
    return buf.getvalue()


def draw_rows(ax, blocks: list[tuple[str, Multisegment]]):
    """One row per segment, dots at exponents joined by a line; blocks stacked top-down."""
    row = 0
    ticks, labels = [], []
    lo = min((s.b for _, m in blocks for s in m), default=0)
    hi = max((s.e for _, m in blocks for s in m), default=0)
    for title, m in blocks:
        for s in m:
            xs = list(range(s.b, s.e + 1))
            ax.plot(xs, [-row] * len(xs), "-o", color="black", markersize=6, linewidth=1.5)
            ticks.append(-row)
            labels.append(f"{title}[{s.b},{s.e}]" if title else f"[{s.b},{s.e}]")
            row += 1
        row += 1
    ax.set_yticks(ticks)
    ax.set_yticklabels(labels)
    ax.set_xticks(range(lo, hi + 1))
    ax.set_xlim(lo - 0.5, hi + 0.5)
    ax.set_ylim(-row + 0.5, 0.5)
    ax.set_xlabel("exponent")
    ax.grid(axis="x", color="0.9")


def diagram_figure(blocks: list[tuple[str, Multisegment]], fmt: str = "svg") -> bytes:
    nrows = sum(len(m) + 1 for _, m in blocks)
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(6, 0.35 * nrows + 1))
        draw_rows(ax, blocks)
        return _save(fig, fmt)


def speh_verdict_figure(grid, statuses, unknown_pairs, fmt: str = "png") -> bytes:
    """Matrix of verdicts over ordered grid pairs; Unknown certificates marked."""
    n = len(grid)
    index = {q: i for i, q in enumerate(grid)}
    mat = [[0] * n for _ in range(n)]
    for (p, q), red in statuses.items():
        mat[index[p]][index[q]] = 1 if red else 0
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(7, 6))
        ax.imshow(mat, cmap=ListedColormap(["#dde6f0", "#c0392b"]), interpolation="nearest")
        if unknown_pairs:
            xs = [index[q] for p, q in unknown_pairs]
            ys = [index[p] for p, q in unknown_pairs]
            ax.scatter(xs, ys, s=6, color="#f1c40f", label="certificate Unknown")
            ax.legend(loc="upper right", fontsize=8)
        ax.xaxis.set_major_locator(MaxNLocator(integer=True))
        ax.yaxis.set_major_locator(MaxNLocator(integer=True))
        ax.set_title("Speh pairs: red = reducible")
        ax.set_xlabel("second quadruple (grid index)")
        ax.set_ylabel("first quadruple (grid index)")
        return _save(fig, fmt)


def summary_figure(reports, fmt: str = "png") -> bytes:
    names = [r["suite"] for r in reports]
    cases = [r["cases_run"] for r in reports]
    fails = [len(r["failures"]) for r in reports]
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(7, 0.4 * len(names) + 1.2))
        y = range(len(names))
        ax.barh(y, cases, color="#95a5a6", label="cases")
        ax.barh(y, fails, color="#c0392b", label="failures")
        ax.set_yticks(list(y))
        ax.set_yticklabels(names)
        ax.set_xscale("symlog")
        ax.invert_yaxis()
        ax.legend(fontsize=8)
        return _save(fig, fmt)
