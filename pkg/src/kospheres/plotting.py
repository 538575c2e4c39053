"""Figures for the residue tables and the classification grid."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

VERDICT_ORDER = (
    "AllDegrees",
    "EvenDegreesOnly",
    "OnlyNullHomotopic",
    "UnknownConjecturedAll",
    "UnknownConjecturedEvenOnly",
)
VERDICT_COLORS = ("#2b8a3e", "#e67700", "#868e96", "#a5d8ff", "#ffc9c9")


def _finish(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    # fixed metadata keeps repeated renders byte-identical
    fig.savefig(path, dpi=120, bbox_inches="tight", metadata={"Software": None})
    plt.close(fig)
    return path


def plot_residue_table(table, path, title: str = "") -> Path:
    """Heat map of an 8 x 8 table with values in {1, 2, inf}."""
    levels = {1: 0, 2: 1, math.inf: 2}
    grid = [[levels[v] for v in row] for row in table]
    fig, ax = plt.subplots(figsize=(4.2, 4.0))
    cmap = ListedColormap(["#f1f3f5", "#74c0fc", "#1864ab"])
    ax.imshow(grid, cmap=cmap, vmin=-0.5, vmax=2.5)
    for n, row in enumerate(table):
        for m, v in enumerate(row):
            text = "∞" if v == math.inf else str(int(v))
            ax.text(m, n, text, ha="center", va="center", color="white" if v == math.inf else "black")
    ax.set_xticks(range(8))
    ax.set_yticks(range(8))
    ax.set_xlabel("m mod 8")
    ax.set_ylabel("n mod 8")
    if title:
        ax.set_title(title)
    return _finish(fig, path)


def plot_verdict_grid(statuses, N: int, path, title: str = "") -> Path:
    """Colour each (n, m), 1 <= n, m <= N, by its verdict."""
    grid = [[0] * N for _ in range(N)]
    for st in statuses:
        grid[st.n - 1][st.m - 1] = VERDICT_ORDER.index(st.verdict.value)
    fig, ax = plt.subplots(figsize=(5.5, 5.0))
    ax.imshow(grid, cmap=ListedColormap(VERDICT_COLORS), vmin=-0.5, vmax=len(VERDICT_ORDER) - 0.5,
              extent=(0.5, N + 0.5, N + 0.5, 0.5))
    ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    ax.set_xlabel("m")
    ax.set_ylabel("n")
    handles = [plt.Rectangle((0, 0), 1, 1, color=c) for c in VERDICT_COLORS]
    ax.legend(handles, VERDICT_ORDER, loc="upper left", bbox_to_anchor=(1.02, 1), fontsize=8)
    if title:
        ax.set_title(title)
    return _finish(fig, path)
