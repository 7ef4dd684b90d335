"""Render summit-set conjugacy graphs to image files with matplotlib."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .conjugacy import SummitSet  # noqa: E402


def _layout(n: int) -> list[tuple[float, float]]:
    if n == 1:
        return [(0.0, 0.0)]
    # start at the top and go clockwise so small graphs read left to right
    return [(math.sin(2 * math.pi * i / n), math.cos(2 * math.pi * i / n)) for i in range(n)]


def draw_summit_graph(ss: SummitSet, path: str | Path, title: str | None = None) -> Path:
    """Draw members as labelled nodes and edges as arrows labelled by their simple."""
    path = Path(path)
    nodes = list(ss.members)
    index = {h: i for i, h in enumerate(nodes)}
    pos = _layout(len(nodes))
    size = max(4.0, 1.2 * math.sqrt(len(nodes)) + 3)
    fig, ax = plt.subplots(figsize=(size, size))

    pairs = {(index[a], index[b]) for a, _, b in ss.edges}
    for a, c, b in ss.edges:
        i, j = index[a], index[b]
        label = " ".join(f"s{k}" for k in c.word()) or "1"
        if i == j:
            x, y = pos[i]
            ax.annotate(label, (x, y + 0.18), ha="center", fontsize=8, color="tab:red")
            continue
        bend = 0.25 if (j, i) in pairs else 0.0
        arrow = FancyArrowPatch(
            pos[i], pos[j], arrowstyle="-|>", mutation_scale=14,
            connectionstyle=f"arc3,rad={bend}", shrinkA=22, shrinkB=22, color="0.3",
        )
        ax.add_patch(arrow)
        (x1, y1), (x2, y2) = pos[i], pos[j]
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        # nudge the label toward the bulge of a curved arrow
        mx += bend * (y2 - y1) / 2
        my -= bend * (x2 - x1) / 2
        ax.text(mx, my, label, fontsize=8, ha="center", va="center", color="tab:red",
                bbox=dict(boxstyle="round,pad=0.15", fc="white", ec="none", alpha=0.8))

    for h, (x, y) in zip(nodes, pos):
        ax.text(x, y, str(h), ha="center", va="center", fontsize=8,
                bbox=dict(boxstyle="round,pad=0.3", fc="lightyellow", ec="0.4"))

    ax.set_xlim(-1.5, 1.5)
    ax.set_ylim(-1.5, 1.5)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(title or f"{ss.kind} summit set of {ss.source} ({len(nodes)} elements)", fontsize=10)
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
