"""Figures written next to the CLI's delimited output.

Drawing needs float coordinates, so values are converted here and only
here; nothing computed in this module feeds back into the exact layers.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bracelets import BinaryBracelet  # noqa: E402
from .classification import ClassType, HomometryClass  # noqa: E402

TYPE_COLORS = {
    "A": "#1b9e77",
    "B": "#d95f02",
    "C": "#7570b3",
    "D": "#e7298a",
    "E": "#66a61e",
    "F": "#e6ab02",
    "G": "#a6761d",
}


def _save(fig, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120, bbox_inches="tight", metadata={"Software": None} if path.suffix == ".png" else None)
    plt.close(fig)
    return path


def plot_type_counts(rows: Sequence[dict], path: Path) -> Path:
    """Stacked bars of per-type class counts against ``n``.

    ``rows`` are the count records produced by the CLI, with one integer
    column per type tag.
    """
    fig, ax = plt.subplots(figsize=(9, 4))
    ns = [r["n"] for r in rows]
    bottom = [0] * len(rows)
    for kind in ClassType:
        values = [r.get(kind.tag, 0) for r in rows]
        if not any(values):
            continue
        ax.bar(ns, values, bottom=bottom, color=TYPE_COLORS[kind.tag], label=f"type {kind.tag}", width=0.85)
        bottom = [b + v for b, v in zip(bottom, values)]
    ax.set_xlabel("n")
    ax.set_ylabel("nontrivial homometry classes")
    ax.legend(ncol=4, fontsize=8, frameon=False, loc="upper left")
    ax.spines[["top", "right"]].set_visible(False)
    return _save(fig, path)


def _draw_bracelet(ax, b: BinaryBracelet, color: str) -> None:
    n = b.n
    angles = [math.pi / 2 - 2 * math.pi * k / n for k in range(n)]
    ax.add_patch(plt.Circle((0, 0), 1, fill=False, lw=0.6, color="0.6"))
    black = set(b.beads)
    size = max(6, 160 / n)
    xs = [math.cos(a) for a in angles]
    ys = [math.sin(a) for a in angles]
    ax.scatter(xs, ys, s=size, facecolors="white", edgecolors="0.5", linewidths=0.5, zorder=2)
    bx = [xs[k] for k in sorted(black)]
    by = [ys[k] for k in sorted(black)]
    for i in range(len(bx)):
        for j in range(i + 1, len(bx)):
            ax.plot([bx[i], bx[j]], [by[i], by[j]], color=color, lw=0.7, alpha=0.7, zorder=1)
    ax.scatter(bx, by, s=size * 1.6, color="black", zorder=3)
    ax.set_xlim(-1.2, 1.2)
    ax.set_ylim(-1.2, 1.2)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(str(b), fontsize=7)


def plot_classes(classes: Sequence[HomometryClass], path: Path, limit: int = 24) -> Path:
    """One row per class, one bracelet diagram per member."""
    shown = list(classes)[:limit]
    rows = max(1, len(shown))
    fig, axes = plt.subplots(rows, 3, figsize=(6, 2 * rows), squeeze=False)
    for r, cls in enumerate(shown):
        color = TYPE_COLORS[cls.kind.tag]
        for c in range(3):
            ax = axes[r][c]
            if c < len(cls.members):
                _draw_bracelet(ax, cls.members[c], color)
            else:
                ax.axis("off")
        axes[r][0].text(-1.55, 0, cls.label(), fontsize=9, ha="right", va="center", color=color)
    if not shown:
        axes[0][0].text(0.5, 0.5, "no classes", ha="center", va="center")
        for ax in axes[0]:
            ax.axis("off")
    return _save(fig, path)


def plot_cross_check(rows: Sequence[dict], path: Path) -> Path:
    """Class counts from the oracle, the classification and the series, against ``n``."""
    fig, ax = plt.subplots(figsize=(9, 4))
    ns = [r["n"] for r in rows]
    ax.plot(ns, [r["oracle"] for r in rows], "o", ms=6, mfc="none", label="oracle")
    ax.plot(ns, [r["classes"] for r in rows], "x", ms=5, label="classification")
    ax.plot(ns, [r["h_n"] for r in rows], "-", lw=0.8, color="0.3", label="series")
    bad = [r for r in rows if not r["match"]]
    if bad:
        ax.plot([r["n"] for r in bad], [r["oracle"] for r in bad], "s", color="red", label="mismatch")
    ax.set_xlabel("n")
    ax.set_ylabel("classes")
    ax.legend(frameon=False, fontsize=8, loc="upper left")
    ax.spines[["top", "right"]].set_visible(False)
    return _save(fig, path)
