"""Figures for classification reports."""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

VERDICT_COLORS = {
    "Rational": "#2b8cbe",
    "NotUnirational": "#e34a33",
    "out-of-scope": "#969696",
}


def simpleaxis(ax):
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    ax.get_xaxis().tick_bottom()
    ax.get_yaxis().tick_left()


def _stacked(ax, categories, counts, verdicts):
    bottom = [0] * len(categories)
    for v in verdicts:
        heights = [counts[(c, v)] for c in categories]
        ax.bar(range(len(categories)), heights, bottom=bottom, color=VERDICT_COLORS[v], label=v)
        bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_xticks(range(len(categories)))
    ax.yaxis.set_major_locator(MaxNLocator(integer=True))


def plot_classification(rows, path, title=None):
    """Bar charts of subgroup classes by order and by orbit partition, coloured by verdict.

    Writes the figure to ``path`` (format from the suffix) and returns the path.
    """
    path = Path(path)
    verdicts = [v for v in VERDICT_COLORS if any(r.verdict == v for r in rows)]

    orders = sorted({r.group_order for r in rows})
    by_order = Counter((r.group_order, r.verdict) for r in rows)
    partitions = sorted({r.orbit_sizes for r in rows}, key=lambda p: (len(p), p))
    by_partition = Counter((r.orbit_sizes, r.verdict) for r in rows)

    fig, axes = plt.subplots(1, 2, figsize=(12, 4.5), gridspec_kw={"width_ratios": [1, 1.4]})
    ax = axes[0]
    _stacked(ax, orders, by_order, verdicts)
    ax.set_xticklabels([str(o) for o in orders], rotation=90, fontsize=8)
    ax.set_xlabel("group order")
    ax.set_ylabel("conjugacy classes")
    simpleaxis(ax)

    ax = axes[1]
    _stacked(ax, partitions, by_partition, verdicts)
    ax.set_xticklabels(["+".join(map(str, p)) for p in partitions], rotation=90, fontsize=8)
    ax.set_xlabel("orbit sizes")
    ax.legend(frameon=False)
    simpleaxis(ax)

    if title:
        fig.suptitle(title)
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
