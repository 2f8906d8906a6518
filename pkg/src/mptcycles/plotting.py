"""Figures for hunt and spectrum reports, rendered straight to files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.bbox": "tight",
    "savefig.dpi": 150,
}


def count_histogram(histogram: dict[int, int], path, title: str = "", required: int = 2, expected: int = 3):
    """Bar chart of full-spectrum arc counts over a hunt.

    Reference lines mark the guaranteed lower bound and the conjectured one.
    """
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.5, 2.8))
        if histogram:
            xs = sorted(histogram)
            ax.bar(xs, [histogram[x] for x in xs], color="0.35", width=0.7)
            ax.set_xticks(range(min(xs + [required]), max(xs) + 1))
        ax.axvline(required - 0.5, color="tab:red", lw=1, ls="--", label=f"guaranteed >= {required}")
        ax.axvline(expected - 0.5, color="tab:blue", lw=1, ls=":", label=f"conjectured >= {expected}")
        ax.set_xlabel("full-spectrum arcs per instance")
        ax.set_ylabel("instances")
        if title:
            ax.set_title(title)
        ax.legend(frameon=False, fontsize=7)
        fig.savefig(path)
        plt.close(fig)


def spectrum_grid(spectra, c: int, max_len: int, path, title: str = ""):
    """Arc-by-length incidence grid; columns 3..c are the ones that count."""
    lengths = list(range(3, max(max_len, 3) + 1))
    grid = np.zeros((len(spectra), len(lengths)))
    for r, sp in enumerate(spectra):
        for k, ell in enumerate(lengths):
            grid[r, k] = ell in sp.lengths
    with plt.rc_context(STYLE):
        height = min(0.8 + 0.18 * len(spectra), 12)
        fig, ax = plt.subplots(figsize=(0.5 * len(lengths) + 1.5, height))
        ax.imshow(grid, aspect="auto", cmap="Greys", vmin=0, vmax=1, interpolation="nearest")
        ax.set_xticks(range(len(lengths)), [str(x) for x in lengths])
        ax.set_yticks(range(len(spectra)), [f"{sp.arc.tail}->{sp.arc.head}" for sp in spectra])
        if c >= 3:
            ax.axvline(c - 3 + 0.5, color="tab:red", lw=1)
        ax.set_xlabel("cycle length")
        if title:
            ax.set_title(title)
        fig.savefig(path)
        plt.close(fig)
