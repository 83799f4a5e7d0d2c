"""Matplotlib figures written next to the CSV reports."""
from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .bounds import exact_formula, ub_fixed_point  # noqa: E402

STYLE = {
    "font.size": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}


def _save(fig, path):
    fig.savefig(path)
    plt.close(fig)


def plot_census(table, path):
    """f(n) from the census against the fixed-point upper bound."""
    ns = np.array([r.n for r in table.per_n])
    f = np.array([r.f_n for r in table.per_n])
    with plt.rc_context(STYLE):
        fig, (ax, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
        ax.step(ns, f, where="mid", label="f(n), census")
        ax.step(ns, [ub_fixed_point(int(n)) for n in ns], where="mid", ls="--", label="upper bound")
        xs = np.linspace(1, ns.max(), 200)
        ax.plot(xs, [exact_formula(x) for x in xs], lw=0.8, color="0.5", label=r"$n/2-\sqrt{3n/2+1/4}+1/2$")
        ax.set_xlabel("tiles n")
        ax.set_ylabel("holes")
        ax.legend(frameon=False, fontsize=8)

        hmax = int(f.max())
        for h in range(hmax + 1):
            counts = np.array([r.counts_by_holes.get(h, 0) for r in table.per_n], dtype=float)
            mask = counts > 0
            ax2.semilogy(ns[mask], counts[mask], marker="o", ms=3, label=f"{h} holes")
        ax2.set_xlabel("tiles n")
        ax2.set_ylabel("fixed polyominoes")
        ax2.legend(frameon=False, fontsize=8)
        _save(fig, path)


def plot_bounds(reports, path):
    ns = np.array([r.n for r in reports])
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6, 3.5))
        ax.plot(ns, [r.ub_fixed_point for r in reports], label="fixed-point upper bound")
        ax.plot(ns, [r.ub_from_lb for r in reports], ls="--", label="upper bound from lower bound")
        ax.plot(ns, [r.lb_construction for r in reports], label="construction lower bound")
        ax.plot(ns, [r.exact_formula_value for r in reports], lw=0.8, color="0.5", label="conjectured exact form")
        ax.set_xlabel("tiles n")
        ax.set_ylabel("holes")
        ax.legend(frameon=False, fontsize=8)
        _save(fig, path)


def plot_theorem2(results, path):
    """Slack on both sides of the sandwich, scaled by sqrt(n)."""
    ns = np.array([r.n for r in results], dtype=float)
    root = np.sqrt(ns)
    lo = np.array([r.lb_construction - r.lower for r in results]) / root
    hi = np.array([r.upper - r.ub for r in results]) / root
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6, 3.5))
        ax.plot(ns, lo, ".", ms=3, label="holes(R'_n) - lower")
        ax.plot(ns, hi, ".", ms=3, label="upper - bound")
        ax.axhline(0, color="k", lw=0.6)
        ax.set_xlabel("tiles n")
        ax.set_ylabel(r"slack / $\sqrt{n}$")
        ax.legend(frameon=False, fontsize=8)
        _save(fig, path)


def plot_polyomino(poly, path, title=None):
    """Tiles dark, holes light, unbounded complement white."""
    from .grid import hole_labels

    labels, _ = hole_labels(poly)
    img = np.zeros(labels.shape)
    img[np.pad(poly.raster, 1)] = 2
    img[labels > 0] = 1
    side = max(poly.width, poly.height)
    size = min(8, max(2, math.sqrt(side)))
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(size, size))
        ax.imshow(img, origin="lower", cmap="Greys", vmin=0, vmax=2.4, interpolation="nearest")
        ax.set_axis_off()
        if title:
            ax.set_title(title, fontsize=9)
        _save(fig, path)
