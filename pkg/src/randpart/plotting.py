"""Figure rendering for the CLI report paths.

Figures are saved straight to files (Agg backend), one function per report
kind, so every command that emits delimited output can drop a picture next
to it with --plot.
"""

from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .partitions import Partition
from .uniform import vershik


def _new_axes(width: float = 6.4):
    golden = (math.sqrt(5.0) - 1.0) / 2.0
    fig, ax = plt.subplots(figsize=(width, width * golden))
    ax.grid(True, alpha=0.3)
    return fig, ax


def save_limit_shape(path: str, u_mark: float | None = None, span: float = 4.0) -> str:
    """The limit shape v = Y(u) with an optional marked point."""
    fig, ax = _new_axes()
    us = np.linspace(-span, span, 400)
    vs = np.array([vershik(u)[0] for u in us])
    ax.plot(us, vs, lw=2, label="limit shape")
    ax.plot(us, np.abs(us), ls="--", color="gray", lw=1, label="|u| asymptote")
    if u_mark is not None:
        v, _ = vershik(u_mark)
        ax.plot([u_mark], [v], "o", color="crimson", label=f"u = {u_mark:g}")
    ax.set_xlabel("u")
    ax.set_ylabel("v")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _profile_vertices(lam: Partition) -> list[tuple[float, float]]:
    """Boundary of the diagram in rotated coordinates u = col - row, v = col + row."""
    pts: list[tuple[int, int]] = [(lam.part(1), 0)]
    for i in range(1, len(lam) + 1):
        p = lam.part(i)
        pts.append((p, i))
        nxt = lam.part(i + 1)
        if nxt != p:
            pts.append((nxt, i))
    pts.append((0, len(lam)))
    return [(c - r, c + r) for c, r in pts]


def save_sample_profiles(
    path: str, samples: Sequence[Partition], q: float, max_profiles: int = 12
) -> str:
    """Scaled profiles of sampled partitions against the limit shape."""
    fig, ax = _new_axes()
    span = 0.1
    for lam in list(samples)[:max_profiles]:
        if lam.size == 0:
            continue
        scale = 1.0 / math.sqrt(lam.size)
        verts = _profile_vertices(lam)
        us = [u * scale for u, _ in verts]
        vs = [v * scale for _, v in verts]
        span = max(span, max(abs(u) for u in us))
        ax.plot(us, vs, lw=0.8, alpha=0.6, color="steelblue")
    span = max(span * 1.1, 3.0)
    grid = np.linspace(-span, span, 400)
    ax.plot(grid, [vershik(u)[0] for u in grid], lw=2, color="crimson", label="limit shape")
    ax.set_xlabel("u (scaled by area$^{1/2}$)")
    ax.set_ylabel("v")
    ax.set_title(f"sampled profiles at q = {q:g}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_expected_size(path: str, coeffs: Sequence[int], q: float, value: float) -> str:
    """Divisor-sum coefficients and the partial sums of the mean-size series."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9.6, 3.6))
    ns = np.arange(1, len(coeffs) + 1)
    ax1.stem(ns, coeffs, basefmt=" ")
    ax1.set_xlabel("n")
    ax1.set_ylabel("coefficient")
    ax1.grid(True, alpha=0.3)
    partial = np.cumsum(np.array(coeffs, dtype=float) * q**ns)
    ax2.plot(ns, partial, lw=2)
    ax2.axhline(value, ls="--", color="gray")
    ax2.set_xlabel("terms")
    ax2.set_ylabel(f"mean size at q = {q:g}")
    ax2.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
