"""Matplotlib figures rendered next to the delimited report files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def plot_sigma_sweep(rows: list[dict], path: str) -> None:
    """Two panels: success probability against the strength parameter, and
    the iteration histogram at the best strength."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    sigmas = [r["sigma"] for r in rows]
    rates = [r["success_rate"] for r in rows]
    ax1.plot(sigmas, rates, "o-")
    ax1.set_xlabel(r"strength $\sigma$")
    ax1.set_ylabel("success probability")
    ax1.set_ylim(-0.02, 1.02)
    ax1.grid(True, alpha=0.3)

    best = max(rows, key=lambda r: r["success_rate"])
    buckets = best["histogram"]
    width = best["bucket_width"]
    ax2.bar([i * width for i in range(len(buckets))], buckets, width=width, align="edge")
    ax2.set_xlabel(f"iterations (sigma={best['sigma']:g})")
    ax2.set_ylabel("runs")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_shidoku_suite(rows: list[dict], path: str) -> None:
    """Per-grid success counts and iteration spreads for the minimal grids."""
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(9, 6), sharex=True)
    ids = [r["grid_id"] for r in rows]
    xs = range(len(ids))
    ax1.bar(xs, [r["solved"] for r in rows], color="tab:blue")
    ax1.set_ylabel("solved runs")
    ax2.errorbar(
        xs,
        [r["mean_iterations"] for r in rows],
        yerr=[
            [r["mean_iterations"] - r["min_iterations"] for r in rows],
            [r["max_iterations"] - r["mean_iterations"] for r in rows],
        ],
        fmt="o",
        capsize=3,
    )
    ax2.set_ylabel("iterations (min/mean/max)")
    ax2.set_xticks(list(xs))
    ax2.set_xticklabels(ids, rotation=45)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_erasure_rates(rows: list[dict], path: str) -> None:
    """Recovery-rate curves against the erasure probability."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ps = [r["p_erase"] for r in rows]
    for key, label in (
        ("decoded_rate", "decoded"),
        ("exact_rate", "exact recovery"),
        ("unique_rate", "unique completion"),
    ):
        ax.plot(ps, [r[key] for r in rows], "o-", label=label)
    ax.set_xlabel("erasure probability")
    ax.set_ylabel("rate")
    ax.set_ylim(-0.02, 1.02)
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
