"""Figures for scan reports, written next to the delimited output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

# one colour per residue class of p mod 8
CLASS_COLORS = {1: "tab:blue", 3: "tab:orange", 5: "tab:green", 7: "tab:red"}


def _figure(width=6.4, height=4.0):
    fig, ax = plt.subplots(figsize=(width, height))
    ax.grid(True, alpha=0.3)
    return fig, ax


def _by_class(rows):
    groups = {}
    for row in rows:
        groups.setdefault(row["p_mod_8"], []).append(row)
    return sorted(groups.items())


def plot_lc(rows, path):
    fig, ax = _figure()
    for residue, grp in _by_class(rows):
        ax.scatter(
            [r["p"] for r in grp],
            [r["lc"] / (2 * r["p"]) for r in grp],
            s=14,
            color=CLASS_COLORS[residue],
            label=f"p = {residue} mod 8",
        )
    ax.axhline(1.0, color="k", lw=0.8, ls="--")
    ax.axhline(0.5, color="k", lw=0.8, ls=":")
    ax.set_xlabel("p")
    ax.set_ylabel("LC / period")
    ax.set_title("Linear complexity over F_r (all scanned r)")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_adic(rows, path):
    fig, ax = _figure()
    for residue, grp in _by_class(rows):
        ax.plot(
            [r["p"] for r in grp],
            [r["phi2_floor"] / (r["N"] - 1) for r in grp],
            "o",
            ms=4,
            color=CLASS_COLORS[residue],
            label=f"p = {residue} mod 8",
        )
    ax.set_xlabel("p")
    ax.set_ylabel("2-adic complexity / (N - 1)")
    ax.set_ylim(0, 1.05)
    ax.set_title("2-adic complexity relative to the maximum")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_autocorr(rows, path):
    """Largest off-peak |C(w)| per prime."""
    fig, ax = _figure()
    for residue, grp in _by_class(rows):
        xs, ys = [], []
        for r in grp:
            values = [int(v) for v in r["spectrum"]]
            n = 2 * r["p"]
            counts = dict(r["spectrum"])
            off = [abs(v) for v in values if v != n or counts[str(v)] > 1]
            xs.append(r["p"])
            ys.append(max(off) if off else 0)
        ax.plot(xs, ys, "s", ms=4, color=CLASS_COLORS[residue], label=f"p = {residue} mod 8")
    ax.set_xlabel("p")
    ax.set_ylabel("max off-peak |C(w)|")
    ax.set_yscale("log")
    ax.set_title("Autocorrelation sidelobes")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


PLOTTERS = {"lc": plot_lc, "adic": plot_adic, "autocorr": plot_autocorr}


def render_scan_figures(rows, out_path) -> list[Path]:
    """One PNG per plottable check present in ``rows``: <stem>_<check>.png."""
    out_path = Path(out_path)
    written = []
    for check, plotter in PLOTTERS.items():
        subset = [r for r in rows if r["check"] == check]
        if not subset:
            continue
        target = out_path.with_name(f"{out_path.stem}_{check}.png")
        plotter(subset, target)
        written.append(target)
    return written
