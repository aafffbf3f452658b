"""Report files for verification runs: JSON + CSV, with optional figures.

The JSON array is the machine contract; summary.csv carries one row per
check.  When figures are enabled, each identity gets a coefficient-comparison
chart at the largest parameters it was checked at, plus a pass/fail overview
grid.  matplotlib is imported lazily so plain CLI runs never load it.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .identities import Report
from .qpoly import BiPoly


def report_json_entry(rep: Report, with_timing: bool = True) -> dict:
    entry = {
        "id": rep.id,
        "params": rep.params(),
        "status": rep.status,
        "lhs_terms": [list(t) for t in rep.lhs.sorted_terms()],
        "rhs_terms": [list(t) for t in rep.rhs.sorted_terms()],
    }
    if with_timing:
        entry["elapsed_ms"] = round(rep.elapsed_ms, 3)
    return entry


def write_report(
    reports: list[Report], outdir: str | Path, figures: bool = True
) -> list[Path]:
    """Write report.json, summary.csv and (optionally) PNG figures; return paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    json_path = outdir / "report.json"
    json_path.write_text(
        json.dumps([report_json_entry(r) for r in reports], indent=2) + "\n"
    )
    written.append(json_path)

    csv_path = outdir / "summary.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "n", "r", "status", "detail", "elapsed_ms"])
        for r in reports:
            writer.writerow(
                [r.id, r.n, "" if r.r is None else r.r, r.status, r.detail,
                 f"{r.elapsed_ms:.3f}"]
            )
    written.append(csv_path)

    if figures:
        written.extend(render_figures(reports, outdir / "figures"))
    return written


def _poly_series(p: BiPoly):
    terms = p.sorted_terms()
    labels = [f"q^{a}" if b == 0 else f"q^{a}t^{b}" for a, b, _ in terms]
    return labels, [c for _, _, c in terms]


def _merged_axis(lhs: BiPoly, rhs: BiPoly):
    keys = sorted({(a, b) for a, b, _ in lhs.sorted_terms()}
                  | {(a, b) for a, b, _ in rhs.sorted_terms()})
    labels = [f"q^{a}" if b == 0 else f"q^{a}t^{b}" for a, b in keys]
    lvals = [lhs.coefficient(a, b) for a, b in keys]
    rvals = [rhs.coefficient(a, b) for a, b in keys]
    return labels, lvals, rvals


def render_figures(reports: list[Report], figdir: str | Path) -> list[Path]:
    """One LHS-vs-RHS coefficient chart per identity, plus an overview grid."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    figdir = Path(figdir)
    figdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    largest: dict[str, Report] = {}
    for rep in reports:
        key = rep.id
        if key not in largest or (rep.n, rep.r or 0) > (largest[key].n, largest[key].r or 0):
            largest[key] = rep

    for rep in largest.values():
        labels, lvals, rvals = _merged_axis(rep.lhs, rep.rhs)
        if not labels:
            labels, lvals, rvals = ["1"], [rep.lhs.coefficient(0, 0)], [rep.rhs.coefficient(0, 0)]
        fig, ax = plt.subplots(figsize=(max(4.0, 0.34 * len(labels) + 1.5), 3.2))
        xs = range(len(labels))
        ax.bar(xs, lvals, width=0.7, color="#4878cf", label="enumerated")
        ax.plot(xs, rvals, "o", color="#d65f5f", markersize=4, label="reference")
        ax.set_xticks(list(xs))
        step = max(1, len(labels) // 24)
        ax.set_xticklabels(
            [lab if i % step == 0 else "" for i, lab in enumerate(labels)],
            rotation=90, fontsize=7,
        )
        ax.set_ylabel("coefficient")
        params = f"n={rep.n}" + (f", r={rep.r}" if rep.r is not None else "")
        ax.set_title(f"{rep.id} ({params}): {rep.status.upper()}")
        ax.legend(fontsize=8)
        fig.tight_layout()
        path = figdir / f"{rep.id}.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    # Overview: identities x sweep index, green pass / red fail.
    ids = list(dict.fromkeys(rep.id for rep in reports))
    by_id: dict[str, list[Report]] = {i: [] for i in ids}
    for rep in reports:
        by_id[rep.id].append(rep)
    width = max(len(v) for v in by_id.values()) if by_id else 1
    grid = [[0.5] * width for _ in ids]
    for row, ident in enumerate(ids):
        for col, rep in enumerate(by_id[ident]):
            grid[row][col] = 1.0 if rep.passed else 0.0
    fig, ax = plt.subplots(figsize=(0.45 * width + 2.5, 0.28 * len(ids) + 1.5))
    ax.imshow(grid, cmap="RdYlGn", vmin=0.0, vmax=1.0, aspect="auto")
    ax.set_yticks(range(len(ids)))
    ax.set_yticklabels(ids, fontsize=7)
    ax.set_xlabel("parameter sweep index")
    ax.set_title("verification overview (green = pass)")
    fig.tight_layout()
    path = figdir / "overview.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)
    return written


def render_distribution(poly: BiPoly, path: str | Path, title: str) -> Path:
    """Bar chart (univariate) or heat map (bivariate) of a polynomial."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    terms = poly.sorted_terms()
    fig, ax = plt.subplots(figsize=(6.0, 3.4))
    if poly.is_univariate_q():
        amax = max((a for a, _, _ in terms), default=0)
        coeffs = [poly.coefficient(a, 0) for a in range(amax + 1)]
        ax.bar(range(amax + 1), coeffs, color="#4878cf")
        ax.set_xlabel("q exponent")
        ax.set_ylabel("coefficient")
    else:
        amax = max(a for a, _, _ in terms)
        bmax = max(b for _, b, _ in terms)
        grid = [[poly.coefficient(a, b) for a in range(amax + 1)] for b in range(bmax + 1)]
        im = ax.imshow(grid, origin="lower", cmap="viridis", aspect="auto")
        fig.colorbar(im, ax=ax, label="coefficient")
        ax.set_xlabel("q exponent")
        ax.set_ylabel("t exponent")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
