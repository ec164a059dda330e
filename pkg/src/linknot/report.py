"""Report rendering: write a census to disk as canonical JSON plus a CSV
breakdown and matplotlib figures (the diagram itself with over/under gaps,
and a bar chart of the breakdown)."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .census import CensusReport  # noqa: E402
from .diagram import Diagram  # noqa: E402

_PART_COLORS = ["tab:blue", "tab:orange", "tab:green", "tab:red",
                "tab:purple", "tab:brown", "tab:pink", "tab:olive", "tab:cyan"]


def write_report(d: Diagram, report: CensusReport, outdir, stem: str = "report") -> dict:
    """Write report artifacts into ``outdir``: <stem>.json (canonical census),
    <stem>.csv (breakdown rows), <stem>_diagram.png and <stem>_breakdown.png.
    Returns the paths written."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = {
        "json": outdir / f"{stem}.json",
        "csv": outdir / f"{stem}.csv",
        "diagram": outdir / f"{stem}_diagram.png",
        "breakdown": outdir / f"{stem}_breakdown.png",
    }
    paths["json"].write_text(report.to_json())
    _write_csv(report, paths["csv"])
    draw_diagram(d, paths["diagram"])
    _draw_breakdown(report, paths["breakdown"])
    return {k: str(v) for k, v in paths.items()}


def _write_csv(report: CensusReport, path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["kind", "shape", "parity", "count"])
        for (m, n, parity), cnt in sorted(report.link_breakdown.items()):
            w.writerow(["link", f"({m},{n})", parity, cnt])
        for length, cnt in sorted(report.knot_breakdown.items()):
            w.writerow(["knot", str(length), "", cnt])
        if report.link_total is not None:
            w.writerow(["link-total", "", "", report.link_total])
        if report.knot_total is not None:
            w.writerow(["knot-total", "", "", report.knot_total])


def draw_diagram(d: Diagram, path) -> None:
    """Render the diagram with standard strand gaps at crossings: every edge
    is drawn as its polyline, then each crossing gets a background disc with
    the over strand's local segment redrawn on top."""
    fig, ax = plt.subplots(figsize=(7, 7))
    part_of = getattr(d.graph, "part_of", None)
    for e in range(len(d.graph.edges)):
        pts = d.polyline(e)
        ax.plot([float(p[0]) for p in pts], [float(p[1]) for p in pts],
                color="black", lw=1.2, zorder=1)
    for c in d.crossings():
        x, y = float(c.point[0]), float(c.point[1])
        ax.scatter([x], [y], s=60, color="white", zorder=2)
        over = c.over_edge()
        seg, t = c.pos_on(over)
        pts = d.polyline(over)
        a, b = pts[seg], pts[seg + 1]
        dx, dy = float(b[0] - a[0]), float(b[1] - a[1])
        norm = max((dx * dx + dy * dy) ** 0.5, 1e-9)
        h = min(0.04 * _span(d), norm / 3)
        ax.plot([x - dx / norm * h, x + dx / norm * h],
                [y - dy / norm * h, y + dy / norm * h],
                color="black", lw=1.2, zorder=3)
    for v, p in enumerate(d.positions):
        color = _PART_COLORS[part_of[v] % len(_PART_COLORS)] if part_of else "tab:gray"
        ax.scatter([float(p[0])], [float(p[1])], s=60, color=color, zorder=4)
        ax.annotate(str(v), (float(p[0]), float(p[1])),
                    textcoords="offset points", xytext=(4, 4), fontsize=8)
    ax.set_aspect("equal")
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _span(d: Diagram) -> float:
    xs = [float(p[0]) for p in d.positions]
    ys = [float(p[1]) for p in d.positions]
    return max(max(xs) - min(xs), max(ys) - min(ys), 1.0)


def _draw_breakdown(report: CensusReport, path) -> None:
    labels, counts = [], []
    for (m, n, parity), cnt in sorted(report.link_breakdown.items()):
        labels.append(f"({m},{n}) {parity}")
        counts.append(cnt)
    for length, cnt in sorted(report.knot_breakdown.items()):
        labels.append(f"knot len {length}")
        counts.append(cnt)
    fig, ax = plt.subplots(figsize=(max(4, len(labels) * 0.9), 4))
    if labels:
        ax.bar(range(len(labels)), counts, color="tab:blue")
        ax.set_xticks(range(len(labels)))
        ax.set_xticklabels(labels, rotation=45, ha="right")
    else:
        ax.text(0.5, 0.5, "no links or knots detected", ha="center", va="center")
        ax.set_axis_off()
    ax.set_ylabel("count")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
