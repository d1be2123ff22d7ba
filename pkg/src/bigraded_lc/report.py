"""Sweep reports: CSV serialization, linear fits and rendered figures.

CSV output is deterministic for fixed inputs and seed: metadata lines
carry no timestamps (wall time goes to stdout only) and files are
written via a temporary name and an atomic rename, so a failing sweep
never leaves a partial CSV behind.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field


@dataclass
class SweepRow:
    s: object = ""
    j: object = ""
    reg: object = ""
    dim: object = ""
    ann_exp: object = ""
    predicted: object = ""
    passed: object = None  # True/False, or None when there is no prediction

    def csv_cells(self):
        def fmt(v):
            return "" if v is None or v == "" else str(v)

        verdict = "" if self.passed is None else ("pass" if self.passed else "fail")
        return [
            fmt(self.s),
            fmt(self.j),
            fmt(self.reg),
            fmt(self.dim),
            fmt(self.ann_exp),
            fmt(self.predicted),
            verdict,
        ]


@dataclass
class SweepReport:
    metadata: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)
    wall_time: float = 0.0

    HEADER = "s,j,reg,dim,ann_exp,predicted,pass"

    def add(self, **kw):
        self.rows.append(SweepRow(**kw))

    def all_pass(self):
        checked = [r.passed for r in self.rows if r.passed is not None]
        return all(checked)

    def to_csv_text(self):
        lines = [f"# {k}={self.metadata[k]}" for k in sorted(self.metadata)]
        lines.append(self.HEADER)
        lines.extend(",".join(r.csv_cells()) for r in self.rows)
        return "\n".join(lines) + "\n"

    def write_csv(self, path):
        directory = os.path.dirname(os.path.abspath(path))
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".csv.part")
        try:
            with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
                fh.write(self.to_csv_text())
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def summary_lines(self):
        out = []
        for key in sorted(self.metadata):
            out.append(f"{key} = {self.metadata[key]}")
        npred = sum(1 for r in self.rows if r.passed is not None)
        nfail = sum(1 for r in self.rows if r.passed is False)
        out.append(f"rows: {len(self.rows)}, checked: {npred}, failed: {nfail}")
        out.append(f"wall time: {self.wall_time:.2f}s")
        return out


def least_squares_line(points):
    """Slope and intercept of the least-squares line through (x, y) pairs."""
    pts = list(points)
    if not pts:
        raise ValueError("no points to fit")
    if len(pts) == 1:
        return 0.0, float(pts[0][1])
    nx = len(pts)
    sx = sum(x for x, _ in pts)
    sy = sum(y for _, y in pts)
    sxx = sum(x * x for x, _ in pts)
    sxy = sum(x * y for x, y in pts)
    denom = nx * sxx - sx * sx
    if denom == 0:
        return 0.0, sy / nx
    slope = (nx * sxy - sx * sy) / denom
    intercept = (sy - slope * sx) / nx
    return slope, intercept


def bounding_line(points):
    """Least-squares line lifted to dominate every point.

    Returns (slope, intercept, max_shift): the fitted slope with the
    intercept raised by the largest positive residual, so the reported
    line lies on or above all data.
    """
    slope, intercept = least_squares_line(points)
    shift = max((y - (slope * x + intercept)) for x, y in points)
    shift = max(shift, 0.0)
    return slope, intercept + shift, shift


def render_sweep_figure(report, path, title=None):
    """Render reg / annihilation-exponent data against j to an image file."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    series = {}
    for row in report.rows:
        if row.j == "" or row.j is None:
            continue
        j = row.j
        for key, value in (("reg", row.reg), ("ann_exp", row.ann_exp),
                           ("predicted", row.predicted)):
            if value == "" or value is None:
                continue
            series.setdefault(key, []).append((j, value))

    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    styles = {
        "reg": dict(marker="o", linestyle="-", label="regularity"),
        "ann_exp": dict(marker="s", linestyle="--", label="annihilation exponent"),
        "predicted": dict(marker="x", linestyle=":", label="predicted"),
    }
    for key, pts in series.items():
        pts.sort()
        ax.plot([x for x, _ in pts], [y for _, y in pts], **styles[key])
    fit = report.metadata.get("fit_slope")
    if fit is not None and "ann_exp" in series:
        xs = sorted({x for x, _ in series["ann_exp"]})
        slope = float(report.metadata["fit_slope"])
        intercept = float(report.metadata.get("fit_intercept", 0.0))
        ax.plot(xs, [slope * x + intercept for x in xs],
                linestyle="-.", label="fitted bound")
    ax.set_xlabel("y-degree j")
    ax.set_ylabel("value")
    if title:
        ax.set_title(title)
    if series:
        ax.legend(loc="best", fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
