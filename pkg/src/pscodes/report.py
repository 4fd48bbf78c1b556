"""Render sweep reports: delimited summary plus a matplotlib figure.

The figure goes to a file next to the TSV; no interactive backend is ever
required.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

plt.rcParams["figure.figsize"] = (6.4, 3.6)
plt.rcParams["font.size"] = 9
plt.rcParams["axes.spines.top"] = False
plt.rcParams["axes.spines.right"] = False

TSV_COLUMNS = ("scheme", "mode", "total", "recovered", "typed_failures",
               "mismatches", "max_bit_errors")


def report_tsv(reports) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    for r in reports:
        lines.append("\t".join(str(v) for v in (
            r.scheme, r.mode_text, r.total, r.recovered,
            r.typed_failures, r.mismatches, r.max_bit_errors,
        )))
    return "\n".join(lines) + "\n"


def render_sweep_figure(reports, path: str) -> str:
    """Bar chart of case verdicts per sweep; returns the written path."""
    fig, ax = plt.subplots()
    labels = [f"{r.scheme}\n{r.mode_text.split('(')[0]}" for r in reports]
    xs = range(len(reports))
    width = 0.28
    for off, (attr, color) in enumerate((
        ("recovered", "#2a7e43"),
        ("typed_failures", "#c98a1a"),
        ("mismatches", "#b03030"),
    )):
        vals = [getattr(r, attr) for r in reports]
        ax.bar([x + (off - 1) * width for x in xs], vals, width,
               label=attr.replace("_", " "), color=color)
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels)
    ax.set_ylabel("cases")
    ax.set_title("sweep verdicts")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def write_report_files(reports, out_dir: str, stem: str = "report") -> dict[str, str]:
    """Write <stem>.txt, <stem>.tsv and <stem>.png under out_dir."""
    os.makedirs(out_dir, exist_ok=True)
    paths = {
        "txt": os.path.join(out_dir, f"{stem}.txt"),
        "tsv": os.path.join(out_dir, f"{stem}.tsv"),
        "png": os.path.join(out_dir, f"{stem}.png"),
    }
    with open(paths["txt"], "w") as fh:
        for r in reports:
            fh.write(r.to_text())
            fh.write("\n")
    with open(paths["tsv"], "w") as fh:
        fh.write(report_tsv(reports))
    render_sweep_figure(reports, paths["png"])
    return paths
