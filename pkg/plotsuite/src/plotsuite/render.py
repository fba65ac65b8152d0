"""Figure rendering.

render(spec) builds the figure for spec.kind, saves it to spec.output and
returns the matplotlib Figure so callers (and tests) can inspect exactly
what was drawn. Rendering is deterministic for identical inputs: the Agg
backend does the rasterizing, SVG output gets a fixed hash salt and no
date stamp.

Kinds:
  spectrum   inputs are spectrum CSVs (k,E,P1); two stacked panels, mode
             energies on top, first-site weights below (y_scale applies
             to the weight panel)
  curves     inputs are either fidelity-curve CSVs (t,f,F; plotted as F
             against t) or sweep tables (plotted as F against epsilon
             with stderr bars, one line per system/N/model group); the
             two cannot be mixed in one figure
  heatmap    input is a single sweep table covering a complete
             (epsilon, N) grid for one system and model; mean fidelity as
             a color map with iso-fidelity contour lines at spec.levels
  contours   inputs are contour-fit JSONs; measured points plus the
             fitted power law N = const * epsilon**(-beta) per input
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import numpy as np
from matplotlib.figure import Figure

from .figspec import FigureSpec
from .readers import (
    FormatError,
    read_contour_fit,
    read_curve,
    read_spectrum,
    read_sweep,
)

matplotlib.rcParams["svg.hashsalt"] = "plotsuite"


def _detect_csv(path) -> str:
    """Which CSV schema a file follows, judged by its header line."""
    for line in Path(path).read_text().splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        header = tuple(c.strip() for c in stripped.split(","))
        if header == ("t", "f", "F"):
            return "curve"
        if header[:3] == ("system", "parity", "N"):
            return "sweep"
        raise FormatError(
            f"{path}: row 1 of data: unrecognized header {','.join(header)!r}")
    raise FormatError(f"{path}: empty file")


def _new_figure(n_axes: int = 1) -> tuple:
    fig = Figure(figsize=(6.0, 4.0 if n_axes == 1 else 6.0), layout="tight")
    axes = fig.subplots(n_axes, 1, sharex=(n_axes > 1))
    return fig, (axes if n_axes > 1 else [axes])


def _render_spectrum(spec: FigureSpec) -> Figure:
    fig, (ax_e, ax_p) = _new_figure(2)
    for path, label in zip(spec.inputs, spec.input_labels()):
        data = read_spectrum(path)
        ax_e.plot(data.k, data.E, marker=".", ms=4, lw=0.8, label=label)
        ax_p.plot(data.k, data.P1, marker=".", ms=4, lw=0.8, label=label)
    ax_e.set_ylabel("E_k")
    ax_p.set_ylabel("P_k1")
    ax_p.set_xlabel("k")
    ax_e.set_xscale(spec.x_scale)
    ax_p.set_yscale(spec.y_scale)
    ax_e.legend(fontsize=8)
    return fig


def _render_curves(spec: FigureSpec) -> Figure:
    schemas = {path: _detect_csv(path) for path in spec.inputs}
    if len(set(schemas.values())) > 1:
        raise FormatError(
            "cannot mix time-curve and sweep-table inputs in one figure: "
            + ", ".join(f"{Path(p).name} is a {s} file"
                        for p, s in schemas.items()))
    fig, (ax,) = _new_figure(1)
    multi = len(spec.inputs) > 1
    if next(iter(schemas.values())) == "curve":
        for path, label in zip(spec.inputs, spec.input_labels()):
            data = read_curve(path)
            ax.plot(data.t, data.F, lw=1.0, label=label)
        ax.set_xlabel("t")
    else:
        for path, label in zip(spec.inputs, spec.input_labels()):
            table = read_sweep(path).select(system=spec.system,
                                            model=spec.model)
            if len(table) == 0:
                raise FormatError(
                    f"{path}: no rows match system={spec.system!r}, "
                    f"model={spec.model!r}")
            for system, n, model in table.groups():
                cell = table.select(system=system, n_sites=n, model=model)
                order = np.argsort(cell.epsilon)
                name = f"{system} N={n} {model}"
                if multi:
                    name = f"{label}: {name}"
                ax.errorbar(cell.epsilon[order], cell.mean_F[order],
                            yerr=cell.stderr_F[order], marker="o", ms=3,
                            lw=1.0, capsize=2, label=name)
        ax.set_xlabel("epsilon")
    ax.set_ylabel("F")
    ax.set_xscale(spec.x_scale)
    ax.set_yscale(spec.y_scale)
    ax.legend(fontsize=8)
    return fig


def _render_heatmap(spec: FigureSpec) -> Figure:
    if len(spec.inputs) != 1:
        raise FormatError(
            f"heatmap takes exactly one sweep table, got {len(spec.inputs)}")
    path = spec.inputs[0]
    table = read_sweep(path).select(system=spec.system, model=spec.model)
    if len(table) == 0:
        raise FormatError(f"{path}: no rows match system={spec.system!r}, "
                          f"model={spec.model!r}")
    eps, lengths, F, _ = table.grid(name=str(path))
    if eps.size < 2 or lengths.size < 2:
        raise FormatError(
            f"{path}: a heatmap needs at least 2 epsilon values and 2 "
            f"lengths, found {eps.size} x {lengths.size}")
    fig, (ax,) = _new_figure(1)
    mesh = ax.pcolormesh(eps, lengths, F, shading="nearest",
                         vmin=0.5, vmax=1.0)
    fig.colorbar(mesh, ax=ax, label="F")
    levels = sorted(spec.levels)
    cs = ax.contour(eps, lengths, F, levels=levels, colors="white",
                    linewidths=1.2)
    ax.clabel(cs, fontsize=7, fmt="%g")
    ax.set_xlabel("epsilon")
    ax.set_ylabel("N")
    ax.set_xscale(spec.x_scale)
    ax.set_yscale(spec.y_scale)
    return fig


def _render_contours(spec: FigureSpec) -> Figure:
    fig, (ax,) = _new_figure(1)
    for path, label in zip(spec.inputs, spec.input_labels()):
        fit = read_contour_fit(path)
        points = ax.plot(fit.epsilon, fit.n_sites, marker="o", ms=4, ls="",
                         label=f"{label} (beta={fit.beta:.2f})")
        dense = np.geomspace(fit.epsilon.min(), fit.epsilon.max(), 200)
        ax.plot(dense, fit.const * dense ** (-fit.beta), lw=1.0,
                color=points[0].get_color(), alpha=0.7)
    ax.set_xlabel("epsilon")
    ax.set_ylabel("N")
    ax.set_xscale(spec.x_scale)
    ax.set_yscale(spec.y_scale)
    ax.legend(fontsize=8)
    return fig


_RENDERERS = {
    "spectrum": _render_spectrum,
    "curves": _render_curves,
    "heatmap": _render_heatmap,
    "contours": _render_contours,
}


def render(spec: FigureSpec) -> Figure:
    """Build the figure described by spec and write spec.output."""
    fig = _RENDERERS[spec.kind](spec)
    if spec.title:
        fig.suptitle(spec.title)
    out = Path(spec.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    if out.suffix.lower() == ".svg":
        fig.savefig(out, metadata={"Date": None})
    else:
        fig.savefig(out, dpi=spec.dpi, metadata={"Software": "plotsuite"})
    return fig
