"""The JSON figure specification.

A figure spec is a single JSON object:

    {
      "kind": "spectrum" | "curves" | "heatmap" | "contours",
      "inputs": ["fig2a.csv", ...],
      "output": "fig2a.png",
      "labels": ["engineered", ...],        optional, one per input
      "x_scale": "linear" | "log",          optional, default linear
      "y_scale": "linear" | "log",          optional, default linear
      "title": "...",                       optional
      "levels": [0.9],                      optional, heatmap overlays
      "system": "pst_linear",               optional, sweep-table filter
      "model": "rsd",                       optional, sweep-table filter
      "dpi": 150                            optional
    }

Relative input/output paths are resolved against the directory the spec
file lives in, so a spec can travel with its data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

KINDS = ("spectrum", "curves", "heatmap", "contours")
SCALES = ("linear", "log")


class FigureSpecError(ValueError):
    """The figure spec itself is malformed."""


@dataclass(frozen=True)
class FigureSpec:
    kind: str
    inputs: tuple
    output: Path
    labels: tuple = ()
    x_scale: str = "linear"
    y_scale: str = "linear"
    title: str = ""
    levels: tuple = (0.9,)
    system: str | None = None
    model: str | None = None
    dpi: int = 150

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FigureSpecError(
                f"field 'kind': expected one of {KINDS}, found {self.kind!r}")
        if not self.inputs:
            raise FigureSpecError("field 'inputs': at least one input file")
        if self.labels and len(self.labels) != len(self.inputs):
            raise FigureSpecError(
                f"field 'labels': {len(self.labels)} labels for "
                f"{len(self.inputs)} inputs")
        for scale_field in ("x_scale", "y_scale"):
            value = getattr(self, scale_field)
            if value not in SCALES:
                raise FigureSpecError(
                    f"field {scale_field!r}: expected one of {SCALES}, "
                    f"found {value!r}")
        if Path(self.output).suffix.lower() not in (".png", ".svg"):
            raise FigureSpecError(
                f"field 'output': expected a .png or .svg path, "
                f"found {self.output!r}")
        for level in self.levels:
            if not isinstance(level, (int, float)) or not 0.0 < level < 1.0:
                raise FigureSpecError(
                    f"field 'levels': fidelity levels must lie in (0, 1), "
                    f"found {level!r}")
        if self.dpi <= 0:
            raise FigureSpecError("field 'dpi': must be positive")
        missing = [str(p) for p in self.inputs if not Path(p).is_file()]
        if missing:
            raise FigureSpecError(f"input files not found: {missing}")

    def input_labels(self) -> tuple:
        if self.labels:
            return self.labels
        return tuple(Path(p).stem for p in self.inputs)


def load_figure_spec(path) -> FigureSpec:
    """Read and validate a figure spec file."""
    path = Path(path)
    try:
        payload = json.loads(path.read_text())
    except OSError as exc:
        raise FigureSpecError(f"{path}: cannot read: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FigureSpecError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise FigureSpecError(f"{path}: expected a JSON object")

    known = {"kind", "inputs", "output", "labels", "x_scale", "y_scale",
             "title", "levels", "system", "model", "dpi"}
    unknown = set(payload) - known
    if unknown:
        raise FigureSpecError(f"{path}: unknown fields {sorted(unknown)}")
    for required in ("kind", "inputs", "output"):
        if required not in payload:
            raise FigureSpecError(f"{path}: missing field {required!r}")

    base = path.parent
    inputs = payload["inputs"]
    if not isinstance(inputs, list) or not all(isinstance(p, str) for p in inputs):
        raise FigureSpecError(f"{path}: field 'inputs': expected a list of paths")
    labels = payload.get("labels", [])
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise FigureSpecError(f"{path}: field 'labels': expected a list of strings")

    try:
        return FigureSpec(
            kind=payload["kind"],
            inputs=tuple(base / p for p in inputs),
            output=base / str(payload["output"]),
            labels=tuple(labels),
            x_scale=payload.get("x_scale", "linear"),
            y_scale=payload.get("y_scale", "linear"),
            title=str(payload.get("title", "")),
            levels=tuple(payload.get("levels", [0.9])),
            system=payload.get("system"),
            model=payload.get("model"),
            dpi=int(payload.get("dpi", 150)),
        )
    except FigureSpecError as exc:
        raise FigureSpecError(f"{path}: {exc}") from None
