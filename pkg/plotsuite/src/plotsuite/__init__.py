"""Render figures from spinchain output files.

The simulator writes CSV tables and JSON fit records; this package turns
them into PNG or SVG figures. It never imports the simulator: the file
formats are the contract, and the parsers here implement that contract
independently so a drift on either side fails loudly.

Driven by a small JSON "figure spec" (see figspec.FigureSpec) and invoked
as a script:

    python3 -m plotsuite --spec figure.json
"""

from .figspec import FigureSpec, FigureSpecError
from .readers import (
    ContourFitData,
    CurveData,
    FormatError,
    SpectrumData,
    SweepData,
    read_contour_fit,
    read_curve,
    read_spectrum,
    read_sweep,
)
from .render import render

__all__ = [
    "ContourFitData",
    "CurveData",
    "FigureSpec",
    "FigureSpecError",
    "FormatError",
    "SpectrumData",
    "SweepData",
    "read_contour_fit",
    "read_curve",
    "read_spectrum",
    "read_sweep",
    "render",
]

__version__ = "0.1.0"
