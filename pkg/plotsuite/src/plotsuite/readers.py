"""Parsers for the simulator's output files.

Implemented from the documented formats, on purpose without importing the
simulator. Every parse failure raises FormatError with the file, the
1-based line number and the column name, so a schema drift points
straight at the offending cell.

Formats:
  sweep table CSV   header system,parity,N,epsilon,model,tau,mean_F,
                    stderr_F,n_real,master_seed; '# complete: true|false'
                    trailing comment
  curve CSV         header t,f,F
  spectrum CSV      header k,E,P1
  contour fit JSON  keys level, points ([[N, eps], ...]), beta, const,
                    r_squared
Comment lines start with '#' and may appear anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np


class FormatError(ValueError):
    """An input file does not match its documented schema."""


def _data_lines(path: Path) -> tuple[list[tuple[int, str]], list[str]]:
    """Non-comment lines with their 1-based line numbers, plus comments."""
    rows = []
    comments = []
    try:
        text = path.read_text()
    except OSError as exc:
        raise FormatError(f"{path}: cannot read: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            comments.append(stripped.lstrip("#").strip())
        else:
            rows.append((lineno, stripped))
    return rows, comments


def _split_header(path: Path, rows, expected: tuple[str, ...]):
    if not rows:
        raise FormatError(f"{path}: empty file, expected header "
                          f"{','.join(expected)}")
    lineno, header = rows[0]
    names = tuple(c.strip() for c in header.split(","))
    if names != expected:
        raise FormatError(
            f"{path}: row {lineno}: header is {','.join(names)!r}, "
            f"expected {','.join(expected)!r}"
        )
    if len(rows) == 1:
        raise FormatError(f"{path}: no data rows")
    return rows[1:]


def _cell_float(path: Path, lineno: int, column: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise FormatError(
            f"{path}: row {lineno}, column {column!r}: "
            f"cannot parse {raw!r} as a number"
        ) from None


def _cell_int(path: Path, lineno: int, column: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise FormatError(
            f"{path}: row {lineno}, column {column!r}: "
            f"cannot parse {raw!r} as an integer"
        ) from None


def _split_row(path: Path, lineno: int, line: str, columns) -> list[str]:
    cells = [c.strip() for c in line.split(",")]
    if len(cells) != len(columns):
        raise FormatError(
            f"{path}: row {lineno}: expected {len(columns)} columns "
            f"({','.join(columns)}), found {len(cells)}"
        )
    return cells


# ---------------------------------------------------------------------------
# sweep tables
# ---------------------------------------------------------------------------

_SWEEP_COLUMNS = ("system", "parity", "N", "epsilon", "model", "tau",
                  "mean_F", "stderr_F", "n_real", "master_seed")


@dataclass(frozen=True)
class SweepData:
    """One disorder-averaged fidelity table, column-wise."""

    system: tuple
    parity: tuple
    n_sites: np.ndarray
    epsilon: np.ndarray
    model: tuple
    tau: np.ndarray
    mean_F: np.ndarray
    stderr_F: np.ndarray
    n_real: np.ndarray
    master_seed: tuple
    complete: bool | None

    def __len__(self) -> int:
        return len(self.system)

    def groups(self):
        """Sorted unique (system, n_sites, model) combinations."""
        seen = sorted({
            (self.system[i], int(self.n_sites[i]), self.model[i])
            for i in range(len(self))
        })
        return seen

    def select(self, system=None, n_sites=None, model=None) -> "SweepData":
        keep = np.ones(len(self), dtype=bool)
        if system is not None:
            keep &= np.array([s == system for s in self.system])
        if n_sites is not None:
            keep &= self.n_sites == n_sites
        if model is not None:
            keep &= np.array([m == model for m in self.model])
        idx = np.flatnonzero(keep)
        return SweepData(
            system=tuple(self.system[i] for i in idx),
            parity=tuple(self.parity[i] for i in idx),
            n_sites=self.n_sites[idx],
            epsilon=self.epsilon[idx],
            model=tuple(self.model[i] for i in idx),
            tau=self.tau[idx],
            mean_F=self.mean_F[idx],
            stderr_F=self.stderr_F[idx],
            n_real=self.n_real[idx],
            master_seed=tuple(self.master_seed[i] for i in idx),
            complete=self.complete,
        )

    def grid(self, name: str = "<table>"):
        """Pivot to (epsilons, lengths, F, stderr) 2D arrays.

        Requires exactly one (system, model) pair and a complete
        rectangular grid; anything else is a format problem for a
        heatmap input.
        """
        pairs = sorted({(s, m) for s, m in zip(self.system, self.model)})
        if len(pairs) != 1:
            raise FormatError(
                f"{name}: heatmap needs exactly one (system, model) pair, "
                f"found {pairs}; filter with 'system'/'model'"
            )
        eps = np.unique(self.epsilon)
        lengths = np.unique(self.n_sites)
        F = np.full((lengths.size, eps.size), np.nan)
        err = np.full_like(F, np.nan)
        for i in range(len(self)):
            r = int(np.searchsorted(lengths, self.n_sites[i]))
            c = int(np.searchsorted(eps, self.epsilon[i]))
            F[r, c] = self.mean_F[i]
            err[r, c] = self.stderr_F[i]
        holes = np.argwhere(np.isnan(F))
        if holes.size:
            r, c = holes[0]
            raise FormatError(
                f"{name}: missing cell at N={int(lengths[r])}, "
                f"epsilon={eps[c]:g}; the (epsilon, N) grid must be complete"
            )
        return eps, lengths, F, err


def read_sweep(path) -> SweepData:
    path = Path(path)
    rows, comments = _data_lines(path)
    data = _split_header(path, rows, _SWEEP_COLUMNS)
    cols: dict = {c: [] for c in _SWEEP_COLUMNS}
    for lineno, line in data:
        cells = _split_row(path, lineno, line, _SWEEP_COLUMNS)
        cols["system"].append(cells[0])
        cols["parity"].append(cells[1])
        cols["N"].append(_cell_int(path, lineno, "N", cells[2]))
        cols["epsilon"].append(_cell_float(path, lineno, "epsilon", cells[3]))
        model = cells[4]
        if model not in ("rsd", "asd"):
            raise FormatError(
                f"{path}: row {lineno}, column 'model': "
                f"expected 'rsd' or 'asd', found {model!r}"
            )
        cols["model"].append(model)
        cols["tau"].append(_cell_float(path, lineno, "tau", cells[5]))
        cols["mean_F"].append(_cell_float(path, lineno, "mean_F", cells[6]))
        cols["stderr_F"].append(_cell_float(path, lineno, "stderr_F", cells[7]))
        cols["n_real"].append(_cell_int(path, lineno, "n_real", cells[8]))
        cols["master_seed"].append(
            _cell_int(path, lineno, "master_seed", cells[9]))
    complete = None
    for comment in comments:
        if comment.startswith("complete:"):
            complete = comment.split(":", 1)[1].strip() == "true"
    return SweepData(
        system=tuple(cols["system"]),
        parity=tuple(cols["parity"]),
        n_sites=np.array(cols["N"], dtype=int),
        epsilon=np.array(cols["epsilon"]),
        model=tuple(cols["model"]),
        tau=np.array(cols["tau"]),
        mean_F=np.array(cols["mean_F"]),
        stderr_F=np.array(cols["stderr_F"]),
        n_real=np.array(cols["n_real"], dtype=int),
        master_seed=tuple(cols["master_seed"]),
        complete=complete,
    )


# ---------------------------------------------------------------------------
# fidelity curves and spectra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CurveData:
    t: np.ndarray
    f: np.ndarray
    F: np.ndarray


def read_curve(path) -> CurveData:
    path = Path(path)
    data = _split_header(path, _data_lines(path)[0], ("t", "f", "F"))
    t, f, F = [], [], []
    for lineno, line in data:
        cells = _split_row(path, lineno, line, ("t", "f", "F"))
        t.append(_cell_float(path, lineno, "t", cells[0]))
        f.append(_cell_float(path, lineno, "f", cells[1]))
        F.append(_cell_float(path, lineno, "F", cells[2]))
    return CurveData(np.array(t), np.array(f), np.array(F))


@dataclass(frozen=True)
class SpectrumData:
    k: np.ndarray
    E: np.ndarray
    P1: np.ndarray


def read_spectrum(path) -> SpectrumData:
    path = Path(path)
    data = _split_header(path, _data_lines(path)[0], ("k", "E", "P1"))
    k, E, P1 = [], [], []
    for lineno, line in data:
        cells = _split_row(path, lineno, line, ("k", "E", "P1"))
        k.append(_cell_float(path, lineno, "k", cells[0]))
        E.append(_cell_float(path, lineno, "E", cells[1]))
        P1.append(_cell_float(path, lineno, "P1", cells[2]))
    return SpectrumData(np.array(k), np.array(E), np.array(P1))


# ---------------------------------------------------------------------------
# contour fits
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ContourFitData:
    level: float
    n_sites: np.ndarray
    epsilon: np.ndarray
    beta: float
    const: float
    r_squared: float


def read_contour_fit(path) -> ContourFitData:
    path = Path(path)
    try:
        payload = json.loads(path.read_text())
    except OSError as exc:
        raise FormatError(f"{path}: cannot read: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise FormatError(f"{path}: expected a JSON object")
    missing = {"level", "points", "beta", "const", "r_squared"} - set(payload)
    if missing:
        raise FormatError(f"{path}: missing keys {sorted(missing)}")
    points = payload["points"]
    if not isinstance(points, list) or not points:
        raise FormatError(f"{path}: column 'points': expected a non-empty list")
    n_sites, epsilon = [], []
    for i, pair in enumerate(points):
        if (not isinstance(pair, (list, tuple)) or len(pair) != 2
                or not all(isinstance(v, (int, float)) for v in pair)):
            raise FormatError(
                f"{path}: row {i} of 'points': expected [N, epsilon], "
                f"found {pair!r}"
            )
        n_sites.append(pair[0])
        epsilon.append(pair[1])
    try:
        return ContourFitData(
            level=float(payload["level"]),
            n_sites=np.array(n_sites, dtype=float),
            epsilon=np.array(epsilon, dtype=float),
            beta=float(payload["beta"]),
            const=float(payload["const"]),
            r_squared=float(payload["r_squared"]),
        )
    except (TypeError, ValueError) as exc:
        raise FormatError(f"{path}: non-numeric fit field: {exc}") from None
