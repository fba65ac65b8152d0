"""Exact single-excitation dynamics via spectral decomposition.

The transfer amplitude from site 1 to site n of an n-site chain is

    f(t) = |<n| exp(-i H t) |1>| = |sum_k a_{k,1} a_{k,n} exp(-i E_k t)|

with (E_k, a_k) the eigenpairs of the tridiagonal single-excitation
Hamiltonian.  Diagonalizing once makes the curve over any time grid a
single complex matrix product, so long chains and long horizons stay cheap.

The figure of merit is the input-averaged fidelity of transferring an
unknown qubit state,

    F(t) = f/3 + f^2/6 + 1/2,

valid once the arrival phase is compensated; F = 1 iff f = 1, and a fully
scrambled chain sits near F = 1/2.
"""

from dataclasses import dataclass
import io

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .profiles import CouplingProfile, _readonly

_CURVE_HEADER = "t,f,F"


@dataclass(frozen=True)
class SpectralData:
    """Eigenvalues plus the two eigenvector rows the amplitude needs.

    The full eigenvector matrix is kept only on request (diagonalize with
    keep_vectors=True); the transfer amplitude never needs it.
    """

    n_sites: int
    energies: np.ndarray           # ascending
    first_components: np.ndarray   # a_{k,1}, sign-fixed positive
    end_components: np.ndarray     # a_{k,n}
    vectors: np.ndarray | None = None   # column k = eigenvector k

    def __post_init__(self):
        for name in ("energies", "first_components", "end_components"):
            v = _readonly(getattr(self, name))
            if v.shape != (self.n_sites,):
                raise ValueError(f"{name} must have shape ({self.n_sites},), got {v.shape}")
            object.__setattr__(self, name, v)
        if not np.all(np.diff(self.energies) >= 0):
            raise ValueError("energies must be sorted ascending")
        if self.vectors is not None:
            m = _readonly(self.vectors)
            if m.shape != (self.n_sites, self.n_sites):
                raise ValueError(f"vectors must be square, got {m.shape}")
            object.__setattr__(self, "vectors", m)

    @property
    def transfer_weights(self) -> np.ndarray:
        """w_k = a_{k,1} a_{k,n}; sums to <n|1> = 0 and |.|-sums to >= f(t)."""
        return self.first_components * self.end_components


@dataclass(frozen=True)
class TransferCurve:
    """Sampled f(t) and F(t) on a common time grid."""

    times: np.ndarray
    f: np.ndarray
    F: np.ndarray

    def __post_init__(self):
        t = _readonly(self.times)
        f = _readonly(self.f)
        F = _readonly(self.F)
        if not (t.shape == f.shape == F.shape) or t.ndim != 1:
            raise ValueError("times, f, F must be 1-d arrays of equal length")
        if f.size and (f.min() < -1e-12 or f.max() > 1.0 + 1e-12):
            raise ValueError(f"f out of [0, 1]: range [{f.min()}, {f.max()}]")
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "F", F)

    @property
    def peak_index(self) -> int:
        return int(np.argmax(self.f))


def diagonalize(profile_or_couplings, keep_vectors: bool = False) -> SpectralData:
    """Eigen-decompose the zero-diagonal tridiagonal Hamiltonian.

    Accepts a CouplingProfile or a raw coupling array.  The eigenvector
    sign is fixed by a_{k,1} > 0, which makes downstream quantities
    reproducible across library versions.
    """
    if isinstance(profile_or_couplings, CouplingProfile):
        J = profile_or_couplings.couplings
    else:
        J = np.asarray(profile_or_couplings, dtype=float)
        if J.ndim != 1 or J.size < 1:
            raise ValueError("couplings must be a 1-d array with at least one entry")
    n = J.size + 1
    energies, vectors = eigh_tridiagonal(np.zeros(n), J)
    flip = vectors[0, :] < 0
    # a_{k,1} never vanishes for an unreducible Jacobi matrix, but it can
    # underflow to exactly zero; fall back to the last-site sign there
    flip |= (vectors[0, :] == 0.0) & (vectors[-1, :] < 0)
    vectors[:, flip] *= -1.0
    first = vectors[0, :].copy()
    last = vectors[-1, :].copy()
    return SpectralData(n, energies, first, last, vectors if keep_vectors else None)


def transfer_amplitude(spectral: SpectralData, t) -> np.ndarray | float:
    """f(t) = |sum_k a_{k,1} a_{k,n} e^{-i E_k t}| for scalar or array t."""
    w = spectral.transfer_weights
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.empty(t_arr.size)
    # chunk the phase matrix so huge time grids do not allocate n_t x n
    block = max(1, int(2_000_000 // max(1, spectral.n_sites)))
    for lo in range(0, t_arr.size, block):
        chunk = t_arr[lo : lo + block]
        phases = np.exp(-1j * np.outer(chunk, spectral.energies))
        out[lo : lo + chunk.size] = np.abs(phases @ w)
    out = np.minimum(out, 1.0 + 1e-12)
    if np.isscalar(t) or np.asarray(t).ndim == 0:
        return float(out[0])
    return out


def averaged_fidelity(f) -> np.ndarray | float:
    """Input-averaged transfer fidelity F = f/3 + f^2/6 + 1/2.

    Assumes the arrival phase has been compensated, so the amplitude enters
    through its magnitude only.
    """
    f_arr = np.asarray(f, dtype=float)
    if f_arr.size and (f_arr.min() < -1e-9 or f_arr.max() > 1.0 + 1e-9):
        raise ValueError(
            f"amplitude magnitude outside [0, 1]: range [{f_arr.min()}, {f_arr.max()}]"
        )
    f_arr = np.clip(f_arr, 0.0, 1.0)
    F = f_arr / 3.0 + f_arr**2 / 6.0 + 0.5
    if np.isscalar(f) or np.asarray(f).ndim == 0:
        return float(F)
    return F


def amplitude_double_sum(spectral: SpectralData, t: float) -> float:
    """|f(t)| computed from the double spectral sum over eigenpair pairs.

    sum_{k,l} w_k w_l cos((E_k - E_l) t) equals |f(t)|^2 expanded term by
    term; the square root is returned.  Kept as an independent cross-check
    of transfer_amplitude, not for production use (it costs O(n^2) per t).
    """
    w = spectral.transfer_weights
    E = spectral.energies
    gaps = E[:, None] - E[None, :]
    s = float(np.sum((w[:, None] * w[None, :]) * np.cos(gaps * t)))
    return float(np.sqrt(max(s, 0.0)))


def site_amplitudes(profile_or_couplings, t: float) -> np.ndarray:
    """Complex amplitudes on every site at time t, starting from site 1.

    Uses a dense eigen-decomposition, deliberately independent of the
    tridiagonal path used elsewhere, so the two can cross-validate.
    """
    if isinstance(profile_or_couplings, CouplingProfile):
        J = profile_or_couplings.couplings
    else:
        J = np.asarray(profile_or_couplings, dtype=float)
    n = J.size + 1
    H = np.diag(J, 1) + np.diag(J, -1)
    energies, vectors = np.linalg.eigh(H)
    psi0 = vectors[0, :]                       # <k|1> for each eigenvector k
    return vectors @ (np.exp(-1j * energies * t) * psi0)


def fidelity_curve(profile_or_couplings, times) -> TransferCurve:
    """Sample f and F over a time grid, diagonalizing once."""
    t = np.asarray(times, dtype=float)
    if t.ndim != 1:
        raise ValueError("time grid must be 1-d")
    spectral = diagonalize(profile_or_couplings)
    f = transfer_amplitude(spectral, t) if t.size else np.empty(0)
    return TransferCurve(t, f, averaged_fidelity(f))


# ---------------------------------------------------------------------------
# CSV round trip
# ---------------------------------------------------------------------------

def curve_to_csv(curve: TransferCurve, header_lines: tuple[str, ...] = ()) -> str:
    """CSV with columns t,f,F at 12 significant digits.

    header_lines are emitted first as '# ...' comments.
    """
    buf = io.StringIO()
    for line in header_lines:
        buf.write(f"# {line}\n")
    buf.write(_CURVE_HEADER + "\n")
    for t, f, F in zip(curve.times, curve.f, curve.F):
        buf.write(f"{t:.12g},{f:.12g},{F:.12g}\n")
    return buf.getvalue()


def curve_from_csv(text: str) -> TransferCurve:
    rows = []
    header_seen = False
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if line != _CURVE_HEADER:
                raise ValueError(f"line {i}: expected header {_CURVE_HEADER!r}, got {line!r}")
            header_seen = True
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise ValueError(f"line {i}: expected 3 columns, got {len(parts)}")
        rows.append(tuple(float(p) for p in parts))
    if not header_seen:
        raise ValueError("missing t,f,F header")
    if not rows:
        return TransferCurve(np.empty(0), np.empty(0), np.empty(0))
    arr = np.array(rows)
    return TransferCurve(arr[:, 0], arr[:, 1], arr[:, 2])
