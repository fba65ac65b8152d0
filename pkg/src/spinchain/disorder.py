"""Static coupling disorder and disorder-averaged transfer fidelity.

Two error models, both drawing i.i.d. relative kicks delta_i ~ U[-eps, eps]:

* relative ("rsd"):  J_i -> J_i + J_i * delta_i, a fabrication error that
  scales with the coupling being built.
* absolute ("asd"):  J_i -> J_i + J_max * delta_i, an error floor set by the
  largest coupling (J_max = 1 after normalization), which is brutal for
  profiles whose weakest couplings are orders of magnitude below J_max.

By default only the interior couplings J_2 .. J_{N-2} are perturbed; the
boundary pair is treated as calibrated.  Perturbed couplings are used as
drawn, sign flips included, since eps <= 0.3 makes them rare and clamping
would bias the ensemble.

Randomness is counter-based (Philox) so every realization r of every
ensemble is addressable: key = (master_seed, 0), counter = (0, 0, r, 0).
Realization r draws its kicks in one call, in ascending coupling order.
The draws depend only on (master_seed, r, number of perturbed couplings),
never on the error model, so paired rsd/asd comparisons see identical
kick patterns.
"""

from dataclasses import dataclass

import numpy as np

from .dynamics import averaged_fidelity, diagonalize, transfer_amplitude
from .profiles import CouplingProfile, _readonly

_MODELS = ("rsd", "asd")


@dataclass(frozen=True)
class DisorderSpec:
    """One disorder configuration: model, strength, target range, seed."""

    model: str                     # "rsd" | "asd"
    epsilon: float
    master_seed: int = 0
    perturbed_range: tuple[int, int] | None = None  # 1-based coupling indices, inclusive

    def __post_init__(self):
        if self.model not in _MODELS:
            raise ValueError(f"model must be one of {_MODELS}, got {self.model!r}")
        if not (0.0 <= self.epsilon):
            raise ValueError(f"epsilon must be non-negative, got {self.epsilon}")
        if self.master_seed < 0:
            raise ValueError("master_seed must be non-negative")
        if self.perturbed_range is not None:
            lo, hi = self.perturbed_range
            if lo < 1 or hi < lo:
                raise ValueError(f"bad perturbed_range {self.perturbed_range}")

    def resolve_range(self, n_sites: int) -> tuple[int, int]:
        """Coupling indices to perturb, defaulting to the interior 2..N-2."""
        if self.perturbed_range is not None:
            lo, hi = self.perturbed_range
            if hi > n_sites - 1:
                raise ValueError(
                    f"perturbed_range {self.perturbed_range} exceeds coupling count {n_sites - 1}"
                )
            return lo, hi
        if n_sites < 4:
            raise ValueError(
                f"default interior range needs at least 4 sites, got {n_sites}"
            )
        return 2, n_sites - 2


@dataclass(frozen=True)
class EnsembleResult:
    """Disorder-averaged transfer statistics at a fixed readout time."""

    n_realizations: int
    mean_F: float
    stderr_F: float
    mean_f: float
    per_realization_F: np.ndarray | None = None

    def __post_init__(self):
        if self.per_realization_F is not None:
            object.__setattr__(self, "per_realization_F", _readonly(self.per_realization_F))


def _kick_generator(master_seed: int, realization: int) -> np.random.Generator:
    bitgen = np.random.Philox(
        key=np.array([master_seed, 0], dtype=np.uint64),
        counter=np.array([0, 0, realization, 0], dtype=np.uint64),
    )
    return np.random.Generator(bitgen)


def perturb(
    profile: CouplingProfile, spec: DisorderSpec, realization: int
) -> CouplingProfile:
    """One disordered copy of a profile.  Deterministic in (spec, realization)."""
    if realization < 0:
        raise ValueError("realization index must be non-negative")
    lo, hi = spec.resolve_range(profile.n_sites)
    J = profile.couplings.copy()
    if spec.epsilon > 0.0:
        delta = _kick_generator(spec.master_seed, realization).uniform(
            -spec.epsilon, spec.epsilon, hi - lo + 1
        )
        idx = slice(lo - 1, hi)       # couplings array is 0-based
        if spec.model == "rsd":
            J[idx] += J[idx] * delta
        else:
            J[idx] += float(profile.couplings.max()) * delta
    return CouplingProfile(profile.n_sites, J, kind="custom")


def ensemble_fidelity(
    profile: CouplingProfile,
    spec: DisorderSpec,
    tau: float,
    n_realizations: int = 500,
    keep_realizations: bool = False,
) -> EnsembleResult:
    """Mean and standard error of F(tau) over disorder realizations.

    The readout time tau is fixed at the unperturbed chain's transfer time:
    physically the receiver cannot re-time the protocol for couplings it
    cannot see.  Realization r always uses counter r, so the result is
    independent of evaluation order and of how many realizations any other
    ensemble consumed.
    """
    if n_realizations < 1:
        raise ValueError("need at least one realization")
    f_vals = np.empty(n_realizations)
    for r in range(n_realizations):
        perturbed = perturb(profile, spec, r)
        f_vals[r] = transfer_amplitude(diagonalize(perturbed), tau)
    F_vals = averaged_fidelity(f_vals)
    mean_F = float(F_vals.mean())
    stderr = float(F_vals.std(ddof=1) / np.sqrt(n_realizations)) if n_realizations > 1 else 0.0
    return EnsembleResult(
        n_realizations=n_realizations,
        mean_F=mean_F,
        stderr_F=stderr,
        mean_f=float(f_vals.mean()),
        per_realization_F=F_vals if keep_realizations else None,
    )
