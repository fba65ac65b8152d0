"""Follow a single excitation through clean chains.

Run: python3 demos/02_clean_transfer.py
"""

import math

import numpy as np

from spinchain import (
    alpha_boundary_profile,
    analytic_tau_estimate,
    averaged_fidelity,
    diagonalize,
    optimize_alpha,
    pst_linear_profile,
    site_amplitudes,
    transfer_amplitude,
    transfer_time,
)


def ascii_bar(value: float, width: int = 40) -> str:
    return "#" * int(round(value * width))


def main() -> None:
    n = 50
    profile = pst_linear_profile(n)
    est = analytic_tau_estimate("pst_linear", n)
    tau = transfer_time(profile, est)
    print(f"linear-spectrum chain, N={n}: arrival at t={tau:.4f}"
          f" (estimate pi*N/4 = {est:.4f})")

    print("\nexcitation probability along the chain while it travels:")
    for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
        psi = site_amplitudes(profile, frac * tau)
        prob = np.abs(psi) ** 2
        peak = int(np.argmax(prob))
        print(f"  t={frac * tau:7.2f}  site {peak + 1:>3}"
              f"  p={prob[peak]:.3f}  {ascii_bar(prob[peak])}")

    sp = diagonalize(profile)
    f_tau = float(transfer_amplitude(sp, tau))
    print(f"\n|amplitude| at arrival: {f_tau:.12f}"
          f"  (F = {averaged_fidelity(f_tau):.12f})")

    # Boundary-controlled chain: only the two edge couplings differ from 1.
    print("\nboundary-controlled chain at the same length:")
    opt = optimize_alpha(n)
    print(f"  optimized alpha = {opt.alpha:.4f}, arrival t = {opt.tau:.2f},"
          f" F = {opt.fidelity:.6f}")
    ratio = tau / opt.tau
    print(f"  arrival time ratio engineered/optimized = {ratio:.4f}"
          f" (pi/2 = {math.pi / 2:.4f})")

    weak = alpha_boundary_profile(51, 0.02)
    est = analytic_tau_estimate("alpha_weak", 51, alpha=0.02)
    t_weak = transfer_time(weak, est, selection="best")
    F_weak = averaged_fidelity(transfer_amplitude(diagonalize(weak), t_weak))
    print(f"\nweak boundaries (alpha=0.02, N=51): slow but nearly perfect,"
          f" t = {t_weak:.0f}, F = {F_weak:.6f}")


if __name__ == "__main__":
    main()
