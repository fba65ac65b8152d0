"""Average fidelity over static-disorder ensembles.

Run: python3 demos/03_disorder.py
"""

import numpy as np

from spinchain import (
    DisorderSpec,
    analytic_tau_estimate,
    ensemble_fidelity,
    optimize_alpha,
    perturb,
    pst_linear_profile,
    transfer_time,
)

REALIZATIONS = 150
SEED = 42


def main() -> None:
    n = 60
    lin = pst_linear_profile(n)
    tau_lin = transfer_time(lin, analytic_tau_estimate("pst_linear", n))
    opt = optimize_alpha(n)

    print(f"N={n}, {REALIZATIONS} realizations per point, seed {SEED}")
    print(f"engineered chain arrival  t={tau_lin:8.2f}")
    print(f"optimized boundary chain  t={opt.tau:8.2f} (alpha={opt.alpha:.3f})\n")

    header = f"{'eps':>6} | {'lin RSD':>16} | {'lin ASD':>16} | {'opt RSD':>16}"
    print(header)
    print("-" * len(header))
    from spinchain import alpha_boundary_profile
    optp = alpha_boundary_profile(n, opt.alpha)
    for eps in (0.005, 0.02, 0.08, 0.2):
        cells = []
        for profile, tau, model in (
            (lin, tau_lin, "rsd"),
            (lin, tau_lin, "asd"),
            (optp, opt.tau, "rsd"),
        ):
            r = ensemble_fidelity(
                profile, DisorderSpec(model, eps, master_seed=SEED), tau,
                n_realizations=REALIZATIONS,
            )
            cells.append(f"{r.mean_F:.4f} +- {r.stderr_F:.4f}")
        print(f"{eps:>6} | {cells[0]:>16} | {cells[1]:>16} | {cells[2]:>16}")

    print("\nfor the engineered chain the absolute model hits the weak")
    print("couplings near the boundaries much harder than the relative one;")
    print("the uniform-bulk boundary chain cannot tell the two apart.")

    # Show one actual disordered profile next to the clean one.
    spec = DisorderSpec("asd", 0.2, master_seed=SEED)
    kicked = perturb(lin, spec, realization=0)
    rel = (kicked.couplings - lin.couplings) / lin.couplings
    print(f"\nsample ASD realization at eps=0.2: relative kick on J ranges"
          f" from {rel.min():+.3f} to {rel.max():+.3f}")
    print(f"boundary couplings are left untouched:"
          f" J_1 {lin.couplings[0]:.6f} -> {kicked.couplings[0]:.6f},"
          f" J_{n - 1} {lin.couplings[-1]:.6f} -> {kicked.couplings[-1]:.6f}")
    again = perturb(lin, spec, realization=0)
    print(f"same seed, same realization index, same couplings:"
          f" {bool(np.array_equal(kicked.couplings, again.couplings))}")


if __name__ == "__main__":
    main()
