"""Arrival times, boundary optimization, sweeps, contours, crossovers."""

import math

import numpy as np
import pytest

from spinchain.dynamics import averaged_fidelity, diagonalize, transfer_amplitude
from spinchain.experiments import (
    ContourFit,
    FitError,
    InsufficientDataError,
    PRESET_PLANS,
    PeakSearchError,
    SweepRow,
    SweepTable,
    SystemKind,
    analytic_tau_estimate,
    contour_fit_from_json,
    derive_cell_seed,
    extract_contour,
    find_crossover,
    fit_power_law,
    optimize_alpha,
    run_sweep,
    sweep_table_from_csv,
    sweep_table_to_csv,
    transfer_time,
)
from spinchain.profiles import (
    alpha_boundary_profile,
    homogeneous_profile,
    pst_linear_profile,
)


# ---------------------------------------------------------------------------
# analytic estimates and numeric arrival search
# ---------------------------------------------------------------------------

def test_analytic_estimates_values():
    assert analytic_tau_estimate("pst_linear", 100) == pytest.approx(25 * math.pi)
    assert analytic_tau_estimate("pst_quadratic", 20) == pytest.approx(50 * math.pi)
    assert analytic_tau_estimate("pst_quadratic", 201) == pytest.approx(
        math.pi * 201**2 / 8
    )
    # even chains with weak boundaries arrive on the alpha^-2 scale
    assert analytic_tau_estimate("alpha_weak", 200, alpha=0.01) == pytest.approx(
        math.pi / 2e-4
    )
    assert analytic_tau_estimate("alpha_weak", 51, alpha=0.01) == pytest.approx(
        math.pi * math.sqrt(51) / 0.02
    )


def test_analytic_estimate_rejects_unknown():
    with pytest.raises(ValueError):
        analytic_tau_estimate("homogeneous", 50)
    with pytest.raises(ValueError):
        analytic_tau_estimate("alpha_opt", 50)
    with pytest.raises(ValueError):
        analytic_tau_estimate("alpha_weak", 50)   # missing alpha
    with pytest.raises(ValueError):
        analytic_tau_estimate("pst_linear", 1)


def test_transfer_time_finds_linear_chain_arrival():
    n = 50
    profile = pst_linear_profile(n)
    tau = transfer_time(profile, analytic_tau_estimate("pst_linear", n))
    assert tau == pytest.approx(math.pi * n / 4, rel=1e-9)
    f = transfer_amplitude(diagonalize(profile), tau)
    assert averaged_fidelity(f) >= 1.0 - 1e-6


def test_transfer_time_homogeneous_short_chain():
    # three-site uniform chain transfers perfectly at pi/sqrt(2)
    profile = homogeneous_profile(3)
    tau = transfer_time(profile, 1.5, "best")
    assert tau == pytest.approx(math.pi / math.sqrt(2), rel=1e-9)


def test_transfer_time_validation():
    profile = pst_linear_profile(10)
    with pytest.raises(ValueError):
        transfer_time(profile, 0.0)
    with pytest.raises(ValueError):
        transfer_time(profile, -3.0)
    with pytest.raises(ValueError):
        transfer_time(profile, 10.0, selection="median")


def test_transfer_time_fails_when_nothing_arrives():
    # window entirely inside the light cone: the excitation cannot have
    # reached the far end of a 50-site chain by t = 3
    profile = homogeneous_profile(50)
    with pytest.raises(PeakSearchError):
        transfer_time(profile, 2.0, "best")


def test_selection_rules_differ_on_beat_structure():
    # weakly coupled even chain: the arrival envelope is a beat pattern
    # whose first tooth lies well below the window-wide best
    profile = alpha_boundary_profile(20, 0.01)
    est = analytic_tau_estimate("alpha_weak", 20, alpha=0.01)
    t_first = transfer_time(profile, est, "first")
    t_best = transfer_time(profile, est, "best")
    sp = diagonalize(profile)
    f_first = transfer_amplitude(sp, t_first)
    f_best = transfer_amplitude(sp, t_best)
    assert t_first < t_best
    assert f_best > f_first + 0.1


# ---------------------------------------------------------------------------
# boundary optimization
# ---------------------------------------------------------------------------

def test_optimize_alpha_prefers_interior_optimum():
    opt = optimize_alpha(30)
    assert 0.3 < opt.alpha < 0.9
    assert 0.9 < opt.fidelity < 1.0
    assert 0.5 * 15 <= opt.tau <= 1.5 * 15
    # the optimized boundary must beat the plain uniform chain
    uniform_tau = transfer_time(homogeneous_profile(30), 15.0, "best")
    uniform_F = averaged_fidelity(
        transfer_amplitude(diagonalize(homogeneous_profile(30)), uniform_tau)
    )
    assert opt.fidelity > uniform_F


def test_optimize_alpha_short_chain_stays_near_uniform():
    opt = optimize_alpha(4)
    assert opt.alpha > 0.7
    assert opt.fidelity > 0.99


def test_optimize_alpha_needs_four_sites():
    with pytest.raises(ValueError):
        optimize_alpha(3)


# ---------------------------------------------------------------------------
# cell seeds
# ---------------------------------------------------------------------------

def test_cell_seed_is_stable():
    # frozen value: changing the derivation silently would re-randomize
    # every published table
    assert derive_cell_seed(0, "pst_linear", 200, 0.01) == 1687562145249366782


def test_cell_seed_sensitivity():
    base = derive_cell_seed(5, "pst_linear", 100, 0.05)
    assert derive_cell_seed(6, "pst_linear", 100, 0.05) != base
    assert derive_cell_seed(5, "alpha_opt", 100, 0.05) != base
    assert derive_cell_seed(5, "pst_linear", 101, 0.05) != base
    assert derive_cell_seed(5, "pst_linear", 100, 0.051) != base
    assert 0 <= base < 2**63


# ---------------------------------------------------------------------------
# system kinds and sweeps
# ---------------------------------------------------------------------------

def test_system_kind_validation():
    with pytest.raises(ValueError):
        SystemKind("diamond")
    with pytest.raises(ValueError):
        SystemKind("pst_linear", parity="prime")
    with pytest.raises(ValueError):
        SystemKind("alpha_weak")                 # alpha required
    with pytest.raises(ValueError):
        SystemKind("pst_linear", alpha=0.5)      # alpha forbidden
    assert SystemKind("alpha_weak", alpha=0.01).label == "alpha_weak(0.01)"
    assert SystemKind("pst_quadratic", parity="odd").accepts(11)
    assert not SystemKind("pst_quadratic", parity="odd").accepts(12)


@pytest.fixture(scope="module")
def small_table():
    return run_sweep(
        [SystemKind("pst_linear"), SystemKind("alpha_weak", alpha=0.4)],
        [8, 9],
        [0.05, 0.15],
        models=("rsd", "asd"),
        n_realizations=12,
        master_seed=77,
    )


def test_sweep_covers_the_grid(small_table):
    assert small_table.complete
    assert len(small_table.rows) == 2 * 2 * 2 * 2
    assert small_table.systems() == ["alpha_weak(0.4)", "pst_linear"]
    # tau is per (system, N): identical across epsilon and model cells
    taus = {
        (r.system, r.n_sites): r.tau for r in small_table.rows
    }
    assert len(taus) == 4
    for r in small_table.rows:
        assert r.tau == taus[(r.system, r.n_sites)]
        assert r.parity == ("odd" if r.n_sites % 2 else "even")
        assert r.master_seed == derive_cell_seed(77, r.system, r.n_sites, r.epsilon)


def test_sweep_thread_count_does_not_change_rows(small_table):
    threaded = run_sweep(
        [SystemKind("pst_linear"), SystemKind("alpha_weak", alpha=0.4)],
        [8, 9],
        [0.05, 0.15],
        models=("rsd", "asd"),
        n_realizations=12,
        master_seed=77,
        threads=3,
    )
    assert threaded.rows == small_table.rows


def test_sweep_parity_restriction():
    table = run_sweep(
        [SystemKind("pst_linear", parity="odd")],
        [8, 9, 10, 11],
        [0.1],
        models=("rsd",),
        n_realizations=4,
        master_seed=0,
    )
    assert sorted(r.n_sites for r in table.rows) == [9, 11]


def test_sweep_records_cell_failures():
    # a three-site chain has no interior couplings to perturb, so its
    # ensemble cells fail while the rest of the table still fills in
    table = run_sweep(
        [SystemKind("homogeneous")],
        [3, 8],
        [0.1],
        models=("rsd",),
        n_realizations=4,
        master_seed=0,
    )
    assert not table.complete
    assert len(table.rows) == 1 and table.rows[0].n_sites == 8
    assert any("N=3" in err for err in table.errors)


def test_sweep_rejects_bad_arguments():
    with pytest.raises(ValueError):
        run_sweep([SystemKind("pst_linear")], [8], [0.1], models=("xyz",))
    with pytest.raises(ValueError):
        run_sweep([SystemKind("pst_linear")], [8], [0.1], threads=0)


def test_sweep_table_rejects_duplicate_cells():
    row = SweepRow("pst_linear", "even", 8, 0.1, "rsd", 6.3, 0.9, 0.01, 5, 123)
    with pytest.raises(ValueError):
        SweepTable((row, row))


def test_sweep_csv_round_trip(small_table):
    text = sweep_table_to_csv(small_table, ("demo",))
    assert "# complete: true" in text
    back = sweep_table_from_csv(text)
    assert len(back.rows) == len(small_table.rows)
    for a, b in zip(back.rows, small_table.rows):
        assert a.key == b.key
        assert a.mean_F == pytest.approx(b.mean_F, rel=1e-11)
        assert a.master_seed == b.master_seed


def test_sweep_csv_keeps_failure_records():
    table = SweepTable(
        (SweepRow("pst_linear", "even", 8, 0.1, "rsd", 6.3, 0.9, 0.01, 5, 1),),
        ("alpha_opt N=3: boom",),
    )
    text = sweep_table_to_csv(table)
    assert "# complete: false" in text
    back = sweep_table_from_csv(text)
    assert back.errors == ("alpha_opt N=3: boom",)
    assert not back.complete


@pytest.mark.parametrize(
    "text",
    [
        "nota,header\n",
        "system,parity,N,epsilon,model,tau,mean_F,stderr_F,n_real,master_seed\nlin,even,8\n",
    ],
)
def test_sweep_csv_rejects_malformed(text):
    with pytest.raises(ValueError):
        sweep_table_from_csv(text)


# ---------------------------------------------------------------------------
# synthetic tables with known contours and crossovers
# ---------------------------------------------------------------------------

def synthetic_table(beta=2.0, const=0.5, level=0.9, slope=0.05,
                    n_values=(50, 80, 110, 140, 170, 200), system="modelsys"):
    """mean_F exactly linear in log(eps), crossing `level` at
    eps*(N) = (const / N)**(1/beta), which lies inside the epsilon grid
    for every length used here; the extraction must recover the
    parameters to rounding error."""
    eps_grid = np.geomspace(1e-3, 0.3, 21)
    rows = []
    for n in n_values:
        eps_star = (const / n) ** (1.0 / beta)
        for eps in eps_grid:
            F = level - slope * (math.log(eps) - math.log(eps_star))
            F = min(F, 0.999)
            rows.append(
                SweepRow(system, "odd" if n % 2 else "even", n, float(eps),
                         "rsd", 1.0, F, 0.001, 10, 0)
            )
    return SweepTable(tuple(rows))


def test_contour_extraction_recovers_power_law():
    table = synthetic_table(beta=2.0, const=0.5)
    points = extract_contour(table, "modelsys", "rsd", 0.9)
    assert len(points) == 6
    for n, eps_star in points:
        assert eps_star == pytest.approx((0.5 / n) ** 0.5, rel=1e-3)
    fit = fit_power_law(points, level=0.9)
    assert fit.beta == pytest.approx(2.0, rel=1e-2)
    assert fit.const == pytest.approx(0.5, rel=5e-2)
    assert fit.r_squared > 1.0 - 1e-4


def test_contour_skips_unbracketed_lengths():
    table = synthetic_table(n_values=(50, 80, 110, 140))
    # shrink the grid so the smallest length never drops below the level
    rows = [r for r in table.rows if not (r.n_sites == 50 and r.epsilon > 0.05)]
    # and make the largest length start below it
    rows = [r for r in rows if r.n_sites != 140] + [
        SweepRow("modelsys", "even", 140, float(e), "rsd", 1.0, 0.85, 0.001, 10, 0)
        for e in np.geomspace(1e-3, 0.3, 21)
    ]
    with pytest.raises(InsufficientDataError):
        extract_contour(SweepTable(tuple(rows)), "modelsys", "rsd", 0.9)


def test_contour_parity_filter():
    table = synthetic_table(n_values=(51, 80, 111, 140, 171, 200))
    points = extract_contour(table, "modelsys", "rsd", 0.9, parity="odd")
    assert [n for n, _ in points] == [51, 111, 171]


def test_contour_level_validation():
    table = synthetic_table()
    with pytest.raises(ValueError):
        extract_contour(table, "modelsys", "rsd", 1.2)


def test_fit_power_law_degenerate_inputs():
    with pytest.raises(FitError):
        fit_power_law([(50, 0.1)])
    with pytest.raises(FitError):
        fit_power_law([(50, 0.1), (100, 0.1)])


def test_contour_fit_json_round_trip():
    fit = ContourFit(0.9, ((50, 0.14), (100, 0.1)), 2.0, 98.5, 0.99)
    back = contour_fit_from_json(fit.to_json())
    assert back == fit
    with pytest.raises(ValueError):
        contour_fit_from_json('{"level": 0.9, "points": []}')


def crossing_table(eps_cross=0.05, n_a=200, n_b=200):
    eps_grid = np.geomspace(1e-3, 0.3, 21)
    rows = []
    for eps in eps_grid:
        d = 0.1 * (math.log(eps_cross) - math.log(eps))   # positive left of cross
        rows.append(SweepRow("sys_a", "even", n_a, float(eps), "rsd", 1.0,
                             min(0.99, 0.7 + d), 0.001, 10, 0))
        rows.append(SweepRow("sys_b", "even", n_b, float(eps), "rsd", 1.0,
                             0.7, 0.001, 10, 0))
    return SweepTable(tuple(rows))


def test_find_crossover_interpolates_in_log_eps():
    table = crossing_table(eps_cross=0.05)
    eps = find_crossover(table, "sys_a", "sys_b", 200, "rsd")
    assert eps == pytest.approx(0.05, rel=1e-9)


def test_find_crossover_cross_length_comparison():
    table = crossing_table(eps_cross=0.02, n_a=201, n_b=200)
    eps = find_crossover(table, "sys_a", "sys_b", 201, "rsd", n_sites_b=200)
    assert eps == pytest.approx(0.02, rel=1e-9)


def test_find_crossover_none_is_an_answer():
    table = crossing_table(eps_cross=10.0)   # crossing far beyond the grid
    assert find_crossover(table, "sys_a", "sys_b", 200, "rsd") is None


def test_find_crossover_eps_max_excludes_late_crossing():
    table = crossing_table(eps_cross=0.2)
    assert find_crossover(table, "sys_a", "sys_b", 200, "rsd") is not None
    assert find_crossover(table, "sys_a", "sys_b", 200, "rsd", eps_max=0.1) is None


def test_find_crossover_needs_common_grid():
    table = crossing_table()
    with pytest.raises(InsufficientDataError):
        find_crossover(table, "sys_a", "missing", 200, "rsd")


# ---------------------------------------------------------------------------
# preset plans
# ---------------------------------------------------------------------------

def test_preset_plans_cover_the_published_grids():
    assert set(PRESET_PLANS) == {"fig2a", "fig2bcd", "fig3ab", "fig3cd", "fig4"}
    fig4 = PRESET_PLANS["fig4"]
    assert len(fig4.contours) == 6
    assert {c[3] for c in fig4.contours} == {0.9}
    labels = {c[0] for c in fig4.contours}
    assert labels == {
        "pst_linear", "alpha_opt", "pst_quadratic_odd", "pst_quadratic_even",
        "alpha_weak_odd", "alpha_weak_even",
    }
    assert PRESET_PLANS["fig2a"].n_values == (200,)
    assert PRESET_PLANS["fig3ab"].n_values == (200, 201)
