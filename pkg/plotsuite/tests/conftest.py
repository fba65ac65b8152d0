"""Shared fixtures: real simulator outputs, generated once per session.

The data is produced by driving the simulator's installed CLI, which is
the interface this package consumes files from; plotsuite itself never
imports the simulator.
"""

import pytest

from spinchain.cli import main as spinchain_main


@pytest.fixture(scope="session")
def fig1_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("fig1")
    rc = spinchain_main([
        "preset", "--preset", "fig1", "--n", "40",
        "--out-dir", str(out), "--no-timestamp",
    ])
    assert rc == 0
    return out


@pytest.fixture(scope="session")
def fig2a_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("fig2a")
    rc = spinchain_main([
        "preset", "--preset", "fig2a", "--realizations", "8", "--seed", "3",
        "--out-dir", str(out), "--no-timestamp",
    ])
    assert rc == 0
    return out


@pytest.fixture(scope="session")
def fig4_dir(tmp_path_factory):
    """Full length range so every parity's 0.9 contour exists; the epsilon
    grid and realization count are reduced to keep the fixture quick."""
    out = tmp_path_factory.mktemp("fig4")
    rc = spinchain_main([
        "preset", "--preset", "fig4", "--realizations", "20", "--seed", "3",
        "--epsilon-grid", "1e-3:0.3:12",
        "--out-dir", str(out), "--no-timestamp",
    ])
    assert rc == 0
    return out
