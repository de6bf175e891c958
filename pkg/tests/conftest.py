import numpy as np
import pytest

import trifrust.kernels
from trifrust import adiabatic, experiment, spin_model


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile the jit kernels once so per-test timings measure the algorithms."""
    trifrust.kernels.warmup()


@pytest.fixture(scope="session")
def default_exact_trajectories():
    """Exact-mode default-schedule trajectories for both regimes."""
    out = {}
    for sign, regime in ((1.0, "frustrated"), (-1.0, "nonfrustrated")):
        sched = adiabatic.make_schedule(J_final_dt=sign * adiabatic.DEFAULT_J_FINAL_DT)
        out[regime] = adiabatic.evolve(spin_model.initial_product_state(), sched, mode="exact")
    return out


@pytest.fixture(scope="session")
def default_records():
    """One full default run (both regimes, both modes, default sampling)."""
    return experiment.run(experiment.ExperimentConfig())


@pytest.fixture()
def rng():
    return np.random.default_rng(20250811)
