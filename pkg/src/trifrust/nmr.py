"""Room-temperature NMR mixed-state model: pseudo-pure states and their discord.

A pseudo-pure state rho = (1-zeta) I/8 + zeta |psi><psi| mimics |psi> at purity
factor zeta (~1e-5 for liquid-state NMR). At that purity the state is PPT, so
all negativities vanish; discord survives at order zeta^2 and tracks the
pure-state curves, which is why the mixed scores use an amplified zeta for
quantitative work.
"""

from __future__ import annotations

import numpy as np

from .adiabatic import Trajectory
from .correlations import discord_breakdown
from .qla import DensityMatrix, as_state, tensor
from .spin_model import IDENTITY_2, SIGMA_Z

DEFAULT_ZETA = 1e-5


def equilibrium_deviation() -> np.ndarray:
    """Traceless deviation part of the thermal state: sz1 + sz2 + sz3."""
    return (
        tensor([SIGMA_Z, IDENTITY_2, IDENTITY_2])
        + tensor([IDENTITY_2, SIGMA_Z, IDENTITY_2])
        + tensor([IDENTITY_2, IDENTITY_2, SIGMA_Z])
    )


def pseudo_pure(psi, zeta: float = DEFAULT_ZETA) -> DensityMatrix:
    """(1-zeta) I/8 + zeta |psi><psi| as a validated 3-qubit density matrix."""
    if not (np.isfinite(zeta) and 0.0 < zeta <= 1.0):
        raise ValueError(f"purity factor must lie in (0, 1], got {zeta!r}")
    v = as_state(psi)
    if len(v) != 8:
        raise ValueError(f"pseudo_pure expects a 3-qubit state, got dimension {len(v)}")
    d = len(v)
    rho = (1.0 - zeta) * np.eye(d, dtype=np.complex128) / d + zeta * np.outer(v, v.conj())
    return DensityMatrix(rho, (2, 2, 2))


def mixed_discord_scores(
    trajectory: Trajectory,
    zeta: float = DEFAULT_ZETA,
    steps=None,
) -> list[tuple[float, float]]:
    """(discord monogamy score, D12) of the pseudo-pure state at selected steps.

    ``steps`` are 1-indexed step counts into the trajectory; all steps by default.
    """
    n = len(trajectory.states)
    if steps is None:
        steps = range(1, n + 1)
    out = []
    for k in steps:
        if not 1 <= k <= n:
            raise ValueError(f"step {k} outside the trajectory (1..{n})")
        rho = pseudo_pure(trajectory.states[k - 1], zeta)
        d1_23, d12, d13 = discord_breakdown(rho)
        out.append((d1_23 - d12 - d13, d12))
    return out
