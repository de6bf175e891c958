"""Bipartite quantum correlations and the two monogamy scores.

Negativity is the absolute sum of negative eigenvalues of the partial
transpose (maximally entangled qubit pair: N = 1/2). Quantum discord is total
minus classical correlations, minimized over rank-one projective measurements
on the measured qubit. Monogamy scores follow the 1:(23) vs 1:2, 1:3 pattern
with party 1 always the measured side.

The discord minimizer is a deterministic grid-then-refine search over the
Bloch angles (theta, phi): a 61 x 120 coarse grid, then compass descent with
step halving from pi/120 down to 1e-7 on the best five cells. The two-angle
landscape is mildly multimodal; five starts cover every case observed on
random states (checked against a 721 x 1440 dense grid in the tests).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import cond_entropy_batch, jacobi_eigh
from .qla import DensityMatrix, partial_trace, von_neumann_entropy, _ptranspose_array

GRID_THETA = 61
GRID_PHI = 120
REFINE_STARTS = 5
REFINE_STEP0 = np.pi / 120
REFINE_STEP_MIN = 1e-7
DISCORD_FLOOR = -1e-9


@dataclass(frozen=True)
class BipartiteSplit:
    """Measured party index against the remaining subsystems."""

    measured: int
    remainder: tuple[int, ...]

    @classmethod
    def of(cls, rho: DensityMatrix, measured: int) -> "BipartiteSplit":
        if not 0 <= measured < rho.n_subsystems:
            raise ValueError(f"measured party {measured} out of range")
        return cls(measured, tuple(i for i in range(rho.n_subsystems) if i != measured))


@dataclass(frozen=True)
class DiscordResult:
    """Discord value plus the optimizer's byproducts."""

    discord: float
    optimal_angles: tuple[float, float]
    mutual_information: float
    classical_correlation: float


def negativity(rho: DensityMatrix, measured: int = 0) -> float:
    """Absolute sum of negative eigenvalues of the partial transpose w.r.t. ``measured``."""
    split = BipartiteSplit.of(rho, measured)
    pt = _ptranspose_array(rho.matrix, rho.dims, split.measured)
    w, _ = jacobi_eigh(pt)
    return float(-w[w < 0.0].sum() + 0.0)


def _permute_measured_first(rho: DensityMatrix, measured: int) -> tuple[np.ndarray, int]:
    dims = rho.dims
    n = len(dims)
    order = [measured] + [i for i in range(n) if i != measured]
    r = rho.matrix.reshape(dims * 2)
    r = np.transpose(r, order + [n + o for o in order])
    d = int(np.prod(dims))
    drest = d // dims[measured]
    return np.ascontiguousarray(r.reshape(d, d)), drest


def _min_conditional_entropy(rho_perm: np.ndarray, drest: int) -> tuple[float, float, float]:
    """Deterministic minimum of the average post-measurement entropy."""
    thetas = np.linspace(0.0, np.pi, GRID_THETA)
    phis = np.linspace(0.0, 2 * np.pi, GRID_PHI, endpoint=False)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    tt = tt.ravel()
    pp = pp.ravel()
    vals = cond_entropy_batch(rho_perm, drest, tt, pp)
    order = np.argsort(vals, kind="stable")

    best_val = np.inf
    best_theta = best_phi = 0.0
    for idx in order[:REFINE_STARTS]:
        th, ph, fv = float(tt[idx]), float(pp[idx]), float(vals[idx])
        step = REFINE_STEP0
        while step > REFINE_STEP_MIN:
            cand_t = np.array([th + step, th - step, th, th])
            cand_p = np.array([ph, ph, ph + step, ph - step])
            cv = cond_entropy_batch(rho_perm, drest, cand_t, cand_p)
            k = int(np.argmin(cv))
            if cv[k] < fv:
                fv, th, ph = float(cv[k]), float(cand_t[k]), float(cand_p[k])
            else:
                step /= 2.0
        if fv < best_val:
            best_val, best_theta, best_phi = fv, th, ph
    return best_val, best_theta, best_phi


def _canonical_angles(theta: float, phi: float) -> tuple[float, float]:
    theta = theta % (2 * np.pi)
    if theta > np.pi:
        theta = 2 * np.pi - theta
        phi = phi + np.pi
    return float(theta), float(phi % (2 * np.pi))


def quantum_discord(rho: DensityMatrix, measured: int = 0) -> DiscordResult:
    """Discord of ``rho`` with the projective measurement on qubit ``measured``."""
    split = BipartiteSplit.of(rho, measured)
    if rho.dims[split.measured] != 2:
        raise ValueError("the measured party must be a single qubit")
    rest_dim = rho.dim // 2
    if rest_dim not in (2, 4):
        raise ValueError(f"unmeasured part must have dimension 2 or 4, got {rest_dim}")

    s_measured = von_neumann_entropy(partial_trace(rho, [split.measured]))
    s_rest = von_neumann_entropy(partial_trace(rho, split.remainder))
    s_total = von_neumann_entropy(rho)
    mutual_information = s_measured + s_rest - s_total

    rho_perm, drest = _permute_measured_first(rho, split.measured)
    cond, theta, phi = _min_conditional_entropy(rho_perm, drest)
    classical = s_rest - cond
    discord = mutual_information - classical
    if discord < DISCORD_FLOOR:
        raise ValueError(f"discord {discord!r} below the numerical floor; input is inconsistent")
    return DiscordResult(
        discord=max(discord, 0.0),
        optimal_angles=_canonical_angles(theta, phi),
        mutual_information=float(mutual_information),
        classical_correlation=float(classical),
    )


@dataclass(frozen=True)
class MonogamyBreakdown:
    """All bipartite pieces entering the two monogamy scores of a 3-qubit state."""

    N1_23: float
    N12: float
    N13: float
    D1_23: float
    D12: float
    D13: float

    @property
    def delta_N2(self) -> float:
        return self.N1_23**2 - self.N12**2 - self.N13**2

    @property
    def delta_D(self) -> float:
        return self.D1_23 - self.D12 - self.D13


def _require_three_qubits(rho123: DensityMatrix):
    if rho123.dims != (2, 2, 2):
        raise ValueError(f"expected a 3-qubit state, got dims {rho123.dims}")


def negativity_breakdown(rho123: DensityMatrix) -> tuple[float, float, float]:
    _require_three_qubits(rho123)
    n1_23 = negativity(rho123, 0)
    n12 = negativity(partial_trace(rho123, [0, 1]), 0)
    n13 = negativity(partial_trace(rho123, [0, 2]), 0)
    return n1_23, n12, n13


def discord_breakdown(rho123: DensityMatrix) -> tuple[float, float, float]:
    _require_three_qubits(rho123)
    d1_23 = quantum_discord(rho123, 0).discord
    d12 = quantum_discord(partial_trace(rho123, [0, 1]), 0).discord
    d13 = quantum_discord(partial_trace(rho123, [0, 2]), 0).discord
    return d1_23, d12, d13


def monogamy_breakdown(rho123: DensityMatrix) -> MonogamyBreakdown:
    n1_23, n12, n13 = negativity_breakdown(rho123)
    d1_23, d12, d13 = discord_breakdown(rho123)
    return MonogamyBreakdown(N1_23=n1_23, N12=n12, N13=n13, D1_23=d1_23, D12=d12, D13=d13)


def entanglement_monogamy_score(rho123: DensityMatrix) -> float:
    """delta_N2 = N^2_{1(23)} - N^2_{12} - N^2_{13}; non-negative for pure 3-qubit states."""
    n1_23, n12, n13 = negativity_breakdown(rho123)
    return n1_23**2 - n12**2 - n13**2


def discord_monogamy_score(rho123: DensityMatrix) -> float:
    """delta_D = D_{1(23)} - D_{12} - D_{13}; can take either sign."""
    d1_23, d12, d13 = discord_breakdown(rho123)
    return d1_23 - d12 - d13
