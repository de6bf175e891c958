"""Triangular transverse-field Ising trio: Hamiltonian, spectrum, slowness functional.

H = h (sx1 + sx2 + sx3) + J (sz1 sz2 + sz2 sz3 + sz1 sz3)

J > 0 puts the triangle in the frustrated (antiferromagnetic) regime, J < 0 in
the non-frustrated (ferromagnetic) one. Qubit 1 is the most significant bit of
the computational-basis index.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .qla import as_state, hermitian_eig, tensor

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
IDENTITY_2 = np.eye(2, dtype=np.complex128)

NEAR_DEGENERACY_FACTOR = 1e-8
COUPLING_CUTOFF = 1e-10  # transition amplitudes below this count as uncoupled
GAP_UNDERFLOW = 1e-10

#: |-> on each site: the ground state of the pure field term.
MINUS = np.array([1.0, -1.0]) / np.sqrt(2.0)


class DegenerateGapError(RuntimeError):
    """Raised when a coupled excited level is numerically degenerate with the ground state."""


@dataclass(frozen=True)
class ModelParams:
    """Transverse field strength h > 0 and Ising coupling J (same energy units)."""

    h: float = 1.0
    J: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.h) and self.h > 0):
            raise ValueError(f"h must be positive and finite, got {self.h!r}")
        if not np.isfinite(self.J):
            raise ValueError(f"J must be finite, got {self.J!r}")

    @property
    def regime(self) -> str:
        if self.J > 0:
            return "frustrated"
        if self.J < 0:
            return "nonfrustrated"
        return "uncoupled"


@dataclass(frozen=True)
class SpectrumPoint:
    """One point along a coupling trajectory: spectrum, ground state, slowness value."""

    J_over_h: float
    energies: tuple[float, ...]
    ground_state: np.ndarray
    epsilon: float


def _site_operator(op: np.ndarray, site: int) -> np.ndarray:
    ops = [IDENTITY_2, IDENTITY_2, IDENTITY_2]
    ops[site] = op
    return tensor(ops)


_FIELD_SUM = sum(_site_operator(SIGMA_X, i) for i in range(3))
_ZZ_SUM = (
    tensor([SIGMA_Z, SIGMA_Z, IDENTITY_2])
    + tensor([IDENTITY_2, SIGMA_Z, SIGMA_Z])
    + tensor([SIGMA_Z, IDENTITY_2, SIGMA_Z])
)
_FIELD_SUM.setflags(write=False)
_ZZ_SUM.setflags(write=False)


def field_term(h: float) -> np.ndarray:
    """h (sx1 + sx2 + sx3)."""
    return float(h) * _FIELD_SUM


def ising_term(J: float) -> np.ndarray:
    """J (sz1 sz2 + sz2 sz3 + sz1 sz3); diagonal in the computational basis."""
    return float(J) * _ZZ_SUM


def coupling_derivative_operator() -> np.ndarray:
    """dH/dJ: the bare sum of the three zz bonds."""
    return _ZZ_SUM.copy()


def build_hamiltonian(p: ModelParams) -> np.ndarray:
    return field_term(p.h) + ising_term(p.J)


def initial_product_state() -> np.ndarray:
    """|---> = the ground state at J = 0, all amplitudes +-1/sqrt(8)."""
    v = np.kron(np.kron(MINUS, MINUS), MINUS).astype(np.complex128)
    return as_state(v)


def spectrum(p: ModelParams) -> tuple[np.ndarray, np.ndarray]:
    """Full eigendecomposition of the model Hamiltonian."""
    return hermitian_eig(build_hamiltonian(p))


def ground_state(p: ModelParams) -> tuple[float, np.ndarray]:
    """Lowest eigenpair. Warns (RuntimeWarning) when the gap is below 1e-8 h."""
    w, v = spectrum(p)
    if w[1] - w[0] < NEAR_DEGENERACY_FACTOR * p.h:
        warnings.warn(
            f"near-degenerate ground state at J/h={p.J / p.h:g}: gap={w[1] - w[0]:.3e}",
            RuntimeWarning,
            stacklevel=2,
        )
    return float(w[0]), v[:, 0].copy()


def _group_levels(w: np.ndarray, tol: float):
    """Indices of (approximately) degenerate eigenvalue groups, ascending."""
    groups = [[0]]
    for k in range(1, len(w)):
        if w[k] - w[groups[-1][0]] <= tol:
            groups[-1].append(k)
        else:
            groups.append([k])
    return groups


def _epsilon_from_spectrum(w: np.ndarray, v: np.ndarray, dh_dt: np.ndarray, scale: float) -> float:
    """max over excited levels of |<k| dH/dt |0>| / gap^2.

    Degenerate levels are treated as one: the transition amplitude to a level
    is the norm of dH/dt|0> projected onto its eigenspace, which is basis
    independent. Levels with amplitude below the cutoff are uncoupled and
    skipped; an uncoupled gap may close without harm.
    """
    groups = _group_levels(w, 1e-9 * max(1.0, float(abs(w).max())))
    target = dh_dt @ v[:, 0]
    cutoff = COUPLING_CUTOFF * max(1.0, scale)
    e0 = w[0]

    same_level = [k for k in groups[0] if k != 0]
    if same_level:
        amp0 = float(np.linalg.norm(v[:, same_level].conj().T @ target))
        if amp0 >= cutoff:
            raise DegenerateGapError(
                f"coupled excited level degenerate with the ground state (gap<={w[same_level[0]] - e0:.3e})"
            )

    best = 0.0
    for grp in groups[1:]:
        amp = float(np.linalg.norm(v[:, grp].conj().T @ target))
        if amp < cutoff:
            continue
        gap = w[grp[0]] - e0
        if gap < GAP_UNDERFLOW:
            raise DegenerateGapError(
                f"coupled excited level degenerate with the ground state (gap={gap:.3e})"
            )
        best = max(best, amp / gap**2)
    return best


def adiabatic_epsilon(p: ModelParams, dJ_dt: float) -> float:
    """Slowness functional for the instantaneous Hamiltonian at coupling rate dJ/dt.

    Maximizes |<k| dH/dt |0>| / (E_k - E_0)^2 over all coupled excited levels,
    with dH/dt = (dJ/dt) * (sum of zz bonds). Zero rate gives exactly zero.
    """
    if not np.isfinite(dJ_dt):
        raise ValueError(f"dJ_dt must be finite, got {dJ_dt!r}")
    if dJ_dt == 0.0:
        return 0.0
    w, v = spectrum(p)
    dh_dt = float(dJ_dt) * _ZZ_SUM
    return _epsilon_from_spectrum(w, v, dh_dt, abs(float(dJ_dt)))
