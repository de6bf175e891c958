"""Discretized adiabatic drive: coupling schedules, step unitaries, trajectories.

The drive turns the Ising coupling on from 0 to J_max over M+1 equal time
steps of length dt. Exact steps exponentiate the full instantaneous
Hamiltonian; trotter2 steps use the symmetric field/coupling/field splitting,
accurate to second order in dt. States are propagated by matrix-vector
products, never by forming the full evolution product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import spin_model
from .qla import as_state, exp_minus_i
from .spin_model import ModelParams, build_hamiltonian, field_term, ising_term

DEFAULT_M = 20
DEFAULT_H_DT = math.pi / 21
DEFAULT_J_FINAL_DT = math.pi / 4
DEFAULT_KAPPA = 3.0

MODES = ("exact", "trotter2")
SHAPES = ("linear", "sinh")


@dataclass(frozen=True)
class Schedule:
    """Coupling trajectory J(m), m = 0..M, with time step dt (units 1/h)."""

    M: int
    dt: float
    J_values: tuple[float, ...]
    shape: str
    kappa: float | None = None

    def __post_init__(self):
        if self.M < 0:
            raise ValueError(f"M must be >= 0, got {self.M}")
        if len(self.J_values) != self.M + 1:
            raise ValueError(f"need M+1={self.M + 1} coupling values, got {len(self.J_values)}")
        if self.J_values[0] != 0.0:
            raise ValueError("schedules must start at J=0")
        mags = [abs(j) for j in self.J_values]
        if any(b < a - 1e-12 for a, b in zip(mags, mags[1:])):
            raise ValueError("|J(m)| must be non-decreasing along the schedule")

    @property
    def J_max(self) -> float:
        return self.J_values[-1]

    @property
    def direction(self) -> str:
        if self.J_max > 0:
            return "frustrated"
        if self.J_max < 0:
            return "nonfrustrated"
        return "uncoupled"

    @property
    def total_time(self) -> float:
        return (self.M + 1) * self.dt


@dataclass(frozen=True)
class Trajectory:
    """States after each drive step (M+1 of them) plus the schedule that produced them."""

    states: tuple[np.ndarray, ...]
    mode: str
    schedule: Schedule


def make_schedule(
    M: int = DEFAULT_M,
    h_dt: float = DEFAULT_H_DT,
    J_final_dt: float = DEFAULT_J_FINAL_DT,
    shape: str = "sinh",
    kappa: float = DEFAULT_KAPPA,
) -> Schedule:
    """Build a discretized coupling ramp.

    With the defaults (M=20, h_dt=pi/21, |J_final_dt|=pi/4) and h=1 this gives
    dt=pi/21 and |J_max|/h = 21/4 = 5.25. The sign of J_final_dt selects the
    regime. Shapes: linear J(m) = J_max m/M, or sinh
    J(m) = J_max sinh(kappa m/M)/sinh(kappa).
    """
    if M < 0:
        raise ValueError(f"M must be >= 0, got {M}")
    if not h_dt > 0:
        raise ValueError(f"h_dt must be positive, got {h_dt!r}")
    if shape not in SHAPES:
        raise ValueError(f"unknown schedule shape {shape!r}; expected one of {SHAPES}")
    dt = float(h_dt)  # times in units 1/h with h=1
    J_max = float(J_final_dt) / dt
    if M == 0:
        return Schedule(0, dt, (0.0,), shape, kappa if shape == "sinh" else None)
    frac = np.arange(M + 1) / M
    if shape == "linear":
        js = J_max * frac
        kap = None
    else:
        if not kappa > 0:
            raise ValueError(f"sinh sharpness kappa must be > 0, got {kappa!r}")
        js = J_max * np.sinh(kappa * frac) / np.sinh(kappa)
        kap = float(kappa)
    js[0] = 0.0
    return Schedule(int(M), dt, tuple(float(j) for j in js), shape, kap)


def step_unitary_exact(h: float, J_m: float, dt: float) -> np.ndarray:
    """exp(-i H(h, J_m) dt)."""
    return exp_minus_i(build_hamiltonian(ModelParams(h=h, J=J_m)), dt)


def step_unitary_trotter2(h: float, J_m: float, dt: float) -> np.ndarray:
    """Symmetric second-order splitting: field half step, coupling full step, field half step."""
    half_field = exp_minus_i(field_term(h), dt / 2.0)
    coupling_phases = np.exp(-1j * np.diag(ising_term(J_m)).real * dt)
    return half_field @ (coupling_phases[:, None] * half_field)


def evolve(initial, schedule: Schedule, mode: str = "exact", h: float = 1.0) -> Trajectory:
    """Apply the schedule's step unitaries in order, recording the state after each.

    states[k] = U_k ... U_1 U_0 |initial>; every recorded state is unit norm.
    """
    if mode not in MODES:
        raise ValueError(f"unknown evolution mode {mode!r}; expected one of {MODES}")
    psi = as_state(initial).copy()
    if mode == "exact":
        step = lambda J_m: step_unitary_exact(h, J_m, schedule.dt)  # noqa: E731
    else:
        step = lambda J_m: step_unitary_trotter2(h, J_m, schedule.dt)  # noqa: E731
    states = []
    for J_m in schedule.J_values:
        psi = step(J_m) @ psi
        norm = np.linalg.norm(psi)
        if abs(norm - 1.0) > 1e-10:
            raise RuntimeError(f"evolution lost unitarity: |psi| = {norm!r}")
        states.append(psi.copy())
    for s in states:
        s.setflags(write=False)
    return Trajectory(tuple(states), mode, schedule)


def ground_state_probability(state, p: ModelParams) -> float:
    """|<ground(p)|state>|^2; propagates the near-degeneracy warning from ground_state."""
    psi = as_state(state)
    _, g = spin_model.ground_state(p)
    return float(abs(np.vdot(g, psi)) ** 2)


def coupling_rates(schedule: Schedule) -> np.ndarray:
    """Per-step dJ/dt: forward difference, backward at the last step."""
    js = np.asarray(schedule.J_values)
    if schedule.M == 0:
        return np.zeros(1)
    rates = np.empty(schedule.M + 1)
    rates[:-1] = (js[1:] - js[:-1]) / schedule.dt
    rates[-1] = (js[-1] - js[-2]) / schedule.dt
    return rates


def epsilon_profile(schedule: Schedule, h: float = 1.0) -> np.ndarray:
    """Slowness functional evaluated at every schedule step."""
    rates = coupling_rates(schedule)
    return np.array(
        [
            spin_model.adiabatic_epsilon(ModelParams(h=h, J=j), r)
            for j, r in zip(schedule.J_values, rates)
        ]
    )


def spectrum_points(schedule: Schedule, h: float = 1.0) -> list[spin_model.SpectrumPoint]:
    """Instantaneous spectrum, ground state and slowness value along the schedule."""
    rates = coupling_rates(schedule)
    points = []
    for j, r in zip(schedule.J_values, rates):
        p = ModelParams(h=h, J=j)
        w, v = spin_model.spectrum(p)
        eps = spin_model.adiabatic_epsilon(p, r)
        points.append(
            spin_model.SpectrumPoint(
                J_over_h=j / h,
                energies=tuple(float(x) for x in w),
                ground_state=v[:, 0].copy(),
                epsilon=float(eps),
            )
        )
    return points
