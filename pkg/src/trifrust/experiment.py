"""Full simulation runs: both regimes, both modes, correlation records, serialization.

A run drives the spin trio from the J=0 product ground state into each
requested regime, samples the trajectory at the configured step counts, and
evaluates every correlation quantity on each sample. Records are deterministic
functions of the configuration; CSV output is byte-stable across repeated runs.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import adiabatic, nmr
from .adiabatic import MODES, Schedule, Trajectory, epsilon_profile, make_schedule
from .correlations import monogamy_breakdown
from .qla import DensityMatrix, fidelity
from .spin_model import ModelParams, initial_product_state, spectrum

REGIMES = ("frustrated", "nonfrustrated")
DEFAULT_SAMPLE_STEPS = tuple(range(3, 22, 2))

CSV_COLUMNS = (
    "regime",
    "mode",
    "step",
    "J_over_h",
    "N12",
    "N13",
    "N1_23",
    "delta_N2",
    "D12",
    "D13",
    "D1_23",
    "delta_D",
    "delta_D_mixed",
    "fidelity_vs_ground",
    "ground_prob",
    "epsilon",
)


@dataclass(frozen=True)
class ExperimentConfig:
    M: int = adiabatic.DEFAULT_M
    h_dt: float = adiabatic.DEFAULT_H_DT
    J_final_dt: float = adiabatic.DEFAULT_J_FINAL_DT  # magnitude; sign set per regime
    shape: str = "sinh"
    kappa: float = adiabatic.DEFAULT_KAPPA
    sample_steps: tuple[int, ...] = DEFAULT_SAMPLE_STEPS
    zeta: float = nmr.DEFAULT_ZETA
    zeta_test: float = 1e-2
    modes: tuple[str, ...] = MODES
    regimes: tuple[str, ...] = REGIMES
    output_path: str | None = None

    def __post_init__(self):
        if self.M < 0:
            raise ValueError(f"M must be >= 0, got {self.M}")
        object.__setattr__(self, "sample_steps", tuple(int(s) for s in self.sample_steps))
        object.__setattr__(self, "modes", tuple(self.modes))
        object.__setattr__(self, "regimes", tuple(self.regimes))
        if self.sample_steps == DEFAULT_SAMPLE_STEPS and self.M + 1 < max(DEFAULT_SAMPLE_STEPS):
            # default sampling clamps to short runs; explicit lists must fit
            kept = tuple(s for s in DEFAULT_SAMPLE_STEPS if s <= self.M + 1) or (self.M + 1,)
            object.__setattr__(self, "sample_steps", kept)
        steps = self.sample_steps
        if not steps or any(s < 1 or s > self.M + 1 for s in steps):
            raise ValueError(f"sample steps {steps} must lie in [1, {self.M + 1}]")
        if list(steps) != sorted(steps):
            raise ValueError("sample steps must be ascending")
        for m in self.modes:
            if m not in MODES:
                raise ValueError(f"unknown mode {m!r}")
        for r in self.regimes:
            if r not in REGIMES:
                raise ValueError(f"unknown regime {r!r}")
        if not self.modes or not self.regimes:
            raise ValueError("at least one mode and one regime are required")
        if not (0 < self.zeta <= 1 and 0 < self.zeta_test <= 1):
            raise ValueError("purity factors must lie in (0, 1]")


@dataclass(frozen=True)
class CorrelationRecord:
    regime: str
    mode: str
    step: int
    J_over_h: float
    N12: float
    N13: float
    N1_23: float
    delta_N2: float
    D12: float
    D13: float
    D1_23: float
    delta_D: float
    delta_D_mixed: float
    fidelity_vs_ground: float
    ground_prob: float
    epsilon: float


def schedule_for(config: ExperimentConfig, regime: str) -> Schedule:
    sign = 1.0 if regime == "frustrated" else -1.0
    return make_schedule(
        M=config.M,
        h_dt=config.h_dt,
        J_final_dt=sign * abs(config.J_final_dt),
        shape=config.shape,
        kappa=config.kappa,
    )


def _records_for(config: ExperimentConfig, regime: str, mode: str) -> list[CorrelationRecord]:
    sched = schedule_for(config, regime)
    traj: Trajectory = adiabatic.evolve(initial_product_state(), sched, mode=mode)
    epsilons = epsilon_profile(sched)
    records = []
    for k in config.sample_steps:
        state = traj.states[k - 1]
        J = sched.J_values[k - 1]
        params = ModelParams(h=1.0, J=J)
        rho = DensityMatrix.from_state(state)
        scores = monogamy_breakdown(rho)
        mixed_delta, _ = nmr.mixed_discord_scores(traj, config.zeta_test, steps=[k])[0]
        w, v = spectrum(params)
        ground = DensityMatrix.from_state(v[:, 0])
        records.append(
            CorrelationRecord(
                regime=regime,
                mode=mode,
                step=k,
                J_over_h=J,
                N12=scores.N12,
                N13=scores.N13,
                N1_23=scores.N1_23,
                delta_N2=scores.delta_N2,
                D12=scores.D12,
                D13=scores.D13,
                D1_23=scores.D1_23,
                delta_D=scores.delta_D,
                delta_D_mixed=mixed_delta,
                fidelity_vs_ground=fidelity(ground, rho),
                ground_prob=float(abs(np.vdot(v[:, 0], state)) ** 2),
                epsilon=float(epsilons[k - 1]),
            )
        )
    return records


def run(config: ExperimentConfig) -> list[CorrelationRecord]:
    """All records for the configured regimes x modes, sorted (regime, mode, step)."""
    records = []
    for regime in sorted(config.regimes):
        for mode in sorted(config.modes):
            records.extend(_records_for(config, regime, mode))
    records.sort(key=lambda r: (r.regime, r.mode, r.step))
    return records


def _format_value(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{float(v):.17g}"


def write_csv(records, path) -> None:
    lines = [",".join(CSV_COLUMNS)]
    for r in records:
        lines.append(",".join(_format_value(getattr(r, c)) for c in CSV_COLUMNS))
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"failed to write CSV to {path}: {exc}") from exc


def read_csv(path) -> list[CorrelationRecord]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = [ln for ln in fh.read().splitlines() if ln]
    except OSError as exc:
        raise OSError(f"failed to read CSV from {path}: {exc}") from exc
    if not lines or tuple(lines[0].split(",")) != CSV_COLUMNS:
        raise ValueError(f"{path}: header does not match the record schema")
    out = []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != len(CSV_COLUMNS):
            raise ValueError(f"{path}: row has {len(parts)} fields, expected {len(CSV_COLUMNS)}")
        kwargs = {}
        for name, raw in zip(CSV_COLUMNS, parts):
            if name in ("regime", "mode"):
                kwargs[name] = raw
            elif name == "step":
                kwargs[name] = int(raw)
            else:
                kwargs[name] = float(raw)
        out.append(CorrelationRecord(**kwargs))
    return out


def _epsilon_max(config: ExperimentConfig, regime: str) -> float:
    return float(epsilon_profile(schedule_for(config, regime)).max())


def summary_lines(records, config: ExperimentConfig) -> list[str]:
    lines = []
    lines.append(f"M = {config.M}")
    lines.append(f"h_dt = {config.h_dt:.17g}")
    lines.append(f"J_final_dt = {abs(config.J_final_dt):.17g}")
    shape = config.shape if config.shape != "sinh" else f"sinh(kappa={config.kappa:g})"
    lines.append(f"shape = {shape}")
    lines.append(f"samples = {','.join(str(s) for s in config.sample_steps)}")
    lines.append(f"zeta = {config.zeta:.17g}")
    lines.append(f"zeta_test = {config.zeta_test:.17g}")
    for regime in sorted(config.regimes):
        lines.append(f"epsilon_max[{regime}] = {_epsilon_max(config, regime):.6g}")
    for regime in sorted(config.regimes):
        for mode in sorted(config.modes):
            sel = [r for r in records if r.regime == regime and r.mode == mode]
            if not sel:
                continue
            last = sel[-1]
            lines.append(f"final_delta_N2[{regime},{mode}] = {last.delta_N2:.6g}")
            lines.append(f"final_delta_D[{regime},{mode}] = {last.delta_D:.6g}")
            lines.append(f"final_delta_D_mixed[{regime},{mode}] = {last.delta_D_mixed:.6g}")
            lines.append(f"min_ground_prob[{regime},{mode}] = {min(r.ground_prob for r in sel):.6g}")
            lines.append(f"min_fidelity[{regime},{mode}] = {min(r.fidelity_vs_ground for r in sel):.6g}")
    return lines


def write_summary(records, path, config: ExperimentConfig) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(summary_lines(records, config)) + "\n")
    except OSError as exc:
        raise OSError(f"failed to write summary to {path}: {exc}") from exc


def sweep(vary: str, values, base: ExperimentConfig | None = None) -> list[dict]:
    """Epsilon-max table while varying the schedule sharpness or the step count."""
    base = base or ExperimentConfig()
    if vary not in ("kappa", "M"):
        raise ValueError(f"sweep can vary 'kappa' or 'M', not {vary!r}")
    rows = []
    for val in values:
        if vary == "kappa":
            cfg = replace(base, kappa=float(val))
        else:
            cfg = replace(base, M=int(val), sample_steps=DEFAULT_SAMPLE_STEPS)
        row = {vary: val}
        for regime in REGIMES:
            row[f"epsilon_max_{regime}"] = _epsilon_max(cfg, regime)
        rows.append(row)
    return rows
