"""Acceptance gate: one test per criterion, one printed PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s` to see every line. Two
criteria encode thresholds that the pinned default protocol cannot reach
(measured values are printed); they fail by design rather than being loosened.
See README "Known limitations".
"""

import math
import time

import numpy as np

from trifrust import adiabatic as ad
from trifrust import experiment, nmr
from trifrust import spin_model as sm
from trifrust.correlations import (
    discord_monogamy_score,
    entanglement_monogamy_score,
    monogamy_breakdown,
    negativity,
    quantum_discord,
)
from trifrust.qla import DensityMatrix, partial_trace, von_neumann_entropy

import oracles as orc


def _report(name: str, ok: bool, detail: str):
    line = f"ACCEPTANCE {'PASS' if ok else 'FAIL'} | {name} | {detail}"
    print(line)
    assert ok, line


def test_product_baseline():
    t0 = time.monotonic()
    rho = DensityMatrix.from_state(sm.initial_product_state())
    dn2 = entanglement_monogamy_score(rho)
    dd = discord_monogamy_score(rho)
    elapsed = time.monotonic() - t0
    ok = abs(dn2) <= 1e-9 and abs(dd) <= 1e-9 and elapsed < 1.0
    _report(
        "product baseline",
        ok,
        f"delta_N2={dn2:.2e}, delta_D={dd:.2e}, {elapsed:.2f}s",
    )


def test_ghz_oracle():
    t0 = time.monotonic()
    ghz = np.zeros(8, dtype=complex)
    ghz[0] = ghz[7] = 1 / np.sqrt(2)
    rho = DensityMatrix.from_state(ghz)
    dn2 = entanglement_monogamy_score(rho)
    dd = discord_monogamy_score(rho)
    elapsed = time.monotonic() - t0
    ok = abs(dn2 - 0.25) <= 1e-9 and abs(dd - 1.0) <= 1e-4 and elapsed < 1.0
    _report("GHZ oracle", ok, f"delta_N2={dn2:.10f}, delta_D={dd:.6f}, {elapsed:.2f}s")


def test_squared_negativity_monogamy_500():
    t0 = time.monotonic()
    rng = np.random.default_rng(424242)
    worst = np.inf
    for _ in range(500):
        rho = DensityMatrix.from_state(orc.random_pure(rng, 8))
        worst = min(worst, entanglement_monogamy_score(rho))
    elapsed = time.monotonic() - t0
    ok = worst >= -1e-9 and elapsed < 30.0
    _report("squared-negativity monogamy x500", ok, f"min delta_N2={worst:.3e}, {elapsed:.1f}s")


def test_pure_state_discord_identity(default_exact_trajectories):
    worst = 0.0
    for traj in default_exact_trajectories.values():
        for k in range(3, 22, 2):
            rho = DensityMatrix.from_state(traj.states[k - 1])
            d = quantum_discord(rho, 0).discord
            s1 = von_neumann_entropy(partial_trace(rho, [0]))
            worst = max(worst, abs(d - s1))
    ok = worst <= 1e-4
    _report("pure-state discord identity", ok, f"max |D - S(rho_1)| = {worst:.2e}")


def test_adiabaticity_numbers():
    t0 = time.monotonic()
    eps_f = ad.epsilon_profile(ad.make_schedule()).max()
    eps_n = ad.epsilon_profile(ad.make_schedule(J_final_dt=-math.pi / 4)).max()
    eps_ok = 0.02 <= eps_f <= 0.12  # the pi/4 protocol drive the 0.063 estimate refers to
    psi0 = sm.initial_product_state()
    probs = {}
    for sign, regime in ((1.0, "frustrated"), (-1.0, "nonfrustrated")):
        sched = ad.make_schedule(J_final_dt=sign * math.pi / 4)
        traj = ad.evolve(psi0, sched, mode="trotter2")
        probs[regime] = ad.ground_state_probability(
            traj.states[-1], sm.ModelParams(h=1.0, J=sched.J_max)
        )
    prob_ok = all(p >= 0.98 for p in probs.values())
    elapsed = time.monotonic() - t0
    # prob_ok is False at the pinned defaults: the frustrated trotterized
    # endpoint reaches 0.9770 (exact-mode value 0.9965); the 2% gap is pure
    # second-order splitting error at |J| dt ~ pi/4 and no reading of the
    # protocol removes it. Kept strict deliberately.
    ok = eps_ok and prob_ok and elapsed < 10.0
    _report(
        "adiabaticity numbers",
        ok,
        f"eps_max(frustrated drive)={eps_f:.4f} in [0.02,0.12]:{eps_ok}, "
        f"eps_max(nonfrustrated drive)={eps_n:.4f}, "
        f"trotter2 final probs={ {k: round(v, 5) for k, v in probs.items()} } >=0.98:{prob_ok}, "
        f"{elapsed:.1f}s",
    )


def test_regime_separation(default_records):
    last = {(r.regime, r.mode): r for r in default_records if r.step == 21}
    f = last[("frustrated", "exact")]
    n = last[("nonfrustrated", "exact")]
    dn2_gap = n.delta_N2 - f.delta_N2
    dd_gap = n.delta_D - f.delta_D
    frozen_ok = (
        abs(f.delta_N2 - 0.077348) <= 2e-6
        and abs(n.delta_N2 - 0.238014) <= 2e-6
        and abs(f.delta_D - 0.254643) <= 2e-4
        and abs(n.delta_D - 0.916769) <= 2e-4
    )
    ok = dn2_gap >= 0.05 and dd_gap >= 0.2 and frozen_ok
    _report(
        "regime separation",
        ok,
        f"delta_N2 gap={dn2_gap:.4f} (>=0.05), delta_D gap={dd_gap:.4f} (>=0.2), "
        f"frozen-value agreement:{frozen_ok}",
    )


def test_bipartite_shape():
    records = experiment.run(
        experiment.ExperimentConfig(modes=("exact",), regimes=experiment.REGIMES)
    )
    by = {}
    for r in records:
        by.setdefault(r.regime, {})[r.step] = r
    rise_ok = all(
        by[reg][11].N12 > by[reg][3].N12 and by[reg][11].D12 > by[reg][3].D12
        for reg in ("frustrated", "nonfrustrated")
    )
    f_series = [by["frustrated"][k] for k in sorted(by["frustrated"])]
    n_series = [by["nonfrustrated"][k] for k in sorted(by["nonfrustrated"])]
    f_ratio = f_series[-1].N12 / max(r.N12 for r in f_series)
    n_ratio = n_series[-1].N12 / max(r.N12 for r in n_series)
    saturate_ok = f_ratio >= 0.8
    decay_ok = n_ratio < 0.1
    # decay_ok is False at the pinned drive: the non-frustrated curve peaks at
    # |J|/h ~ 1.1 and is still at ~36% of its peak by |J|/h = 5.25 (the exact
    # ground state behaves identically; reaching 10% needs |J|/h ~ 17).
    # The 0.1 factor is kept strict deliberately.
    ok = rise_ok and saturate_ok and decay_ok
    _report(
        "bipartite curve shape",
        ok,
        f"rise:{rise_ok}, frustrated final/peak={f_ratio:.3f} (>=0.8):{saturate_ok}, "
        f"nonfrustrated final/peak={n_ratio:.3f} (<0.1):{decay_ok}",
    )


def test_trotter_order():
    t0 = time.monotonic()
    step_errs = []
    for dt in (0.2, 0.1):
        ue = ad.step_unitary_exact(1.0, 1.0, dt)
        ut = ad.step_unitary_trotter2(1.0, 1.0, dt)
        step_errs.append(np.abs(ut - ue).max())
    step_ratio = step_errs[0] / step_errs[1]
    T = math.pi
    psi0 = sm.initial_product_state()
    global_ratios = []
    for sign in (1.0, -1.0):
        errs = []
        for M in (20, 40):
            dt = T / (M + 1)
            sched = ad.make_schedule(M=M, h_dt=dt, J_final_dt=sign * 5.25 * dt)
            exact = ad.evolve(psi0, sched, mode="exact").states[-1]
            trot = ad.evolve(psi0, sched, mode="trotter2").states[-1]
            errs.append(np.linalg.norm(trot - exact))
        global_ratios.append(errs[0] / errs[1])
    elapsed = time.monotonic() - t0
    ok = (
        6.0 <= step_ratio <= 10.0
        and all(3.0 <= r <= 5.0 for r in global_ratios)
        and elapsed < 5.0
    )
    _report(
        "trotter order",
        ok,
        f"per-step ratio={step_ratio:.2f} in [6,10], "
        f"global ratios={[round(float(r), 2) for r in global_ratios]} in [3,5], {elapsed:.1f}s",
    )


def test_nmr_mixed_model(default_exact_trajectories):
    t0 = time.monotonic()
    neg_ok = True
    for traj in default_exact_trajectories.values():
        for st in traj.states:
            if negativity(nmr.pseudo_pure(st, 1e-5)) != 0.0:
                neg_ok = False
    mixed = {}
    for regime, traj in default_exact_trajectories.items():
        (dd, _), = nmr.mixed_discord_scores(traj, 1e-2, steps=[21])
        mixed[regime] = dd
    order_ok = mixed["nonfrustrated"] > mixed["frustrated"]
    elapsed = time.monotonic() - t0
    ok = neg_ok and order_ok and elapsed < 60.0
    _report(
        "nmr mixed model",
        ok,
        f"all PPS negativities zero:{neg_ok}, mixed delta_D "
        f"nonfrustrated={mixed['nonfrustrated']:.3e} > frustrated={mixed['frustrated']:.3e}:"
        f"{order_ok}, {elapsed:.1f}s",
    )


def test_run_determinism(tmp_path):
    cfg = experiment.ExperimentConfig()
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    experiment.write_csv(experiment.run(cfg), a)
    experiment.write_csv(experiment.run(cfg), b)
    ok = a.read_bytes() == b.read_bytes()
    _report("run determinism", ok, f"byte-identical CSVs: {ok}")
