import math

import numpy as np
import pytest

from trifrust import adiabatic as ad
from trifrust import spin_model as sm

import oracles as orc


# ---------------------------------------------------------------- schedules

def test_default_schedule_endpoints():
    s = ad.make_schedule()
    assert s.M == 20 and len(s.J_values) == 21
    assert s.J_values[0] == 0.0
    assert abs(s.J_values[-1] - 5.25) <= 1e-12
    assert abs(s.dt - math.pi / 21) <= 1e-15
    assert s.direction == "frustrated"


def test_nonfrustrated_schedule_sign():
    s = ad.make_schedule(J_final_dt=-math.pi / 4)
    assert abs(s.J_values[-1] + 5.25) <= 1e-12
    assert s.direction == "nonfrustrated"


def test_linear_schedule_small():
    s = ad.make_schedule(M=2, h_dt=1.0, J_final_dt=1.0, shape="linear")
    np.testing.assert_allclose(s.J_values, (0.0, 0.5, 1.0), atol=0)


def test_sinh_midpoint_value():
    s = ad.make_schedule()
    want = 5.25 * math.sinh(1.5) / math.sinh(3.0)
    assert abs(s.J_values[10] - want) <= 1e-12
    assert abs(want / 5.25 - 0.2125) <= 1e-4


def test_schedule_magnitude_monotone():
    for shape in ("linear", "sinh"):
        s = ad.make_schedule(shape=shape)
        mags = np.abs(s.J_values)
        assert (np.diff(mags) >= -1e-15).all()


def test_schedule_validation():
    with pytest.raises(ValueError):
        ad.make_schedule(kappa=0.0)
    with pytest.raises(ValueError):
        ad.make_schedule(h_dt=0.0)
    with pytest.raises(ValueError):
        ad.make_schedule(shape="cosine")
    with pytest.raises(ValueError):
        ad.Schedule(1, 0.1, (0.5, 1.0), "linear")  # must start at 0
    # M=0 is a legal degenerate drive
    s0 = ad.make_schedule(M=0, h_dt=1.0)
    assert s0.J_values == (0.0,)


# ---------------------------------------------------------------- step unitaries

def test_exact_step_zero_time():
    np.testing.assert_allclose(ad.step_unitary_exact(1.0, 0.7, 0.0), np.eye(8), atol=1e-14)


def test_exact_step_field_only():
    u = ad.step_unitary_exact(1.0, 0.0, 0.3)
    np.testing.assert_allclose(u, orc.expm_series(-1j * orc.FIELD * 0.3), atol=1e-10)


def test_exact_step_vs_series_oracle():
    u = ad.step_unitary_exact(1.0, 1.0, 0.1)
    np.testing.assert_allclose(u, orc.expm_series(-1j * orc.hamiltonian(1.0, 1.0) * 0.1), atol=1e-10)


def test_trotter_step_reduces_to_exact_when_commuting():
    np.testing.assert_allclose(
        ad.step_unitary_trotter2(1.0, 0.0, 0.4), ad.step_unitary_exact(1.0, 0.0, 0.4), atol=1e-12
    )
    # pure coupling: h -> 0 limit
    ue = orc.expm_series(-1j * orc.ZZSUM * 1.3 * 0.4)
    ut_half = orc.expm_series(-1j * orc.FIELD * 1e-14 * 0.2)
    np.testing.assert_allclose(
        ad.step_unitary_trotter2(1e-14, 1.3, 0.4), ut_half @ ue @ ut_half, atol=1e-10
    )


def test_trotter_step_is_unitary():
    u = ad.step_unitary_trotter2(1.0, 2.2, 0.15)
    np.testing.assert_allclose(u @ u.conj().T, np.eye(8), atol=1e-12)


def test_trotter_per_step_error_third_order():
    errs = []
    for dt in (0.2, 0.1):
        ue = ad.step_unitary_exact(1.0, 1.0, dt)
        ut = ad.step_unitary_trotter2(1.0, 1.0, dt)
        errs.append(np.abs(ut - ue).max())
    ratio = errs[0] / errs[1]
    assert 6.0 <= ratio <= 10.0


# ---------------------------------------------------------------- evolve

def test_evolve_degenerate_drive_returns_initial():
    s = ad.Schedule(0, 0.0, (0.0,), "linear")
    psi0 = sm.initial_product_state()
    for mode in ("exact", "trotter2"):
        traj = ad.evolve(psi0, s, mode=mode)
        assert len(traj.states) == 1
        np.testing.assert_allclose(traj.states[0], psi0, atol=1e-14)


def test_evolve_uncoupled_schedule_keeps_eigenstate():
    s = ad.Schedule(5, 0.21, (0.0,) * 6, "linear")
    psi0 = sm.initial_product_state()
    traj = ad.evolve(psi0, s, mode="exact")
    overlap = abs(np.vdot(psi0, traj.states[-1])) ** 2
    assert abs(overlap - 1.0) <= 1e-10


def test_evolve_norm_preserved_and_state_count(default_exact_trajectories):
    for traj in default_exact_trajectories.values():
        assert len(traj.states) == traj.schedule.M + 1
        for st in traj.states:
            assert abs(np.linalg.norm(st) - 1.0) <= 1e-10


def test_evolve_matches_brute_force_product(default_exact_trajectories):
    traj = default_exact_trajectories["frustrated"]
    s = traj.schedule
    u = np.eye(8, dtype=complex)
    for J in s.J_values:
        u = orc.expm_series(-1j * orc.hamiltonian(1.0, J) * s.dt, terms=70) @ u
    np.testing.assert_allclose(traj.states[-1], u @ sm.initial_product_state(), atol=1e-9)


def test_evolve_nonfrustrated_exact_stays_in_ground_state(default_exact_trajectories):
    traj = default_exact_trajectories["nonfrustrated"]
    prob = ad.ground_state_probability(
        traj.states[-1], sm.ModelParams(h=1.0, J=traj.schedule.J_max)
    )
    assert prob >= 0.99
    assert abs(prob - 0.99930) <= 5e-5  # regression, exact-diagonalization oracle


def test_evolve_regime_mirror_at_start(default_exact_trajectories):
    a = default_exact_trajectories["frustrated"].states[0]
    b = default_exact_trajectories["nonfrustrated"].states[0]
    assert np.abs(a - b).max() <= 1e-12


def test_evolve_rejects_bad_mode_and_state():
    s = ad.make_schedule(M=1)
    with pytest.raises(ValueError):
        ad.evolve(sm.initial_product_state(), s, mode="euler")
    with pytest.raises(ValueError):
        ad.evolve(np.ones(8), s)


def test_trotter_global_error_second_order():
    # fixed total time, M doubled: amplitude-level final error drops ~ (41/21)^2
    T = 21 * math.pi / 21
    psi0 = sm.initial_product_state()
    for sign in (1.0, -1.0):
        errs = []
        for M in (20, 40):
            dt = T / (M + 1)
            sched = ad.make_schedule(M=M, h_dt=dt, J_final_dt=sign * 5.25 * dt)
            exact = ad.evolve(psi0, sched, mode="exact").states[-1]
            trot = ad.evolve(psi0, sched, mode="trotter2").states[-1]
            errs.append(np.linalg.norm(trot - exact))
        ratio = errs[0] / errs[1]
        assert 3.0 <= ratio <= 5.0


def test_adiabatic_limit_monotone_in_M():
    # linear ramp at fixed dt: slower coupling sweep cannot hurt the final overlap
    psi0 = sm.initial_product_state()
    for sign in (1.0, -1.0):
        probs = []
        for M in (20, 40, 80):
            sched = ad.make_schedule(M=M, shape="linear", J_final_dt=sign * math.pi / 4)
            traj = ad.evolve(psi0, sched, mode="exact")
            probs.append(
                ad.ground_state_probability(traj.states[-1], sm.ModelParams(h=1.0, J=sched.J_max))
            )
        assert probs[0] <= probs[1] <= probs[2]


# ---------------------------------------------------------------- probabilities

def test_ground_probability_product_state():
    p = ad.ground_state_probability(sm.initial_product_state(), sm.ModelParams(h=1.0, J=0.0))
    assert abs(p - 1.0) <= 1e-12


def test_ground_probability_orthogonal_state():
    w, v = sm.spectrum(sm.ModelParams(h=1.0, J=0.0))
    p = ad.ground_state_probability(v[:, 7], sm.ModelParams(h=1.0, J=0.0))
    assert p <= 1e-20


def test_trotter_endpoint_probabilities_regression():
    # frozen from the exact-diagonalization oracle pipeline
    psi0 = sm.initial_product_state()
    expected = {1.0: 0.97700, -1.0: 0.99424}
    for sign, want in expected.items():
        sched = ad.make_schedule(J_final_dt=sign * math.pi / 4)
        traj = ad.evolve(psi0, sched, mode="trotter2")
        prob = ad.ground_state_probability(traj.states[-1], sm.ModelParams(h=1.0, J=sched.J_max))
        assert abs(prob - want) <= 5e-5


# ---------------------------------------------------------------- epsilon along schedules

def test_epsilon_profile_zero_rate_at_flat_schedule():
    s = ad.Schedule(3, 0.2, (0.0,) * 4, "linear")
    np.testing.assert_array_equal(ad.epsilon_profile(s), np.zeros(4))


def test_epsilon_profile_default_maxima():
    # frozen from the reference spectrum pipeline; the frustrated maximum sits
    # at the first step, within 0.01 of the 0.063 protocol estimate
    eps_f = ad.epsilon_profile(ad.make_schedule()).max()
    eps_n = ad.epsilon_profile(ad.make_schedule(J_final_dt=-math.pi / 4)).max()
    assert abs(eps_f - 0.0570969) <= 1e-6
    assert abs(eps_f - 0.063) <= 0.01
    assert abs(eps_n - 0.144024) <= 1e-5


def test_epsilon_profile_matches_reference(default_exact_trajectories):
    sched = default_exact_trajectories["frustrated"].schedule
    prof = ad.epsilon_profile(sched)
    rates = ad.coupling_rates(sched)
    for m in (0, 5, 10, 20):
        want = orc.epsilon_reference(1.0, sched.J_values[m], rates[m])
        assert abs(prof[m] - want) <= 1e-9


def test_spectrum_points_structure():
    pts = ad.spectrum_points(ad.make_schedule(M=4))
    assert len(pts) == 5
    for pt in pts:
        assert len(pt.energies) == 8
        assert all(b >= a for a, b in zip(pt.energies, pt.energies[1:]))
        assert pt.epsilon >= 0.0
        assert abs(np.linalg.norm(pt.ground_state) - 1) <= 1e-10
