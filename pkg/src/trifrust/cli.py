"""Command line interface.

Subcommands:
  run     simulate the configured regimes/modes and write run.csv + summary.txt
  sweep   vary the schedule sharpness (or step count) and print an epsilon table
  verify  run the built-in oracle checks; exit nonzero when any fails

Exit codes: 0 success, 1 bad usage or configuration, 2 runtime failure.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np


def parse_samples(text: str) -> tuple[int, ...]:
    """Parse '3,5,7' or the arithmetic shorthand '3,5,...,21'."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if "..." in parts:
        i = parts.index("...")
        if i < 2 or i != len(parts) - 2:
            raise ValueError(f"bad sample shorthand {text!r}; expected 'a,b,...,z'")
        first = [int(p) for p in parts[:i]]
        last = int(parts[i + 1])
        stride = first[-1] - first[-2]
        if stride <= 0:
            raise ValueError(f"bad sample stride in {text!r}")
        vals = list(first)
        while vals[-1] + stride <= last:
            vals.append(vals[-1] + stride)
        return tuple(vals)
    return tuple(int(p) for p in parts)


def _build_parser() -> argparse.ArgumentParser:
    from . import adiabatic

    parser = argparse.ArgumentParser(prog="trifrust", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="simulate and write CSV + summary")
    run_p.add_argument("--regime", choices=["frustrated", "nonfrustrated", "both"], default="both")
    run_p.add_argument("--mode", choices=["exact", "trotter2", "both"], default="both")
    run_p.add_argument("--steps", type=int, default=adiabatic.DEFAULT_M, metavar="M",
                       help="final step index M (M+1 steps total)")
    run_p.add_argument("--shape", choices=["linear", "sinh"], default="sinh")
    run_p.add_argument("--kappa", type=float, default=adiabatic.DEFAULT_KAPPA)
    run_p.add_argument("--zeta", type=float, default=1e-5)
    run_p.add_argument("--zeta-test", type=float, default=1e-2)
    run_p.add_argument("--samples", type=str, default="3,5,...,21")
    run_p.add_argument("--out", type=str, default=".", metavar="DIR")

    sweep_p = sub.add_parser("sweep", help="epsilon_max table over kappa or M")
    sweep_p.add_argument("--vary", choices=["kappa", "M"], default="kappa")
    sweep_p.add_argument("--values", type=str, default="2,2.5,3,3.5,4")
    sweep_p.add_argument("--steps", type=int, default=adiabatic.DEFAULT_M, metavar="M")
    sweep_p.add_argument("--kappa", type=float, default=adiabatic.DEFAULT_KAPPA)
    sweep_p.add_argument("--out", type=str, default=None, metavar="FILE")

    sub.add_parser("verify", help="run the built-in oracle checks")
    return parser


def _cmd_run(args) -> int:
    from . import experiment

    regimes = ("frustrated", "nonfrustrated") if args.regime == "both" else (args.regime,)
    modes = ("exact", "trotter2") if args.mode == "both" else (args.mode,)
    samples = parse_samples(args.samples)
    config = experiment.ExperimentConfig(
        M=args.steps,
        shape=args.shape,
        kappa=args.kappa,
        zeta=args.zeta,
        zeta_test=args.zeta_test,
        sample_steps=samples,
        modes=modes,
        regimes=regimes,
        output_path=args.out,
    )
    records = experiment.run(config)
    os.makedirs(args.out, exist_ok=True)
    csv_path = os.path.join(args.out, "run.csv")
    summary_path = os.path.join(args.out, "summary.txt")
    experiment.write_csv(records, csv_path)
    experiment.write_summary(records, summary_path, config)
    print(f"wrote {len(records)} records -> {csv_path}")
    print(f"summary -> {summary_path}")
    return 0


def _cmd_sweep(args) -> int:
    from . import experiment

    values = [float(v) if args.vary == "kappa" else int(v) for v in args.values.split(",") if v.strip()]
    base = experiment.ExperimentConfig(M=args.steps, kappa=args.kappa)
    rows = experiment.sweep(args.vary, values, base)
    header = f"{args.vary:>8s}  eps_max_frustrated  eps_max_nonfrustrated"
    lines = [header]
    for row in rows:
        lines.append(
            f"{row[args.vary]:>8g}  {row['epsilon_max_frustrated']:>18.6g}  {row['epsilon_max_nonfrustrated']:>21.6g}"
        )
    text = "\n".join(lines)
    print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return 0


def _verify_checks():
    """Fast self-contained oracle checks; yields (name, passed, detail)."""
    from . import adiabatic, correlations, nmr, qla, spin_model

    ghz = np.zeros(8, dtype=complex)
    ghz[0] = ghz[7] = 1 / np.sqrt(2)
    rho_ghz = qla.DensityMatrix.from_state(ghz)
    d = correlations.entanglement_monogamy_score(rho_ghz)
    yield "ghz_entanglement_monogamy", abs(d - 0.25) <= 1e-9, f"delta_N2={d:.12f}"
    dd = correlations.discord_monogamy_score(rho_ghz)
    yield "ghz_discord_monogamy", abs(dd - 1.0) <= 1e-4, f"delta_D={dd:.6f}"

    product = spin_model.initial_product_state()
    rho_p = qla.DensityMatrix.from_state(product)
    d0 = correlations.entanglement_monogamy_score(rho_p)
    dd0 = correlations.discord_monogamy_score(rho_p)
    yield "product_scores_zero", abs(d0) <= 1e-9 and abs(dd0) <= 1e-9, f"{d0:.2e}, {dd0:.2e}"

    bell = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
    rho_b = qla.DensityMatrix.from_state(bell)
    nb = correlations.negativity(rho_b)
    db = correlations.quantum_discord(rho_b).discord
    yield "bell_pair", abs(nb - 0.5) <= 1e-9 and abs(db - 1.0) <= 1e-4, f"N={nb:.9f}, D={db:.6f}"

    h = spin_model.build_hamiltonian(spin_model.ModelParams(h=1.0, J=0.7))
    u = qla.exp_minus_i(h, 0.31)
    defect = float(np.abs(u @ u.conj().T - np.eye(8)).max())
    yield "step_unitarity", defect <= 1e-10, f"|UU^+-I|={defect:.2e}"

    rng = np.random.default_rng(20240817)
    worst = np.inf
    for _ in range(100):
        v = rng.normal(size=8) + 1j * rng.normal(size=8)
        v = v / np.linalg.norm(v)
        worst = min(worst, correlations.entanglement_monogamy_score(qla.DensityMatrix.from_state(v)))
    yield "squared_negativity_monogamy", worst >= -1e-9, f"min delta_N2={worst:.3e}"

    sched = adiabatic.make_schedule()
    traj = adiabatic.evolve(product, sched, mode="exact")
    pps = nmr.pseudo_pure(traj.states[-1], 1e-5)
    n_pps = correlations.negativity(pps)
    yield "pps_is_ppt", n_pps == 0.0, f"N(pps)={n_pps}"

    prob = adiabatic.ground_state_probability(traj.states[-1], spin_model.ModelParams(h=1.0, J=sched.J_max))
    yield "exact_drive_adiabatic", prob >= 0.99, f"final ground prob={prob:.5f}"


def _cmd_verify(_args) -> int:
    failures = 0
    for name, ok, detail in _verify_checks():
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        failures += 0 if ok else 1
    if failures:
        print(f"{failures} check(s) failed")
        return 2
    print("all checks passed")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        return _cmd_verify(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - defensive
        print(f"runtime failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
