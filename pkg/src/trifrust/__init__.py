"""trifrust: adiabatic simulation of a triangular transverse-field Ising trio
with monogamy-based detection of the frustrated vs non-frustrated regimes."""

from ._accel import NUMBA_ENABLED
from .adiabatic import (
    Schedule,
    Trajectory,
    evolve,
    ground_state_probability,
    make_schedule,
    step_unitary_exact,
    step_unitary_trotter2,
)
from .correlations import (
    BipartiteSplit,
    DiscordResult,
    MonogamyBreakdown,
    discord_monogamy_score,
    entanglement_monogamy_score,
    monogamy_breakdown,
    negativity,
    quantum_discord,
)
from .experiment import CorrelationRecord, ExperimentConfig, read_csv, run, write_csv, write_summary
from .nmr import equilibrium_deviation, mixed_discord_scores, pseudo_pure
from .qla import (
    DensityMatrix,
    exp_minus_i,
    fidelity,
    hermitian_eig,
    partial_trace,
    partial_transpose,
    tensor,
    von_neumann_entropy,
)
from .spin_model import (
    DegenerateGapError,
    ModelParams,
    SpectrumPoint,
    adiabatic_epsilon,
    build_hamiltonian,
    field_term,
    ground_state,
    initial_product_state,
    ising_term,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "NUMBA_ENABLED",
    "Schedule",
    "Trajectory",
    "evolve",
    "ground_state_probability",
    "make_schedule",
    "step_unitary_exact",
    "step_unitary_trotter2",
    "BipartiteSplit",
    "DiscordResult",
    "MonogamyBreakdown",
    "discord_monogamy_score",
    "entanglement_monogamy_score",
    "monogamy_breakdown",
    "negativity",
    "quantum_discord",
    "CorrelationRecord",
    "ExperimentConfig",
    "read_csv",
    "run",
    "write_csv",
    "write_summary",
    "equilibrium_deviation",
    "mixed_discord_scores",
    "pseudo_pure",
    "DensityMatrix",
    "exp_minus_i",
    "fidelity",
    "hermitian_eig",
    "partial_trace",
    "partial_transpose",
    "tensor",
    "von_neumann_entropy",
    "DegenerateGapError",
    "ModelParams",
    "SpectrumPoint",
    "adiabatic_epsilon",
    "build_hamiltonian",
    "field_term",
    "ground_state",
    "initial_product_state",
    "ising_term",
    "spectrum",
    "__version__",
]
