"""Dense complex linear algebra for Hilbert spaces of dimension <= 8.

Everything here is a pure function of its arguments; density matrices are
small immutable wrappers around numpy arrays. Entropies are in bits.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .kernels import ENTROPY_CLAMP, jacobi_eigh

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-9
STATE_NORM_TOL = 1e-12


def as_state(vec) -> np.ndarray:
    """Validate and return a unit-norm complex state vector."""
    v = np.asarray(vec, dtype=np.complex128)
    if v.ndim != 1:
        raise ValueError(f"state vector must be 1-d, got shape {v.shape}")
    if not np.isfinite(v).all():
        raise ValueError("state vector has non-finite entries")
    norm = np.linalg.norm(v)
    if abs(norm - 1.0) > STATE_NORM_TOL:
        raise ValueError(f"state vector norm {norm!r} deviates from 1 beyond {STATE_NORM_TOL}")
    return v


def _require_square(m: np.ndarray) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("matrix has non-finite entries")
    return a


def _hermiticity_defect(a: np.ndarray) -> float:
    return float(np.abs(a - a.conj().T).max())


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite operator with subsystem dims."""

    matrix: np.ndarray
    dims: tuple[int, ...]
    _eigs: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        a = _require_square(self.matrix)
        dims = tuple(int(d) for d in self.dims)
        if int(np.prod(dims)) != a.shape[0]:
            raise ValueError(f"subsystem dims {dims} do not multiply to dimension {a.shape[0]}")
        scale = max(1.0, float(np.abs(a).max()))
        if _hermiticity_defect(a) > HERMITICITY_TOL * scale:
            raise ValueError("density matrix is not Hermitian to 1e-10")
        tr = np.trace(a)
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"density matrix trace {tr!r} deviates from 1 beyond {TRACE_TOL}")
        w, _ = jacobi_eigh(a)
        if w[0] < -PSD_TOL:
            raise ValueError(f"density matrix has eigenvalue {w[0]!r} below -{PSD_TOL}")
        object.__setattr__(self, "matrix", a)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "_eigs", w)
        self.matrix.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_subsystems(self) -> int:
        return len(self.dims)

    @classmethod
    def from_state(cls, vec, dims=None) -> "DensityMatrix":
        v = as_state(vec)
        if dims is None:
            n = int(np.log2(len(v)))
            if 2**n != len(v):
                raise ValueError("cannot infer qubit dims from a non power-of-two vector")
            dims = (2,) * n
        return cls(np.outer(v, v.conj()), tuple(dims))

    def eigenvalues(self) -> np.ndarray:
        return self._eigs.copy()


def tensor(factors) -> np.ndarray:
    """Kronecker product of the given square matrices, in order."""
    factors = list(factors)
    if not factors:
        raise ValueError("tensor() needs at least one factor")
    out = _require_square(factors[0])
    for f in factors[1:]:
        out = np.kron(out, _require_square(f))
    return out


def hermitian_eig(h) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and phase-fixed orthonormal eigenvectors of a Hermitian matrix."""
    a = _require_square(h)
    scale = max(1.0, float(np.abs(a).max()))
    if _hermiticity_defect(a) > HERMITICITY_TOL * scale:
        raise ValueError("hermitian_eig: input is not Hermitian to 1e-10")
    return jacobi_eigh(a)


def exp_minus_i(h, s: float) -> np.ndarray:
    """exp(-i h s) for Hermitian h, via eigendecomposition. Unitary by construction."""
    w, v = hermitian_eig(h)
    phases = np.exp(-1j * w * float(s))
    return (v * phases) @ v.conj().T


def _ptrace_array(a: np.ndarray, dims, keep) -> np.ndarray:
    n = len(dims)
    cur = a.reshape(tuple(dims) * 2)
    cur_dims = list(dims)
    for i in sorted((i for i in range(n) if i not in keep), reverse=True):
        cur = np.trace(cur, axis1=i, axis2=i + len(cur_dims))
        cur_dims.pop(i)
    d = int(np.prod(cur_dims)) if cur_dims else 1
    return np.ascontiguousarray(cur.reshape(d, d))


def partial_trace(rho: DensityMatrix, keep) -> DensityMatrix:
    """Trace out every subsystem not listed in ``keep`` (indices, order-insensitive)."""
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise ValueError("partial_trace: keep must be nonempty")
    if keep[0] < 0 or keep[-1] >= rho.n_subsystems:
        raise ValueError(f"partial_trace: keep {keep} out of range for {rho.n_subsystems} subsystems")
    if len(keep) == rho.n_subsystems:
        return rho
    reduced = _ptrace_array(rho.matrix, rho.dims, keep)
    return DensityMatrix(reduced, tuple(rho.dims[k] for k in keep))


def _ptranspose_array(a: np.ndarray, dims, party: int) -> np.ndarray:
    n = len(dims)
    r = a.reshape(tuple(dims) * 2)
    r = np.swapaxes(r, party, party + n)
    d = int(np.prod(dims))
    return np.ascontiguousarray(r.reshape(d, d))


def partial_transpose(rho: DensityMatrix, party: int) -> np.ndarray:
    """Transpose the given subsystem only (bipartition: party vs the rest)."""
    party = int(party)
    if party < 0 or party >= rho.n_subsystems:
        raise ValueError(f"partial_transpose: party {party} out of range")
    return _ptranspose_array(rho.matrix, rho.dims, party)


def _entropy_from_eigs(w: np.ndarray) -> float:
    if w.min() < -PSD_TOL:
        raise ValueError(f"entropy: eigenvalue {w.min()!r} below -{PSD_TOL}")
    w = w[w > ENTROPY_CLAMP]
    if len(w) == 0:
        return 0.0
    return float(-(w * np.log2(w)).sum())


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """S(rho) = -tr(rho log2 rho) in bits; eigenvalues under the clamp count as zero."""
    return _entropy_from_eigs(rho.eigenvalues())


def fidelity(rho_a: DensityMatrix, rho_b: DensityMatrix) -> float:
    """Normalized trace overlap tr(ab)/sqrt(tr(a^2) tr(b^2)); 1 iff proportional."""
    if rho_a.dim != rho_b.dim:
        raise ValueError(f"fidelity: dimension mismatch {rho_a.dim} vs {rho_b.dim}")
    a, b = rho_a.matrix, rho_b.matrix
    pa = np.trace(a @ a).real
    pb = np.trace(b @ b).real
    if pa <= 0.0 or pb <= 0.0:
        raise ValueError("fidelity: degenerate input with zero purity")
    return float(np.trace(a @ b).real / np.sqrt(pa * pb))
