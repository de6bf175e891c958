"""Hot numeric kernels: Hermitian eigensolver and measurement-entropy sweeps.

Two code paths exist for the measurement kernel. With numba enabled (default)
``cond_entropy_batch`` is an ``@njit`` loop whose inner eigensolver is the same
cyclic Jacobi used everywhere else; with ``TRIFRUST_NO_NUMBA=1`` it is replaced
by a vectorized numpy implementation (closed-form 2x2 spectra, batched
``eigvalsh`` for 4x4). Both are deterministic; they agree to ~1e-12.

The eigensolver is a cyclic Jacobi rotation scheme for complex Hermitian
matrices. Dimensions here never exceed 8, where Jacobi is both robust and
fast, converges quadratically, and has no tie-breaking ambiguity across
platforms. Convergence: off-diagonal Frobenius norm below 1e-13 relative to
the input scale, capped at 100 sweeps.
"""

import numpy as np

from ._accel import NUMBA_ENABLED, maybe_njit

ENTROPY_CLAMP = 1e-12  # eigenvalues below this contribute zero entropy
BRANCH_CLAMP = 1e-12   # measurement branches below this probability are dropped

_LOG2 = np.log(2.0)


def _jacobi_eigh_impl(a):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns (eigenvalues ascending, eigenvector columns). Each eigenvector is
    phase-fixed so that its largest-magnitude component is real and positive
    (first such component on ties), which makes downstream trajectories
    reproducible bit-for-bit.
    """
    n = a.shape[0]
    A = a.astype(np.complex128).copy()
    V = np.eye(n, dtype=np.complex128)

    fn = 0.0
    for i in range(n):
        for j in range(n):
            fn += abs(A[i, j]) ** 2
    fn = np.sqrt(fn)
    if fn == 0.0:
        return np.zeros(n), V
    tol = 1e-13 * fn

    for _sweep in range(100):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += abs(A[i, j]) ** 2
        if np.sqrt(off) < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = A[p, q]
                absg = abs(g)
                if absg < 1e-300:
                    continue
                w = g / absg
                wb = np.conj(w)
                tau = (A[q, q].real - A[p, p].real) / (2.0 * absg)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    aip = A[i, p]
                    aiq = A[i, q]
                    A[i, p] = c * aip - s * wb * aiq
                    A[i, q] = s * w * aip + c * aiq
                for j in range(n):
                    apj = A[p, j]
                    aqj = A[q, j]
                    A[p, j] = c * apj - s * w * aqj
                    A[q, j] = s * wb * apj + c * aqj
                for i in range(n):
                    vip = V[i, p]
                    viq = V[i, q]
                    V[i, p] = c * vip - s * wb * viq
                    V[i, q] = s * w * vip + c * viq

    evals = np.empty(n)
    for i in range(n):
        evals[i] = A[i, i].real
    order = np.argsort(evals)
    evals = evals[order]
    V = V[:, order]

    for k in range(n):
        bv = 0.0
        for i in range(n):
            m = abs(V[i, k])
            if m > bv:
                bv = m
        bi = 0
        for i in range(n):
            # first component tied with the maximum wins, so near-equal
            # magnitudes cannot flip the pivot between runs or platforms
            if abs(V[i, k]) >= bv * (1.0 - 1e-12):
                bi = i
                break
        piv = V[bi, k]
        mag = abs(piv)
        if mag > 0.0:
            V[:, k] = V[:, k] * (np.conj(piv) / mag)
    return evals, V


jacobi_eigh = maybe_njit(_jacobi_eigh_impl)


def _jacobi_eigvals_impl(a):
    """Eigenvalues only (ascending); same rotations as the full solver, no vectors."""
    n = a.shape[0]
    A = a.astype(np.complex128).copy()

    fn = 0.0
    for i in range(n):
        for j in range(n):
            fn += abs(A[i, j]) ** 2
    fn = np.sqrt(fn)
    if fn == 0.0:
        return np.zeros(n)
    tol = 1e-13 * fn

    for _sweep in range(100):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += abs(A[i, j]) ** 2
        if np.sqrt(off) < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = A[p, q]
                absg = abs(g)
                if absg < 1e-300:
                    continue
                w = g / absg
                wb = np.conj(w)
                tau = (A[q, q].real - A[p, p].real) / (2.0 * absg)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    aip = A[i, p]
                    aiq = A[i, q]
                    A[i, p] = c * aip - s * wb * aiq
                    A[i, q] = s * w * aip + c * aiq
                for j in range(n):
                    apj = A[p, j]
                    aqj = A[q, j]
                    A[p, j] = c * apj - s * w * aqj
                    A[q, j] = s * wb * apj + c * aqj

    evals = np.empty(n)
    for i in range(n):
        evals[i] = A[i, i].real
    return np.sort(evals)


jacobi_eigvals = maybe_njit(_jacobi_eigvals_impl)


def _cond_entropy_batch_impl(rho, drest, thetas, phis):
    """Average post-measurement entropy for each measurement direction.

    ``rho`` must be ordered with the measured qubit as the leading subsystem,
    i.e. shaped (2*drest, 2*drest). The measurement basis on that qubit is
    |n> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> and its orthogonal
    complement. Returns sum_i p_i S(rho_rest|i) in bits per angle pair.
    """
    G = thetas.shape[0]
    out = np.zeros(G)
    R00 = rho[0:drest, 0:drest]
    R01 = rho[0:drest, drest : 2 * drest]
    R10 = rho[drest : 2 * drest, 0:drest]
    R11 = rho[drest : 2 * drest, drest : 2 * drest]
    B = np.empty((drest, drest), dtype=np.complex128)
    for g in range(G):
        c = np.cos(thetas[g] / 2.0)
        s = np.sin(thetas[g] / 2.0)
        eip = np.cos(phis[g]) + 1j * np.sin(phis[g])
        eim = np.conj(eip)
        acc = 0.0
        for branch in range(2):
            if branch == 0:
                f00, f01, f10, f11 = c * c, c * s * eip, c * s * eim, s * s
            else:
                f00, f01, f10, f11 = s * s, -c * s * eip, -c * s * eim, c * c
            p = 0.0
            for i in range(drest):
                for j in range(drest):
                    B[i, j] = f00 * R00[i, j] + f01 * R01[i, j] + f10 * R10[i, j] + f11 * R11[i, j]
                p += B[i, i].real
            if p < BRANCH_CLAMP:
                continue
            if drest == 2:
                m = (B[0, 0].real + B[1, 1].real) / 2.0
                r = np.sqrt(((B[0, 0].real - B[1, 1].real) / 2.0) ** 2 + abs(B[0, 1]) ** 2)
                ent = 0.0
                for lam in (m - r, m + r):
                    q = lam / p
                    if q > ENTROPY_CLAMP:
                        ent -= q * np.log(q)
            else:
                w = jacobi_eigvals(B)
                ent = 0.0
                for i in range(drest):
                    q = w[i] / p
                    if q > ENTROPY_CLAMP:
                        ent -= q * np.log(q)
            acc += p * ent / _LOG2
        out[g] = acc
    return out


def _cond_entropy_batch_numpy(rho, drest, thetas, phis):
    """Vectorized fallback of :func:`_cond_entropy_batch_impl`."""
    R00 = rho[0:drest, 0:drest]
    R01 = rho[0:drest, drest : 2 * drest]
    R10 = rho[drest : 2 * drest, 0:drest]
    R11 = rho[drest : 2 * drest, drest : 2 * drest]
    c = np.cos(thetas / 2.0)[:, None, None]
    s = np.sin(thetas / 2.0)[:, None, None]
    eip = np.exp(1j * phis)[:, None, None]
    eim = np.conj(eip)
    cs = c * s
    out = np.zeros(thetas.shape[0])
    for sign in (1.0, -1.0):
        if sign > 0:
            B = c * c * R00 + cs * eip * R01 + cs * eim * R10 + s * s * R11
        else:
            B = s * s * R00 - cs * eip * R01 - cs * eim * R10 + c * c * R11
        p = np.trace(B, axis1=1, axis2=2).real
        ok = p > BRANCH_CLAMP
        if not ok.any():
            continue
        Bn = B[ok] / p[ok, None, None]
        if drest == 2:
            a = Bn[:, 0, 0].real
            d = Bn[:, 1, 1].real
            r = np.sqrt(((a - d) / 2.0) ** 2 + np.abs(Bn[:, 0, 1]) ** 2)
            m = (a + d) / 2.0
            w = np.stack([m - r, m + r], axis=1)
        else:
            w = np.linalg.eigvalsh(Bn)
        ent = -np.where(w > ENTROPY_CLAMP, w * np.log(np.clip(w, ENTROPY_CLAMP, None)), 0.0).sum(axis=1)
        out[ok] += p[ok] * ent / _LOG2
    return out


if NUMBA_ENABLED:
    cond_entropy_batch = maybe_njit(_cond_entropy_batch_impl)
else:
    cond_entropy_batch = _cond_entropy_batch_numpy


def warmup():
    """Trigger JIT compilation of the kernels (no-op on the fallback path)."""
    a = np.eye(4, dtype=np.complex128)
    jacobi_eigh(a)
    ang = np.array([0.3])
    cond_entropy_batch(np.eye(4, dtype=np.complex128) / 4.0, 2, ang, ang)
    cond_entropy_batch(np.eye(8, dtype=np.complex128) / 8.0, 4, ang, ang)
