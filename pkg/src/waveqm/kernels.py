"""Hot numeric kernels: matrix assembly and the dense symmetric eigensolver.

Both kernels exist twice: a numba @njit version and a pure-numpy
fallback.  The backend is chosen per call, defaulting to the WAVEQM_BACKEND
environment variable ("numba" or "numpy"); unset means numba when it is
importable, numpy otherwise.  benchmarks/bench_kernels.py compares the two.
"""

from __future__ import annotations

import os
import warnings

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

ENV_VAR = "WAVEQM_BACKEND"
_BACKENDS = ("numba", "numpy")


def resolve_backend(backend: str | None = None) -> str:
    """Pick the kernel backend: explicit argument, else env var, else auto."""
    choice = backend if backend is not None else os.environ.get(ENV_VAR, "").strip().lower()
    if choice == "":
        return "numba" if HAS_NUMBA else "numpy"
    if choice not in _BACKENDS:
        raise ValueError(f"unknown backend {choice!r}; expected one of {_BACKENDS}")
    if choice == "numba" and not HAS_NUMBA:
        warnings.warn("numba not importable; falling back to numpy kernels", stacklevel=2)
        return "numpy"
    return choice


# ---------------------------------------------------------------------------
# Hamiltonian assembly
#
# C[a, :] holds the fine-scale scaling coefficients of basis element a on the
# global translation window starting at p_lo.  The single-scale kernel between
# fine translations p and q (d = q - p, |d| <= band) is
#
#     0.5 * 4**k * gamma[d]  +  0.5 * 4**-k * (x2[d] + 2 p x1[d] + p**2 [d=0])
#
# kinetic plus half the squared-coordinate table.


def assemble_hamiltonian(
    C: np.ndarray,
    p_lo: int,
    k_fine: int,
    gamma: np.ndarray,
    x1: np.ndarray,
    x2: np.ndarray,
    backend: str | None = None,
) -> np.ndarray:
    """Dense symmetric Hamiltonian over the expanded basis coefficients.

    Each unordered pair is accumulated once and mirrored, so the result
    is bit-for-bit symmetric regardless of backend.
    """
    C = np.ascontiguousarray(C, dtype=np.float64)
    if resolve_backend(backend) == "numba":
        return _assemble_numba(C, p_lo, float(4.0**k_fine), gamma, x1, x2)
    return _assemble_numpy(C, p_lo, k_fine, gamma, x1, x2)


def _assemble_numpy(C, p_lo, k_fine, gamma, x1, x2):
    n, P = C.shape
    band = (gamma.size - 1) // 2
    four_k = 4.0**k_fine
    p = p_lo + np.arange(P, dtype=np.float64)
    Kmat = np.zeros((P, P))
    for d in range(-band, band + 1):
        rows = np.arange(max(0, -d), min(P, P - d))
        w = 0.5 * (four_k * gamma[d + band] + (x2[d + band] + 2.0 * p[rows] * x1[d + band]) / four_k)
        Kmat[rows, rows + d] = w
    Kmat[np.diag_indices(P)] += 0.5 * p**2 / four_k
    H = C @ Kmat @ C.T
    upper = np.triu(H)
    return upper + np.triu(H, 1).T


if HAS_NUMBA:

    @njit(cache=True)
    def _assemble_numba(C, p_lo, four_k, gamma, x1, x2):  # pragma: no cover - compiled
        n, P = C.shape
        band = (gamma.shape[0] - 1) // 2
        H = np.zeros((n, n))
        for a in range(n):
            for b in range(a, n):
                acc = 0.0
                for p in range(P):
                    ca = C[a, p]
                    if ca == 0.0:
                        continue
                    pg = float(p_lo + p)
                    qlo = p - band if p - band > 0 else 0
                    qhi = p + band if p + band < P - 1 else P - 1
                    for q in range(qlo, qhi + 1):
                        cb = C[b, q]
                        if cb == 0.0:
                            continue
                        d = q - p + band
                        w = 0.5 * (four_k * gamma[d] + (x2[d] + 2.0 * pg * x1[d]) / four_k)
                        if q == p:
                            w += 0.5 * pg * pg / four_k
                        acc += ca * cb * w
                H[a, b] = acc
                H[b, a] = acc
        return H

else:  # pragma: no cover - exercised only without numba

    def _assemble_numba(*args):
        raise RuntimeError("numba backend requested but numba is not importable")


# ---------------------------------------------------------------------------
# Dense symmetric eigensolver


def symmetric_eigh(A: np.ndarray, backend: str | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Full spectrum of a dense symmetric matrix, eigenvalues ascending.

    The numba backend runs cyclic Jacobi sweeps; the numpy backend
    delegates to LAPACK via ``np.linalg.eigh``.

    Raises
    ------
    RuntimeError
        If the Jacobi sweeps fail to converge within the iteration cap,
        which signals NaN contamination upstream.
    """
    A = np.array(A, dtype=np.float64, order="C")
    if resolve_backend(backend) == "numba":
        w, V, converged = _jacobi_numba(A)
        if not converged:
            raise RuntimeError(
                "Jacobi eigensolver did not converge within the sweep cap; "
                "check the matrix for NaN contamination"
            )
        order = np.argsort(w, kind="stable")
        return w[order], V[:, order]
    w, V = np.linalg.eigh(A)
    return w, V


_JACOBI_MAX_SWEEPS = 64


def _jacobi_kernel(A):
    """Cyclic Jacobi rotations, in place; returns (diag, V, converged)."""
    n = A.shape[0]
    V = np.eye(n)
    if n < 2:
        return np.diag(A).copy(), V, True
    fro2 = 0.0
    for i in range(n):
        for j in range(n):
            fro2 += A[i, j] * A[i, j]
    stop = 1e-28 * fro2 + 1e-300
    converged = False
    for _ in range(_JACOBI_MAX_SWEEPS):
        off2 = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off2 += 2.0 * A[i, j] * A[i, j]
        if off2 <= stop or not np.isfinite(off2):
            converged = off2 <= stop
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                app = A[p, p]
                aqq = A[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = A[i, p]
                    aiq = A[i, q]
                    A[i, p] = aip * c - aiq * s
                    A[p, i] = A[i, p]
                    A[i, q] = aiq * c + aip * s
                    A[q, i] = A[i, q]
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
                for i in range(n):
                    vip = V[i, p]
                    viq = V[i, q]
                    V[i, p] = vip * c - viq * s
                    V[i, q] = viq * c + vip * s
    w = np.empty(n)
    for i in range(n):
        w[i] = A[i, i]
    return w, V, converged


if HAS_NUMBA:
    _jacobi_numba = njit(cache=True)(_jacobi_kernel)
else:  # pragma: no cover - exercised only without numba
    _jacobi_numba = _jacobi_kernel
