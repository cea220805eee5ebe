"""Diagonalization of the assembled Hamiltonian with residual certificates.

The certificates (per-pair two-norms of H v - lambda v) are always
computed; they are the currency every downstream report and exit code
is judged by, not an optional extra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hamiltonian import HamiltonianMatrix
from .kernels import symmetric_eigh

RESIDUAL_FACTOR = 1e-10


@dataclass(frozen=True)
class Spectrum:
    """Sorted eigenpairs of a symmetric matrix plus residual certificates."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residuals: np.ndarray
    matrix_max_norm: float

    def __post_init__(self) -> None:
        for a in (self.eigenvalues, self.eigenvectors, self.residuals):
            a.setflags(write=False)

    def certified(self, factor: float = RESIDUAL_FACTOR) -> bool:
        """True when every residual is below factor * max-norm of the matrix."""
        return bool(np.all(self.residuals <= factor * self.matrix_max_norm))


def solve_symmetric(H: HamiltonianMatrix | np.ndarray, backend: str | None = None) -> Spectrum:
    """Full spectrum of a dense symmetric matrix, ascending.

    Accepts an assembled Hamiltonian or a bare symmetric array.

    Raises
    ------
    ValueError
        If the matrix is not square or not symmetric.
    RuntimeError
        On eigensolver non-convergence (NaN contamination upstream).
    """
    A = H.entries if isinstance(H, HamiltonianMatrix) else np.asarray(H, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("expected a square matrix")
    max_norm = float(np.abs(A).max()) if A.size else 0.0
    if A.size and np.abs(A - A.T).max() > 1e-12 * max(max_norm, 1.0):
        raise ValueError("matrix is not symmetric")
    w, V = symmetric_eigh(A, backend=backend)
    residuals = np.linalg.norm(A @ V - V * w, axis=0)
    return Spectrum(eigenvalues=w, eigenvectors=V, residuals=residuals, matrix_max_norm=max_norm)
