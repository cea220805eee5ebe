"""Dense symmetric Hamiltonian of the dimensionless oscillator.

Every basis element is expanded into scaling functions at one common
fine scale, so each matrix element reduces to a banded double sum over
the single-scale kinetic and squared-coordinate tables.  The matrix
carries a block map (scaling/wavelet rows and columns) for display and
tests; storage is plain dense.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .basis import BasisSet, refine_element
from .filters import FilterBank
from .integrals import IntegralTables
from .kernels import assemble_hamiltonian

BLOCK_NAMES = ("ss", "sw", "ws", "ww")


@dataclass(frozen=True)
class OscillatorModel:
    """Dimensionless oscillator: -1/2 d2/dq2 + q2/2 in units of hbar*omega.

    The physical length scale (hbar**2 / (m k))**(1/4) is recorded for
    documentation only; no physical constant enters any numeric path.
    """

    dimensionless: bool = True
    length_scale: str = "(hbar^2/(m*k))^(1/4)"
    energy_unit: str = "hbar*omega"


@dataclass(frozen=True)
class HamiltonianMatrix:
    """Symmetric matrix over a truncated basis with its four-block map."""

    basis: BasisSet
    entries: np.ndarray
    blocks: dict[str, tuple[slice, slice]] = field(repr=False)

    def __post_init__(self) -> None:
        self.entries.setflags(write=False)

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def max_norm(self) -> float:
        return float(np.abs(self.entries).max())


def assemble(
    basis: BasisSet,
    bank: FilterBank,
    tables: IntegralTables,
    backend: str | None = None,
) -> HamiltonianMatrix:
    """Assemble the oscillator Hamiltonian over a truncated basis.

    All elements are refined to the common finest scale k0 + M + 1;
    entries are accumulated once per unordered pair, so the result is
    exactly symmetric.

    Raises
    ------
    ValueError
        If the bank is not K = 3 or the tables belong to another bank.
    """
    if bank.K != 3:
        raise ValueError("oscillator assembly requires the K = 3 bank")
    if tables.K != bank.K:
        raise ValueError(f"tables were computed for K={tables.K}, bank has K={bank.K}")
    k_star = basis.k0 + basis.M + 1
    expansions = [refine_element(e, bank, k_star) for e in basis.elements]
    p_lo = min(e.offset for e in expansions)
    p_hi = max(e.offset + e.coeffs.size for e in expansions)
    C = np.zeros((basis.size, p_hi - p_lo))
    for row, e in zip(C, expansions):
        row[e.offset - p_lo : e.offset - p_lo + e.coeffs.size] = e.coeffs
    entries = assemble_hamiltonian(
        C,
        p_lo,
        k_star,
        tables.connection.gamma,
        tables.two_point.X[1],
        tables.two_point.X[2],
        backend=backend,
    )
    ns = basis.n_scaling
    s, w = slice(0, ns), slice(ns, basis.size)
    blocks = {"ss": (s, s), "sw": (s, w), "ws": (w, s), "ww": (w, w)}
    return HamiltonianMatrix(basis=basis, entries=entries, blocks=blocks)


def block_view(H: HamiltonianMatrix, which: str) -> np.ndarray:
    """Contiguous submatrix of one of the four blocks (read-only view)."""
    if which not in BLOCK_NAMES:
        raise ValueError(f"unknown block {which!r}; expected one of {BLOCK_NAMES}")
    rows, cols = H.blocks[which]
    return H.entries[rows, cols]
