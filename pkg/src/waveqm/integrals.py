"""Exact single-scale integral tables for Hamiltonian assembly.

Everything here is derived from the two-scale relation alone: moments of
the scaling function come from a closed recursion, two-point moments
from small linear systems, and the first-derivative autocorrelation from
an eigenproblem of the downsampled filter autocorrelation matrix.  No
quadrature enters; the quadrature engine exists only as a test oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .filters import SQRT2, FilterBank


@dataclass(frozen=True)
class MomentTable:
    """Moments integral(x**m s(x) dx) for m = 0..m_max; the zeroth is 1."""

    K: int
    values: np.ndarray

    def __post_init__(self) -> None:
        self.values.setflags(write=False)

    def moment(self, m: int) -> float:
        return float(self.values[m])


@dataclass(frozen=True)
class TwoPointMoments:
    """Tables X[m][n] = integral(x**m s(x) s(x-n) dx), |n| <= 2K-2."""

    K: int
    X: np.ndarray  # shape (3, 4K-3), n-index offset by 2K-2

    def __post_init__(self) -> None:
        self.X.setflags(write=False)

    @property
    def max_shift(self) -> int:
        return 2 * self.K - 2

    def value(self, m: int, n: int) -> float:
        if abs(n) > self.max_shift:
            return 0.0
        return float(self.X[m, n + self.max_shift])


@dataclass(frozen=True)
class ConnectionTable:
    """First-derivative overlaps integral(s'(x) s'(x-n) dx), |n| <= 2K-2."""

    K: int
    gamma: np.ndarray

    def __post_init__(self) -> None:
        self.gamma.setflags(write=False)

    @property
    def max_shift(self) -> int:
        return 2 * self.K - 2

    def value(self, n: int) -> float:
        if abs(n) > self.max_shift:
            return 0.0
        return float(self.gamma[n + self.max_shift])


def scaling_moments(bank: FilterBank, m_max: int = 2) -> MomentTable:
    """Moments of the scaling function by the two-scale recursion.

    Substituting the two-scale relation into integral(x**m s(x) dx) and
    collecting the m-th moment on the left gives

        M_m = 2**-m / sqrt(2) * sum_{l<m} C(m,l) (sum_i h_i i**(m-l)) M_l
              / (1 - 2**-m)

    with M_0 = 1 from the unit normalization.
    """
    if bank.K < 2:
        raise ValueError("moment recursion requires K >= 2")
    i = np.arange(bank.taps, dtype=float)
    M = [1.0]
    for m in range(1, m_max + 1):
        acc = 0.0
        for l in range(m):
            acc += math.comb(m, l) * float(bank.h @ i ** (m - l)) * M[l]
        M.append((2.0**-m / SQRT2) * acc / (1.0 - 2.0**-m))
    return MomentTable(K=bank.K, values=np.array(M))


def _autocorr_transition(bank: FilterBank) -> np.ndarray:
    """Matrix B[n, m] = sum_{i,j} h_i h_j [2n + j - i = m] on |n|,|m| <= 2K-2."""
    R = 2 * bank.K - 2
    lags = np.zeros(2 * (2 * bank.K - 1) + 1)
    mid = 2 * bank.K - 1
    for l in range(-mid, mid + 1):
        lo, hi = max(0, -l), min(bank.taps, bank.taps - l)
        lags[l + mid] = float(bank.h[lo:hi] @ bank.h[lo + l : hi + l])
    B = np.zeros((2 * R + 1, 2 * R + 1))
    for n in range(-R, R + 1):
        for m in range(-R, R + 1):
            l = m - 2 * n
            if abs(l) <= mid:
                B[n + R, m + R] = lags[l + mid]
    return B


def two_point_moments(bank: FilterBank) -> TwoPointMoments:
    """Exact two-point moment tables for m = 0, 1, 2.

    The m = 0 table is the Kronecker delta (orthonormal translates).
    For m >= 1, substituting the two-scale relation into both factors
    couples X(m) to itself through the autocorrelation transition matrix
    B, giving the linear system (I - 2**-m B) X(m) = b(m) whose right
    side involves only lower-order tables.
    """
    if bank.K < 2:
        raise ValueError("two-point moments require K >= 2")
    K, h = bank.K, bank.h
    R = 2 * K - 2
    size = 2 * R + 1
    B = _autocorr_transition(bank)
    X = np.zeros((3, size))
    X[0, R] = 1.0

    def lookup(m: int, n: int) -> float:
        return X[m, n + R] if abs(n) <= R else 0.0

    for m in (1, 2):
        b = np.zeros(size)
        for n in range(-R, R + 1):
            acc = 0.0
            for i in range(2 * K):
                for j in range(2 * K):
                    hij = h[i] * h[j]
                    for l in range(m):
                        acc += hij * math.comb(m, l) * float(i) ** (m - l) * lookup(l, 2 * n + j - i)
            b[n + R] = 2.0**-m * acc
        X[m] = np.linalg.solve(np.eye(size) - 2.0**-m * B, b)
    return TwoPointMoments(K=K, X=X)


def derivative_connection(bank: FilterBank) -> ConnectionTable:
    """First-derivative overlap table from the two-scale eigenproblem.

    Differentiating the two-scale relation shows the table is the
    eigenvector of the autocorrelation transition matrix with eigenvalue
    1/4.  The scale is fixed by the sum rule sum_n n**2 Gamma_n = -2,
    which follows from exact reproduction of x**2/2 in the K = 3 basis,
    and symmetry Gamma(n) = Gamma(-n) is enforced.

    Raises
    ------
    ValueError
        If K != 3; coarser banks are not differentiable.
    RuntimeError
        If the eigenvalue-1/4 subspace is not one-dimensional.
    """
    if bank.K != 3:
        raise ValueError("derivative connection coefficients require K = 3")
    R = 2 * bank.K - 2
    B = _autocorr_transition(bank)
    eigvals, eigvecs = np.linalg.eig(B)
    hits = np.where(np.abs(eigvals - 0.25) < 1e-8)[0]
    if hits.size != 1:
        raise RuntimeError(
            f"eigenvalue-1/4 subspace of the transition matrix is {hits.size}-dimensional"
        )
    v = np.real(eigvecs[:, hits[0]])
    v = 0.5 * (v + v[::-1])
    n = np.arange(-R, R + 1, dtype=float)
    quad = float(n**2 @ v)
    if abs(quad) < 1e-12:
        raise RuntimeError("degenerate eigenvector: vanishing quadratic sum")
    gamma = v * (-2.0 / quad)
    return ConnectionTable(K=bank.K, gamma=gamma)


@dataclass(frozen=True)
class IntegralTables:
    """Bundle of the exact tables for one filter bank."""

    K: int
    moments: MomentTable
    two_point: TwoPointMoments
    connection: ConnectionTable

    @property
    def max_shift(self) -> int:
        return 2 * self.K - 2

    def single_scale_x2(self, p: int, q: int, k: int) -> float:
        """integral(x**2 * s[k,p](x) * s[k,q](x) dx) from shift and scale covariance."""
        d = q - p
        if abs(d) > self.max_shift:
            return 0.0
        val = self.two_point.value(2, d) + 2.0 * p * self.two_point.value(1, d)
        if d == 0:
            val += float(p) ** 2
        return 4.0**-k * val

    def single_scale_kinetic(self, p: int, q: int, k: int) -> float:
        """-1/2 integral(s[k,p] d2/dx2 s[k,q] dx), by parts on compact support."""
        d = q - p
        if abs(d) > self.max_shift:
            return 0.0
        return 0.5 * 4.0**k * self.connection.value(d)


def compute_tables(bank: FilterBank) -> IntegralTables:
    """All exact tables for a K = 3 bank (the only differentiable order)."""
    return IntegralTables(
        K=bank.K,
        moments=scaling_moments(bank, m_max=2),
        two_point=two_point_moments(bank),
        connection=derivative_connection(bank),
    )
