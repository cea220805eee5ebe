"""Exact evaluation of scaling and wavelet functions on dyadic grids.

Values at the integers are bootstrapped from the eigenvector of the
two-scale transition matrix; every finer dyadic point then follows
exactly from the two-scale relation, with no interpolation anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import BasisElement, Kind
from .filters import SQRT2, FilterBank


@dataclass(frozen=True)
class DyadicFunction:
    """Samples of a compactly supported function on the grid x0 + j*2**-depth."""

    depth: int
    x0: float
    values: np.ndarray

    def __post_init__(self) -> None:
        self.values.setflags(write=False)

    @property
    def dx(self) -> float:
        return 2.0 ** (-self.depth)

    @property
    def x(self) -> np.ndarray:
        return self.x0 + np.arange(self.values.size) * self.dx

    @property
    def support(self) -> tuple[float, float]:
        return (self.x0, self.x0 + (self.values.size - 1) * self.dx)

    def integral(self) -> float:
        """Trapezoid integral over the support."""
        v = self.values
        return self.dx * (v.sum() - 0.5 * (v[0] + v[-1]))


def scaling_values_at_integers(bank: FilterBank) -> np.ndarray:
    """Scaling-function values s(1), ..., s(2K-2).

    These solve the eigenproblem of the transition matrix
    A[m, n] = sqrt(2) h[2m - n], eigenvalue 1, normalized so the values
    sum to one (partition of unity at the integers).

    Raises
    ------
    ValueError
        If K < 2 (the Haar scaling function does not vanish at x = 0).
    RuntimeError
        If the eigenvalue-1 subspace is not one-dimensional, which
        signals a defective filter bank.
    """
    K = bank.K
    if K < 2:
        raise ValueError("integer bootstrap requires K >= 2")
    size = 2 * K - 2
    A = np.zeros((size, size))
    for m in range(1, size + 1):
        for n in range(1, size + 1):
            i = 2 * m - n
            if 0 <= i < 2 * K:
                A[m - 1, n - 1] = SQRT2 * bank.h[i]
    eigvals, eigvecs = np.linalg.eig(A)
    hits = np.where(np.abs(eigvals - 1.0) < 1e-8)[0]
    if hits.size != 1:
        raise RuntimeError(
            f"eigenvalue-1 subspace of the transition matrix is {hits.size}-dimensional; "
            "filter bank is defective"
        )
    v = np.real(eigvecs[:, hits[0]])
    return v / v.sum()


def refine_scaling(bank: FilterBank, depth: int) -> DyadicFunction:
    """Scaling-function samples at every dyadic point j*2**-depth.

    Even grid points are inherited from the coarser grid; odd points are
    filled by the two-scale relation s(x) = sqrt(2) sum_i h[i] s(2x - i),
    so every sample is exact.
    """
    K = bank.K
    if K < 2:
        raise ValueError("dyadic refinement requires K >= 2")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    width = 2 * K - 1
    vals = np.zeros(width + 1)
    vals[1:-1] = scaling_values_at_integers(bank)
    for d in range(1, depth + 1):
        coarse = vals
        vals = np.zeros(width * 2**d + 1)
        vals[::2] = coarse
        odd = np.arange(1, vals.size, 2)
        stride = 2 ** (d - 1)
        acc = np.zeros(odd.size)
        for i, hi in enumerate(bank.h):
            src = odd - i * stride
            ok = (src >= 0) & (src < coarse.size)
            acc[ok] += SQRT2 * hi * coarse[src[ok]]
        vals[odd] = acc
    return DyadicFunction(depth=depth, x0=0.0, values=vals)


def refine_wavelet(bank: FilterBank, depth: int) -> DyadicFunction:
    """Mother-wavelet samples at every dyadic point j*2**-depth.

    w(j*2**-depth) is assembled from scaling samples at the same depth
    via w(x) = sqrt(2) sum_i g[i] s(2x - i); support is (0, 2K-1).
    """
    s = refine_scaling(bank, depth)
    vals = _wavelet_from_scaling(bank, s)
    return DyadicFunction(depth=depth, x0=0.0, values=vals)


def _wavelet_from_scaling(bank: FilterBank, s: DyadicFunction) -> np.ndarray:
    scale = 2**s.depth
    out = np.zeros_like(s.values)
    idx = np.arange(out.size)
    for i, gi in enumerate(bank.g):
        src = 2 * idx - i * scale
        ok = (src >= 0) & (src < s.values.size)
        out[ok] += SQRT2 * gi * s.values[src[ok]]
    return out


def sample_element(element: BasisElement, bank: FilterBank, depth: int) -> DyadicFunction:
    """Samples of a scaled/translated basis element on its own support.

    The element 2**(k/2) f(2**k x - n) is sampled at spacing 2**-depth
    on the support (n*2**-k, (n + 2K - 1)*2**-k) by index arithmetic on
    the unit-scale samples; no new function evaluations are needed.

    Raises
    ------
    ValueError
        If depth is shallower than the element's scale.
    """
    k, n = element.scale, element.translation
    if depth < k:
        raise ValueError(f"depth {depth} is shallower than element scale {k}")
    base = refine_scaling(bank, depth - k)
    vals = base.values
    if element.kind is Kind.WAVELET:
        vals = _wavelet_from_scaling(bank, base)
    return DyadicFunction(depth=depth, x0=n * 2.0**-k, values=2.0 ** (k / 2.0) * vals)
