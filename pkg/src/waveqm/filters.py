"""Daubechies filter coefficient banks for K = 1, 2, 3.

The 2K low-pass coefficients h define the two-scale relation of the
scaling function; the high-pass coefficients g are derived from h by
alternating sign and reversal.  Coefficients are evaluated from their
closed-form radicals so the defining identities hold to machine epsilon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SQRT2 = math.sqrt(2.0)

SUPPORTED_ORDERS = (1, 2, 3)


@dataclass(frozen=True)
class FilterBank:
    """Low-pass (h) and high-pass (g) filter pair of order K.

    Invariants (all to machine epsilon):
      sum(h) = sqrt(2)
      sum_i h[i] h[i-2j] = delta(j, 0)
      g[i] = (-1)**i * h[2K-1-i]
    """

    K: int
    h: np.ndarray
    g: np.ndarray

    def __post_init__(self) -> None:
        self.h.setflags(write=False)
        self.g.setflags(write=False)

    @property
    def taps(self) -> int:
        return 2 * self.K

    @property
    def support_length(self) -> int:
        """Length of the scaling-function support interval."""
        return 2 * self.K - 1


def make_filter_bank(K: int) -> FilterBank:
    """Build the order-K Daubechies filter bank from closed forms.

    Parameters
    ----------
    K : int
        Filter order; one of 1 (Haar), 2, 3.

    Raises
    ------
    ValueError
        If K is not a supported order.
    """
    if K == 1:
        h = np.array([1.0, 1.0]) / SQRT2
    elif K == 2:
        r3 = math.sqrt(3.0)
        h = np.array([1.0 + r3, 3.0 + r3, 3.0 - r3, 1.0 - r3]) / (4.0 * SQRT2)
    elif K == 3:
        r10 = math.sqrt(10.0)
        a = math.sqrt(5.0 + 2.0 * r10)
        h = np.array(
            [
                1.0 + r10 + a,
                5.0 + r10 + 3.0 * a,
                10.0 - 2.0 * r10 + 2.0 * a,
                10.0 - 2.0 * r10 - 2.0 * a,
                5.0 + r10 - 3.0 * a,
                1.0 + r10 - a,
            ]
        ) / (16.0 * SQRT2)
    else:
        raise ValueError(f"unsupported filter order K={K}; expected one of {SUPPORTED_ORDERS}")

    signs = (-1.0) ** np.arange(2 * K)
    g = signs * h[::-1]
    return FilterBank(K=K, h=h, g=g)


def validate_filter_bank(bank: FilterBank) -> list[float]:
    """Report the defining-identity residuals of a filter bank.

    Returns
    -------
    list of float
        ``[|sum(h) - sqrt(2)|]`` followed by the orthogonality residuals
        ``|sum_i h[i] h[i-2j] - delta(j,0)|`` for j = 0 .. K-1.  The
        residuals are a pure report; callers treat anything above 1e-12
        as a failure.
    """
    h = bank.h
    residuals = [abs(float(h.sum()) - SQRT2)]
    for j in range(bank.K):
        acc = float(h[2 * j:] @ h[: h.size - 2 * j])
        target = 1.0 if j == 0 else 0.0
        residuals.append(abs(acc - target))
    return residuals
