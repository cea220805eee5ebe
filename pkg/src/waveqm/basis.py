"""Truncated multiresolution basis: labeling, enumeration, refinement.

A basis set keeps one layer of scaling functions at the base scale plus
M + 1 layers of wavelets; every element expands exactly into scaling
functions at any finer scale through the filter coefficients, which is
how all inner products and matrix elements are reduced to single-scale
tables.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .filters import FilterBank


class Kind(enum.Enum):
    SCALING = "s"
    WAVELET = "w"


@dataclass(frozen=True)
class BasisElement:
    kind: Kind
    scale: int
    translation: int

    def label(self) -> str:
        return f"{self.kind.value}[{self.scale},{self.translation}]"


@dataclass(frozen=True)
class BasisSet:
    """Truncated basis with the canonical enumeration order.

    Order: scaling elements n = -Ns..Ns at the base scale, then wavelet
    scales m = k0..k0+M, each with n = -Nw..Nw.
    """

    k0: int
    Ns: int
    Nw: int
    M: int
    elements: tuple[BasisElement, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def n_scaling(self) -> int:
        return 2 * self.Ns + 1


def build_basis(k0: int, Ns: int, Nw: int, M: int) -> BasisSet:
    """Enumerate the truncated basis for the given half-ranges.

    The wavelet translation range is the same index range -Nw..Nw at
    every retained scale, so finer layers cover less physical volume.
    """
    if Ns < 0 or Nw < 0 or M < 0:
        raise ValueError("Ns, Nw, M must be >= 0")
    elements = [BasisElement(Kind.SCALING, k0, n) for n in range(-Ns, Ns + 1)]
    for m in range(k0, k0 + M + 1):
        elements.extend(BasisElement(Kind.WAVELET, m, n) for n in range(-Nw, Nw + 1))
    return BasisSet(k0=k0, Ns=Ns, Nw=Nw, M=M, elements=tuple(elements))


@dataclass(frozen=True)
class FineExpansion:
    """Scaling-function coefficients of one element at a finer scale.

    Nonzero coefficients sit at translations offset .. offset+len-1;
    refinement is an isometry, so the coefficients have unit square sum.
    """

    scale: int
    offset: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        self.coeffs.setflags(write=False)

    @property
    def translations(self) -> np.ndarray:
        return self.offset + np.arange(self.coeffs.size)


def refine_element(element: BasisElement, bank: FilterBank, k_star: int) -> FineExpansion:
    """Expand a basis element into scaling functions at scale k_star.

    One refinement step maps a scaling element to the filter taps h at
    doubled translation and a wavelet element to the taps g; further
    steps apply h repeatedly until the target scale is reached.

    Raises
    ------
    ValueError
        If k_star is below the element's scale, or equal to it for a
        wavelet (a wavelet is not a scaling function at its own scale).
    """
    k, n = element.scale, element.translation
    if element.kind is Kind.WAVELET:
        if k_star <= k:
            raise ValueError(f"wavelet at scale {k} needs k_star > {k}, got {k_star}")
        taps = bank.g
    else:
        if k_star < k:
            raise ValueError(f"scaling element at scale {k} needs k_star >= {k}, got {k_star}")
        taps = bank.h
    offset = n
    coeffs = np.array([1.0])
    scale = k
    while scale < k_star:
        new_offset = 2 * offset
        new = np.zeros(2 * (coeffs.size - 1) + taps.size)
        for p, c in enumerate(coeffs):
            lo = 2 * (offset + p) - new_offset
            new[lo : lo + taps.size] += c * taps
        offset, coeffs, scale = new_offset, new, scale + 1
        taps = bank.h
    return FineExpansion(scale=k_star, offset=offset, coeffs=coeffs)


def pair_inner_product(a: BasisElement, b: BasisElement, bank: FilterBank) -> float:
    """Exact inner product of two basis elements.

    Both elements are refined to the finer of the two scales (one past
    it for wavelets) and the coefficient vectors are dotted; scaling
    functions at a common scale are orthonormal, so the dot product is
    the exact integral, a Kronecker delta for any orthonormal pair.
    """
    k_star = max(
        a.scale + (a.kind is Kind.WAVELET),
        b.scale + (b.kind is Kind.WAVELET),
    )
    ea = refine_element(a, bank, k_star)
    eb = refine_element(b, bank, k_star)
    lo = max(ea.offset, eb.offset)
    hi = min(ea.offset + ea.coeffs.size, eb.offset + eb.coeffs.size)
    if lo >= hi:
        return 0.0
    return float(ea.coeffs[lo - ea.offset : hi - ea.offset] @ eb.coeffs[lo - eb.offset : hi - eb.offset])
