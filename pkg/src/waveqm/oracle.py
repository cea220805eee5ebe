"""Brute-force quadrature over dyadic samples, used only by tests.

Every exact table and matrix element in the package has an independent
check here: sample the factors on a deep dyadic grid, differentiate by
central differences where asked, multiply, and trapezoid.  This is
deliberately the dumb route; production code never calls it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import BasisElement
from .cascade import sample_element
from .filters import FilterBank


@dataclass(frozen=True)
class FactorSpec:
    element: BasisElement
    derivative: bool = False


@dataclass(frozen=True)
class QuadratureSpec:
    """Product of up to two sampled basis functions times x**weight_power.

    Depths of at least 10 are expected for any acceptance-grade
    comparison; shallower grids are fine for convergence studies.
    """

    depth: int
    factors: tuple[FactorSpec, ...]
    weight_power: int = 0

    def __post_init__(self) -> None:
        if not 1 <= len(self.factors) <= 2:
            raise ValueError("quadrature takes one or two factors")
        if not 0 <= self.weight_power <= 2:
            raise ValueError("polynomial weight is limited to x**0..x**2")


def quadrature(spec: QuadratureSpec, bank: FilterBank) -> float:
    """Trapezoid integral of the described product on the shared grid.

    Derivatives are centered differences of neighboring samples,
    evaluated at the grid midpoints; when any factor carries a
    derivative flag, the remaining factors are sampled at those same
    midpoints (exactly, one dyadic level down) so the product stays on
    one grid.

    Raises
    ------
    ValueError
        If a derivative is requested for K < 3.
    """
    dx = 2.0**-spec.depth
    any_deriv = any(f.derivative for f in spec.factors)
    sampled: list[tuple[int, np.ndarray]] = []
    for f in spec.factors:
        fn = sample_element(f.element, bank, spec.depth)
        start = round(fn.x0 * 2**spec.depth)
        if f.derivative:
            if bank.K < 3:
                raise ValueError("finite-difference derivative requires K = 3")
            vals = np.diff(fn.values) / dx
        elif any_deriv:
            fine = sample_element(f.element, bank, spec.depth + 1)
            vals = fine.values[1::2]
        else:
            vals = fn.values
        sampled.append((start, vals))

    lo = min(s for s, _ in sampled)
    hi = max(s + v.size for s, v in sampled)
    integrand = np.ones(hi - lo)
    for start, vals in sampled:
        embedded = np.zeros(hi - lo)
        embedded[start - lo : start - lo + vals.size] = vals
        integrand *= embedded
    if spec.weight_power:
        x = (lo + np.arange(hi - lo) + (0.5 if any_deriv else 0.0)) * dx
        integrand *= x**spec.weight_power
    return float(dx * (integrand.sum() - 0.5 * (integrand[0] + integrand[-1])))
