"""Multiresolution eigenvalue solver for 1-D quantum problems in a Daubechies wavelet basis."""

from .basis import BasisElement, BasisSet, FineExpansion, Kind, build_basis, pair_inner_product, refine_element
from .cascade import DyadicFunction, refine_scaling, refine_wavelet, sample_element, scaling_values_at_integers
from .eig import Spectrum, solve_symmetric
from .filters import FilterBank, make_filter_bank, validate_filter_bank
from .hamiltonian import HamiltonianMatrix, OscillatorModel, assemble, block_view
from .integrals import (
    ConnectionTable,
    IntegralTables,
    MomentTable,
    TwoPointMoments,
    compute_tables,
    derivative_connection,
    scaling_moments,
    two_point_moments,
)
from .kernels import HAS_NUMBA, resolve_backend

__version__ = "0.1.0"

__all__ = [
    "BasisElement",
    "BasisSet",
    "ConnectionTable",
    "DyadicFunction",
    "FilterBank",
    "FineExpansion",
    "HamiltonianMatrix",
    "HAS_NUMBA",
    "IntegralTables",
    "Kind",
    "MomentTable",
    "OscillatorModel",
    "Spectrum",
    "TwoPointMoments",
    "assemble",
    "block_view",
    "build_basis",
    "compute_tables",
    "derivative_connection",
    "make_filter_bank",
    "pair_inner_product",
    "refine_element",
    "refine_scaling",
    "refine_wavelet",
    "resolve_backend",
    "sample_element",
    "scaling_values_at_integers",
    "scaling_moments",
    "solve_symmetric",
    "two_point_moments",
    "validate_filter_bank",
    "__version__",
]
