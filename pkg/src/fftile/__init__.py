"""Exact tiling and packing computations in vector spaces over prime fields."""

from .cyclotomic import CycNum, abs_sq, conj, cyc_from_power, galois_apply, trace
from .ffvec import PointSet, difference_set, directions, field_inv, is_square, norm
from .fourier import RationalFunction, Spectrum, dft, inverse_dft, tiling_fourier_check
from .packing import isotropic_pack, optimal_packing_set, pack_circles, packing_number
from .polyring import QuotientPoly, encode_set, ring_mul, tiling_poly_check
from .tiling import (
    classify_1_tiling,
    decompose_k_tiling,
    graphical_check,
    is_graph,
    tiling_direct_check,
)

__all__ = [
    "CycNum", "abs_sq", "conj", "cyc_from_power", "galois_apply", "trace",
    "PointSet", "difference_set", "directions", "field_inv", "is_square", "norm",
    "RationalFunction", "Spectrum", "dft", "inverse_dft", "tiling_fourier_check",
    "isotropic_pack", "optimal_packing_set", "pack_circles", "packing_number",
    "QuotientPoly", "encode_set", "ring_mul", "tiling_poly_check",
    "classify_1_tiling", "decompose_k_tiling", "graphical_check", "is_graph",
    "tiling_direct_check",
]
