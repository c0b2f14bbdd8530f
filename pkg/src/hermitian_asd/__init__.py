"""Algebraic soft-decision decoding of Hermitian codes."""

from .code import HermitianCode, monomial_basis
from .curve import HermitianCurve, RationalPoint
from .decoder import DecodeResult, Decoder, decode, decode_from_M
from .gf import GF, FieldElement, field_for
from .interp import algorithm_B, algorithm_I, interpolate, jn_generators, q_polynomial, solve_y_minus_f
from .rootfind import brute_force_roots, find_roots, substitute
from .softinfo import degree_bounds, kv_assign, score

__version__ = "0.1.0"
