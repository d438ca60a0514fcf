"""Exact characteristic-class computations for the real Grassmannian
SO(8)/SO(4)xSO(4), its twistor space, an associated moduli space, and the
rank-2 Verlinde numbers that match their holomorphic Euler characteristics.
"""
__version__ = "0.1.0"

from .arith import UniPoly, bernoulli, interpolate, solve_linear_system
from .ring import (GeneratorSpec, RewriteRule, RingElement, RingModel, exp_nilpotent,
                   find_middle_relation, multiply, normalize, pair, pushforward_flag,
                   reduce_top_degree, substitute)
from .charclasses import (ChernData, CharPowerSeries, GenusPolynomials, PontryaginData,
                          ahat_series, ch_sym_rank2, character_from_chern, chern_from_character,
                          dn_ch_sym_at_zero, evaluate_genus, genus_polynomials, l_series,
                          pontrjagin_from_chern, todd_series)
from .checks import CheckResult
from .geometry import (FlagModel, GrassmannModel, IndexPolynomial, ModuliModel,
                       derive_grassmann_pairing, flag_model, flag_tangent_chern,
                       grassmann_char_data, grassmann_model, homogeneous_index_checks,
                       index_ab, index_d_direct, index_d_koszul, index_X, moduli_chern,
                       moduli_model, moduli_setup, serre_vanishing_checks)
from .lie import DominantWeight, RootSystemDn, dim_closed, weyl_dim
from .cyclotomic import (CyclotomicElement, VerlindeParams, cosec_power, cyclotomic_polynomial,
                         verlinde_float, verlinde_number)
from .report import Report, run_suite
from . import errors
