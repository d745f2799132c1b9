# Copyright © 2015-2018 STRG.AT GmbH, Vienna, Austria
# Copyright © 2020-2023 Necdet Can Ateşman, Vienna, Austria
#
# This file is part of the The SCORE Framework.
#
# The SCORE Framework and all its parts are free software: you can redistribute
# them and/or modify them under the terms of the GNU Lesser General Public
# License version 3 as published by the Free Software Foundation which is in
# the file named COPYING.LESSER.txt.
#
# The SCORE Framework and all its parts are distributed without any WARRANTY;
# without even the implied warranty of MERCHANTABILITY or FITNESS FOR A
# PARTICULAR PURPOSE. For more details see the GNU Lesser General Public
# License.
#
# If you have not received a copy of the GNU Lesser General Public License see
# http://www.gnu.org/licenses/.
#
# The License-Agreement realised between you as Licensee and STRG.AT GmbH as
# Licenser including the issue of its valid conclusion and its pre- and
# post-contractual effects is governed by the laws of Austria. Any disputes
# concerning this License-Agreement including the issue of its valid conclusion
# and its pre- and post-contractual effects are exclusively decided by the
# competent court, in whose district STRG.AT GmbH has its registered seat, at
# the discretion of STRG.AT GmbH also the competent court, in whose district
# the Licensee has his registered seat, an establishment or assets.

from ._init import init, ConfiguredPmdsModule
from .errors import (
    PmdsError, InvalidParams, FormatError, NotInvertible, SingularSystem,
    NotCorrectable, UnsupportedCase, BudgetExceeded, VerificationMismatch)
from .poly import (
    BinPoly, ModulusKind, ModulusSpec, RingElement, mul_mod, poly_gcd,
    inverse_mod, exponent_of, is_two_primitive, is_irreducible,
    multiplicative_order)
from .matrix import (
    Variant, CodeParams, RingMatrix, ErasurePattern, build_parity_check,
    erasure_submatrix, erasure_system, determinant, is_invertible,
    is_left_invertible, solve_linear)
from .codec import (
    ArrayCodeword, ParityLayout, PmdsCode, get_code, compute_syndromes,
    encode, row_decode, decode_erasures, is_correctable, pack_symbols,
    unpack_symbols, dumps, loads)
from .verifier import (
    Method, ErasureProfile, PmdsVerdict, enumerate_profiles,
    reduce_profile_odd, count_patterns, oracle_is_correcting, oracle_is_pmds,
    check_fast, check_special_combo_1_4, moore_determinant, check,
    DEFAULT_BUDGET)
from .presets import PresetRow, Preset, PRESETS, RING_PRESETS, get_preset
from .reliability import (
    ReliabilityParams, ReliabilityRow, binomial_tail, codeword_failure,
    page_hard_error, stripe_probs, block_probs, scheme_block_loss,
    device_data_loss, evaluate, table5, format_table)

__version__ = '0.1.0'

__all__ = ('init', 'ConfiguredPmdsModule', 'PmdsError', 'InvalidParams',
           'FormatError', 'NotInvertible', 'SingularSystem', 'NotCorrectable',
           'UnsupportedCase', 'BudgetExceeded', 'VerificationMismatch',
           'BinPoly', 'ModulusKind', 'ModulusSpec', 'RingElement', 'mul_mod',
           'poly_gcd', 'inverse_mod', 'exponent_of', 'is_two_primitive',
           'is_irreducible', 'multiplicative_order', 'Variant',
           'CodeParams', 'RingMatrix', 'ErasurePattern', 'build_parity_check',
           'erasure_submatrix', 'erasure_system', 'determinant',
           'is_invertible', 'is_left_invertible', 'solve_linear',
           'ArrayCodeword', 'ParityLayout', 'PmdsCode', 'get_code',
           'compute_syndromes', 'encode', 'row_decode', 'decode_erasures',
           'is_correctable', 'pack_symbols', 'unpack_symbols', 'dumps',
           'loads', 'Method', 'ErasureProfile', 'PmdsVerdict',
           'enumerate_profiles', 'reduce_profile_odd', 'count_patterns',
           'oracle_is_correcting', 'oracle_is_pmds', 'check_fast',
           'check_special_combo_1_4', 'moore_determinant', 'check',
           'DEFAULT_BUDGET', 'PresetRow', 'Preset', 'PRESETS',
           'RING_PRESETS', 'get_preset',
           'ReliabilityParams', 'ReliabilityRow', 'binomial_tail',
           'codeword_failure', 'page_hard_error', 'stripe_probs',
           'block_probs', 'scheme_block_loss', 'device_data_loss', 'evaluate',
           'table5', 'format_table')
