"""
permshatter
===========

permshatter is a library and command-line tool for families of permutations
that partially shatter every k-subset of ``[n]``: it builds such families at
the known growth regimes, verifies how many patterns they induce, extracts
poorly shattered subsets from arbitrary families, and computes exact minimum
family sizes for tiny ground sets. All classes and functions have a
``__doc__`` attribute with usage instructions.

This library is published under the MIT License.
"""

from .config import Budgets
from .exceptions import (
    BudgetExceededError,
    ConstructionError,
    InsufficientGroundSetError,
    PermShatterError,
    PreconditionError,
    StructuralAnomalyError,
)

from .core.CubeFamily import CubeFamily
from .core.LexPermutation import LexPermutation
from .core.Pattern import Pattern
from .core.PermFamily import PermFamily
from .core.Permutation import Permutation
from .core.PiPermutation import PiPermutation

from .records.BenchRecord import BenchRecord
from .records.ExactResult import ExactResult
from .records.LexShatterReport import LexShatterReport
from .records.RegimeAnswer import RegimeAnswer
from .records.ShatterCertificate import ShatterCertificate
from .records.SliceDecomposition import SliceDecomposition
from .records.StructureReport import StructureReport
from .records.Witness import Witness

from .trees.ColoredTree import ColoredTree
from .trees.OrderedPair import OrderedPair
from .trees.Subdivision import Subdivision

from .utilities.adversaries.build_ordered_tree import build_ordered_tree
from .utilities.adversaries.chain_witness import chain_witness
from .utilities.adversaries.check_subdivision import check_subdivision
from .utilities.adversaries.g_upper import g_upper
from .utilities.adversaries.mono_subdivision import mono_subdivision
from .utilities.adversaries.ordered_pair import ordered_pair
from .utilities.adversaries.tree_witness import tree_witness

from .utilities.constructions.build_k_lex_random import build_k_lex_random
from .utilities.constructions.build_loglog_family import build_loglog_family
from .utilities.constructions.build_pi import all_pis, build_pi
from .utilities.constructions.build_scrambling_family import (
    build_scrambling_family,
)
from .utilities.constructions.build_sqrtlog_family import build_sqrtlog_family
from .utilities.constructions.encode import decode, encode
from .utilities.constructions.monotone_family import monotone_family
from .utilities.constructions.scrambling_to_lex import scrambling_to_lex
from .utilities.constructions.verify_k_lex_shattering import (
    count_lex_constraints,
    verify_k_lex_shattering,
)

from .utilities.exact.f_exact import f_exact
from .utilities.exact.lower_bound_thresholds import lower_bound_thresholds
from .utilities.exact.regime import regime

from .utilities.inspections.count_induced import count_induced
from .utilities.inspections.first_diff import first_diff
from .utilities.inspections.index_set import index_set
from .utilities.inspections.induced_pattern import induced_pattern
from .utilities.inspections.lex_compare import lex_compare
from .utilities.inspections.materialize import materialize
from .utilities.inspections.min_shatter import min_shatter
from .utilities.inspections.product_bound import product_bound
from .utilities.inspections.rigid_quadruple import rigid_quadruple
from .utilities.inspections.slice_decompose import slice_decompose
from .utilities.inspections.slice_permutation import slice_permutation
from .utilities.inspections.slice_profile import slice_profile
from .utilities.inspections.structure_analysis import structure_analysis
from .utilities.inspections.verify_t_shattering import verify_t_shattering

from .utilities.inspect import Inspection
from .utilities.inspect import inspect


__author__ = "permshatter developers"
__version__ = "0.3.0"
__all__ = [
    '__author__',
    '__version__',
    'Budgets',
    'BudgetExceededError',
    'ConstructionError',
    'InsufficientGroundSetError',
    'PermShatterError',
    'PreconditionError',
    'StructuralAnomalyError',
    'CubeFamily',
    'LexPermutation',
    'Pattern',
    'PermFamily',
    'Permutation',
    'PiPermutation',
    'BenchRecord',
    'ExactResult',
    'LexShatterReport',
    'RegimeAnswer',
    'ShatterCertificate',
    'SliceDecomposition',
    'StructureReport',
    'Witness',
    'ColoredTree',
    'OrderedPair',
    'Subdivision',
    'build_ordered_tree',
    'chain_witness',
    'check_subdivision',
    'g_upper',
    'mono_subdivision',
    'ordered_pair',
    'tree_witness',
    'all_pis',
    'build_k_lex_random',
    'build_loglog_family',
    'build_pi',
    'build_scrambling_family',
    'build_sqrtlog_family',
    'count_lex_constraints',
    'decode',
    'encode',
    'monotone_family',
    'scrambling_to_lex',
    'verify_k_lex_shattering',
    'f_exact',
    'lower_bound_thresholds',
    'regime',
    'count_induced',
    'first_diff',
    'index_set',
    'induced_pattern',
    'lex_compare',
    'materialize',
    'min_shatter',
    'product_bound',
    'rigid_quadruple',
    'slice_decompose',
    'slice_permutation',
    'slice_profile',
    'structure_analysis',
    'verify_t_shattering',
    'Inspection',
    'inspect',
]
