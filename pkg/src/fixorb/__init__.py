"""Exact fixed-point / orbit-count transforms and (relative) realizability of
integer sequences by permutation systems with factor maps."""

from .arith import divisors, mobius, padic_valuation, is_prime
from .transforms import fix, orb, integrality_report, IntegralityReport
from .realizability import (
    OrbitDecomposition,
    RealizabilityReport,
    check_exact,
    check_relative,
    decompose,
    coefficient_at,
    doubling_realization,
    plus_u_realization,
    pointwise_add,
    pointwise_mul,
)
from .realize import (
    PermutationSystem,
    FactorMap,
    RealizationTriple,
    VerificationReport,
    build_realization,
    fixed_point_counts,
    verify_factor,
    extract_decomposition,
    dump_triple,
    load_triple,
)
from .paper_sequences import gen, alpha, beta, parse_bfile, normalize, classify

__version__ = "0.1.0"
