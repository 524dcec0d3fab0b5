"""Relabeled dice with standard sum frequencies, via cyclotomic factors."""

from .polyint import IntPoly, truncated_series_product
from .cyclotomic import (
    CyclotomicCache,
    check_identity_suite,
    cyclotomic,
    cyclotomic_by_division,
    euler_totient,
    mobius,
)
from .dice import Die, SumHistogram, die_to_poly, poly_to_die, sum_histogram
from .solver import (
    ExponentVector,
    Problem,
    SolutionPair,
    decompose,
    decomposition_die_labels,
    enumerate_mixed,
    enumerate_pairs,
    enumerate_unequal,
    frequency_poly,
    negative_certificates,
    one_minus_x_exponent,
    solve,
)
from .counting import (
    count_n_dice,
    count_two_dice_trinomial,
    count_unbounded,
    check_triangular_identity,
    triangular,
)
from .oracle import SearchConfig, brute_force_pairs, conjecture_sweep

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "truncated_series_product",
    "CyclotomicCache",
    "check_identity_suite",
    "cyclotomic",
    "cyclotomic_by_division",
    "euler_totient",
    "mobius",
    "Die",
    "SumHistogram",
    "die_to_poly",
    "poly_to_die",
    "sum_histogram",
    "ExponentVector",
    "Problem",
    "SolutionPair",
    "decompose",
    "decomposition_die_labels",
    "enumerate_mixed",
    "enumerate_pairs",
    "enumerate_unequal",
    "frequency_poly",
    "negative_certificates",
    "one_minus_x_exponent",
    "solve",
    "count_n_dice",
    "count_two_dice_trinomial",
    "count_unbounded",
    "check_triangular_identity",
    "triangular",
    "SearchConfig",
    "brute_force_pairs",
    "conjecture_sweep",
    "__version__",
]
