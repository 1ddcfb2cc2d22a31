"""Exact Fourier analysis and average-sensitivity bounds for nested canalizing functions."""

from .boolfn import (BooleanFunction, evaluate, is_unate, named_gate, parse_tt, read_tt,
                     relevant_variables, unate_orientation, write_tt)
from .bounds import (alternating_zero_coeff, as_cap, combined_bound, construct_extremal_lower,
                     construct_extremal_upper, ncf_as_bounds, unate_bound, zero_coeff_bounds)
from .canalizing import (CanalizingTriple, NcfSchema, build_ncf, canalizing_triples,
                         check_ncf_spectral, count_all_most_dominant, is_ncf, most_dominant_set)
from .dyadic import Dyadic
from .restriction import RestrictionSpec, compose, restrict, restrict_set, spectral_restrict
from .sensitivity import (as_decomposition, as_ncf_recursive, average_sensitivity, influence,
                          influence_spectral, xi, zero_coeff_recursive)
from .spectral import Spectrum, chi, inverse_transform, parseval_check, transform

__version__ = "0.1.0"
