"""Shellings of skeleta of Lambda(l; p_1, ..., p_m) and h-vector realization."""

from .complexes import VertexLayout, f_from_h, f_vector, from_mask, h_from_f, lambda_facets, to_mask
from .monomials import (
    UNBOUNDED,
    UnrealizableError,
    compress,
    degree,
    divides,
    enumerate_degree,
    f_vector_of,
    format_monomial,
    is_multicomplex,
    is_realizable_f_vector,
    revlex_less,
)
from .realization import RealizationResult, extract, realize_h_vector, restrict_table, witness_check
from .shelling import (
    RestrictionData,
    ShellingTable,
    build_shelling_sigma,
    naive_sigma,
    restriction,
    revlex_shelling,
    t_set,
)
from .verify import (
    VerificationReport,
    verify_bijection,
    verify_degree_match,
    verify_h_consistency,
    verify_order_property,
    verify_recursive_r_agreement,
    verify_restriction_identity,
    verify_shelling,
    verify_table,
)

__version__ = "0.1.0"
