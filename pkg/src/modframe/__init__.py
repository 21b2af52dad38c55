"""Frames over finite-spectrum commutative C*-algebras.

The algebra is C({0..K-1}), vectors live in the standard rank-d module
over it, and the package computes and verifies the Welch-type coherence
bounds of every order, frame invariants (potential, RMS cross relation,
tightness, equiangularity), the symmetric-tensor machinery behind the
higher-order bounds, and runs low-coherence searches. K = 1 recovers
classical finite frame theory over C^d.
"""

from .algebra import DEFAULT_TOL, AlgebraElement, PositivityCheck, Spectrum, leq
from .bounds import (BoundReport, Comparators, GeneralizedWelchResult,
                     classical_comparators, generalized_welch_check,
                     gerzon_bound, verify_frame, welch_max_bound,
                     welch_sum_bound)
from .constructions import (canonical_basis, mercedes_frame,
                            random_orthonormal_basis, random_unit_frame,
                            repeated_vector_frame, sic_d2_frame)
from .module import (Coherence, Equiangularity, Frame, FrameBounds, GramTable,
                     ModuleVector, OperatorMatrix, Tightness, frame_correlation,
                     frame_operator, frame_potential, gram_table, inner_product,
                     is_equiangular, is_frame, is_tight, mrms, pointwise_slice,
                     trace, trace_square_formula)
from .optimize import (EqualityCertificate, SearchConfig, SearchResult,
                       certify_equality, grassmannian_search, project_unit,
                       sic_search, smoothed_coherence)
from .symtensor import (SymSpectrumReport, SymVector, lift, multiset_indices,
                        sym_frame_operator, sym_inner, sym_rank,
                        sym_spectrum_check)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "BoundReport", "Coherence", "Comparators",
    "DEFAULT_TOL", "EqualityCertificate", "Equiangularity", "Frame",
    "FrameBounds", "GeneralizedWelchResult", "GramTable", "ModuleVector",
    "OperatorMatrix", "PositivityCheck", "SearchConfig", "SearchResult",
    "Spectrum", "SymSpectrumReport", "SymVector", "Tightness",
    "canonical_basis", "certify_equality", "classical_comparators",
    "frame_correlation", "frame_operator", "frame_potential",
    "generalized_welch_check", "gerzon_bound", "gram_table",
    "grassmannian_search", "inner_product", "is_equiangular", "is_frame",
    "is_tight", "leq", "lift", "mercedes_frame", "mrms", "multiset_indices",
    "pointwise_slice", "project_unit", "random_orthonormal_basis",
    "random_unit_frame", "repeated_vector_frame", "sic_d2_frame",
    "sic_search", "smoothed_coherence", "sym_frame_operator", "sym_inner",
    "sym_rank", "sym_spectrum_check", "trace", "trace_square_formula",
    "verify_frame", "welch_max_bound", "welch_sum_bound",
]
