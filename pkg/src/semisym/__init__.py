"""Symmetric polynomials over unital commutative semirings."""

from .constructions import (builtin, make_boolean, make_n_quotient, make_natural,
                            make_saturated_natural, make_supertropical, make_truncated_maxplus,
                            make_zn)
from .elementarize import (ElementaryPolynomial, HypothesisError, elementarize,
                           frobenius_segment_times_elementary, lemma_transcript,
                           semantic_elementarity, semantic_n_elementary, theorem_suite_linear,
                           theorem_suite_upper_bound, variant_frobenius_check,
                           verify_elementarization)
from .enumeration import count_semirings, enumerate_semirings
from .finite import (fiber_analysis, frobenius_ring_criterion, ghost_ideal, intrinsic_order,
                     is_frobenius, is_idempotent, is_linearly_ordered, is_quasiidempotent,
                     is_ring, is_supertropical, is_symhomomorphic, is_upper_bound,
                     make_quotient_by_approx, numeral_relations, property_report)
from .poly import (NotSymmetric, Polynomial, SegmentCombination, detect_symmetric, elementary,
                   function_table, functions_equal, segment, segment_times_elementary)
from .polyparse import PolyParseError, parse_polynomial
from .semiring import (AxiomError, AxiomViolation, FiniteSemiring, NaturalSemiring, Semiring,
                       validate_axioms)
from .tablefile import TableFileError, dumps as format_table, load as parse_semiring
from .verdict import PropertyReport, Verdict

__version__ = "0.1.0"
