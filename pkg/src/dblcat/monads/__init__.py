"""Endomorphisms and monads: table-backed double categories and the span backend."""

from . import graphs
from .endmnd import (EMResult, EndMnd, FreeMonadWitness, MonadCell, alg_presheaf, build_end, build_mnd,
                     compare_with_street, construct_free_monads, em_check, end_quintet_iso,
                     hfree_from_choice, inclusion, inherit_cofolding, monads_of, star_bijection,
                     star_inverse, street_2category, trivial_monad, validate_monad)
from .graphs import (EndMap, FinCategory, Graph, MndMap, SpanMap, category_as_span_monad,
                     free_category, phi_UV_bijection, span_free_monad_map, span_monad_as_category,
                     validate_span_map, validate_span_monad)

__all__ = [
    "EMResult", "EndMap", "EndMnd", "FinCategory", "FreeMonadWitness", "Graph", "MndMap", "MonadCell",
    "SpanMap", "alg_presheaf", "build_end", "build_mnd", "category_as_span_monad", "compare_with_street",
    "construct_free_monads", "em_check", "end_quintet_iso", "free_category", "graphs",
    "hfree_from_choice", "inclusion", "inherit_cofolding", "monads_of", "phi_UV_bijection",
    "span_free_monad_map", "span_monad_as_category", "star_bijection", "star_inverse",
    "street_2category", "trivial_monad", "validate_monad", "validate_span_map", "validate_span_monad",
]
