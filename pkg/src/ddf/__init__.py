"""Discrete double fibrations, span-valued lax functors and the elements construction on finite instances."""

from __future__ import annotations

from .cat_core import FinCategory, FinFunctor, category, check_category, check_functor
from .double_cat import DoubleCategory, DoubleFunctor, check_double_category
from .elements import DDFCandidate, DDFMorphism, el_functor, el_transformation, is_ddf
from .equivalence import el_module, el_multimodulation, f_of_multicell, f_of_profunctor, verify_equivalence
from .fiber_inverse import f_of_ddf, f_of_morphism
from .finset import FinFn, FinSet, Span, SpanMorphism
from .lax_modules import Module, Multimodulation, check_module, check_multimodulation
from .lax_span import LaxSpanFunctor, LaxTransformation, check_lax_functor, check_transformation
from .prof_dfib import InternalProfunctor, ProfMulticell, check_internal_profunctor, check_prof_multicell
from .report import Report, Violation

__all__ = [
    "DDFCandidate",
    "DDFMorphism",
    "DoubleCategory",
    "DoubleFunctor",
    "FinCategory",
    "FinFn",
    "FinFunctor",
    "FinSet",
    "InternalProfunctor",
    "LaxSpanFunctor",
    "LaxTransformation",
    "Module",
    "Multimodulation",
    "ProfMulticell",
    "Report",
    "Span",
    "SpanMorphism",
    "Violation",
    "category",
    "check_category",
    "check_double_category",
    "check_functor",
    "check_internal_profunctor",
    "check_lax_functor",
    "check_module",
    "check_multimodulation",
    "check_prof_multicell",
    "check_transformation",
    "el_functor",
    "el_module",
    "el_multimodulation",
    "el_transformation",
    "f_of_ddf",
    "f_of_morphism",
    "f_of_multicell",
    "f_of_profunctor",
    "is_ddf",
    "verify_equivalence",
]
