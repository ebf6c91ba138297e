"""Endomorphism-type monoids of star graphs.

Constructs the monoids of endomorphisms, weak endomorphisms, strong
endomorphisms, strong weak endomorphisms and automorphisms of finite star
graphs; checks their cardinalities, regularity and ranks by exhaustive
computation; and certifies monoid presentations for them by enumerating the
finitely presented quotient and matching it against the concrete monoid.
"""

__version__ = "0.1.0"

from .congruence import CongruenceTable, QuotientExceeded, enumerate_quotient
from .errors import BudgetExceededError
from .graphs import (
    EndoClass,
    SimpleGraph,
    cardinality_formula,
    classify,
    enumerate_class,
    is_regular_element,
    is_regular_monoid,
    standard_generators,
    star_graph,
)
from .monoid import (
    TransformationMonoid,
    check_relation,
    contains,
    evaluate_word,
    format_monoid,
    generate,
    is_generating_set,
    rank_exact,
    word_for,
)
from .presentations import (
    Presentation,
    end_star_presentation,
    full_transf_presentation,
    partial_transf_presentation,
    presentation_from_json,
    presentation_to_json,
    swend_star_presentation,
    sym_presentation,
    wend_star_presentation,
)
from .transform import (
    Transformation,
    compose,
    identity,
    image,
    is_idempotent,
    is_permutation,
    kernel,
    power,
)
from .verify import (
    VerificationReport,
    Verdict,
    satisfies_relations,
    verify_presentation,
)
from .wordclosure import word_closure_size

__all__ = [
    "BudgetExceededError",
    "CongruenceTable",
    "EndoClass",
    "Presentation",
    "QuotientExceeded",
    "SimpleGraph",
    "Transformation",
    "TransformationMonoid",
    "VerificationReport",
    "Verdict",
    "cardinality_formula",
    "check_relation",
    "classify",
    "compose",
    "contains",
    "end_star_presentation",
    "enumerate_class",
    "enumerate_quotient",
    "evaluate_word",
    "format_monoid",
    "full_transf_presentation",
    "generate",
    "identity",
    "image",
    "is_generating_set",
    "is_idempotent",
    "is_permutation",
    "is_regular_element",
    "is_regular_monoid",
    "kernel",
    "partial_transf_presentation",
    "power",
    "presentation_from_json",
    "presentation_to_json",
    "rank_exact",
    "satisfies_relations",
    "standard_generators",
    "star_graph",
    "swend_star_presentation",
    "sym_presentation",
    "verify_presentation",
    "wend_star_presentation",
    "word_closure_size",
    "word_for",
]
