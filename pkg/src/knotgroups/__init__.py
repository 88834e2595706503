"""Knot-group invariants for distinguishing knots with a common trace.

Two computable invariants of a finitely presented knot group:

* the Alexander polynomial, obtained from the free differential calculus
  as the gcd of maximal minors of the abelianized derivative matrix, and
* counts of homomorphisms into a finite permutation group that send a
  marked meridian word to a prescribed element.

Exact integer arithmetic throughout; no floating point anywhere.
"""

from .errors import (
    BudgetExceededError,
    CoefficientOverflowError,
    DeficiencyError,
    DegreeMismatchError,
    DuplicateGeneratorError,
    GroupTooLargeError,
    InputError,
    InvalidParameterError,
    KnotGroupsError,
    MissingImageError,
    MissingWeightError,
    NotAMemberError,
    NotInfiniteCyclicError,
    PresentationSyntaxError,
    ResourceError,
    UnknownGeneratorError,
    UnknownMarkerError,
    ZeroPolynomialError,
)
from .fox import (
    AlexanderMatrix,
    GroupRingElement,
    abelianize_ring_element,
    alexander_matrix,
    alexander_polynomial,
    fox_derivative,
)
from .homsearch import (
    HomSearchResult,
    SearchStats,
    count_homs,
    images_conjugate,
    is_homomorphism,
    meridian_invariant,
    meridian_search,
)
from .laurent import LaurentPoly, breadth, format_laurent, gcd, normalize_up_to_units, parse_laurent
from .permgroups import (
    FiniteGroup,
    Permutation,
    alternating_group,
    are_conjugate,
    find_conjugator,
    generated_group,
    group_from_spec,
    parse_permutation,
    symmetric_group,
)
from .presentations import (
    AbelianizationReport,
    Presentation,
    abelianize,
    parse,
    parse_word,
    rbg_family,
    smith_normal_form,
)
from .words import Word, reduce_syllables

__version__ = "0.1.0"

__all__ = [
    "AbelianizationReport",
    "AlexanderMatrix",
    "BudgetExceededError",
    "CoefficientOverflowError",
    "DeficiencyError",
    "DegreeMismatchError",
    "DuplicateGeneratorError",
    "FiniteGroup",
    "GroupRingElement",
    "GroupTooLargeError",
    "HomSearchResult",
    "InputError",
    "InvalidParameterError",
    "KnotGroupsError",
    "LaurentPoly",
    "MissingImageError",
    "MissingWeightError",
    "NotAMemberError",
    "NotInfiniteCyclicError",
    "Permutation",
    "Presentation",
    "PresentationSyntaxError",
    "ResourceError",
    "SearchStats",
    "UnknownGeneratorError",
    "UnknownMarkerError",
    "Word",
    "ZeroPolynomialError",
    "abelianize",
    "abelianize_ring_element",
    "alexander_matrix",
    "alexander_polynomial",
    "alternating_group",
    "are_conjugate",
    "breadth",
    "count_homs",
    "find_conjugator",
    "format_laurent",
    "fox_derivative",
    "gcd",
    "generated_group",
    "group_from_spec",
    "images_conjugate",
    "is_homomorphism",
    "meridian_invariant",
    "meridian_search",
    "normalize_up_to_units",
    "parse",
    "parse_laurent",
    "parse_permutation",
    "parse_word",
    "rbg_family",
    "reduce_syllables",
    "smith_normal_form",
    "symmetric_group",
]
