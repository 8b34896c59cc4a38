"""Maximal palindromes of Sturmian words built from defining sequences."""
from ._backend import BACKENDS
from .counting import (
    CountReport,
    full_report,
    lemma3_original_occurrences,
    lemma5_breakdown,
    theorem1_counts,
    theorem2_distinct_count,
)
from .engine import (
    Center,
    CenterKind,
    Classification,
    MaximalPalindromeSet,
    OccurrenceTable,
    PalindromeOccurrence,
    bistandard_prefix,
    classify_center,
    distinct_maximal_set,
    enumerate_centers,
    locate_occurrences,
    original_set,
    trace_position,
    wp_reflect,
)
from .errors import (
    InsufficientContext,
    InvalidPair,
    NotAPalindrome,
    NotBlockComplete,
    OutOfRange,
    ParseError,
    SizeLimitExceeded,
    SturmpalError,
)
from .oracle import (
    ContextWindow,
    brute_distinct,
    brute_occurrences,
    lemma6_check,
    longest_palindrome_at,
    margin_context,
    reversal_closure_check,
)
from .words import (
    BinaryWord,
    DefiningSequence,
    LeveledWord,
    ParameterPair,
    apply_morphism,
    block_decompose,
    expand,
    fibonacci_prefix,
    invert_morphism,
    parse_defining_sequence,
    predicted_counts,
)

__version__ = "0.1.0"
