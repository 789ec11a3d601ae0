"""Bounded tandem duplication string systems.

Enumeration, membership, finite automata, growth rates and expressiveness
for the languages generated by copying blocks of a seed word in place.
"""

__version__ = "0.1.0"

from .automaton import (
    VERDICT_FAIL,
    VERDICT_LABEL_SETS,
    VERDICT_SUPERSTATE,
    ClosureCertificate,
    ClosureCheck,
    LabeledAutomaton,
    Regex,
    TransferMatrix,
    alt,
    build_automaton,
    cat,
    colored_automaton,
    count_accepted,
    export,
    language_upto,
    plus,
    regex_to_nfa,
    right_language_subset,
    seed_regex,
    star,
    sym,
    transfer_matrix,
    verify_duplication_closure,
)
from .capacity import (
    ABC_BLOCK_GROWTH,
    CapacityReport,
    GrowthEstimate,
    avoidance_capacity,
    empirical_capacity,
    exact_capacity,
    spectral_capacity,
    spectral_radius,
)
from .core import (
    Alphabet,
    DuplicationSystem,
    RepeatLocation,
    Word,
    deduplicate,
    find_tandem_repeat,
    is_k_irreducible,
    iter_tandem_repeats,
    tandem_duplicate,
    thue_square_free,
)
from .enumeration import (
    DEFAULT_BUDGET,
    CountTable,
    DedupResult,
    LanguageSlice,
    SubstringProfile,
    count_words,
    dedup_distance,
    dedup_roots,
    derives_from,
    enumerate_words,
    substrings_of_length,
)
from .errors import (
    BudgetExceededError,
    EmptyLanguageError,
    InsufficientDataError,
    NonConvergenceError,
    NondeterministicAutomatonError,
    UnsupportedDuplicationLength,
)
from .expressiveness import (
    ANSWER_NO,
    ANSWER_UNKNOWN,
    ANSWER_YES,
    ExpressivenessVerdict,
    Witness,
    check_coverage,
    is_fully_expressive,
    verify_witness_absent,
    witness,
)

__all__ = [
    "ABC_BLOCK_GROWTH",
    "ANSWER_NO",
    "ANSWER_UNKNOWN",
    "ANSWER_YES",
    "Alphabet",
    "BudgetExceededError",
    "CapacityReport",
    "ClosureCertificate",
    "ClosureCheck",
    "CountTable",
    "DEFAULT_BUDGET",
    "DedupResult",
    "DuplicationSystem",
    "EmptyLanguageError",
    "ExpressivenessVerdict",
    "GrowthEstimate",
    "InsufficientDataError",
    "LabeledAutomaton",
    "LanguageSlice",
    "NonConvergenceError",
    "NondeterministicAutomatonError",
    "Regex",
    "RepeatLocation",
    "SubstringProfile",
    "TransferMatrix",
    "UnsupportedDuplicationLength",
    "VERDICT_FAIL",
    "VERDICT_LABEL_SETS",
    "VERDICT_SUPERSTATE",
    "Witness",
    "Word",
    "alt",
    "avoidance_capacity",
    "build_automaton",
    "cat",
    "check_coverage",
    "colored_automaton",
    "count_accepted",
    "count_words",
    "dedup_distance",
    "dedup_roots",
    "deduplicate",
    "derives_from",
    "empirical_capacity",
    "enumerate_words",
    "exact_capacity",
    "export",
    "find_tandem_repeat",
    "is_fully_expressive",
    "is_k_irreducible",
    "iter_tandem_repeats",
    "language_upto",
    "plus",
    "regex_to_nfa",
    "right_language_subset",
    "seed_regex",
    "spectral_capacity",
    "spectral_radius",
    "star",
    "substrings_of_length",
    "sym",
    "tandem_duplicate",
    "thue_square_free",
    "transfer_matrix",
    "verify_duplication_closure",
    "verify_witness_absent",
    "witness",
]
