"""Full expressiveness: does every word appear as a factor of the language?

A system is fully expressive when every word over its alphabet occurs as a
substring of some member.  The answer is decided by a case ladder over the
alphabet size, the duplication bound and the seed shape; every "no" comes
with a concrete witness word that can never occur, checkable by
enumeration at small lengths.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Set

from .core import Alphabet, DuplicationSystem, Word, thue_square_free
from .enumeration import DEFAULT_BUDGET, _levels, substrings_of_length

ANSWER_YES = "yes"
ANSWER_NO = "no"
ANSWER_UNKNOWN = "unknown"

REASON_MISSING_SYMBOL = "missing-symbol"
REASON_BINARY_K1 = "binary-k1"
REASON_TERNARY_K3 = "ternary-k3"
REASON_SIGMA4 = "sigma4-squarefree"

RULE_UNARY = "unary"
RULE_BINARY_K2 = "binary-k2"
RULE_TERNARY_K4 = "ternary-abc-seed-k4"
RULE_UNCHARACTERIZED = "uncharacterized"


@dataclass(frozen=True)
class Witness:
    """A word that never occurs as a factor of the language."""

    word: Word
    reason: str


@dataclass(frozen=True)
class ExpressivenessVerdict:
    answer: str
    rule: str
    witness: Optional[Witness] = None

    def to_json_dict(self, alphabet: Optional[Alphabet] = None) -> dict:
        text = alphabet.text if alphabet else (lambda w: w)
        return {
            "answer": self.answer,
            "rule": self.rule,
            "witness": text(self.witness.word) if self.witness else None,
        }

    def to_json(self, alphabet: Optional[Alphabet] = None) -> str:
        return json.dumps(self.to_json_dict(alphabet), indent=2)


def _classify(system: DuplicationSystem):
    seed_symbols = set(system.seed)
    if any(s not in seed_symbols for s in system.alphabet):
        return ANSWER_NO, REASON_MISSING_SYMBOL
    size = len(system.alphabet)
    if size == 1:
        return ANSWER_YES, RULE_UNARY
    if size == 2:
        if system.kmax == 1:
            return ANSWER_NO, REASON_BINARY_K1
        return ANSWER_YES, RULE_BINARY_K2
    if size == 3:
        if system.kmax <= 3:
            return ANSWER_NO, REASON_TERNARY_K3
        if len(system.seed) == 3 and len(seed_symbols) == 3:
            return ANSWER_YES, RULE_TERNARY_K4
        return ANSWER_UNKNOWN, RULE_UNCHARACTERIZED
    return ANSWER_NO, REASON_SIGMA4


def witness(system: DuplicationSystem) -> Optional[Witness]:
    """A never-occurring factor for systems that are not fully expressive.

    missing-symbol: duplication introduces no new symbols, so the absent
    symbol itself is a witness.  binary-k1: (ab)^m longer than the seed
    cannot appear, since single-symbol copies only stretch runs.
    ternary-k3: (abcb)^l a is irreducible for blocks up to 3 and violates
    every boundary shape a bounded duplication can create.
    sigma4-squarefree: wrap a square-free word over three other symbols
    in the first symbol; it is too long for the seed and too square-free
    to ever be assembled.
    """
    answer, rule = _classify(system)
    if answer != ANSWER_NO:
        return None
    alphabet = system.alphabet
    join = alphabet.join
    symbols = alphabet.symbols
    if rule == REASON_MISSING_SYMBOL:
        missing = next(s for s in symbols if s not in set(system.seed))
        return Witness(join([missing]), REASON_MISSING_SYMBOL)
    if rule == REASON_BINARY_K1:
        m = len(system.seed) // 2 + 1
        return Witness(join((symbols[0], symbols[1]) * m), REASON_BINARY_K1)
    if rule == REASON_TERNARY_K3:
        reps = len(system.seed) + 1
        a, b, c = symbols[0], symbols[1], symbols[2]
        return Witness(join((a, b, c, b) * reps + (a,)), REASON_TERNARY_K3)
    # four or more symbols
    inner_alphabet = Alphabet(symbols[1:4])
    length = max(len(system.seed), system.kmax) + 1
    inner = thue_square_free(length, inner_alphabet)
    first = symbols[0]
    word = join([first] + list(inner) + [first])
    return Witness(word, REASON_SIGMA4)


def is_fully_expressive(system: DuplicationSystem) -> ExpressivenessVerdict:
    """Decide full expressiveness; every "no" carries a witness."""
    answer, rule = _classify(system)
    if answer == ANSWER_NO:
        return ExpressivenessVerdict(answer, rule, witness(system))
    return ExpressivenessVerdict(answer, rule)


def check_coverage(
    system: DuplicationSystem,
    length: int,
    max_length: int,
    budget: int = DEFAULT_BUDGET,
) -> Set[Word]:
    """Words of the given length that never occur as factors up to max_length."""
    profile = substrings_of_length(system, length, max_length, budget)
    return {
        w for w in system.alphabet.words_of_length(length) if w not in profile.found
    }


def _contains(haystack: Word, needle: Word) -> bool:
    if isinstance(haystack, str):
        return needle in haystack
    n = len(needle)
    return any(haystack[i : i + n] == needle for i in range(len(haystack) - n + 1))


def verify_witness_absent(
    system: DuplicationSystem,
    word: Word,
    max_length: int,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Check by enumeration that `word` is no factor of any member up to max_length.

    A word longer than max_length is vacuously absent and returns True
    without enumerating.
    """
    if len(word) > max_length:
        return True
    for n, words in _levels(system, max_length, budget):
        if n < len(word):
            continue
        for member in words:
            if _contains(member, word):
                return False
    return True
