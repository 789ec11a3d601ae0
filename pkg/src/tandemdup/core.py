"""Alphabet and word primitives for bounded tandem duplication systems.

A tandem duplication copies a block of a word and inserts the copy right
after the original, turning ``uvw`` into ``uvvw``.  A duplication system
is a seed word together with a bound ``kmax`` on the copied block length;
its language is everything reachable from the seed by such copies.

Words are plain Python strings when every alphabet symbol is a single
character (the usual case: ``"012"``, ``"ACGT"``).  Alphabets with longer
symbol names use tuples of symbol strings instead.  All operations accept
both forms, since they rely only on slicing, concatenation and equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence, Tuple, Union

import itertools

Word = Union[str, Tuple[str, ...]]


class Alphabet:
    """Ordered set of distinct symbols.

    The order is significant: it fixes the symbol ranking used by
    constructions that pick "the first symbol" or map one alphabet
    onto another.
    """

    __slots__ = ("symbols", "_rank")

    def __init__(self, symbols: Union[str, Sequence[str]]):
        syms = tuple(symbols)
        if not syms:
            raise ValueError("an alphabet needs at least one symbol")
        if any(not isinstance(s, str) or not s for s in syms):
            raise ValueError("symbols must be nonempty strings")
        if any("," in s for s in syms):
            raise ValueError("',' is reserved as the word separator")
        if len(set(syms)) != len(syms):
            raise ValueError(f"duplicate symbols: {symbols!r}")
        self.symbols = syms
        self._rank = {s: i for i, s in enumerate(syms)}

    @classmethod
    def parse(cls, text: str) -> "Alphabet":
        """Inverse of to_text: plain characters, or comma-separated symbols."""
        return cls(text.split(",")) if "," in text else cls(text)

    def to_text(self) -> str:
        if self.single_char:
            return "".join(self.symbols)
        return ",".join(self.symbols)

    @property
    def single_char(self) -> bool:
        return all(len(s) == 1 for s in self.symbols)

    def index(self, symbol: str) -> int:
        return self._rank[symbol]

    def join(self, symbols) -> Word:
        """Build a word from a symbol sequence, validating membership."""
        syms = tuple(symbols)
        for s in syms:
            if s not in self._rank:
                raise ValueError(f"symbol {s!r} not in alphabet {self.to_text()!r}")
        if self.single_char:
            return "".join(syms)
        return syms

    def word(self, text: str) -> Word:
        """Parse a serialized word (plain text, or comma-separated symbols)."""
        if text == "":
            return "" if self.single_char else ()
        parts = text.split(",") if "," in text else (
            tuple(text) if self.single_char else (text,)
        )
        return self.join(parts)

    def text(self, word: Word) -> str:
        """Serialize a word produced by this alphabet."""
        if isinstance(word, str):
            return word
        return ",".join(word)

    def contains_word(self, word: Word) -> bool:
        return all(s in self._rank for s in iter_symbols(word))

    def words_of_length(self, n: int) -> Iterator[Word]:
        """All length-n words over this alphabet, in symbol-rank order."""
        for combo in itertools.product(self.symbols, repeat=n):
            yield self.join(combo)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, symbol):
        return symbol in self._rank

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return f"Alphabet({self.to_text()!r})"


def iter_symbols(word: Word):
    """Symbols of a word, for either representation."""
    if isinstance(word, str):
        return iter(word)
    return iter(word)


@dataclass(frozen=True)
class DuplicationSystem:
    """A seed word plus a bound on the duplicated block length.

    The language of the system is the closure of the seed under tandem
    duplications of blocks of length 1 through kmax.
    """

    alphabet: Alphabet
    seed: Word
    kmax: int

    def __post_init__(self):
        if len(self.seed) == 0:
            raise ValueError("seed must be nonempty")
        if not self.alphabet.contains_word(self.seed):
            raise ValueError(
                f"seed {self.seed!r} uses symbols outside {self.alphabet!r}"
            )
        if self.kmax < 1:
            raise ValueError("kmax must be at least 1")

    @classmethod
    def parse(cls, alphabet_text: str, seed_text: str, kmax: int) -> "DuplicationSystem":
        alphabet = Alphabet.parse(alphabet_text)
        return cls(alphabet, alphabet.word(seed_text), kmax)

    @property
    def base(self) -> int:
        return len(self.alphabet)

    def to_json_dict(self) -> dict:
        return {
            "alphabet": self.alphabet.to_text(),
            "seed": self.alphabet.text(self.seed),
            "kmax": self.kmax,
        }


class RepeatLocation(NamedTuple):
    """Position of a square: the block word[offset:offset+length] repeats immediately."""

    offset: int
    length: int


def tandem_duplicate(word: Word, offset: int, length: int) -> Word:
    """Copy the block at [offset, offset+length) in place: uvw -> uvvw.

    Out-of-range arguments leave the word unchanged.
    """
    if offset < 0 or length < 0:
        raise ValueError("offset and length must be nonnegative")
    if offset + length > len(word):
        return word
    return word[: offset + length] + word[offset:]


def deduplicate(word: Word, location: RepeatLocation) -> Word:
    """Remove the second copy of a tandem repeat: uvvw -> uvw.

    Exact inverse of tandem_duplicate; raises if the location does not
    hold a square.
    """
    offset, length = location
    if length < 1 or offset < 0 or offset + 2 * length > len(word):
        raise ValueError(f"no room for a square at {location} in {word!r}")
    if word[offset : offset + length] != word[offset + length : offset + 2 * length]:
        raise ValueError(f"no tandem repeat at {location} in {word!r}")
    return word[: offset + length] + word[offset + 2 * length :]


def find_tandem_repeat(word: Word, kmax: int) -> Optional[RepeatLocation]:
    """First square with block length <= kmax, smallest offset then length."""
    n = len(word)
    for offset in range(n - 1):
        limit = min(kmax, (n - offset) // 2)
        for length in range(1, limit + 1):
            # cheap first-symbol probe before the slice compare
            if word[offset] == word[offset + length] and (
                word[offset : offset + length]
                == word[offset + length : offset + 2 * length]
            ):
                return RepeatLocation(offset, length)
    return None


def iter_tandem_repeats(word: Word, kmax: int) -> Iterator[RepeatLocation]:
    """All square locations with block length <= kmax, in (offset, length) order."""
    n = len(word)
    for offset in range(n - 1):
        limit = min(kmax, (n - offset) // 2)
        for length in range(1, limit + 1):
            if word[offset] == word[offset + length] and (
                word[offset : offset + length]
                == word[offset + length : offset + 2 * length]
            ):
                yield RepeatLocation(offset, length)


def is_k_irreducible(word: Word, kmax: int) -> bool:
    """True when no square with block length <= kmax remains."""
    return find_tandem_repeat(word, kmax) is None


_SQUARE_FREE_MORPHISM = {"0": "012", "1": "02", "2": "1"}


def thue_square_free(n: int, alphabet: Optional[Alphabet] = None) -> Word:
    """Length-n prefix of a fixed square-free word over three symbols.

    Iterates the morphism 0 -> 012, 1 -> 02, 2 -> 1 from "0"; the morphism
    fixes its own output's prefixes, so the limit word is well defined.
    Symbols 0, 1, 2 are mapped onto the given alphabet in rank order.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    if alphabet is None:
        alphabet = Alphabet("012")
    if len(alphabet) != 3:
        raise ValueError("need exactly three symbols")
    w = "0"
    while len(w) < n:
        w = "".join(_SQUARE_FREE_MORPHISM[c] for c in w)
    return alphabet.join(alphabet.symbols[int(c)] for c in w[:n])
