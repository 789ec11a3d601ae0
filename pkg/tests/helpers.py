"""Independent oracles used to cross-check the library.

Everything here is written from scratch with plain loops so that a bug in
the package cannot hide behind the same bug in the tests.
"""

import itertools


def brute_duplicate(word, i, k):
    """Copy the block word[i:i+k] in place, written with explicit slices."""
    block = word[i : i + k]
    return word[:i] + block + block + word[i + k :]


def naive_closure(seed, kmax, max_length):
    """Fixed-point iteration of the duplication step, no level bookkeeping.

    Returns a dict mapping length -> set of words.  Deliberately not a BFS:
    it just sweeps the whole set until nothing new shows up.
    """
    words = {seed}
    changed = True
    while changed:
        changed = False
        for w in sorted(words):
            for k in range(1, kmax + 1):
                for i in range(0, len(w) - k + 1):
                    child = brute_duplicate(w, i, k)
                    if len(child) <= max_length and child not in words:
                        words.add(child)
                        changed = True
    by_length = {}
    for w in words:
        by_length.setdefault(len(w), set()).add(w)
    return by_length


def square_locations(word, kmax=None):
    """All (offset, length) pairs where word[offset:offset+2*length] is a
    square, found by character-by-character comparison."""
    found = []
    top = len(word) // 2 if kmax is None else min(kmax, len(word) // 2)
    for i in range(len(word)):
        for k in range(1, top + 1):
            if i + 2 * k > len(word):
                break
            if all(word[i + j] == word[i + k + j] for j in range(k)):
                found.append((i, k))
    return found


def has_short_square(word, kmax):
    return bool(square_locations(word, kmax))


def accepted_by_scan(machine, alphabet_text, n):
    """Words of length n the machine accepts, by scanning all of Sigma^n."""
    hits = set()
    for tup in itertools.product(alphabet_text, repeat=n):
        w = "".join(tup)
        if machine.accepts(w):
            hits.add(w)
    return hits


def canonical_patterns(max_len, max_symbols=4):
    """Seed patterns up to relabeling: strings where each new symbol is the
    smallest digit not yet used.  Covers every seed shape once."""
    out = []

    def extend(prefix, used):
        if prefix:
            out.append(prefix)
        if len(prefix) == max_len:
            return
        for s in range(min(used + 1, max_symbols)):
            extend(prefix + str(s), max(used, s + 1))

    extend("", 0)
    return out
