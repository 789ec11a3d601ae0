"""
Tandem duplication in ten lines
===============================

A duplication step picks a block of a word and repeats it in place:
uvw becomes uvvw.  Everything else in the package builds on this one
rewriting rule.
"""

from tandemdup import (
    RepeatLocation,
    deduplicate,
    find_tandem_repeat,
    is_k_irreducible,
    iter_tandem_repeats,
    tandem_duplicate,
    thue_square_free,
)

# copy the block "12" sitting at offset 1
word = tandem_duplicate("0120", 1, 2)
print("0120 with 12 doubled:", word)

# the rule is a no-op when the block sticks out past the end
print("out of range is identity:", tandem_duplicate("01", 1, 2))

# a duplication leaves a square behind, and we can find it again
loc = find_tandem_repeat(word, kmax=2)
print("first square in", word, "at", loc)
print("undone:", deduplicate(word, loc))

# all squares with block length at most 3
for loc in iter_tandem_repeats("012012012", 3):
    print("square of length", loc.length, "at offset", loc.offset)

# words with no short square are the dead ends of deduplication
print("0121012 is 3-irreducible:", is_k_irreducible("0121012", 3))
print("0101 is 3-irreducible:", is_k_irreducible("0101", 3))

# arbitrarily long square-free words exist over three symbols
print("a 40-symbol square-free word:", thue_square_free(40))
