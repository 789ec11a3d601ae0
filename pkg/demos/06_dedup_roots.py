"""
Running duplication backwards
=============================

Deduplication halves a square in place.  Following it to exhaustion
finds the irreducible ancestors of a word, and the shortest path to a
chosen ancestor measures how many duplication events separate them.
"""

from tandemdup import dedup_distance, dedup_roots

word = "012101212"

# with blocks up to length 4 the word collapses all the way to 012,
# but a second, longer root is also reachable
result = dedup_roots(word, 4)
print("roots of", word, "at k=4:", sorted(result.roots))

# the block bound matters: at k=2 the square 0121.0121 is untouchable
print("roots of", word, "at k=2:", sorted(dedup_roots(word, 2).roots))

# the minimum number of duplication events between ancestor and word
print("steps from 012 at k=4:", dedup_distance(word, "012", 4))
print("steps from 012 at k=2:", dedup_distance(word, "012", 2))
