"""
Capacities, three ways
======================

The capacity of a system is the exponential growth rate of its counts,
normalized to base |alphabet|, so it lands in [0, 1].  For block
lengths up to 3 there is a closed form; the spectral radius of the
automaton's transfer matrix gives the same number numerically; and
the raw counts approach it empirically.
"""

import numpy as np

from tandemdup import (
    ABC_BLOCK_GROWTH,
    Alphabet,
    DuplicationSystem,
    avoidance_capacity,
    exact_capacity,
    spectral_capacity,
    spectral_radius,
)

gallery = [
    ("0", "00", 2),
    ("01", "01", 1),
    ("01", "01", 2),
    ("012", "012", 2),
    ("012", "0112", 3),
    ("012", "012", 3),
    ("0123", "0123", 3),
]

print(f"{'system':24s} {'case':14s} {'exact':>9s} {'spectral':>9s}")
for alphabet, seed, kmax in gallery:
    system = DuplicationSystem.parse(alphabet, seed, kmax)
    report = exact_capacity(system)
    measured = spectral_capacity(system)
    label = f"({alphabet}, {seed}, k={kmax})"
    print(f"{label:24s} {report.case:14s} {report.value:9.6f} {measured:9.6f}")

# the number behind the abc case: the growth factor (3 + sqrt 5) / 2,
# visible directly as the spectral radius of the block overlap matrix
overlap = np.array(
    [
        [1, 1, 0, 1, 0, 0],
        [0, 1, 1, 0, 1, 0],
        [1, 0, 1, 0, 0, 1],
        [1, 0, 0, 1, 0, 0],
        [0, 1, 0, 0, 1, 0],
        [0, 0, 1, 0, 0, 1],
    ]
)
print("\nblock overlap radius:", spectral_radius(overlap))
print("(3 + sqrt 5) / 2     =", ABC_BLOCK_GROWTH)

# for comparison: the capacity of ALL ternary words avoiding the three
# windows that the (012, k=3) language happens to miss
value = avoidance_capacity(Alphabet("012"), ["210", "021", "102"])
print(f"\navoiding 210/021/102 alone: {value:.6f}")
print("so the duplication language is a strict subset of that avoidance set")
