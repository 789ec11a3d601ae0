"""
A finite automaton for the whole language
=========================================

For block lengths up to 3 the duplication language is regular.  The
construction colors the seed positions apart, lays down a regular
expression for the colored language, then forgets the colors and
determinizes.  The resulting machine answers questions that plain
enumeration cannot reach.
"""

from tandemdup import (
    DuplicationSystem,
    build_automaton,
    count_accepted,
    enumerate_words,
    export,
    language_upto,
    transfer_matrix,
    verify_duplication_closure,
)

system = DuplicationSystem.parse("012", "012", 3)
machine = build_automaton(system)
print(machine)

# the machine and the enumeration agree word for word
accepted = language_upto(machine, 9)
enumerated = enumerate_words(system, 9).by_length
print("agree up to length 9:", all(
    set(accepted.get(n, ())) == set(enumerated.get(n, ())) for n in range(3, 10)
))

# counting at lengths far beyond enumeration
for n in (20, 40, 80):
    print(f"words of length {n}:", count_accepted(machine, n))

# the transfer matrix drives the counting; its dominant eigenvalue is
# the growth factor per symbol
tm = transfer_matrix(machine)
print("transfer matrix shape:", tm.matrix.shape)

# a certificate that the language really is closed under duplication:
# every short path label can be replayed from the state it reaches
certificate = verify_duplication_closure(machine, 3)
print("closure certified:", certificate.passed)
print("states that need a superstate for some length-3 label:",
      sorted({c.state for c in certificate.fallbacks(path_length=3)}))

# smaller equivalent machine, and a DOT drawing for graphviz
print("minimized:", machine.minimized())
print("\n" + "\n".join(export(machine.minimized(), "dot").splitlines()[:6]) + "\n...")
