"""Growth rates of duplication languages.

The capacity of a system is the exponential growth rate of its per-length
word counts, measured in base-|alphabet| logarithms so that a free monoid
has capacity 1.  For kmax <= 3 the language is regular and the capacity is
the log of the spectral radius of the automaton's transfer matrix; that
radius also has a closed form depending only on gross features of the seed.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Set

import numpy as np

from .automaton import build_automaton, transfer_matrix
from .core import Alphabet, DuplicationSystem, Word
from .enumeration import CountTable
from .errors import (
    EmptyLanguageError,
    InsufficientDataError,
    NonConvergenceError,
    UnsupportedDuplicationLength,
)

# growth rate of the three-distinct-symbol block machine: (3 + sqrt 5) / 2
ABC_BLOCK_GROWTH = (3.0 + math.sqrt(5.0)) / 2.0

CASE_UNARY = "unary-seed"
CASE_TWO_SYMBOL = "two-symbol"
CASE_ABC = "abc-substring"
CASE_K1 = "binary-k1"
CASE_EMPIRICAL = "empirical"


def _sccs(adjacency):
    """Strongly connected components via Kosaraju, iterative."""
    n = len(adjacency)
    order = []
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        stack = [(root, 0)]
        seen[root] = True
        while stack:
            node, idx = stack.pop()
            if idx < len(adjacency[node]):
                stack.append((node, idx + 1))
                child = adjacency[node][idx]
                if not seen[child]:
                    seen[child] = True
                    stack.append((child, 0))
            else:
                order.append(node)
    reverse = [[] for _ in range(n)]
    for p in range(n):
        for q in adjacency[p]:
            reverse[q].append(p)
    component = [-1] * n
    count = 0
    for node in reversed(order):
        if component[node] != -1:
            continue
        stack = [node]
        component[node] = count
        while stack:
            p = stack.pop()
            for q in reverse[p]:
                if component[q] == -1:
                    component[q] = count
                    stack.append(q)
        count += 1
    groups = [[] for _ in range(count)]
    for node, c in enumerate(component):
        groups[c].append(node)
    return groups


def _power_radius(block: np.ndarray, tol: float, max_iterations: int) -> float:
    """Largest eigenvalue of an irreducible nonnegative matrix.

    Iterates on block + I: the shift makes the matrix primitive, so the
    plain power method converges even when the block itself is periodic.
    """
    b = block + np.eye(len(block))
    v = np.ones(len(b))
    estimate = None
    stable = 0
    for _ in range(max_iterations):
        w = b @ v
        top = w.max()
        v = w / top
        if estimate is not None and abs(top - estimate) <= tol:
            stable += 1
            if stable >= 2:
                return top - 1.0
        else:
            stable = 0
        estimate = top
    raise NonConvergenceError(
        None if estimate is None else estimate - 1.0, max_iterations
    )


def spectral_radius(matrix, tol: float = 1e-10, max_iterations: int = 100_000) -> float:
    """Spectral radius of a nonnegative square matrix by the power method.

    Reducible matrices are split into strongly connected blocks first and
    the maximum over the blocks is returned.
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    if m.size and m.min() < 0:
        raise ValueError("matrix must be nonnegative")
    n = m.shape[0]
    if n == 0:
        return 0.0
    adjacency = [list(np.nonzero(m[i])[0]) for i in range(n)]
    best = 0.0
    for group in _sccs(adjacency):
        if len(group) == 1:
            i = group[0]
            best = max(best, float(m[i, i]))
            continue
        block = m[np.ix_(group, group)]
        best = max(best, _power_radius(block, tol, max_iterations))
    return best


@dataclass(frozen=True)
class CapacityReport:
    """Capacity value plus the rule that produced it."""

    value: float
    base: int
    case: str
    exact_form: Optional[str] = None

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "base": self.base,
            "case": self.case,
            "exactForm": self.exact_form,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _has_three_distinct_window(seed: Word) -> bool:
    return any(
        seed[i] != seed[i + 1] and seed[i + 1] != seed[i + 2] and seed[i] != seed[i + 2]
        for i in range(len(seed) - 2)
    )


def exact_capacity(system: DuplicationSystem) -> CapacityReport:
    """Closed-form capacity for systems with kmax <= 3.

    A one-symbol seed grows polynomially, as does any seed when only
    single symbols may be copied.  Otherwise the rate is 2, except that a
    window of three pairwise distinct seed symbols raises it to
    (3 + sqrt 5) / 2 when kmax is 3.
    """
    if system.kmax > 3:
        raise UnsupportedDuplicationLength(
            f"closed forms cover kmax <= 3, got {system.kmax}"
        )
    base = system.base
    if len(set(system.seed)) == 1:
        return CapacityReport(0.0, base, CASE_UNARY, "0")
    if system.kmax == 1:
        return CapacityReport(0.0, base, CASE_K1, "0")
    if system.kmax == 3 and _has_three_distinct_window(system.seed):
        value = math.log(ABC_BLOCK_GROWTH) / math.log(base)
        return CapacityReport(value, base, CASE_ABC, f"log_{base}((3+sqrt(5))/2)")
    value = math.log(2.0) / math.log(base)
    return CapacityReport(value, base, CASE_TWO_SYMBOL, f"log_{base}(2)")


def spectral_capacity(system: DuplicationSystem, tol: float = 1e-10) -> float:
    """Capacity measured on the constructed automaton, for cross-checking."""
    if system.base == 1:
        # one word per length, nothing to measure
        return 0.0
    tm = transfer_matrix(build_automaton(system))
    rho = spectral_radius(tm.matrix, tol)
    if rho < 1.0:
        # a duplication language always pumps at least one run
        raise EmptyLanguageError("transfer matrix has no productive cycle")
    return math.log(rho) / math.log(system.base)


@dataclass(frozen=True)
class GrowthEstimate:
    """Per-length growth ratios from a count table plus their window mean."""

    base: int
    ratios: Dict[int, float]
    window: int
    estimate: float

    def to_json_dict(self) -> dict:
        return {
            "value": self.estimate,
            "base": self.base,
            "case": CASE_EMPIRICAL,
            "window": self.window,
            "ratios": {str(n): r for n, r in sorted(self.ratios.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def empirical_capacity(table: CountTable, base: int, window: int = 5) -> GrowthEstimate:
    """Growth estimate log_base(counts[n+1] / counts[n]), averaged at the tail."""
    counts = table.counts
    ratios = {
        n: math.log(counts[n + 1] / counts[n]) / math.log(base)
        for n in sorted(counts)
        if counts.get(n, 0) > 0 and counts.get(n + 1, 0) > 0
    }
    if not any(n + 1 in ratios for n in ratios):
        raise InsufficientDataError(
            "need at least three consecutive nonzero counts to estimate growth"
        )
    tail = [ratios[n] for n in sorted(ratios)][-window:]
    return GrowthEstimate(base, ratios, window, sum(tail) / len(tail))


_AVOIDANCE_STATE_CAP = 4096


def avoidance_capacity(
    alphabet: Alphabet, forbidden: Iterable[Word], tol: float = 1e-6
) -> float:
    """Capacity of the words avoiding every forbidden factor.

    Builds the sliding-window automaton whose states are the clean
    (L-1)-windows, L the longest forbidden length, with a transition
    deleted whenever it would complete a forbidden word.
    """
    patterns = [tuple(w) for w in forbidden]
    if not patterns:
        return 1.0
    if any(len(p) < 2 for p in patterns):
        raise ValueError("forbidden words need length at least 2")
    for p in patterns:
        for s in p:
            if s not in alphabet:
                raise ValueError(f"forbidden symbol {s!r} outside alphabet")
    window = max(len(p) for p in patterns) - 1
    if len(alphabet) ** window > _AVOIDANCE_STATE_CAP:
        raise ValueError(
            f"window automaton too large: {len(alphabet)}^{window} states"
        )
    banned: Set[tuple] = set(patterns)

    def contains_banned(t: tuple) -> bool:
        return any(
            t[i : i + len(p)] == p for p in banned for i in range(len(t) - len(p) + 1)
        )

    states = [
        w
        for w in itertools.product(alphabet.symbols, repeat=window)
        if not contains_banned(w)
    ]
    index = {w: i for i, w in enumerate(states)}
    m = np.zeros((len(states), len(states)), dtype=float)
    for w in states:
        for s in alphabet.symbols:
            grown = w + (s,)
            # w is clean, so a violation must use the fresh symbol
            if any(grown[-len(p) :] == p for p in banned):
                continue
            target = grown[1:]
            if target in index:
                m[index[w], index[target]] += 1.0
    rho = spectral_radius(m, tol)
    if rho == 0.0:
        raise EmptyLanguageError("every long enough word hits a forbidden factor")
    return math.log(rho) / math.log(len(alphabet))
