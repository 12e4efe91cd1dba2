"""Lattice-point counts behind the rank formulas, and the Lefschetz
fixed-point numbers of the monodromy powers.

count_N(D, E) counts residue tuples (i_1, ..., i_n), 0 <= i_l < p_l,
with sum(i_l / p_l) = E/d + D - g + 1.  Clearing denominators turns
this into a bounded-knapsack count with weights d/p_l and an integer
target, so the dynamic program stays polynomial even when the residue
cube is astronomically large.  A brute-force enumeration over the cube
doubles as the test oracle for small inputs.

From these counts: a_rank(E) is the predicted number of well summands
per period at level E, valid for levels up to fiber_genus - 1 (above
that the profile slopes the other way and the conjugate level applies);
b_count(E, k) is the predicted number of opaque omega summands of index
k per period, valid at every level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import IdentityPower, OrderTooSmall
from .seifert import SeifertSummary


@dataclass(frozen=True)
class CountTable:
    level: int
    a_rank: int
    b_counts: dict[int, int]


def _target(summary: SeifertSummary, D: int, E: int) -> int:
    """Integer knapsack target E + d(D - g + 1)."""
    return E + summary.order_d * (D - summary.base_genus + 1)


def count_N(summary: SeifertSummary, D: int, E: int) -> int:
    """Number of residue tuples solving the level-D equation at level E."""
    target = _target(summary, D, E)
    weights = summary.weights
    bound = sum((p - 1) * w for (p, _), w in zip(summary.fibers, weights))
    if target < 0 or target > bound:
        return 0
    # dp[t] = number of partial tuples of total weight t.
    dp = [0] * (target + 1)
    dp[0] = 1
    for (p, _), w in zip(summary.fibers, weights):
        new = [0] * (target + 1)
        for t in range(target + 1):
            if dp[t] == 0:
                continue
            c = dp[t]
            top = min(p - 1, (target - t) // w)
            for j in range(top + 1):
                new[t + j * w] += c
        dp = new
    return dp[target]


def count_N_bruteforce(summary: SeifertSummary, D: int, E: int) -> int:
    """Direct enumeration over the residue cube; the DP oracle."""
    size = 1
    for p, _ in summary.fibers:
        size *= p
    if size > 10**6:
        raise ValueError("residue cube too large for brute force")
    goal = Fraction(E, summary.order_d) + (D - summary.base_genus + 1)
    count = 0
    for tup in itertools.product(*(range(p) for p, _ in summary.fibers)):
        total = sum((Fraction(i, p) for i, (p, _) in zip(tup, summary.fibers)),
                    Fraction(0))
        if total == goal:
            count += 1
    return count


def _d_range(summary: SeifertSummary, E: int):
    """Integers D with a potentially nonzero count at level E."""
    d = summary.order_d
    bound = sum((p - 1) * w for (p, _), w in zip(summary.fibers, summary.weights))
    # 0 <= E + d(D - g + 1) <= bound
    lo = (-E + d - 1) // d + summary.base_genus - 1
    hi = (bound - E) // d + summary.base_genus - 1
    return range(lo, hi + 1)


def a_weight(genus: int, D: int) -> int:
    """Wells initiated by a step of size D under a spike of the given
    genus: max(0, -D, floor((genus - D + 1) / 2))."""
    return max(0, -D, (genus - D + 1) // 2)


def rank_formula_valid(summary: SeifertSummary, level: int) -> bool:
    """The a_rank formula counts actual wells only while the profile
    slope is nonnegative, i.e. for levels <= fiber_genus - 1."""
    return level <= summary.fiber_genus - 1


def rank_table(summary: SeifertSummary, level: int) -> CountTable:
    """Evaluate the closed-form rank predictions at one level."""
    g = summary.base_genus
    a = 0
    for D in _d_range(summary, level):
        w = a_weight(g, D)
        if w:
            a += w * count_N(summary, D, level)
    b: dict[int, int] = {}
    for k in range(1, 2 * g):
        n = count_N(summary, k - g, level)
        if n:
            b[k] = n
    return CountTable(level=level, a_rank=a, b_counts=b)


def lefschetz(summary: SeifertSummary, power: int) -> int:
    """Fixed points of the power-th iterate of the monodromy.

    The iterate fixes the exceptional point of multiplicity p exactly
    when d/p divides the power.  Powers that are multiples of d give
    the identity, whose fixed points are not isolated.
    """
    d = summary.order_d
    if power % d == 0:
        raise IdentityPower(f"power {power} is the identity (order {d})")
    return sum(1 for w in summary.weights if power % w == 0)


def theorem_rank_level_two(summary: SeifertSummary) -> int:
    """Predicted total rank at level 2 from the fixed-point counts:
    L(phi^2) + (L(phi)^2 - L(phi)) / 2.  Needs monodromy order >= 3."""
    if summary.order_d in (1, 2):
        raise OrderTooSmall("prediction needs monodromy order at least 3")
    l1 = lefschetz(summary, 1)
    l2 = lefschetz(summary, 2)
    return l2 + (l1 * l1 - l1) // 2
