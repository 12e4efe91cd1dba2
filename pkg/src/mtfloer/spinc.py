"""Labels for the mu-torsion Spin^c structures and their invariants.

A label (Q; r_1, ..., r_n) pairs an integer with one residue per fiber.
Two labels name the same structure when their slope invariants Sl agree
and their residue tuples differ by a multiple of the twisting vector
(q_1, ..., q_n).  Each class carries three derived rationals: Sl, the
level epsilon, and the Chern pairing -d*Sl against the capped fiber
surface.  Both sign conventions for the pairing circulate, so the class
records epsilon and the pairing side by side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ArityMismatch, ParseError
from .seifert import SeifertSummary


@dataclass(frozen=True)
class SpincLabel:
    q_part: int
    residues: tuple[int, ...]

    def __str__(self) -> str:
        return format_label(self)


@dataclass(frozen=True)
class SpincClass:
    """A canonicalized label with its numeric invariants attached."""

    canonical: SpincLabel
    sl_value: Fraction
    epsilon_value: Fraction
    chern_pairing: Fraction

    @property
    def level(self) -> int:
        """epsilon as an integer (it always is one for a valid label)."""
        assert self.epsilon_value.denominator == 1
        return int(self.epsilon_value)


def parse_label(text: str, summary: SeifertSummary | None = None) -> SpincLabel:
    """Parse "Q;r1,r2,...,rn" ("Q;" when there are no fibers)."""
    if ";" not in text:
        raise ParseError(f"label {text!r} lacks the ';' separator")
    head, _, tail = text.partition(";")
    try:
        q_part = int(head)
        residues = tuple(int(tok) for tok in tail.split(",")) if tail.strip() else ()
    except ValueError as exc:
        raise ParseError(f"label {text!r} is not of the form Q;r1,...,rn") from exc
    label = SpincLabel(q_part=q_part, residues=residues)
    if summary is not None:
        check_label(summary, label)
    return label


def format_label(label: SpincLabel) -> str:
    return f"{label.q_part};" + ",".join(str(r) for r in label.residues)


def check_label(summary: SeifertSummary, label: SpincLabel) -> None:
    if len(label.residues) != summary.num_fibers:
        raise ArityMismatch(
            f"label has {len(label.residues)} residues, input has "
            f"{summary.num_fibers} fibers")
    for r, (p, _) in zip(label.residues, summary.fibers):
        if not (0 <= r <= p - 1):
            raise ArityMismatch(f"residue {r} out of range for multiplicity {p}")


def sl(summary: SeifertSummary, label: SpincLabel) -> Fraction:
    """Slope invariant Sl(Q; r) = sum(1 - 1/p) + 2(Q + sum r/p)."""
    check_label(summary, label)
    total = sum((1 - Fraction(1, p) for p, _ in summary.fibers), Fraction(0))
    shift = sum((Fraction(r, p) for r, (p, _) in zip(label.residues, summary.fibers)),
                Fraction(label.q_part))
    return total + 2 * shift


def epsilon(summary: SeifertSummary, label: SpincLabel) -> Fraction:
    """Level invariant g_Sigma - 1 - (d/2) * Sl.  Integral for valid labels."""
    return (summary.fiber_genus - 1
            - Fraction(summary.order_d, 2) * sl(summary, label))


def epsilon_int(summary: SeifertSummary, label: SpincLabel) -> int:
    """epsilon via the cancellation-free integer form d(g - 1 - Q) - sum(r * d/p)."""
    check_label(summary, label)
    d = summary.order_d
    acc = d * (summary.base_genus - 1 - label.q_part)
    for r, w in zip(label.residues, summary.weights):
        acc -= r * w
    return acc


def chern_pairing(summary: SeifertSummary, label: SpincLabel) -> Fraction:
    """Pairing of c_1 with the capped fiber class: -d * Sl."""
    return -summary.order_d * sl(summary, label)


def translate(summary: SeifertSummary, label: SpincLabel, x: int) -> SpincLabel:
    """Shift residues by x steps of the twisting vector, fixing Sl.

    The compensating change of Q is integral because the twisting
    fractions sum to an integer.
    """
    check_label(summary, label)
    new_r = []
    q_shift = Fraction(0)
    for r, (p, q) in zip(label.residues, summary.fibers):
        nr = (r + x * q) % p
        new_r.append(nr)
        q_shift += Fraction(nr - r, p)
    assert q_shift.denominator == 1
    return SpincLabel(q_part=label.q_part - int(q_shift), residues=tuple(new_r))


def same_class(summary: SeifertSummary, a: SpincLabel, b: SpincLabel) -> bool:
    """Equivalence test: equal Sl and residues in the same twisting coset."""
    check_label(summary, a)
    check_label(summary, b)
    if sl(summary, a) != sl(summary, b):
        return False
    for x in range(summary.order_d):
        shifted = translate(summary, a, x)
        if shifted.residues == b.residues:
            return True
    return False


def canonicalize(summary: SeifertSummary, label: SpincLabel) -> SpincClass:
    """Pick the lexicographically least residue tuple in the orbit.

    Any deterministic orbit section would do; lexicographic order makes
    the choice easy to state and test.  Q is recomputed to keep Sl.
    """
    check_label(summary, label)
    best = label
    for x in range(1, summary.order_d):
        candidate = translate(summary, label, x)
        if candidate.residues < best.residues:
            best = candidate
    value = sl(summary, best)
    return SpincClass(
        canonical=best,
        sl_value=value,
        epsilon_value=epsilon(summary, best),
        chern_pairing=-summary.order_d * value,
    )


def orbit_representatives(summary: SeifertSummary) -> list[tuple[int, ...]]:
    """Lexicographically least residue tuple of every twisting orbit.

    Iterates the full residue cube once, marking whole orbits as they
    are first met, so each orbit's first (hence least) tuple is kept.
    """
    if summary.num_fibers == 0:
        return [()]
    ps = [p for p, _ in summary.fibers]
    qs = [q for _, q in summary.fibers]
    d = summary.order_d
    seen: set[tuple[int, ...]] = set()
    reps: list[tuple[int, ...]] = []
    # Odometer over the residue cube in lexicographic order.
    current = [0] * len(ps)
    total = 1
    for p in ps:
        total *= p
    for _ in range(total):
        tup = tuple(current)
        if tup not in seen:
            reps.append(tup)
            for x in range(d):
                seen.add(tuple((r + x * q) % p for r, q, p in zip(tup, qs, ps)))
        for idx in range(len(ps) - 1, -1, -1):
            current[idx] += 1
            if current[idx] < ps[idx]:
                break
            current[idx] = 0
    return reps


def class_from_residues(summary: SeifertSummary, residues: tuple[int, ...],
                        level: int) -> SpincClass | None:
    """The class with the given residue orbit at the given level, if any.

    Solves d(g - 1 - Q) - sum(r * d/p) = level for Q; returns None when
    no integer Q works (the level misses this orbit's congruence class).
    """
    d = summary.order_d
    acc = sum(r * w for r, w in zip(residues, summary.weights))
    numerator = d * (summary.base_genus - 1) - acc - level
    if numerator % d != 0:
        return None
    q_part = numerator // d
    return canonicalize(summary, SpincLabel(q_part=q_part, residues=residues))


def enumerate_classes_at_level(summary: SeifertSummary, level: int) -> list[SpincClass]:
    """All distinct classes whose level invariant equals the given integer.

    One candidate per residue orbit; a candidate survives when the
    defining linear equation for Q has an integer solution.  The result
    is sorted by canonical label for deterministic output.
    """
    classes = []
    for residues in orbit_representatives(summary):
        cls = class_from_residues(summary, residues, level)
        if cls is not None:
            assert cls.level == level
            classes.append(cls)
    classes.sort(key=lambda c: (c.canonical.residues, c.canonical.q_part))
    return classes
