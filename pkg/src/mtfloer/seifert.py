"""Seifert data for mapping tori of periodic surface diffeomorphisms.

The input is the genus of the base orbifold together with one
(multiplicity, twisting) pair per exceptional fiber.  The twisting
fractions q/p must sum to an integer; that is exactly the condition for
the fibered knot picture to admit the longitude whose surgery produces
the mapping torus.  From the data we derive the order d of the
monodromy (the lcm of the multiplicities) and the genus of the fiber
surface.  All arithmetic is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegenerateGenus, InvalidFiber, NotSpecial, ParseError


@dataclass(frozen=True)
class SeifertInput:
    """Raw fibration data: base genus g and ordered fiber pairs (p, q)."""

    base_genus: int
    fibers: tuple[tuple[int, int], ...]

    @staticmethod
    def from_dict(doc: dict) -> "SeifertInput":
        """Build from the JSON document {"base_genus": g, "fibers": [[p, q], ...]}."""
        if not isinstance(doc, dict):
            raise ParseError("input document must be a JSON object")
        if set(doc) - {"base_genus", "fibers"}:
            extra = sorted(set(doc) - {"base_genus", "fibers"})
            raise ParseError(f"unknown input keys: {extra}")
        try:
            g = doc["base_genus"]
            fibers = doc["fibers"]
        except KeyError as exc:
            raise ParseError(f"missing input key: {exc.args[0]}") from exc
        if not isinstance(g, int) or isinstance(g, bool):
            raise ParseError("base_genus must be an integer")
        if not isinstance(fibers, list):
            raise ParseError("fibers must be a list of [p, q] pairs")
        pairs = []
        for entry in fibers:
            if (not isinstance(entry, (list, tuple)) or len(entry) != 2
                    or not all(isinstance(v, int) and not isinstance(v, bool) for v in entry)):
                raise ParseError(f"bad fiber entry: {entry!r}")
            pairs.append((entry[0], entry[1]))
        return SeifertInput(base_genus=g, fibers=tuple(pairs))

    def to_dict(self) -> dict:
        return {"base_genus": self.base_genus,
                "fibers": [[p, q] for p, q in self.fibers]}


@dataclass(frozen=True)
class SeifertSummary:
    """Validated input plus the derived global invariants.

    order_d is the order of the monodromy (1 for an empty fiber list)
    and fiber_genus is the genus of the surface being mapped.  The
    validated fibers and base genus ride along because every downstream
    formula consumes them.
    """

    order_d: int
    fiber_genus: int
    num_fibers: int
    base_genus: int
    fibers: tuple[tuple[int, int], ...]

    @property
    def weights(self) -> tuple[int, ...]:
        """d/p for each fiber; the knapsack weights used by the counting module."""
        return tuple(self.order_d // p for p, _ in self.fibers)


def _lcm_all(values) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def validate_and_derive(inp: SeifertInput) -> SeifertSummary:
    """Validate the fibration data and compute the derived invariants.

    Raises InvalidFiber when a pair breaks 0 < q < p or gcd(p, q) = 1,
    NotSpecial when the q/p fractions do not sum to an integer, and
    DegenerateGenus when the fiber-genus formula yields a negative or
    non-integral value.
    """
    if inp.base_genus < 0:
        raise ParseError("base_genus must be nonnegative")
    twist = Fraction(0)
    for pair in inp.fibers:
        p, q = pair
        if p <= 1:
            raise InvalidFiber(f"fiber multiplicity must exceed 1: {pair}")
        if not (0 < q < p):
            raise InvalidFiber(f"twisting must satisfy 0 < q < p: {pair}")
        if gcd(p, q) != 1:
            raise InvalidFiber(f"p and q must be coprime: {pair}")
        twist += Fraction(q, p)
    if twist.denominator != 1:
        raise NotSpecial(f"sum of q/p is {twist}, not an integer")

    d = _lcm_all(p for p, _ in inp.fibers) if inp.fibers else 1
    cone = sum((1 - Fraction(1, p) for p, _ in inp.fibers), Fraction(0))
    genus = 1 + d * (inp.base_genus - 1 + cone / 2)
    if genus.denominator != 1 or genus < 0:
        raise DegenerateGenus(f"fiber genus {genus} is not a nonnegative integer")
    return SeifertSummary(
        order_d=d,
        fiber_genus=int(genus),
        num_fibers=len(inp.fibers),
        base_genus=inp.base_genus,
        fibers=inp.fibers,
    )
