"""Step-and-spike grading profiles on the half-integer lattice.

The profile of a class is the function F built from the integer step
sequence eta: starting from the anchor G(0) = 1, each integer step adds
2*eta, half-integer values interpolate the neighbors, and a spike of
height g (the base genus) is added at every half-integer.  F decomposes
as a d-periodic part plus a linear part of slope Sl, so the profile
stores only one period of data and evaluates anywhere in O(1).

Lattice coordinates are doubled throughout: the point x = k/2 is stored
as the integer k, which keeps every computation in exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import NonIntegralEta, OffLattice
from .seifert import SeifertSummary
from .spinc import SpincClass, SpincLabel, check_label, epsilon, sl


def eta(summary: SeifertSummary, cls: SpincClass | SpincLabel, x: int) -> int:
    """The integer step of the profile at integer x.

    eta(x) = sum of fractional parts {(q*x - r)/p} - epsilon/d + g - 1.
    The value is integral for every valid (summary, label) pair; a
    non-integral result means the pair is inconsistent and raises
    NonIntegralEta.
    """
    label = cls.canonical if isinstance(cls, SpincClass) else cls
    check_label(summary, label)
    total = Fraction(summary.base_genus - 1) - Fraction(
        epsilon(summary, label), summary.order_d)
    for r, (p, q) in zip(label.residues, summary.fibers):
        total += Fraction((q * x - r) % p, p)
    if total.denominator != 1:
        raise NonIntegralEta(
            f"eta({x}) = {total} for label {label}; inconsistent input")
    return int(total)


@dataclass(frozen=True)
class GradingProfile:
    """One period of step data plus the linear part.

    eta_period[i] is the step into lattice point i+1, so g_values[t] is
    the profile at integer t for 0 <= t < period, and a full period adds
    height_delta = d * Sl (an integer).
    """

    period: int
    eta_period: tuple[int, ...]
    spike: int
    slope: Fraction
    height_delta: int
    g_values: tuple[int, ...]
    anchor: int = 1

    def evaluate2(self, x2: int) -> int:
        """Profile value at the lattice point x2/2."""
        if x2 % 2 == 0:
            x = x2 // 2
            k, t = divmod(x, self.period)
            return self.g_values[t] + k * self.height_delta
        return (self.evaluate2(x2 - 1) + self.evaluate2(x2 + 1)) // 2 + self.spike

    def period_min_max(self) -> tuple[int, int]:
        """Extremes of F over one period of the lattice."""
        values = [self.evaluate2(x2) for x2 in range(2 * self.period)]
        return min(values), max(values)


def profile_from_eta(eta_period, spike: int) -> GradingProfile:
    """Build a profile from a raw step sequence (step i lands on point i+1)."""
    steps = tuple(int(v) for v in eta_period)
    if not steps:
        raise ValueError("eta period must be nonempty")
    g_values = [1]
    for step in steps[:-1]:
        g_values.append(g_values[-1] + 2 * step)
    delta = 2 * sum(steps)
    return GradingProfile(
        period=len(steps),
        eta_period=steps,
        spike=spike,
        slope=Fraction(delta, len(steps)),
        height_delta=delta,
        g_values=tuple(g_values),
    )


def build_profile(summary: SeifertSummary, cls: SpincClass | SpincLabel) -> GradingProfile:
    """Profile of a class: steps eta(1..d), spike g, slope Sl."""
    label = cls.canonical if isinstance(cls, SpincClass) else cls
    steps = tuple(eta(summary, label, x) for x in range(1, summary.order_d + 1))
    profile = profile_from_eta(steps, summary.base_genus)
    slope = sl(summary, label)
    assert profile.slope == slope, "period sum of eta disagrees with Sl"
    return profile


def evaluate(profile: GradingProfile, x) -> int:
    """F at a half-integer point given as int, Fraction, or float k/2."""
    if isinstance(x, bool):
        raise OffLattice(f"{x!r} is not on the half-integer lattice")
    if isinstance(x, int):
        return profile.evaluate2(2 * x)
    if isinstance(x, (float, Rational)):
        frac = Fraction(x)
        if frac.denominator in (1, 2):
            return profile.evaluate2(int(frac * 2))
    raise OffLattice(f"{x!r} is not on the half-integer lattice")


def least_even_upper_bound(profile: GradingProfile) -> int | None:
    """Smallest even integer bounding F from above; None when unbounded.

    F is bounded exactly when the slope vanishes, in which case the
    bound is read off one period.
    """
    if profile.height_delta != 0:
        return None
    _, top = profile.period_min_max()
    return top if top % 2 == 0 else top + 1
