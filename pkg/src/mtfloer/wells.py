"""Wells of a grading profile, with the nesting U-action and the
period-shift T-action.

A well of F at odd height n is a maximal bounded run of half-lattice
points where F <= n.  Because the run is maximal, the lattice points
immediately flanking it on both sides satisfy F > n; the well is stored
by those two flanking points.  Runs that continue to an unbounded
region where F stays <= n (the downhill tail of a sloped profile) are
not wells.

Nesting order: a well at height n - 2 sits below a well at height n
exactly when its flank interval is contained in the other's.  U sends a
well to the sum of the wells nested one level below it; T shifts a well
by one period and by height_delta in grading.

Coordinates are doubled as in the profile module: left2/right2 are the
flanking half-lattice points times two.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundaryUnsafe
from .gradings import GradingProfile


@dataclass(frozen=True, order=True)
class Well:
    left2: int
    right2: int
    height: int

    def __str__(self) -> str:
        return f"({_fmt2(self.left2)},{_fmt2(self.right2)})_{self.height}"

    @property
    def run2(self) -> tuple[int, int]:
        """Doubled coordinates of the run of points where F <= height."""
        return (self.left2 + 1, self.right2 - 1)

    def nests_in(self, outer: "Well") -> bool:
        return (outer.height == self.height + 2
                and outer.left2 <= self.left2
                and self.right2 <= outer.right2)


def _fmt2(x2: int) -> str:
    return str(x2 // 2) if x2 % 2 == 0 else f"{x2}/2"


def _runs_in_scan(profile: GradingProfile, n: int, lo2: int, hi2: int,
                  open_left: bool, open_right: bool) -> list[Well]:
    """Maximal runs of F <= n inside [lo2, hi2].

    open_left / open_right say whether the region beyond that end of the
    scan is known to satisfy F <= n everywhere, in which case a run
    touching the end is unbounded and discarded.  Otherwise the scan
    bounds must be chosen so that F > n at and beyond the ends.
    """
    wells = []
    run_start = None
    if open_left:
        run_start = lo2  # provisional unbounded run, dropped at first close
    first = True
    for x2 in range(lo2, hi2 + 1):
        if profile.evaluate2(x2) <= n:
            if run_start is None:
                run_start = x2
        else:
            if run_start is not None:
                if not (open_left and first):
                    wells.append(Well(left2=run_start - 1, right2=x2, height=n))
                run_start = None
                first = False
            else:
                first = False
    if run_start is not None and not open_right and not (open_left and first):
        wells.append(Well(left2=run_start - 1, right2=hi2 + 1, height=n))
    return wells


def all_wells_at_height(profile: GradingProfile, n: int) -> list[Well]:
    """Every well at height n of an unbounded (nonzero-slope) profile."""
    if n % 2 == 0:
        raise ValueError("well heights are odd")
    delta = profile.height_delta
    if delta == 0:
        raise ValueError("profile has slope zero; enumerate per period instead")
    d2 = 2 * profile.period
    lo, hi = profile.period_min_max()
    if delta > 0:
        # All points <= n before some period; all > n after some period.
        k_open = (n - hi) // delta                # hi + k*delta <= n
        k_done = (n - lo) // delta + 1            # lo + k*delta > n
        lo2, hi2 = d2 * k_open, d2 * (k_done + 1)
        open_left, open_right = True, False
    else:
        k_done = -((n - lo) // (-delta)) - 1      # lo + k*delta > n for k <= k_done
        k_open = -((n - hi) // (-delta)) + 1      # hi + k*delta <= n for k >= k_open
        lo2, hi2 = d2 * k_done, d2 * (k_open + 1)
        open_left, open_right = False, True
    return _runs_in_scan(profile, n, lo2, hi2, open_left, open_right)


def _torsion_wells_one_period(profile: GradingProfile, n: int) -> list[Well]:
    """Wells at height n with run start in [0, period), for slope zero."""
    lo, hi = profile.period_min_max()
    if hi <= n or lo > n:
        return []
    d2 = 2 * profile.period
    found = _runs_in_scan(profile, n, -d2, 2 * d2, False, False)
    # Scan ends land on F > n points because some period point exceeds n
    # only if the scan bounds do; shift bounds to an exceeding point.
    return [w for w in found if 0 <= w.left2 + 1 < d2]


def wells_at_height(profile: GradingProfile, n: int,
                    window: tuple[int, int]) -> tuple[list[Well], set[Well]]:
    """Wells at height n whose run meets [window_lo, window_hi].

    Returns (wells, flagged) where flagged marks wells whose flanking
    points fall outside the window; those are exact (evaluation is
    global) but a window-bound consumer may want to widen.
    """
    if n % 2 == 0:
        raise ValueError("well heights are odd")
    lo, hi = window
    if lo >= hi:
        raise ValueError("window must satisfy lo < hi")
    if profile.height_delta != 0:
        candidates = all_wells_at_height(profile, n)
    else:
        d2 = 2 * profile.period
        base = _torsion_wells_one_period(profile, n)
        candidates = []
        if base:
            k_lo = (2 * lo - 2 * profile.period) // d2
            k_hi = (2 * hi + 2 * profile.period) // d2 + 1
            for k in range(k_lo, k_hi + 1):
                candidates.extend(
                    Well(w.left2 + k * d2, w.right2 + k * d2, n) for w in base)
    out, flagged = [], set()
    for w in sorted(candidates):
        run_lo2, run_hi2 = w.run2
        if run_hi2 < 2 * lo or run_lo2 > 2 * hi:
            continue
        out.append(w)
        if w.left2 < 2 * lo or w.right2 > 2 * hi:
            flagged.add(w)
    return out, flagged


def _height_range(profile: GradingProfile) -> range:
    """Odd heights that can carry a well with run start in [0, period)."""
    d2 = 2 * profile.period
    vals = [profile.evaluate2(x2) for x2 in range(-d2, 2 * d2)]
    lo, hi = min(vals), max(vals)
    start = lo if lo % 2 else lo + 1
    return range(start, hi + 1, 2)


def per_period_wells(profile: GradingProfile) -> list[Well]:
    """One representative per T-orbit: wells whose run starts in [0, period).

    For nonzero slope the T-orbit of a well visits each period window
    exactly once, so this is a fundamental domain; for slope zero the
    wells themselves are periodic and the same window applies.
    """
    d2 = 2 * profile.period
    out = []
    for n in _height_range(profile):
        if profile.height_delta != 0:
            found = [w for w in all_wells_at_height(profile, n)
                     if 0 <= w.left2 + 1 < d2]
        else:
            found = _torsion_wells_one_period(profile, n)
        out.extend(found)
    return sorted(out)


def u_images(profile: GradingProfile, well: Well) -> list[Well]:
    """The wells one height level down nested inside the given well."""
    return _runs_in_scan(profile, well.height - 2,
                         well.left2, well.right2, False, False)


def well_depth(profile: GradingProfile, well: Well) -> int:
    """Length of the longest U-chain starting at the well.

    U never cancels on wells (all nesting coefficients are positive), so
    the depth is the longest chain of nested wells.
    """
    nested = u_images(profile, well)
    if not nested:
        return 1
    return 1 + max(well_depth(profile, w) for w in nested)


def t_action(profile: GradingProfile) -> tuple[int, int]:
    """T shifts a well one period right and raises height by d * Sl."""
    return (profile.period, profile.height_delta)


def translate_well(profile: GradingProfile, well: Well, k: int) -> Well:
    """T^k applied to a well."""
    d2 = 2 * profile.period
    return Well(well.left2 + k * d2, well.right2 + k * d2,
                well.height + k * profile.height_delta)


@dataclass(frozen=True)
class WellGroup:
    """Wells enumerated over a window, with the boundary bookkeeping
    needed to apply U safely."""

    profile: GradingProfile
    window: tuple[int, int]
    wells: tuple[Well, ...]
    flagged: frozenset[Well]


def well_group(profile: GradingProfile, window: tuple[int, int],
               heights=None) -> WellGroup:
    if heights is None:
        lo, hi = window
        margin = profile.period
        vals = [profile.evaluate2(x2)
                for x2 in range(2 * (lo - margin), 2 * (hi + margin) + 1)]
        lo_v, hi_v = min(vals), max(vals)
        start = lo_v if lo_v % 2 else lo_v + 1
        heights = range(start, hi_v + 1, 2)
    wells, flagged = [], set()
    for n in heights:
        found, f = wells_at_height(profile, n, window)
        wells.extend(found)
        flagged |= f
    return WellGroup(profile=profile, window=window,
                     wells=tuple(sorted(wells)), flagged=frozenset(flagged))


def u_action(group: WellGroup) -> dict[Well, list[Well]]:
    """U on a windowed group: each well maps to its nested wells.

    Raises BoundaryUnsafe when an image well is missing from the group
    (the window clipped it), so counts would silently be wrong.
    """
    present = set(group.wells)
    out: dict[Well, list[Well]] = {}
    for w in group.wells:
        images = u_images(group.profile, w)
        for img in images:
            if img not in present:
                raise BoundaryUnsafe(
                    f"U image {img} of {w} is outside the enumerated group; "
                    "widen the window")
        if w in group.flagged and images:
            raise BoundaryUnsafe(f"well {w} touches the window boundary")
        out[w] = images
    return out


def u_matrix(profile: GradingProfile, rows: list[Well],
             cols: list[Well]) -> list[list[int]]:
    """0/1 incidence of the nesting order from rows to cols."""
    return [[1 if c.nests_in(r) else 0 for c in cols] for r in rows]
