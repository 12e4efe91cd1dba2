"""Brute-force chain-complex oracle for genus-zero classes.

The closed form (wells at odd levels, nothing at even levels, for a
class of nonzero slope) is validated against an independently built
chain complex: the "book".  Page p of the book has a left side and a
right side; at genus zero each side holds at most one generator per
column index i.  A left generator exists when max(i, i - eta(p)) >= 0
and sits in level 2i - eta(p) + f(p); a right generator exists when
i >= 0 and sits one level lower.  The differential is the quotient map
from a left generator to the right generator in the same column of the
same page, plus the shift map to column i - eta(p) of the next page.
Both drop the level by exactly one.  Working over GF(2), the homology
per level is computed by exact Gaussian elimination.

Two truncations make the complex finite: a page window, and the kernel
of U^delta, where U shifts a generator down one column.  Levels whose
ranks are stable under widening the window and deepening the truncation
form the certified band; inside it the oracle rank must equal the well
count of the profile at that height (odd levels) or zero (even levels).

The level offset of the right side is -1.  The alternative sign fails
the degree check against both differentials, so it is rejected by
construction here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import AxiomViolation, BandEmpty
from .gf2 import gf2_rank
from .gradings import GradingProfile, build_profile
from .seifert import SeifertSummary
from .spinc import SpincClass
from .wells import all_wells_at_height


class BookCell(NamedTuple):
    side: str   # "L" or "R"
    page: int
    column: int


@dataclass(frozen=True)
class BookComplex:
    eta_period: tuple[int, ...]
    page_window: tuple[int, int]
    u_cutoff: int
    cells: tuple[BookCell, ...]
    levels: dict[BookCell, int]
    differential: dict[BookCell, tuple[BookCell, ...]]
    f_values: dict[int, int]
    fq_values: dict[int, int]


def _step(eta_period: tuple[int, ...], p: int) -> int:
    """eta at integer p; eta_period[i] is the step into point i + 1."""
    return eta_period[(p - 1) % len(eta_period)]


def _f_table(eta_period: tuple[int, ...], p_lo: int, p_hi: int) -> dict[int, int]:
    """The page grading offset f, anchored at f(0) = -eta(0) + 1 for
    genus zero, with f(p + 1) = f(p) + eta(p) + eta(p + 1)."""
    f = {0: 1 - _step(eta_period, 0)}
    for p in range(0, p_hi):
        f[p + 1] = f[p] + _step(eta_period, p) + _step(eta_period, p + 1)
    for p in range(0, p_lo, -1):
        f[p - 1] = f[p] - _step(eta_period, p - 1) - _step(eta_period, p)
    return f


def build_book(eta_period, page_window: tuple[int, int],
               u_cutoff: int) -> BookComplex:
    """Assemble the truncated genus-zero book and check its axioms.

    eta_period is the step string of the underlying profile (step i
    lands on lattice point i + 1).  Construction fails loudly when any
    differential entry changes the level by anything but -1 or when
    the assembled differential does not square to zero.
    """
    steps = tuple(int(v) for v in eta_period)
    if not steps:
        raise AxiomViolation("eta period must be nonempty")
    if u_cutoff < 1:
        raise AxiomViolation("u_cutoff must be positive")
    p_lo, p_hi = page_window
    if p_lo > p_hi:
        raise AxiomViolation("empty page window")

    f = _f_table(steps, p_lo, p_hi + 1)
    fq = {p: f[p] - _step(steps, p) for p in f}

    cells: list[BookCell] = []
    levels: dict[BookCell, int] = {}
    for p in range(p_lo, p_hi + 1):
        e = _step(steps, p)
        base = min(0, e)
        for i in range(base, base + u_cutoff):
            cell = BookCell("L", p, i)
            cells.append(cell)
            levels[cell] = 2 * i - e + f[p]
        for i in range(0, u_cutoff):
            cell = BookCell("R", p, i)
            cells.append(cell)
            levels[cell] = 2 * i - e + f[p] - 1

    cell_set = set(cells)
    diff: dict[BookCell, tuple[BookCell, ...]] = {}
    for cell in cells:
        if cell.side == "R":
            diff[cell] = ()
            continue
        p, i = cell.page, cell.column
        targets = []
        quotient = BookCell("R", p, i)
        if quotient in cell_set:
            targets.append(quotient)
        shift = BookCell("R", p + 1, i - _step(steps, p))
        if shift in cell_set:
            targets.append(shift)
        diff[cell] = tuple(targets)

    complex_ = BookComplex(
        eta_period=steps,
        page_window=page_window,
        u_cutoff=u_cutoff,
        cells=tuple(cells),
        levels=levels,
        differential=diff,
        f_values=f,
        fq_values=fq,
    )
    _check_axioms(complex_)
    return complex_


def _check_axioms(complex_: BookComplex) -> None:
    levels = complex_.levels
    for cell, targets in complex_.differential.items():
        for target in targets:
            if levels[target] != levels[cell] - 1:
                raise AxiomViolation(
                    f"differential {cell} -> {target} changes level by "
                    f"{levels[target] - levels[cell]}")
    # D^2 = 0 over GF(2): every length-two path count must be even.
    for cell, targets in complex_.differential.items():
        second: dict[BookCell, int] = {}
        for target in targets:
            for far in complex_.differential[target]:
                second[far] = second.get(far, 0) + 1
        if any(v % 2 for v in second.values()):
            raise AxiomViolation(f"D^2 != 0 at {cell}")


def u_shift(complex_: BookComplex, cell: BookCell) -> BookCell | None:
    """The U image of a cell (one column down), or None if truncated away."""
    target = BookCell(cell.side, cell.page, cell.column - 1)
    return target if target in complex_.levels else None


def gf2_homology(complex_: BookComplex) -> dict[int, int]:
    """Rank of the homology at every level that carries a cell.

    H_s = dim C_s - rank(D_s) - rank(D_{s+1}) with D_s the boundary
    matrix from level s to level s - 1.
    """
    by_level: dict[int, list[BookCell]] = {}
    for cell in complex_.cells:
        by_level.setdefault(complex_.levels[cell], []).append(cell)
    for cells in by_level.values():
        cells.sort()

    def boundary_rank(s: int) -> int:
        rows = by_level.get(s, [])
        cols = by_level.get(s - 1, [])
        if not rows or not cols:
            return 0
        index = {cell: j for j, cell in enumerate(cols)}
        M = np.zeros((len(rows), len(cols)), dtype=np.uint8)
        for i, cell in enumerate(rows):
            for target in complex_.differential[cell]:
                M[i, index[target]] ^= 1
        return gf2_rank(M)

    ranks: dict[int, int] = {}
    for s, cells in by_level.items():
        ranks[s] = len(cells) - boundary_rank(s) - boundary_rank(s + 1)
    return ranks


@dataclass(frozen=True)
class OracleReport:
    eta_period: tuple[int, ...]
    page_window: tuple[int, int]
    u_cutoff: int
    band: tuple[int, int]
    rows: tuple[dict, ...]        # level, oracle_rank, predicted, verdict
    all_match: bool


def predicted_rank(profile: GradingProfile, s: int) -> int:
    """Closed-form prediction: well count at odd heights, zero at even."""
    if s % 2 == 0:
        return 0
    return len(all_wells_at_height(profile, s))


def default_cutoff(profile: GradingProfile, page_window: tuple[int, int]) -> int:
    """Truncation depth covering every U-chain the window can see."""
    lo, hi = page_window
    vals = [profile.evaluate2(x2) for x2 in range(2 * lo, 2 * hi + 1)]
    spread = max(vals) - min(vals)
    return 1 + (spread + 1) // 2


def compare_with_closed_form(summary: SeifertSummary, cls: SpincClass,
                             periods: int = 3,
                             u_cutoff: int | None = None) -> OracleReport:
    """Run the oracle for a genus-zero class of nonzero slope.

    The certified band consists of the levels whose oracle rank is
    unchanged when the page window grows by one period on each side and
    when the truncation deepens by two.  Raises BandEmpty when nothing
    certifies; a prediction mismatch inside the band is reported as a
    verdict, not an exception.
    """
    if summary.base_genus != 0:
        raise ValueError("the book oracle is defined for base genus zero only")
    profile = build_profile(summary, cls)
    return compare_profile_with_book(profile, periods=periods,
                                     u_cutoff=u_cutoff)


def truncation_ceiling(complex_: BookComplex) -> int:
    """Highest level untouched by the U-truncation.

    The first cell each page loses to the truncation sits at a level
    that grows linearly in the cutoff; removing a cell can only disturb
    homology at its own level and the two neighbors.  Levels at most
    the returned value therefore agree with the untruncated complex
    restricted to the same page window.
    """
    delta = complex_.u_cutoff
    floor = None
    p_lo, p_hi = complex_.page_window
    for p in range(p_lo, p_hi + 1):
        e = _step(complex_.eta_period, p)
        f = complex_.f_values[p]
        t_left = 2 * (delta + min(0, e)) - e + f      # first removed left cell
        t_right = 2 * delta - e + f - 1               # first removed right cell
        first = min(t_left - 1, t_right)
        floor = first if floor is None else min(floor, first)
    return floor - 2


def compare_profile_with_book(profile: GradingProfile, periods: int = 3,
                              u_cutoff: int | None = None) -> OracleReport:
    if profile.spike != 0:
        raise ValueError("the book oracle is defined for base genus zero only")
    if profile.height_delta == 0:
        raise ValueError(
            "slope-zero classes are excluded from the oracle: a fixed level "
            "meets infinitely many pages and no finite window converges")
    if periods < 1:
        raise ValueError("need at least one period of pages")
    d = profile.period
    window = (-periods * d, periods * d)
    if u_cutoff is None:
        u_cutoff = default_cutoff(profile, window)

    book = build_book(profile.eta_period, window, u_cutoff)
    base = gf2_homology(book)
    wide_window = (window[0] - d, window[1] + d)
    wide = gf2_homology(build_book(profile.eta_period, wide_window, u_cutoff))
    deep = gf2_homology(build_book(profile.eta_period, window, u_cutoff + 2))

    ceiling = truncation_ceiling(book)
    stable = [s for s in sorted(base)
              if s <= ceiling and base[s] == wide.get(s, 0) == deep.get(s, 0)]
    band = _central_block(stable, base)
    if band is None:
        raise BandEmpty("no level certified; widen the page window")

    rows = []
    all_match = True
    for s in range(band[0], band[1] + 1):
        oracle = base.get(s, 0)
        predicted = predicted_rank(profile, s)
        match = oracle == predicted
        all_match = all_match and match
        rows.append({"level": s, "oracle_rank": oracle,
                     "predicted": predicted,
                     "verdict": "match" if match else "mismatch"})
    return OracleReport(
        eta_period=profile.eta_period,
        page_window=window,
        u_cutoff=u_cutoff,
        band=band,
        rows=tuple(rows),
        all_match=all_match,
    )


def _central_block(stable: list[int], base: dict[int, int]) -> tuple[int, int] | None:
    """Largest contiguous run of certified levels containing the median
    populated level (ties broken toward the longer run)."""
    if not stable:
        return None
    stable_set = set(stable)
    populated = sorted(base)
    center = populated[len(populated) // 2]
    blocks = []
    start = stable[0]
    prev = stable[0]
    for s in stable[1:]:
        if s != prev + 1:
            blocks.append((start, prev))
            start = s
        prev = s
    blocks.append((start, prev))
    containing = [b for b in blocks if b[0] <= center <= b[1]]
    if containing:
        return containing[0]
    return max(blocks, key=lambda b: b[1] - b[0])
