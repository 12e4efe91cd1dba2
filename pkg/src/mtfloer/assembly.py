"""Assembly of the full homology description for one class, and the
per-level aggregate with its counting cross-checks.

For a single class the answer has three layers: a tower (present
exactly when the slope vanishes, with bottom grading the least even
upper bound of the profile), a list of opaque omega summands read off
the half-integer rises of the profile, and the well group with its U
and T actions.  Gradings are relative to the class's own profile
anchor; no absolute normalization is attempted, so comparisons against
published tables hold up to one overall shift per class.

A level aggregate enumerates every class at the level, assembles each,
and totals wells and omega summands per period.  The totals are then
recomputed from the closed-form count table; disagreement inside the
formula's validity range is a bug and raises InternalMismatch.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .counting import CountTable, rank_formula_valid, rank_table
from .errors import InternalMismatch
from .gradings import GradingProfile, build_profile, least_even_upper_bound
from .seifert import SeifertSummary
from .spinc import SpincClass, enumerate_classes_at_level
from .wells import Well, per_period_wells, t_action, u_images, well_depth

COEFFICIENT_RING_TAG = "Z[H1(Y0)]"


@dataclass(frozen=True)
class OmegaToken:
    """An opaque summand of index k at a half-integer position.

    No internal module structure is claimed; the token records genus,
    index (1 <= k <= 2g - 1), grading, and where on the lattice it sits
    (position2 is the doubled coordinate of the half-integer point).
    """

    genus: int
    index: int
    grading: int
    position2: int


@dataclass(frozen=True)
class TowerSummand:
    bottom_grading: int


@dataclass(frozen=True)
class HFDescription:
    spinc_class: SpincClass
    profile: GradingProfile
    tower: TowerSummand | None
    omega_summands: tuple[OmegaToken, ...]
    wells: tuple[Well, ...]
    u_incidence: dict[Well, tuple[Well, ...]]
    well_depths: dict[Well, int]
    t_shift: tuple[int, int]
    split_over_ZU: bool = True
    coefficient_ring_tag: str = COEFFICIENT_RING_TAG

    @property
    def is_trivial(self) -> bool:
        return (self.tower is None and not self.omega_summands
                and not self.wells)


@dataclass(frozen=True)
class LevelSummary:
    level: int
    classes: tuple[HFDescription, ...]
    totals: CountTable
    formula: CountTable
    formula_a_applies: bool
    annotations: tuple[str, ...] = field(default=())


def assemble_hf(summary: SeifertSummary, cls: SpincClass) -> HFDescription:
    """The graded description of one class: tower, omega tokens, wells."""
    profile = build_profile(summary, cls)
    g = summary.base_genus

    bound = least_even_upper_bound(profile)
    tower = TowerSummand(bottom_grading=bound) if bound is not None else None

    tokens = []
    for p in range(profile.period):
        k = g + profile.eta_period[p]
        if 1 <= k <= 2 * g - 1:
            tokens.append(OmegaToken(
                genus=g,
                index=k,
                grading=profile.evaluate2(2 * p + 1) - 1,
                position2=2 * p + 1,
            ))

    wells = tuple(per_period_wells(profile))
    incidence = {w: tuple(u_images(profile, w)) for w in wells}
    depths = {w: well_depth(profile, w) for w in wells}

    return HFDescription(
        spinc_class=cls,
        profile=profile,
        tower=tower,
        omega_summands=tuple(tokens),
        wells=wells,
        u_incidence=incidence,
        well_depths=depths,
        t_shift=t_action(profile),
    )


def aggregate_level(summary: SeifertSummary, level: int) -> LevelSummary:
    """Enumerate, assemble, and cross-check everything at one level.

    Per-period well totals must match a_rank whenever the formula
    applies (level <= fiber_genus - 1); omega totals must match the
    b counts at every level.  A failed identity raises InternalMismatch
    rather than reporting silently wrong numbers.
    """
    classes = tuple(assemble_hf(summary, cls)
                    for cls in enumerate_classes_at_level(summary, level))

    wells_total = sum(len(desc.wells) for desc in classes)
    b_total: dict[int, int] = {}
    for desc in classes:
        for token in desc.omega_summands:
            b_total[token.index] = b_total.get(token.index, 0) + 1
    totals = CountTable(level=level, a_rank=wells_total,
                        b_counts=dict(sorted(b_total.items())))

    formula = rank_table(summary, level)
    applies = rank_formula_valid(summary, level)
    if applies and formula.a_rank != totals.a_rank:
        raise InternalMismatch(
            f"level {level}: formula a = {formula.a_rank}, "
            f"enumerated wells per period = {totals.a_rank}")
    if formula.b_counts != totals.b_counts:
        raise InternalMismatch(
            f"level {level}: formula b = {formula.b_counts}, "
            f"enumerated omega counts = {totals.b_counts}")

    annotations = []
    if not applies:
        annotations.append(
            f"a-rank formula not applicable at level {level} "
            f"(> fiber_genus - 1 = {summary.fiber_genus - 1}); "
            "totals.a_rank is the enumerated truth")
    g = summary.base_genus
    if g > 0 and level in (0, 1) and classes:
        k = 2 * g - 1
        annotations.append(
            f"each well summand at this level pairs with an omega index-{k} "
            f"subgroup in the same grading (omega count {totals.b_counts.get(k, 0)})")
    return LevelSummary(
        level=level,
        classes=classes,
        totals=totals,
        formula=formula,
        formula_a_applies=applies,
        annotations=tuple(annotations),
    )
