"""Golden regression fixtures for the worked example family.

The base input is the genus-zero fibration with fibers (2,1), (7,3),
(14,1), i.e. zero-surgery on the (2,7) torus knot; the higher-genus
variants raise the base genus with the same fibers.  Expected values
live in the EXPECTED table so the harness self-test can perturb one and
watch exactly one fixture fail.

Gradings of published tables are matched up to one overall shift per
class: each comparison normalizes both multisets to start at zero.
"""

from __future__ import annotations

from fractions import Fraction

from . import assembly, counting, spinc
from .book import compare_with_closed_form
from .gradings import build_profile, least_even_upper_bound
from .seifert import SeifertInput, validate_and_derive

BASE_FIBERS = ((2, 1), (7, 3), (14, 1))


def base_input(genus: int = 0) -> SeifertInput:
    return SeifertInput(base_genus=genus, fibers=BASE_FIBERS)


EXPECTED = {
    "order_d": 14,
    "fiber_genus": {0: 3, 1: 17, 2: 31},
    # level -> (canonical label, Sl, chern pairing)
    "class_table": {
        0: ("-1;0,0,0", Fraction(2, 7), -4),
        1: ("-2;0,0,13", Fraction(1, 7), -2),
        2: ("-2;0,0,12", Fraction(0), 0),
        3: ("-2;0,0,11", Fraction(-1, 7), 2),
        4: ("-2;0,0,10", Fraction(-2, 7), 4),
    },
    "eta_period_level0": (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, -1),
    "wells_per_period": {0: 1, 1: 1, 2: 2, 3: 1, 4: 1},
    "tower_levels": {2: 6},          # level -> tower bottom grading
    "depth_two_levels": {2},          # levels with a depth-2 U-chain
    "t_shift": {E: (14, 4 - 2 * E) for E in range(5)},
    "lefschetz": {1: 1, 2: 2},
    "level_two_rank": 2,
    "g1_level": 14,
    "g1_a_rank": 11,
    "g1_b_counts": {1: 10},
    "g1_well_heights": (5, 5, 5, 5, 5, 5, 5, 5, 5, 7, 9),
    "g1_omega_gradings": (1, 1, 1, 1, 1, 1, 1, 1, 3, 5),
    "g2_level": 28,
    "g2_wells_per_period": 15,
    # 15 wells, one of depth 2; as a Z[U]-module that is one depth-two
    # chain plus 13 free summands (the chain's image absorbs one well).
    "g2_depths": {1: 14, 2: 1},
    "g2_nine_image": 9,
    "g2_omega_index_counts": {1: 1, 2: 10, 3: 3},
    "g2_omega_gradings": {1: (7,), 2: (2,) * 8 + (4, 6), 3: (3, 5, 7)},
}


def _normalize(values) -> tuple[int, ...]:
    """Shift a grading multiset so its minimum is zero."""
    vals = sorted(values)
    if not vals:
        return ()
    return tuple(v - vals[0] for v in vals)


def _fx_invariants(expected):
    summary = validate_and_derive(base_input(0))
    ok = (summary.order_d == expected["order_d"]
          and summary.fiber_genus == expected["fiber_genus"][0])
    for g in (1, 2):
        s = validate_and_derive(base_input(g))
        ok = ok and s.fiber_genus == expected["fiber_genus"][g]
    return ok, f"d={summary.order_d}, fiber genus {summary.fiber_genus}"


def _fx_class_table(expected):
    summary = validate_and_derive(base_input(0))
    problems = []
    for level, (label_text, sl_val, chern) in expected["class_table"].items():
        classes = spinc.enumerate_classes_at_level(summary, level)
        if len(classes) != 1:
            problems.append(f"level {level}: {len(classes)} classes")
            continue
        cls = classes[0]
        if (str(cls.canonical) != label_text or cls.sl_value != sl_val
                or cls.chern_pairing != chern):
            problems.append(
                f"level {level}: got {cls.canonical} Sl={cls.sl_value}")
    return not problems, "; ".join(problems) or "five classes as published"


def _fx_eta_period(expected):
    summary = validate_and_derive(base_input(0))
    cls = spinc.enumerate_classes_at_level(summary, 0)[0]
    profile = build_profile(summary, cls)
    got = profile.eta_period
    return got == expected["eta_period_level0"], f"eta period {got}"


def _fx_level_structure(expected):
    summary = validate_and_derive(base_input(0))
    problems = []
    for level in range(-3, 9):
        agg = assembly.aggregate_level(summary, level)
        want_wells = expected["wells_per_period"].get(level, 0)
        if agg.totals.a_rank != want_wells:
            problems.append(
                f"level {level}: wells {agg.totals.a_rank} != {want_wells}")
        towers = [d.tower for d in agg.classes if d.tower is not None]
        want_bottom = expected["tower_levels"].get(level)
        if want_bottom is None:
            if towers:
                problems.append(f"level {level}: unexpected tower")
        elif len(towers) != 1 or towers[0].bottom_grading != want_bottom:
            problems.append(f"level {level}: tower {towers}")
        max_depth = max((max(d.well_depths.values(), default=1)
                         for d in agg.classes), default=1)
        if (level in expected["depth_two_levels"]) != (max_depth == 2):
            problems.append(f"level {level}: max U-depth {max_depth}")
        if level in expected["t_shift"]:
            shifts = {d.t_shift for d in agg.classes}
            if shifts != {expected["t_shift"][level]}:
                problems.append(f"level {level}: T shift {shifts}")
    return not problems, "; ".join(problems) or \
        "five nontrivial levels, ranks (1,1,2,1,1), tower and U at the torsion level"


def _fx_lefschetz(expected):
    summary = validate_and_derive(base_input(0))
    problems = []
    for power, want in expected["lefschetz"].items():
        got = counting.lefschetz(summary, power)
        if got != want:
            problems.append(f"L(phi^{power}) = {got} != {want}")
    predicted = counting.theorem_rank_level_two(summary)
    a2 = assembly.aggregate_level(summary, 2).totals.a_rank
    if predicted != expected["level_two_rank"] or a2 != predicted:
        problems.append(f"level-2: predicted {predicted}, enumerated {a2}")
    return not problems, "; ".join(problems) or \
        "fixed-point counts and the level-2 rank prediction agree"


def _fx_genus_one(expected):
    summary = validate_and_derive(base_input(1))
    agg = assembly.aggregate_level(summary, expected["g1_level"])
    problems = []
    if agg.totals.a_rank != expected["g1_a_rank"]:
        problems.append(f"a = {agg.totals.a_rank}")
    if agg.totals.b_counts != expected["g1_b_counts"]:
        problems.append(f"b = {agg.totals.b_counts}")
    if len(agg.classes) != 1:
        problems.append(f"{len(agg.classes)} classes")
    else:
        desc = agg.classes[0]
        heights = _normalize(w.height for w in desc.wells)
        if heights != _normalize(expected["g1_well_heights"]):
            problems.append(f"well heights {heights}")
        omegas = _normalize(t.grading for t in desc.omega_summands)
        if omegas != _normalize(expected["g1_omega_gradings"]):
            problems.append(f"omega gradings {omegas}")
        if any(desc.u_incidence[w] for w in desc.wells):
            problems.append("U should vanish here")
    return not problems, "; ".join(problems) or \
        "eleven wells and ten index-1 omega summands, gradings as published"


def _fx_genus_two(expected):
    summary = validate_and_derive(base_input(2))
    agg = assembly.aggregate_level(summary, expected["g2_level"])
    problems = []
    if agg.totals.a_rank != expected["g2_wells_per_period"]:
        problems.append(f"wells {agg.totals.a_rank}")
    if len(agg.classes) != 1:
        problems.append(f"{len(agg.classes)} classes")
        return False, "; ".join(problems)
    desc = agg.classes[0]
    depth_counts: dict[int, int] = {}
    for depth in desc.well_depths.values():
        depth_counts[depth] = depth_counts.get(depth, 0) + 1
    if depth_counts != expected["g2_depths"]:
        problems.append(f"depths {depth_counts}")
    deep = [w for w, depth in desc.well_depths.items() if depth == 2]
    if len(deep) != 1 or len(desc.u_incidence[deep[0]]) != expected["g2_nine_image"]:
        problems.append(
            f"deep well image size "
            f"{[len(desc.u_incidence[w]) for w in deep]}")
    index_counts: dict[int, int] = {}
    gradings: dict[int, list[int]] = {}
    for token in desc.omega_summands:
        index_counts[token.index] = index_counts.get(token.index, 0) + 1
        gradings.setdefault(token.index, []).append(token.grading)
    if index_counts != expected["g2_omega_index_counts"]:
        problems.append(f"omega indices {index_counts}")
    all_got = _normalize(t.grading for t in desc.omega_summands)
    all_want = _normalize(g for gr in expected["g2_omega_gradings"].values()
                          for g in gr)
    if all_got != all_want:
        problems.append(f"omega gradings {all_got}")
    return not problems, "; ".join(problems) or \
        "fifteen wells, one depth-2 chain with a nine-well image, omegas as published"


def _fx_oracle(expected):
    summary = validate_and_derive(base_input(0))
    cls = spinc.enumerate_classes_at_level(summary, 0)[0]
    report = compare_with_closed_form(summary, cls, periods=3)
    detail = (f"band {report.band}, {len(report.rows)} levels, "
              f"cutoff {report.u_cutoff}")
    return report.all_match and report.band[0] < report.band[1], detail


FIXTURES = (
    ("invariants", _fx_invariants),
    ("class-table", _fx_class_table),
    ("eta-period", _fx_eta_period),
    ("level-structure", _fx_level_structure),
    ("lefschetz", _fx_lefschetz),
    ("genus-one", _fx_genus_one),
    ("genus-two", _fx_genus_two),
    ("book-oracle", _fx_oracle),
)


def run_all(overrides: dict | None = None) -> list[dict]:
    """Run every fixture; overrides replace EXPECTED entries (used by
    the harness self-test to confirm failures are detected)."""
    expected = dict(EXPECTED)
    if overrides:
        expected.update(overrides)
    results = []
    for name, fn in FIXTURES:
        try:
            ok, detail = fn(expected)
        except Exception as exc:  # a crash is a failing fixture, not a crash
            ok, detail = False, f"exception: {exc!r}"
        results.append({"name": name, "pass": ok, "detail": detail})
    return results
