"""Command-line interface and JSON report schemas.

One subcommand per concern: info, spinc, profile, wells, hf, level,
lefschetz, oracle, plot, regress.  Every command reads the same input
document {"base_genus": g, "fibers": [[p, q], ...]}, is deterministic
given its flags, and emits a JSON report that echoes the input and the
package version.  Rationals are serialized as "num/den" strings so
downstream tools cannot corrupt them through floats.

Exit codes: 0 success, 2 domain error, 3 oracle mismatch, 4 regression
failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import __version__, assembly, counting, render, spinc
from .book import compare_with_closed_form
from .errors import (EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_ORACLE_MISMATCH,
                     EXIT_REGRESSION_FAILURE, MtfloerError, ParseError)
from .fixtures import run_all
from .gradings import build_profile, least_even_upper_bound
from .seifert import SeifertInput, SeifertSummary, validate_and_derive
from .wells import t_action, u_action, well_group


def q_str(value) -> str:
    frac = Fraction(value)
    return f"{frac.numerator}/{frac.denominator}"


def half_str(x2: int) -> str:
    return str(x2 // 2) if x2 % 2 == 0 else f"{x2}/2"


def load_input(path: str) -> tuple[SeifertInput, SeifertSummary]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    inp = SeifertInput.from_dict(doc)
    return inp, validate_and_derive(inp)


def parse_window(text: str) -> tuple[int, int]:
    try:
        lo, _, hi = text.partition(":")
        window = (int(lo), int(hi))
    except ValueError as exc:
        raise ParseError(f"window {text!r} is not of the form lo:hi") from exc
    if window[0] >= window[1]:
        raise ParseError("window must satisfy lo < hi")
    return window


def base_report(inp: SeifertInput) -> dict:
    return {"version": __version__, "input": inp.to_dict()}


def class_dict(cls: spinc.SpincClass) -> dict:
    return {
        "label": str(cls.canonical),
        "q_part": cls.canonical.q_part,
        "residues": list(cls.canonical.residues),
        "sl": q_str(cls.sl_value),
        "epsilon": q_str(cls.epsilon_value),
        "chern_pairing": q_str(cls.chern_pairing),
    }


def well_dict(well, flagged=frozenset()) -> dict:
    doc = {"left": half_str(well.left2), "right": half_str(well.right2),
           "height": well.height}
    if well in flagged:
        doc["boundary"] = True
    return doc


def hf_dict(desc: assembly.HFDescription) -> dict:
    wells = list(desc.wells)
    return {
        "class": class_dict(desc.spinc_class),
        "tower": ({"bottom_grading": desc.tower.bottom_grading}
                  if desc.tower else None),
        "omegas": [{"genus": t.genus, "index": t.index, "grading": t.grading,
                    "position": half_str(t.position2)}
                   for t in desc.omega_summands],
        "wells": [well_dict(w) for w in wells],
        "u_incidence": [[well_dict(img) for img in desc.u_incidence[w]]
                        for w in wells],
        "well_depths": [desc.well_depths[w] for w in wells],
        "t_shift": {"period": desc.t_shift[0],
                    "height_delta": desc.t_shift[1]},
        "split_over_ZU": desc.split_over_ZU,
        "coefficient_ring": desc.coefficient_ring_tag,
    }


def _cmd_info(args) -> int:
    inp, summary = load_input(args.input)
    report = base_report(inp)
    report.update({"d": summary.order_d, "g_sigma": summary.fiber_genus,
                   "num_fibers": summary.num_fibers})
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_spinc(args) -> int:
    inp, summary = load_input(args.input)
    report = base_report(inp)
    if args.A is not None:
        label = spinc.parse_label(args.A, summary)
        report["class"] = class_dict(spinc.canonicalize(summary, label))
    elif args.epsilon is not None:
        classes = spinc.enumerate_classes_at_level(summary, args.epsilon)
        report["level"] = args.epsilon
        report["classes"] = [class_dict(c) for c in classes]
    else:
        raise ParseError("spinc needs --A or --epsilon")
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK


def _profile_for(args, summary) -> tuple:
    if args.A is None:
        raise ParseError("this command needs --A")
    label = spinc.parse_label(args.A, summary)
    cls = spinc.canonicalize(summary, label)
    return cls, build_profile(summary, cls)


def _cmd_profile(args) -> int:
    inp, summary = load_input(args.input)
    cls, profile = _profile_for(args, summary)
    report = base_report(inp)
    bound = least_even_upper_bound(profile)
    report.update({
        "class": class_dict(cls),
        "period": profile.period,
        "eta_period": list(profile.eta_period),
        "spike": profile.spike,
        "slope": q_str(profile.slope),
        "height_delta": profile.height_delta,
        "anchor": profile.anchor,
        "least_even_upper_bound": bound if bound is not None else "infinity",
    })
    if args.window:
        window = parse_window(args.window)
        report["values"] = [{"x": half_str(x2), "F": profile.evaluate2(x2)}
                            for x2 in range(2 * window[0], 2 * window[1] + 1)]
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_wells(args) -> int:
    inp, summary = load_input(args.input)
    cls, profile = _profile_for(args, summary)
    window = parse_window(args.window) if args.window else (0, 2 * profile.period)
    group = well_group(profile, window)
    matrix = {}
    try:
        action = u_action(group)
        matrix = {str(w): [well_dict(img) for img in images]
                  for w, images in action.items()}
        boundary_safe = True
    except MtfloerError:
        boundary_safe = False
    report = base_report(inp)
    report.update({
        "class": class_dict(cls),
        "window": list(window),
        "wells": [well_dict(w, group.flagged) for w in group.wells],
        "u_incidence": matrix,
        "u_boundary_safe": boundary_safe,
        "t_shift": dict(zip(("period", "height_delta"), t_action(profile))),
    })
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_hf(args) -> int:
    inp, summary = load_input(args.input)
    cls, _ = _profile_for(args, summary)
    report = base_report(inp)
    report["hf"] = hf_dict(assembly.assemble_hf(summary, cls))
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_level(args) -> int:
    inp, summary = load_input(args.input)
    if args.epsilon is None:
        raise ParseError("level needs --epsilon")
    agg = assembly.aggregate_level(summary, args.epsilon)
    report = base_report(inp)
    report.update({
        "level": agg.level,
        "classes": [hf_dict(d) for d in agg.classes],
        "totals": {"a_rank": agg.totals.a_rank,
                   "b_counts": {str(k): v
                                for k, v in agg.totals.b_counts.items()}},
        "formula": {"a_rank": agg.formula.a_rank,
                    "b_counts": {str(k): v
                                 for k, v in agg.formula.b_counts.items()},
                    "a_applies": agg.formula_a_applies},
        "annotations": list(agg.annotations),
    })
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_lefschetz(args) -> int:
    inp, summary = load_input(args.input)
    if args.power is None:
        raise ParseError("lefschetz needs --power")
    report = base_report(inp)
    report.update({"power": args.power,
                   "value": counting.lefschetz(summary, args.power)})
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    inp, summary = load_input(args.input)
    cls, _ = _profile_for(args, summary)
    report_obj = compare_with_closed_form(
        summary, cls, periods=args.periods, u_cutoff=args.delta)
    report = base_report(inp)
    report.update({
        "class": class_dict(cls),
        "eta_period": list(report_obj.eta_period),
        "page_window": list(report_obj.page_window),
        "delta": report_obj.u_cutoff,
        "certified_band": list(report_obj.band),
        "levels": list(report_obj.rows),
        "all_match": report_obj.all_match,
    })
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK if report_obj.all_match else EXIT_ORACLE_MISMATCH


def _cmd_plot(args) -> int:
    inp, summary = load_input(args.input)
    _, profile = _profile_for(args, summary)
    window = parse_window(args.window) if args.window else (0, 2 * profile.period)
    if args.format == "ascii":
        text = render.ascii_plot(profile, window)
    elif args.format == "svg":
        text = render.svg_plot(profile, window)
    elif args.format == "png":
        if not args.out:
            raise ParseError("png output needs --out FILE")
        render.png_plot(profile, window, args.out)
        return EXIT_OK
    else:
        raise ParseError(f"unknown plot format {args.format!r}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")
    return EXIT_OK


def _cmd_regress(args) -> int:
    results = run_all()
    report = {"version": __version__,
              "fixtures": results,
              "all_pass": all(r["pass"] for r in results)}
    print(json.dumps(report, indent=2, sort_keys=True))
    if args.report_dir:
        _write_regress_report(args.report_dir, results)
    return EXIT_OK if report["all_pass"] else EXIT_REGRESSION_FAILURE


def _write_regress_report(directory: str, results: list[dict]) -> None:
    """Delimited verdict table plus one profile figure per base genus."""
    from .fixtures import base_input

    os.makedirs(directory, exist_ok=True)
    with open(os.path.join(directory, "fixtures.csv"), "w",
              encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["fixture", "pass", "detail"])
        for row in results:
            writer.writerow([row["name"], row["pass"], row["detail"]])
    for genus in (0, 1, 2):
        summary = validate_and_derive(base_input(genus))
        cls = spinc.enumerate_classes_at_level(
            summary, 14 * genus if genus else 0)[0]
        profile = build_profile(summary, cls)
        render.png_plot(profile, (0, 2 * profile.period),
                        os.path.join(directory, f"profile_g{genus}.png"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mtfloer",
        description="Twisted Floer homology of periodic mapping tori "
                    "from Seifert data.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, needs_input=True, **kwargs):
        p = sub.add_parser(name, **kwargs)
        if needs_input:
            p.add_argument("input", help="JSON input document")
        p.set_defaults(fn=fn)
        return p

    add("info", _cmd_info, help="derived invariants d and fiber genus")

    p = add("spinc", _cmd_spinc, help="canonicalize a label or list a level")
    p.add_argument("--A", help='label "Q;r1,...,rn"')
    p.add_argument("--epsilon", type=int)

    p = add("profile", _cmd_profile, help="grading profile of a class")
    p.add_argument("--A", required=True)
    p.add_argument("--window")

    p = add("wells", _cmd_wells, help="wells and U incidence over a window")
    p.add_argument("--A", required=True)
    p.add_argument("--window")

    p = add("hf", _cmd_hf, help="full description for one class")
    p.add_argument("--A", required=True)

    p = add("level", _cmd_level, help="aggregate over one level")
    p.add_argument("--epsilon", type=int, required=True)

    p = add("lefschetz", _cmd_lefschetz, help="fixed points of a power")
    p.add_argument("--power", type=int, required=True)

    p = add("oracle", _cmd_oracle, help="chain-complex check of a class")
    p.add_argument("--A", required=True)
    p.add_argument("--periods", type=int, default=3)
    p.add_argument("--delta", type=int, default=None)

    p = add("plot", _cmd_plot, help="render the profile staircase")
    p.add_argument("--A", required=True)
    p.add_argument("--window")
    p.add_argument("--format", choices=("svg", "ascii", "png"),
                   default="ascii")
    p.add_argument("--out")

    p = add("regress", _cmd_regress, needs_input=False,
            help="run the golden regression fixtures")
    p.add_argument("--report-dir",
                   help="write fixtures.csv and profile figures here")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except MtfloerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
