"""Twisted Floer homology of mapping tori of periodic surface
diffeomorphisms, computed in closed form from Seifert data and
cross-validated by an exact GF(2) chain-complex oracle."""

__version__ = "0.1.0"

from .assembly import HFDescription, LevelSummary, aggregate_level, assemble_hf
from .counting import (CountTable, count_N, lefschetz, rank_table,
                       theorem_rank_level_two)
from .errors import MtfloerError
from .gradings import (GradingProfile, build_profile, eta, evaluate,
                       least_even_upper_bound, profile_from_eta)
from .seifert import SeifertInput, SeifertSummary, validate_and_derive
from .spinc import (SpincClass, SpincLabel, canonicalize,
                    enumerate_classes_at_level, epsilon, parse_label,
                    same_class, sl)
from .wells import (Well, all_wells_at_height, per_period_wells, t_action,
                    u_images, well_depth, wells_at_height)

__all__ = [
    "__version__",
    "CountTable", "GradingProfile", "HFDescription", "LevelSummary",
    "MtfloerError", "SeifertInput", "SeifertSummary", "SpincClass",
    "SpincLabel", "Well",
    "aggregate_level", "all_wells_at_height", "assemble_hf",
    "build_profile", "canonicalize", "count_N",
    "enumerate_classes_at_level", "epsilon", "eta", "evaluate",
    "least_even_upper_bound", "lefschetz", "parse_label",
    "per_period_wells", "profile_from_eta", "rank_table", "same_class",
    "sl", "t_action", "theorem_rank_level_two", "u_images",
    "validate_and_derive", "well_depth", "wells_at_height",
]
