"""Compact directed acyclic word graphs and their sensitivity to left-end edits."""

from .cdawg import (
    Cdawg,
    build_fast,
    build_naive,
    canonical_equal,
    export_dot,
    export_json,
    size,
    spell_check,
)
from .churn import ChurnReport, churn_quadratic_check, fit_churn_exponent, leftward_run
from .families import FamilySpec, family_row, generate, verify_family
from .sensitivity import DeltaReport, EditOp, apply_left_edit, check_lemma, delta, sweep
from .strings import Text, maximal_repeats, maximal_set

__all__ = [
    "Cdawg",
    "ChurnReport",
    "FamilySpec",
    "DeltaReport",
    "EditOp",
    "Text",
    "apply_left_edit",
    "build_fast",
    "build_naive",
    "canonical_equal",
    "check_lemma",
    "churn_quadratic_check",
    "delta",
    "export_dot",
    "export_json",
    "family_row",
    "fit_churn_exponent",
    "generate",
    "leftward_run",
    "maximal_repeats",
    "maximal_set",
    "size",
    "spell_check",
    "sweep",
    "verify_family",
]
