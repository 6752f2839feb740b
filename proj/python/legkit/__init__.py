"""Python access to the legkit core. Fronts and trees travel as their text formats."""

import json
from fractions import Fraction

from . import _legkit
from ._legkit import (
    LegkitError,
    catalog_front,
    catalog_tree,
    complement_torus_data,
    exceptional_member,
    exceptional_take,
    expected_invariants,
    foliate,
    hopf_after_lutz,
    hopf_after_lutz_front,
    in_unknot_range,
    insert_zigzag,
    invariants,
    linking_matrix,
    normalize_text,
    normalize_tree,
    numeric_check,
    render_ascii,
    render_svg,
    tree_to_front,
)


def classify_tight_unknot(a, b):
    return json.loads(_legkit.classify_tight_unknot_json(tuple(a), tuple(b)))


def d3_from_hopf(h):
    num, den = _legkit.d3_from_hopf(h)
    return Fraction(num, den)


__all__ = [
    "LegkitError",
    "catalog_front",
    "catalog_tree",
    "classify_tight_unknot",
    "complement_torus_data",
    "d3_from_hopf",
    "exceptional_member",
    "exceptional_take",
    "expected_invariants",
    "foliate",
    "hopf_after_lutz",
    "hopf_after_lutz_front",
    "in_unknot_range",
    "insert_zigzag",
    "invariants",
    "linking_matrix",
    "normalize_text",
    "normalize_tree",
    "numeric_check",
    "render_ascii",
    "render_svg",
    "tree_to_front",
]
