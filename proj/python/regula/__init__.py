"""p-regular class counts and structural subgroups of permutation groups."""

import json
from fractions import Fraction

from ._regula import (
    CapExceeded,
    Group,
    NotNormal,
    ParseError,
    RegulaError,
    UnknownName,
    __version__,
    bound,
    canonical,
    class_counts,
    core,
    coxeter_number,
    derived_length,
    fitting,
    from_cycles,
    fused_counts,
    group,
    known_group_names,
    prime_family,
    psl2_candidate_scan,
    quotient,
    singular_element_count,
    suite_names,
    zsigmondy_primes,
)
from . import _regula

__all__ = [
    "CapExceeded",
    "Group",
    "NotNormal",
    "ParseError",
    "RegulaError",
    "UnknownName",
    "bound",
    "canonical",
    "class_counts",
    "conjugacy_classes",
    "core",
    "coxeter_number",
    "derived_length",
    "fitting",
    "from_cycles",
    "fused_counts",
    "group",
    "known_group_names",
    "landau_quantity",
    "prime_family",
    "psl2_candidate_scan",
    "quotient",
    "run_suite",
    "singular_element_count",
    "suite_names",
    "zsigmondy_primes",
]


def _as_group(g):
    return group(g) if isinstance(g, str) else g


def conjugacy_classes(g, descriptor=None):
    """Class table as a dict: group, order, class_count, classes (sorted by order, size, representative)."""
    if isinstance(g, str):
        descriptor = descriptor or canonical(g)
    return json.loads(_regula._classes_json(_as_group(g), descriptor or ""))


def landau_quantity(r, a, p):
    num, den = _regula.landau_quantity(r, a, p)
    return Fraction(num, den)


def run_suite(name):
    """Returns (report dict, ok)."""
    text, ok = _regula._run_suite_json(name)
    return json.loads(text), ok
