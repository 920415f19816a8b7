"""Graded polynomial identities with involution on upper triangular matrices."""

import json

from . import _core
from ._core import BudgetExceeded, GradstarError, ParseError

__all__ = [
    "BudgetExceeded",
    "GradstarError",
    "ParseError",
    "finest",
    "ut3_z2",
    "codimension",
    "is_identity",
    "verify_identities",
    "count_good",
    "closed_count_top",
    "derived_count_top",
    "default_budget",
]


def finest(m, involution="reflection"):
    """Descriptor dict of UT_m with its finest grading."""
    return json.loads(_core.finest_descriptor(m, involution))


def ut3_z2():
    """Descriptor dict of UT_3 graded by Z_2 with tuple (0, 1, 0)."""
    return json.loads(_core.ut3_z2_descriptor())


def _dump(algebra):
    return algebra if isinstance(algebra, str) else json.dumps(algebra)


def codimension(algebra, n, model="symskew", budget=None, workers=1):
    """Full codimension report; ``report["total"]`` is always an int."""
    report = json.loads(_core.codimension(_dump(algebra), n, model, budget, workers))
    report["total"] = int(report["total"])
    return report


def is_identity(poly, algebra):
    return _core.is_identity(poly, _dump(algebra))


def verify_identities(set_name, m=3):
    """List of (label, holds) pairs for a named identity set."""
    return _core.verify_identities(set_name, m)


count_good = _core.count_good
closed_count_top = _core.closed_count_top
derived_count_top = _core.derived_count_top
default_budget = _core.default_budget
