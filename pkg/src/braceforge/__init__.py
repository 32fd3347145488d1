"""Skew braces of order p^2*q with abelian additive group.

Enumerate conjugacy classes of regular subgroups of the holomorph of either
abelian carrier, build one verified brace per class from closed-form
constructors, and derive checked set-theoretic Yang-Baxter solutions.
"""

from .algebra import Kind, group_spec
from .brace import brace_from_regular, brace_invariants, verify_left_brace
from .cases import CongruenceCase, PrimePair, classify_case, derive_params
from .catalog import catalog_for_case
from .regular import (
    orbit_partition,
    regular_subgroups_oracle,
    regular_subgroups_structured,
    tabulate,
)
from .ybe import solution_from_brace, solution_properties, verify_ybe

__version__ = "0.1.0"

__all__ = [
    "CongruenceCase",
    "Kind",
    "PrimePair",
    "brace_from_regular",
    "brace_invariants",
    "catalog_for_case",
    "classify_case",
    "derive_params",
    "group_spec",
    "orbit_partition",
    "regular_subgroups_oracle",
    "regular_subgroups_structured",
    "solution_from_brace",
    "solution_properties",
    "tabulate",
    "verify_left_brace",
    "verify_ybe",
    "__version__",
]
