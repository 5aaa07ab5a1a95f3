"""Homometric binary bracelets with five black beads.

Exact classification, enumeration and counting of nontrivial homometry
classes, the difference-table machinery behind the classification, and
cross-checks against an exhaustive oracle.
"""

from __future__ import annotations

from .bracelets import BinaryBracelet, PointConfig, are_homometric, brute_force_classes, distance_multiset, long_count
from .classification import ClassType, HomometryClass, classes_for_n, index_set, lookup_type
from .counting import THEOREM_GF, h_coefficient, refined_counts

__version__ = "0.1.0"

__all__ = [
    "BinaryBracelet",
    "ClassType",
    "HomometryClass",
    "PointConfig",
    "THEOREM_GF",
    "are_homometric",
    "brute_force_classes",
    "classes_for_n",
    "distance_multiset",
    "h_coefficient",
    "index_set",
    "long_count",
    "lookup_type",
    "refined_counts",
]
