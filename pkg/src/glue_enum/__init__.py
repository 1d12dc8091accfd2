"""
Enumeration of edge gluings of polygons assembled from quadrilaterals.
"""

from .configurations import Configuration, generate_configurations
from .gluings import GluingClass, count_distinct, enumerate_gluings, raw_gluings
from .reference import ReferenceTables, compare_with_reference
from .report import EnumerationReport, Representative, ReportRow, tabulate

__all__ = [
    "Configuration",
    "EnumerationReport",
    "GluingClass",
    "ReferenceTables",
    "ReportRow",
    "Representative",
    "compare_with_reference",
    "count_distinct",
    "enumerate_gluings",
    "generate_configurations",
    "raw_gluings",
    "tabulate",
]
