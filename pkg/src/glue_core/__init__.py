"""
Labeling schemes of fundamental polygons and the surfaces they define.
"""

from .classify import (
    GluedComplex,
    SurfaceType,
    classify,
    euler_characteristic,
    is_orientable,
    standard_scheme,
    surface_name,
)
from .exceptions import GluingError, SchemeError
from .scheme import Scheme, Side, flip, format_scheme, glue, parse_scheme, permute, relabel
from .symmetry import (
    Symmetry,
    SymmetryGroup,
    apply_symmetry,
    canonical_form,
    full_dihedral,
    schemes_equivalent,
)
from .vertices import boundary_components, vertex_labeling

__version__ = "0.1.0"

__all__ = [
    "GluedComplex",
    "GluingError",
    "Scheme",
    "SchemeError",
    "Side",
    "SurfaceType",
    "Symmetry",
    "SymmetryGroup",
    "apply_symmetry",
    "boundary_components",
    "canonical_form",
    "classify",
    "euler_characteristic",
    "flip",
    "format_scheme",
    "full_dihedral",
    "glue",
    "is_orientable",
    "parse_scheme",
    "permute",
    "relabel",
    "schemes_equivalent",
    "standard_scheme",
    "surface_name",
    "vertex_labeling",
]
