"""Construction and verification of [1,0]-twisted generalized Reed-Solomon codes."""

from .errors import TgrsError
from .galois import FieldElement, FieldSpec, field_of_order, make_field, parse_field_spec
from .lincode import LinearCode, PermScale, WeightDistribution
from .matgf import MatrixGF
from .tgrs import Classification, TgrsParams, TwistedPolynomial

__all__ = [
    "Classification",
    "FieldElement",
    "FieldSpec",
    "LinearCode",
    "MatrixGF",
    "PermScale",
    "TgrsError",
    "TgrsParams",
    "TwistedPolynomial",
    "WeightDistribution",
    "field_of_order",
    "make_field",
    "parse_field_spec",
]

__version__ = "0.1.0"
