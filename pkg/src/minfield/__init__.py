"""Minimal-field rewriting of absolutely irreducible matrix
representations over finite fields, and construction of all absolutely
irreducible representations of finite soluble groups from
power-conjugate presentations."""

from .core import BACKEND
from .descent import DescentCertificate, descend, minimal_field
from .errors import MinFieldError
from .gf import FieldDesc, field_create
from .irrbuild import IrrepTable, irreps
from .matgf import MatrixGF
from .pcgroup import PcPresentation, parse_pc
from .rep import Representation, character_field, find_intertwiner

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DescentCertificate",
    "FieldDesc",
    "IrrepTable",
    "MatrixGF",
    "MinFieldError",
    "PcPresentation",
    "Representation",
    "character_field",
    "descend",
    "field_create",
    "find_intertwiner",
    "irreps",
    "minimal_field",
    "parse_pc",
    "__version__",
]
