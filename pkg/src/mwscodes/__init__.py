"""Maximum weight spectrum (MWS) linear codes over GF(q).

Constructions, exact verification by codeword enumeration and by
hyperplane characters, length bounds, and file formats.
"""
from .code import (
    LinearCode,
    RepetitionVector,
    code_from_system,
    distribution,
    is_mws,
    mws_via_characters,
    property_A,
    property_B,
    repetition_code,
    system_from_code,
    weight,
    weight_set,
)
from .gf import FieldElement, FieldSpec, make_field
from .pg import ProjectiveSystem, character, enumerate_hyperplanes, enumerate_points, spans, theta

__version__ = "0.1.0"
