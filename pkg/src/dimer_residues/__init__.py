"""Exact B_n for the 2n x 2n dimer problem (A_n = 2**n * B_n**2) and the
residue classes of B_n modulo powers of two."""

from .engine import (
    DimerRecord,
    RecordCache,
    b_counting,
    b_discriminant,
    b_symmetric,
    compute_range,
    compute_record,
)
from .polynomial import IntPoly, discriminant, integer_sqrt_exact, resultant
from .residues import theorem_a_predict, theorem_b_predict, verify

__version__ = "0.1.0"

__all__ = [
    "DimerRecord",
    "RecordCache",
    "IntPoly",
    "b_counting",
    "b_discriminant",
    "b_symmetric",
    "compute_range",
    "compute_record",
    "discriminant",
    "integer_sqrt_exact",
    "resultant",
    "theorem_a_predict",
    "theorem_b_predict",
    "verify",
]
