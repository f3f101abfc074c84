"""Signed groups in the double-logic encoding, with the mod-2 matrix tools for replacing their generators."""

from .dyadic_core import BitMatrix, BitVec
from .errors import SignedAlgebraError
from .signed_group import Generator, GroupElement, mul, signature, commutator_sign

__version__ = "0.1.0"

__all__ = [
    "BitMatrix", "BitVec", "Generator", "GroupElement", "SignedAlgebraError",
    "commutator_sign", "mul", "signature",
]
