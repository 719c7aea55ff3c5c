"""Exact combinatorics for extended crystals over B(infinity) in finite type A.

The package provides the multisegment model of B(infinity), the generic
extended-crystal operators on finitely supported slot tuples, the direct
signature-rule model on affine highest weights together with the bijection
between the two, and the closed-form pairing invariants.  All arithmetic is
exact integer arithmetic.
"""

from .rootdata import CartanA, RootLattice, RootLatticeElem
from .msegment import Multisegment, MultisegmentCrystal, Segment
from .extended import ExtElement, ExtendedCrystal
from .affine import AffineModel, HLNode, HLWeight
from .sl2 import Sl2Crystal

__version__ = "0.1.0"

__all__ = [
    "AffineModel",
    "CartanA",
    "ExtElement",
    "ExtendedCrystal",
    "HLNode",
    "HLWeight",
    "Multisegment",
    "MultisegmentCrystal",
    "RootLattice",
    "RootLatticeElem",
    "Segment",
    "Sl2Crystal",
]
