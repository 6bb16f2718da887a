"""Exact combinatorics of category O for the Lie superalgebra G(3).

Symbols, the Weyl group ``A1 x W2``, block classification, translation
functors on Verma-flag characters, the tilting/projective/composition
tables, and checks that tie them together.
"""

from .blocks import Atypical, AtypicalLabel, Typical, casimir, classify, f, label
from .charlib import Unknown, VermaChar, tensor_adjoint, translate
from .formulas import (
    bgg_convert, jordan_holder, projective, soergel_transform, tilting,
)
from .jantzen import find_flag_witness, jantzen_rhs
from .symbols import Symbol, parse_symbol
from .weyl import W_ELEMENTS, WeylElt, act, parse_word

__all__ = [
    "Atypical", "AtypicalLabel", "Typical", "casimir", "classify", "f", "label",
    "Unknown", "VermaChar", "tensor_adjoint", "translate",
    "bgg_convert", "jordan_holder", "projective", "soergel_transform", "tilting",
    "find_flag_witness", "jantzen_rhs", "Symbol", "parse_symbol",
    "W_ELEMENTS", "WeylElt", "act", "parse_word",
]
