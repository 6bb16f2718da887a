"""Symbols ``[d | x, y, z]`` of rho-shifted weights.

A symbol records the delta-coefficient of a weight together with its three
eps-projections; all four coordinates are stored doubled so that every
value is an integer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .rootdata import ODD_ISOTROPIC, Root, Weight

__all__ = ["Symbol", "to_symbol", "to_weight", "atypicality", "form", "parse_symbol"]


@dataclass(frozen=True, order=True)
class Symbol:
    d2: int
    x2: int
    y2: int
    z2: int

    def __post_init__(self):
        if self.x2 + self.y2 + self.z2 != 0:
            raise ValueError(f"coordinates of {self.as_tuple()} do not sum to zero")
        if (self.y2 - self.x2) % 3:
            raise ValueError(f"3 does not divide 2(y - x) in {self.as_tuple()}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.d2, self.x2, self.y2, self.z2)

    @property
    def rho_shifted(self) -> bool:
        return self.d2 % 2 == 1

    def __add__(self, other: Symbol) -> Symbol:
        return Symbol(self.d2 + other.d2, self.x2 + other.x2,
                      self.y2 + other.y2, self.z2 + other.z2)

    def __sub__(self, other: Symbol) -> Symbol:
        return Symbol(self.d2 - other.d2, self.x2 - other.x2,
                      self.y2 - other.y2, self.z2 - other.z2)

    def __neg__(self) -> Symbol:
        return Symbol(-self.d2, -self.x2, -self.y2, -self.z2)

    def __str__(self) -> str:
        d, x, y, z = (_half(v) for v in self.as_tuple())
        return f"[{d} | {x}, {y}, {z}]"

    def __repr__(self) -> str:
        return f"Symbol{str(self)}"


def _half(v: int) -> str:
    return str(Fraction(v, 2))


def to_symbol(lam: Weight) -> Symbol:
    """``d*delta + a*w1 + b*w2  ->  [d | b/2, (3a+b)/2, -(3a+2b)/2]``."""
    return Symbol(lam.d2, lam.b, 3 * lam.a + lam.b, -(3 * lam.a + 2 * lam.b))


def to_weight(s: Symbol) -> Weight:
    """Inverse of :func:`to_symbol`: ``d*delta + (2/3)(y-x)*w1 + 2x*w2``."""
    if s.x2 + s.y2 + s.z2 != 0 or (s.y2 - s.x2) % 3:
        raise ValueError(f"{s} is not a valid symbol")
    return Weight(s.d2, (s.y2 - s.x2) // 3, s.x2)


def form(s: Symbol, t: Symbol) -> Fraction:
    """The bilinear form computed directly on symbols."""
    return (Fraction(-s.d2 * t.d2, 2)
            + Fraction(s.x2 * t.x2 + s.y2 * t.y2 + s.z2 * t.z2, 3))


def atypicality(s: Symbol) -> list[Root]:
    """Odd isotropic positive roots orthogonal to ``s``; empty iff ``s`` is typical.

    Uses the coordinate test ``d = +-x, +-y, +-z`` and confirms each hit
    against the bilinear form.
    """
    out = []
    for r in ODD_ISOTROPIC:
        g = to_symbol(r.weight)
        # g = [1 | ...] with a single coordinate of size 1 carrying the sign
        i, sign = next((i, 1 if c > 0 else -1)
                       for i, c in enumerate((g.x2, g.y2, g.z2)) if abs(c) == 2)
        coord = (s.x2, s.y2, s.z2)[i]
        if s.d2 == sign * coord:
            if form(s, g) != 0:
                raise AssertionError(f"coordinate test disagrees with the form for {s}, {r.name}")
            out.append(r)
    return out


_NUM = r"\s*(-?\d+(?:/\d+)?)\s*"
_SYMBOL_RE = re.compile(r"^\s*\[" + _NUM + r"\|" + _NUM + "," + _NUM + "," + _NUM + r"\]\s*$")


def parse_symbol(text: str) -> Symbol:
    """Parse ``"[-3/2 | 0, -3/2, 3/2]"`` (spacing optional)."""
    m = _SYMBOL_RE.match(text)
    if not m:
        raise ValueError(f"malformed symbol {text!r}")
    vals = []
    for g in m.groups():
        v = Fraction(g) * 2
        if v.denominator != 1:
            raise ValueError(f"coordinate {g} of {text!r} is not a half-integer")
        vals.append(int(v))
    return Symbol(*vals)
