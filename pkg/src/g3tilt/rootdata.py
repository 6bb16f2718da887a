"""Weight lattice, bilinear form and root data of G(3).

Weights are written ``d*delta + a*omega_1 + b*omega_2`` and stored as the
integer triple ``(d2, a, b)`` with ``d = d2/2``.  The fundamental weights of
G_2 relate to the epsilon basis by ``eps_1 = 2*omega_2 - omega_1`` and
``eps_2 = omega_1 - omega_2`` (with ``eps_1 + eps_2 + eps_3 = 0``).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

__all__ = [
    "Weight", "Root", "ROOTS", "POSITIVE_ROOTS", "EVEN_CIRCLE", "EVEN_2DELTA",
    "ODD_ISOTROPIC", "ODD_DELTA", "SIMPLE_ROOTS",
    "bilinear_form", "coroot_pairing", "rho", "adjoint_weights", "root",
    "from_eps", "height",
]


@dataclass(frozen=True, order=True)
class Weight:
    d2: int
    a: int
    b: int

    @property
    def d(self) -> Fraction:
        return Fraction(self.d2, 2)

    def eps(self) -> tuple[int, int]:
        """Coefficients ``(c1, c2)`` of ``c1*eps_1 + c2*eps_2``."""
        return self.a + self.b, 2 * self.a + self.b

    def __add__(self, other: Weight) -> Weight:
        return Weight(self.d2 + other.d2, self.a + other.a, self.b + other.b)

    def __sub__(self, other: Weight) -> Weight:
        return Weight(self.d2 - other.d2, self.a - other.a, self.b - other.b)

    def __neg__(self) -> Weight:
        return Weight(-self.d2, -self.a, -self.b)

    def scale(self, c: int) -> Weight:
        return Weight(c * self.d2, c * self.a, c * self.b)


def from_eps(d2: int, c1: int, c2: int) -> Weight:
    """The weight ``(d2/2)*delta + c1*eps_1 + c2*eps_2``."""
    return Weight(d2, c2 - c1, 2 * c1 - c2)


def bilinear_form(u: Weight, v: Weight) -> Fraction:
    """``(delta, delta) = -2``, ``(eps_i, eps_i) = 2``, ``(eps_i, eps_j) = -1``."""
    u1, u2 = u.eps()
    v1, v2 = v.eps()
    g2 = 2 * u1 * v1 + 2 * u2 * v2 - u1 * v2 - u2 * v1
    return Fraction(-u.d2 * v.d2, 2) + g2


class Root(NamedTuple):
    name: str
    weight: Weight
    parity: str  # "even" | "odd"
    kind: str  # "circle", "2delta", "isotropic", "delta"
    height: int


# (name, d2, c1, c2, kind, height) -- heights as tabulated for the simple
# system eps_2 - eps_1, eps_1, delta + eps_3.
_TABLE = [
    ("d+e3", 2, -1, -1, "isotropic", 1),
    ("e1", 0, 1, 0, "circle", 1),
    ("e2-e1", 0, -1, 1, "circle", 1),
    ("d-e2", 2, 0, -1, "isotropic", 2),
    ("e2", 0, 0, 1, "circle", 2),
    ("d-e1", 2, -1, 0, "isotropic", 3),
    ("-e3", 0, 1, 1, "circle", 3),
    ("d", 2, 0, 0, "delta", 4),
    ("e1-e3", 0, 2, 1, "circle", 4),
    ("d+e1", 2, 1, 0, "isotropic", 5),
    ("e2-e3", 0, 1, 2, "circle", 5),
    ("d+e2", 2, 0, 1, "isotropic", 6),
    ("d-e3", 2, 1, 1, "isotropic", 7),
    ("2d", 4, 0, 0, "2delta", 8),
]

POSITIVE_ROOTS: tuple[Root, ...] = tuple(
    Root(name, from_eps(d2, c1, c2),
         "odd" if kind in ("isotropic", "delta") else "even", kind, ht)
    for name, d2, c1, c2, kind, ht in _TABLE
)
ROOTS = {r.name: r for r in POSITIVE_ROOTS}
EVEN_CIRCLE = tuple(r for r in POSITIVE_ROOTS if r.kind == "circle")
EVEN_2DELTA = ROOTS["2d"]
ODD_ISOTROPIC = tuple(r for r in POSITIVE_ROOTS if r.kind == "isotropic")
ODD_DELTA = ROOTS["d"]
EVEN_POSITIVE = EVEN_CIRCLE + (EVEN_2DELTA,)
SIMPLE_ROOTS = (ROOTS["e2-e1"], ROOTS["e1"], ROOTS["d+e3"])


def root(name: str) -> Weight:
    """Parse a signed root-lattice expression such as ``"d-e3"`` or ``"e2-e3"``.

    Atoms are ``d`` (delta), ``e1``, ``e2``, ``e3`` with optional integer
    coefficients: ``"2d"``, ``"-e3"``, ``"d+e1"``.
    """
    s = name.replace(" ", "")
    if not s:
        raise ValueError("empty root expression")
    if s[0] not in "+-":
        s = "+" + s
    total = Weight(0, 0, 0)
    pos = 0
    for m in re.finditer(r"([+-])(\d*)(d|e1|e2|e3)", s):
        if m.start() != pos:
            raise ValueError(f"cannot parse root expression {name!r}")
        pos = m.end()
        c = int(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
        atom = {"d": from_eps(2, 0, 0), "e1": from_eps(0, 1, 0),
                "e2": from_eps(0, 0, 1), "e3": from_eps(0, -1, -1)}[m.group(3)]
        total = total + atom.scale(c)
    if pos != len(s):
        raise ValueError(f"cannot parse root expression {name!r}")
    return total


def coroot_pairing(lam: Weight, alpha: Weight) -> Fraction:
    """``<lam, alpha^vee> = 2(lam, alpha)/(alpha, alpha)``; isotropic alpha is rejected."""
    aa = bilinear_form(alpha, alpha)
    if aa == 0:
        raise ValueError("coroot pairing undefined for an isotropic root")
    return 2 * bilinear_form(lam, alpha) / aa


def rho() -> Weight:
    """The Weyl vector ``-(5/2) delta + 2 eps_1 + 3 eps_2``."""
    return Weight(-5, 1, 1)


def height(w: Weight) -> int:
    """Height with respect to the simple system, for any element of the root lattice."""
    # delta enters only through alpha_3 = delta + eps_3
    if w.d2 % 2:
        raise ValueError("not in the root lattice")
    c3 = w.d2 // 2
    rest = w - SIMPLE_ROOTS[2].weight.scale(c3)
    r1, r2 = rest.eps()
    # rest = c1*(eps_2 - eps_1) + c2*eps_1
    c1 = r2
    c2 = r1 + r2
    return c1 + c2 + c3


def _adjoint() -> Counter:
    mult: Counter = Counter()
    for r in POSITIVE_ROOTS:
        mult[r.weight] += 1
        mult[-r.weight] += 1
    mult[Weight(0, 0, 0)] += 3
    return mult


_ADJOINT = _adjoint()


def adjoint_weights() -> Counter:
    """Weights of the 31-dimensional adjoint module (28 roots, zero with multiplicity 3)."""
    return Counter(_ADJOINT)
