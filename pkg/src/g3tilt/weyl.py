"""The Weyl group ``W = A1 x W2`` of order 24 and its action on symbols.

``W2`` (dihedral of order 12) is generated by ``s1``: ``(x, y, z) -> (y, x, z)``
and ``s2``: ``(x, y, z) -> (-x, -z, -y)``; ``s0`` generates ``A1`` and flips
the sign of ``d``.  Words are read as products, so ``"12"`` is ``s1 s2`` and
acts by ``s2`` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable

from .symbols import Symbol

__all__ = [
    "Dihedral", "WeylElt", "E", "S0", "S1", "S2", "W0", "W2_ELEMENTS", "W_ELEMENTS",
    "act", "bruhat_leq", "bruhat_leq_subword", "interval", "upper_interval",
    "coset_mod", "coset_rep", "min_coset_rep", "parse_word", "is_antidominant",
    "stabilizer",
]

# signed permutation (perm, sign): out[i] = sign * in[perm[i]]
_GEN = {1: ((1, 0, 2), 1), 2: ((0, 2, 1), -1)}


def _compose(p, q):
    """The signed permutation 'apply q, then p'."""
    (pp, ps), (qp, qs) = p, q
    return tuple(qp[pp[i]] for i in range(3)), ps * qs


def _alternating(length: int, first: int) -> tuple[int, ...]:
    other = 3 - first
    return tuple(first if i % 2 == 0 else other for i in range(length))


@dataclass(frozen=True, order=True)
class Dihedral:
    """Element of ``W2`` in normal form: an alternating word of given length and first letter.

    ``first`` is 0 for the identity and for the longest element.
    """

    length: int
    first: int = 0

    def __post_init__(self):
        if not 0 <= self.length <= 6:
            raise ValueError("length out of range 0..6")
        if self.length in (0, 6):
            if self.first != 0:
                object.__setattr__(self, "first", 0)
        elif self.first not in (1, 2):
            raise ValueError("first letter must be 1 or 2")

    @property
    def word(self) -> tuple[int, ...]:
        return _alternating(self.length, self.first or 1)

    @property
    def last(self) -> int:
        """Last letter of the reduced word (0 for e; ambiguous for w0, reported as 0)."""
        if self.length in (0, 6):
            return 0
        return self.word[-1]

    def __str__(self) -> str:
        if self.length == 0:
            return "e"
        if self.length == 6:
            return "w0"
        return "".join(map(str, self.word))


def _signed_perm(w: Dihedral):
    acc = ((0, 1, 2), 1)
    for letter in w.word:
        acc = _compose(acc, _GEN[letter])
    return acc


W2_ELEMENTS: tuple[Dihedral, ...] = tuple(
    [Dihedral(0)]
    + [Dihedral(n, f) for n in range(1, 6) for f in (1, 2)]
    + [Dihedral(6)]
)
_PERM = {w: _signed_perm(w) for w in W2_ELEMENTS}
_BY_PERM = {p: w for w, p in _PERM.items()}
if len(_BY_PERM) != 12 or _signed_perm(Dihedral(6)) != _compose(
        _signed_perm(Dihedral(5, 2)), _GEN[1]):
    raise AssertionError("dihedral normal forms are not faithful")


def _mul2(u: Dihedral, v: Dihedral) -> Dihedral:
    return _BY_PERM[_compose(_PERM[u], _PERM[v])]


@dataclass(frozen=True, order=True)
class WeylElt:
    s0: bool
    w2: Dihedral

    @property
    def length(self) -> int:
        return int(self.s0) + self.w2.length

    def __mul__(self, other: WeylElt) -> WeylElt:
        return WeylElt(self.s0 != other.s0, _mul2(self.w2, other.w2))

    def inverse(self) -> WeylElt:
        return WeylElt(self.s0, next(u for u in W2_ELEMENTS if _mul2(u, self.w2) == Dihedral(0)))

    def sort_key(self):
        return (self.s0, self.w2.length, self.w2.first)

    def __str__(self) -> str:
        if not self.s0:
            return str(self.w2)
        return "0" if self.w2.length == 0 else "0" + str(self.w2)

    def __repr__(self) -> str:
        return f"WeylElt({str(self)!r})"


E = WeylElt(False, Dihedral(0))
S0 = WeylElt(True, Dihedral(0))
S1 = WeylElt(False, Dihedral(1, 1))
S2 = WeylElt(False, Dihedral(1, 2))
W0 = WeylElt(False, Dihedral(6))
W_ELEMENTS: tuple[WeylElt, ...] = tuple(
    WeylElt(a, w) for a in (False, True) for w in W2_ELEMENTS)
_LETTER = {"0": S0, "1": S1, "2": S2}


@lru_cache(maxsize=None)
def parse_word(text: str) -> WeylElt:
    """Parse ``"e"``, ``"0"``, ``"121"``, ``"w0"``, ``"0w0"``, ``"0212121"`` and similar."""
    t = text.strip()
    if t in ("", "e"):
        return E
    acc = E
    i = 0
    while i < len(t):
        if t.startswith("w0", i):
            acc = acc * W0
            i += 2
        elif t[i] in _LETTER:
            acc = acc * _LETTER[t[i]]
            i += 1
        else:
            raise ValueError(f"malformed group element {text!r}")
    return acc


def act(w: WeylElt, s: Symbol) -> Symbol:
    perm, sign = _PERM[w.w2]
    v = (s.x2, s.y2, s.z2)
    return Symbol(-s.d2 if w.s0 else s.d2,
                  sign * v[perm[0]], sign * v[perm[1]], sign * v[perm[2]])


def _leq2(u: Dihedral, v: Dihedral) -> bool:
    return u == v or u.length < v.length


def bruhat_leq(u: WeylElt, v: WeylElt) -> bool:
    """Product Bruhat order; on ``W2`` it is decided by length alone."""
    return (not u.s0 or v.s0) and _leq2(u.w2, v.w2)


@lru_cache(maxsize=None)
def _subwords(v: Dihedral) -> frozenset:
    out = set()
    for mask in product((0, 1), repeat=v.length):
        acc = Dihedral(0)
        for keep, letter in zip(mask, v.word):
            if keep:
                acc = _mul2(acc, Dihedral(1, letter))
        out.add(acc)
    return frozenset(out)


def bruhat_leq_subword(u: WeylElt, v: WeylElt) -> bool:
    """Independent oracle: ``u <= v`` iff ``u`` is a subword product of a reduced word of ``v``."""
    return (not u.s0 or v.s0) and u.w2 in _subwords(v.w2)


def interval(v: WeylElt) -> list[WeylElt]:
    """``[e, v]`` in the product order, sorted."""
    return sorted((u for u in W_ELEMENTS if bruhat_leq(u, v)), key=WeylElt.sort_key)


def upper_interval(v: WeylElt, top: WeylElt | None = None) -> list[WeylElt]:
    """``[v, top]``; ``top`` defaults to the longest element with the same A1 part as ``v``."""
    if top is None:
        top = WeylElt(v.s0, Dihedral(6))
    return sorted((u for u in W_ELEMENTS if bruhat_leq(v, u) and bruhat_leq(u, top)),
                  key=WeylElt.sort_key)


def coset_rep(w: WeylElt, i: int) -> WeylElt:
    """Minimal-length element of the left coset ``w <s_i>``."""
    other = w * (S1 if i == 1 else S2)
    return other if other.length < w.length else w


def coset_mod(elements: Iterable[WeylElt], i: int) -> list[WeylElt]:
    """Distinct cosets ``w <s_i>`` met by ``elements``, as minimal representatives."""
    return sorted({coset_rep(w, i) for w in elements}, key=WeylElt.sort_key)


def is_antidominant(s: Symbol) -> bool:
    """``<lam, alpha^vee> <= 0`` for every positive even root."""
    from .rootdata import EVEN_POSITIVE, coroot_pairing
    from .symbols import to_weight

    lam = to_weight(s)
    return all(coroot_pairing(lam, r.weight) <= 0 for r in EVEN_POSITIVE)


def _antidominant_fast(s: Symbol) -> bool:
    # equivalent closed form: d < 0 and y <= x <= 0
    return s.d2 <= 0 and s.y2 <= s.x2 <= 0


def min_coset_rep(s: Symbol) -> tuple[Symbol, tuple[WeylElt, ...]]:
    """The anti-dominant conjugate ``lam`` of ``s`` and all ``w`` with ``w . lam = s``."""
    return _min_coset_rep(s)


@lru_cache(maxsize=1 << 16)
def _min_coset_rep(s: Symbol) -> tuple[Symbol, tuple[WeylElt, ...]]:
    for w in W_ELEMENTS:
        lam = act(w.inverse(), s)
        if _antidominant_fast(lam):
            break
    else:  # pragma: no cover - every orbit meets the closed chamber
        raise AssertionError(f"no anti-dominant conjugate of {s}")
    ws = [w for w in W_ELEMENTS if act(w, lam) == s]
    return lam, tuple(sorted(ws, key=WeylElt.sort_key))


def stabilizer(s: Symbol) -> list[WeylElt]:
    return [w for w in W_ELEMENTS if act(w, s) == s]
