"""Block classification: anti-dominant labels ``f(k, n)``, the Casimir value, and typical tilting flags."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .rootdata import rho
from .symbols import Symbol, atypicality, form, to_symbol
from .weyl import (
    S1, S2, WeylElt, act, bruhat_leq, coset_rep, min_coset_rep, stabilizer,
)

__all__ = [
    "BlockId", "Typical", "Atypical", "AtypicalLabel", "f", "classify", "label",
    "casimir", "typical_tilting_char", "is_singular_layer", "singular_generator",
    "ClassificationError",
]


class ClassificationError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Typical:
    rep: Symbol  # anti-dominant orbit representative

    def __str__(self) -> str:
        return f"typical {self.rep}"


@dataclass(frozen=True, order=True)
class Atypical:
    k: int

    def __str__(self) -> str:
        return f"B_{self.k}"


BlockId = Typical | Atypical


@dataclass(frozen=True)
class AtypicalLabel:
    k: int
    n: int
    w: tuple[WeylElt, ...]  # the full coset {sigma : sigma . f(k, n) = symbol}

    @property
    def rep(self) -> WeylElt:
        return self.w[0]

    def as_dict(self) -> dict:
        return {"block": self.k, "n": self.n, "w": [str(x) for x in self.w]}


def is_singular_layer(k: int, n: int) -> bool:
    return n == k or n == 3 * k + 1


def singular_generator(k: int, n: int) -> int | None:
    """1 for the red layer ``n = k``, 2 for the blue layer ``n = 3k+1``, else None."""
    if n == k:
        return 1
    if n == 3 * k + 1:
        return 2
    return None


@lru_cache(maxsize=None)
def f(k: int, n: int) -> Symbol:
    """The anti-dominant atypical symbol ``f_{k,n}`` (coordinates doubled)."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be non-negative")
    if n <= k - 1:
        return Symbol(-(2 * n + 1), -(2 * n + 1), n - 3 * k - 1, 3 * k + n + 2)
    if n == k:
        return Symbol(-(2 * k + 1), -(2 * k + 1), -(2 * k + 1), 2 * (2 * k + 1))
    if n <= 3 * k:
        return Symbol(-(2 * n + 1), n - 3 * k - 1, -(2 * n + 1), 3 * k + n + 2)
    if n == 3 * k + 1:
        return Symbol(-3 * (2 * k + 1), 0, -3 * (2 * k + 1), 3 * (2 * k + 1))
    return Symbol(-(2 * n + 1), -(n - 3 * k - 1), -(3 * k + n + 2), 2 * n + 1)


_RHO = to_symbol(rho())
_RHO2 = form(_RHO, _RHO)


def casimir(s: Symbol) -> Fraction:
    """``(s + rho, s - rho) = (s, s) - (rho, rho)``."""
    return form(s, s) - _RHO2


def _k_from_casimir(c: Fraction) -> int:
    # 6k^2 + 6k = c  <=>  (2k+1)^2 = (2c + 3)/3
    if c.denominator != 1 or c < 0:
        raise ClassificationError(f"Casimir value {c} is not of the form 6k^2+6k")
    num = 2 * int(c) + 3
    if num % 3:
        raise ClassificationError(f"Casimir value {c} is not of the form 6k^2+6k")
    r = isqrt(num // 3)
    if r * r != num // 3 or r % 2 == 0:
        raise ClassificationError(f"Casimir value {c} is not of the form 6k^2+6k")
    return (r - 1) // 2


def _kn_from_pattern(lam: Symbol) -> tuple[int, int]:
    """Match an anti-dominant atypical symbol against the closed forms of ``f(k, n)``."""
    d2, x2, y2, z2 = lam.as_tuple()
    ell = (y2 - x2) // 3  # 2(y - x) = 3*ell
    candidates = []
    if d2 == x2:  # y - x = 3(n - k)/2
        n = (-x2 - 1) // 2
        candidates.append((n - ell, n))
    if d2 == y2:  # y - x = 3(k - n)/2
        n = (-y2 - 1) // 2
        candidates.append((n + ell, n))
    if d2 == -z2 and ell % 2:  # y - x = -3(2k + 1)/2
        n = (z2 - 1) // 2
        candidates.append(((-ell - 1) // 2, n))
    for k, n in candidates:
        if k >= 0 and n >= 0 and f(k, n) == lam:
            return k, n
    raise ClassificationError(f"{lam} matches no f(k, n)")


@lru_cache(maxsize=1 << 18)
def classify(s: Symbol) -> BlockId:
    """Block of ``s``: typical (by anti-dominant representative) or ``B_k``.

    ``k`` is recovered twice, from the Casimir value and from the closed forms
    of ``f(k, n)``; disagreement is a hard error.
    """
    lam, _ = min_coset_rep(s)
    if not atypicality(s):
        return Typical(lam)
    k1 = _k_from_casimir(casimir(s))
    k2, _ = _kn_from_pattern(lam)
    if k1 != k2:
        raise ClassificationError(f"Casimir gives k={k1} but pattern gives k={k2} for {s}")
    return Atypical(k1)


@lru_cache(maxsize=1 << 18)
def label(s: Symbol) -> AtypicalLabel:
    """``(k, n)`` and the coset of ``w`` with ``w . f(k, n) = s``."""
    if not atypicality(s):
        raise ClassificationError(f"{s} is typical")
    lam, coset = min_coset_rep(s)
    k, n = _kn_from_pattern(lam)
    if _k_from_casimir(casimir(s)) != k:
        raise ClassificationError(f"inconsistent block for {s}")
    return AtypicalLabel(k, n, coset)


def label_symbol(k: int, n: int, w: WeylElt) -> Symbol:
    return act(w, f(k, n))


def canonical_w(k: int, n: int, w: WeylElt) -> WeylElt:
    """Minimal coset representative for singular layers, ``w`` itself otherwise."""
    g = singular_generator(k, n)
    return coset_rep(w, g) if g else w


def typical_tilting_char(s: Symbol) -> Counter:
    """Verma flag of the tilting module ``T_s`` for typical ``s``.

    With ``s = sigma . lam`` (``lam`` anti-dominant, ``sigma`` minimal in its
    coset) the flag is ``sum M_{tau . lam}`` over minimal coset representatives
    ``tau <= sigma``.  For regular ``lam`` every Kazhdan-Lusztig polynomial of
    ``A1 x W2`` is 1, so the same multiplicity-free sum is used.
    """
    if atypicality(s):
        raise ClassificationError(f"{s} is atypical")
    lam, coset = min_coset_rep(s)
    sigma = min(coset, key=WeylElt.sort_key)
    stab = stabilizer(lam)
    out: Counter = Counter()
    for tau in _min_reps(stab):
        if bruhat_leq(tau, sigma):
            out[act(tau, lam)] += 1
    return out


def _min_reps(stab: list[WeylElt]) -> list[WeylElt]:
    from .weyl import W_ELEMENTS

    reps = {}
    for w in W_ELEMENTS:
        coset = frozenset(w * u for u in stab)
        best = min(coset, key=WeylElt.sort_key)
        reps[coset] = best
    return sorted(reps.values(), key=WeylElt.sort_key)
