"""Label data of the super Jantzen sum formula and the flag criterion built on it.

The criterion gives sufficient conditions for ``(T_lam : M_mu) > 0``: ``mu`` is
reached from ``lam`` by subtracting zero, one or two odd roots (with the
orthogonality and height conditions below) and then applying a chain of even
reflections, each with strictly positive coroot pairing.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .rootdata import (
    EVEN_2DELTA, EVEN_CIRCLE, ODD_DELTA, ODD_ISOTROPIC, POSITIVE_ROOTS, SIMPLE_ROOTS,
    Root, Weight,
)
from .symbols import Symbol, form, to_symbol

__all__ = [
    "JantzenRHS", "FlagWitness", "jantzen_rhs", "find_flag_witness", "witnesses_from",
    "validate_witness", "check_connectivity", "ConnectivityReport", "simple_coefficients",
    "height_order_coincides",
]

_SYM = {r.name: to_symbol(r.weight) for r in POSITIVE_ROOTS}
_EVEN = tuple(r for r in POSITIVE_ROOTS if r in EVEN_CIRCLE or r == EVEN_2DELTA)
_ODD = tuple(r for r in POSITIVE_ROOTS if r in ODD_ISOTROPIC or r == ODD_DELTA)
_ROOT_INDEX = {r.name: i for i, r in enumerate(POSITIVE_ROOTS)}


def _pairing(lam: Symbol, alpha: Root) -> Fraction:
    a = _SYM[alpha.name]
    return 2 * form(lam, a) / form(a, a)


def _reflect(lam: Symbol, alpha: Root) -> Symbol:
    c = _pairing(lam, alpha)
    if c.denominator != 1:
        # only 2delta can pair to a half-integer; s_{2delta} just negates d
        return Symbol(-lam.d2, lam.x2, lam.y2, lam.z2)
    a = _SYM[alpha.name]
    n = int(c)
    return Symbol(lam.d2 - n * a.d2, lam.x2 - n * a.x2, lam.y2 - n * a.y2, lam.z2 - n * a.z2)


@dataclass(frozen=True)
class JantzenRHS:
    even: tuple[Symbol, ...]  # s_alpha lam, one entry per contributing even root
    musson: tuple[Symbol, ...]  # lam - gamma for isotropic gamma orthogonal to lam

    def as_dict(self) -> dict:
        return {"even": [list(s.as_tuple()) for s in self.even],
                "musson": [list(s.as_tuple()) for s in self.musson]}


def jantzen_rhs(lam: Symbol) -> JantzenRHS:
    """Labels of the terms on the right of the super Jantzen sum formula for ``M_lam``.

    The Musson characters ``ch M_{lam-gamma} / (1 + e^-gamma)`` are kept as labels only.
    """
    even = []
    for r in EVEN_CIRCLE:
        c = _pairing(lam, r)
        if c.denominator == 1 and c > 0:
            even.append(_reflect(lam, r))
    c = _pairing(lam, EVEN_2DELTA)
    if c > 0 and c.denominator == 2:
        even.append(_reflect(lam, EVEN_2DELTA))
    musson = [lam - _SYM[g.name] for g in ODD_ISOTROPIC if form(lam, _SYM[g.name]) == 0]
    return JantzenRHS(tuple(even), tuple(musson))


@dataclass(frozen=True)
class FlagWitness:
    source: Symbol
    target: Symbol
    clause: int  # 1..6
    chain: tuple[str, ...]  # odd roots first (beta, gamma), then alpha_1, ..., alpha_k
    path: tuple[Symbol, ...]  # symbol after each step

    @property
    def odd(self) -> tuple[str, ...]:
        return self.chain[: _n_odd(self.clause)]

    @property
    def even(self) -> tuple[str, ...]:
        return self.chain[_n_odd(self.clause):]

    def as_dict(self) -> dict:
        return {"from": list(self.source.as_tuple()), "to": list(self.target.as_tuple()),
                "clause": self.clause, "chain": list(self.chain)}


def _n_odd(clause: int) -> int:
    return (clause - 1) // 2


_ROOTS_BY_NAME = {r.name: r for r in POSITIVE_ROOTS}


def validate_witness(w: FlagWitness) -> bool:
    """Re-check every hypothesis of the witness's clause with exact arithmetic."""
    n_odd = _n_odd(w.clause)
    if not 1 <= w.clause <= 6 or len(w.chain) != len(w.path) or len(w.chain) < n_odd:
        return False
    n_even = len(w.chain) - n_odd
    ok_even = {1: n_even == 1, 2: n_even >= 2, 3: n_even == 0, 5: n_even == 0}
    if not ok_even.get(w.clause, n_even >= 1):
        return False
    try:
        roots = [_ROOTS_BY_NAME[name] for name in w.chain]
    except KeyError:
        return False
    cur = w.source
    for r, step in zip(roots[:n_odd], w.path):
        if r.parity != "odd" or form(cur, _SYM[r.name]) != 0:
            return False
        cur = cur - _SYM[r.name]
        if cur != step:
            return False
    if n_odd == 2 and not roots[0].height < roots[1].height:
        return False
    for r, step in zip(roots[n_odd:], w.path[n_odd:]):
        if r.parity != "even" or _pairing(cur, r) <= 0:
            return False
        cur = _reflect(cur, r)
        if cur != step:
            return False
    return cur == w.target


def _starts(lam: Symbol) -> list[tuple[tuple[Root, ...], tuple[Symbol, ...]]]:
    out = [((), ())]
    for b in _ODD:
        if form(lam, _SYM[b.name]) != 0:
            continue
        mid = lam - _SYM[b.name]
        out.append(((b,), (mid,)))
        for g in _ODD:
            if b.height < g.height and form(mid, _SYM[g.name]) == 0:
                out.append(((b, g), (mid, mid - _SYM[g.name])))
    return out


def _key(w: FlagWitness) -> tuple:
    return (len(w.chain), w.clause, tuple(_ROOT_INDEX[n] for n in w.chain))


def witnesses_from(lam: Symbol, max_chain: int = 8) -> dict[Symbol, FlagWitness]:
    """The least witness (by chain length, clause, then root order) for every reachable target.

    ``max_chain`` caps the number of even reflections.
    """
    if not 0 <= max_chain <= 8:
        raise ValueError("max_chain must lie in 0..8")
    best: dict[Symbol, FlagWitness] = {}
    for odd, odd_path in _starts(lam):
        start = odd_path[-1] if odd_path else lam
        # breadth-first over symbols; the first path to a state is the least one
        seen = {start: ((), ())}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            chain, path = seen[cur]
            if len(chain) >= max_chain:
                continue
            for a in _EVEN:
                if _pairing(cur, a) <= 0:
                    continue
                nxt = _reflect(cur, a)
                if nxt not in seen:
                    seen[nxt] = (chain + (a,), path + (nxt,))
                    queue.append(nxt)
        for tgt, (chain, path) in seen.items():
            if not odd and not chain:
                continue
            n_even = len(chain)
            clause = {0: 2, 1: 4, 2: 6}[len(odd)] if n_even else {1: 3, 2: 5}[len(odd)]
            if not odd and n_even == 1:
                clause = 1
            w = FlagWitness(lam, tgt, clause, tuple(r.name for r in odd + chain),
                            odd_path + path)
            if tgt not in best or _key(w) < _key(best[tgt]):
                best[tgt] = w
    for w in best.values():
        if not validate_witness(w):
            raise AssertionError(f"search produced an invalid witness {w}")
    return best


def find_flag_witness(lam: Symbol, target: Symbol, max_chain: int = 8) -> FlagWitness | None:
    """A validated witness for ``(T_lam : M_target) > 0``, or None.

    None is a legitimate answer: the criterion is sufficient, not necessary.
    """
    return witnesses_from(lam, max_chain).get(target)


def simple_coefficients(w: Weight) -> tuple[int, int, int]:
    """Coefficients of ``w`` on the simple roots ``eps_2 - eps_1, eps_1, delta + eps_3``."""
    if w.d2 % 2:
        raise ValueError("not in the root lattice")
    c3 = w.d2 // 2
    r1, r2 = (w - SIMPLE_ROOTS[2].weight.scale(c3)).eps()
    return r2, r1 + r2, c3


def height_order_coincides() -> bool:
    """For odd positive roots, ``ht(b) < ht(g)`` exactly when ``b - g`` is not a
    non-negative combination of positive roots."""
    for b in _ODD:
        for g in _ODD:
            nonneg = all(c >= 0 for c in simple_coefficients(b.weight - g.weight))
            if (b.height < g.height) != (not nonneg):
                return False
    return True


if not height_order_coincides():  # pragma: no cover - fixed root data
    raise AssertionError("height order and root order disagree on odd roots")


@dataclass
class ConnectivityReport:
    rows: int = 0
    symbols: int = 0
    witnessed: int = 0
    missing: list[tuple[Symbol, Symbol]] = None  # (top, symbol)
    chains: list[FlagWitness] = None

    def __post_init__(self):
        self.missing = [] if self.missing is None else self.missing
        self.chains = [] if self.chains is None else self.chains

    @property
    def coverage(self) -> Fraction:
        return Fraction(self.witnessed, self.symbols) if self.symbols else Fraction(1)

    def as_dict(self) -> dict:
        return {"rows": self.rows, "symbols": self.symbols, "witnessed": self.witnessed,
                "missing": [[list(t.as_tuple()), list(s.as_tuple())] for t, s in self.missing],
                "chains": [w.as_dict() for w in self.chains]}


def check_connectivity(rows: Iterable[tuple[Symbol, Mapping[Symbol, int]]],
                       max_chain: int = 8) -> ConnectivityReport:
    """Try to witness every non-top symbol of each ``(top, flag)`` row from its top."""
    rep = ConnectivityReport()
    for top, flag in rows:
        rep.rows += 1
        found = witnesses_from(top, max_chain)
        for s in sorted(flag):
            if s == top:
                continue
            rep.symbols += 1
            w = found.get(s)
            if w is None:
                rep.missing.append((top, s))
            else:
                rep.witnessed += 1
                rep.chains.append(w)
    return rep
