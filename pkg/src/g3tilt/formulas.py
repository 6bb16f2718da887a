"""Evaluation of the tables: tilting and projective Verma flags, Jordan-Hoelder
multiplicities, and the Soergel and BGG transforms linking them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .blocks import AtypicalLabel, canonical_w, f, label, singular_generator
from .charlib import Unknown, VermaChar
from .dsl import Formula, eval_word, parse_formula, parse_layer
from .rootdata import root
from .symbols import Symbol, to_symbol
from .tables import ALL_ROWS, Row, SeedRule
from .weyl import S0, S1, S2, W0, W_ELEMENTS, WeylElt, act, parse_word

__all__ = [
    "EncodingError", "Match", "matches", "tilting", "projective", "jordan_holder",
    "soergel_transform", "bgg_convert", "seed_for", "expected_summands", "labels",
    "open_case_bound", "row_for",
]


class EncodingError(RuntimeError):
    """The tables are inconsistent (overlapping rows disagree, or a gap)."""


@dataclass(frozen=True)
class Match:
    row: Row
    sigma: WeylElt  # W2 element substituted for ``s``


_FORMULAS: dict[Row, Formula] = {
    r: parse_formula(r.formula) for r in ALL_ROWS if r.formula is not None
}


def _k_ok(row: Row, k: int) -> bool:
    return k >= row.kmin and (row.kmax is None or k <= row.kmax)


def _layer_ok(row: Row, k: int, n: int) -> bool:
    if row.exclude:
        return all(parse_layer(x).eval(k, n) != n for x in row.exclude)
    return parse_layer(row.layer).eval(k, n) == n


def _cond_ok(cond: str, s: WeylElt) -> bool:
    if cond in ("asc1", "asc2", "desc1", "desc2"):
        g = S1 if cond.endswith("1") else S2
        longer = (s * g).length > s.length
        return longer if cond.startswith("asc") else not longer
    kind, _, words = cond.partition(":")
    members = {parse_word(w) for w in words.split(",")}
    if kind == "in":
        return s in members
    if kind == "not":
        return s not in members
    raise EncodingError(f"unknown row condition {cond!r}")


def coset(k: int, n: int, w: WeylElt) -> tuple[WeylElt, ...]:
    g = singular_generator(k, n)
    if g is None:
        return (w,)
    other = w * (S1 if g == 1 else S2)
    return tuple(sorted({w, other}, key=WeylElt.sort_key))


@lru_cache(maxsize=None)
def matches(kind: str, k: int, n: int, w: WeylElt) -> tuple[Match, ...]:
    """All (row, sigma) pairs whose case covers the label ``f(k, n)^w``."""
    out = []
    for row in ALL_ROWS:
        if row.kind != kind or not _k_ok(row, k) or not _layer_ok(row, k, n):
            continue
        for u in coset(k, n, w):
            if u.s0 != row.zero:
                continue
            sigma = WeylElt(False, u.w2)
            if all(_cond_ok(c, sigma) for c in row.when):
                out.append(Match(row, sigma))
    return tuple(out)


def _eval_match(m: Match, k: int, n: int):
    if m.row.formula is None:
        raise Unknown(f"{m.row.kind} ({k}, {n}, {m.sigma}) from {m.row.thm}: {m.row.note}")
    parts = _FORMULAS[m.row].index_sets(k, n, m.sigma)
    if m.row.kind == "jh":
        out: Counter = Counter()
        for kind, layer, ms in parts:
            _check_layer(m, layer)
            for u, mult in ms.items():
                out[labels(k, layer, u)] += mult
        return out
    char: Counter = Counter()
    for kind, layer, ms in parts:
        _check_layer(m, layer)
        base = f(k, layer)
        for u, mult in ms.items():
            char[act(u, base)] += mult
    return VermaChar(char)


def _check_layer(m: Match, layer: int) -> None:
    if layer < 0:
        raise EncodingError(f"row {m.row.thm} evaluated at a negative layer")


def _lookup(kind: str, k: int, n: int, w: WeylElt):
    if k < 0 or n < 0:
        raise ValueError("k and n must be non-negative")
    ms = matches(kind, k, n, w)
    if not ms:
        raise EncodingError(f"no {kind} row covers (k={k}, n={n}, w={w})")
    values = [_eval_match(m, k, n) for m in ms]
    first = values[0]
    for m, v in zip(ms[1:], values[1:]):
        if v != first:
            raise EncodingError(
                f"rows {ms[0].row.thm} and {m.row.thm} disagree at (k={k}, n={n}, w={w})")
    return first


def row_for(kind: str, k: int, n: int, w: WeylElt) -> Match:
    ms = matches(kind, k, n, w)
    if not ms:
        raise EncodingError(f"no {kind} row covers (k={k}, n={n}, w={w})")
    return ms[0]


@lru_cache(maxsize=None)
def _tilting(k: int, n: int, w: WeylElt) -> VermaChar:
    return _lookup("tilting", k, n, w)


def tilting(k: int, n: int, w: WeylElt | str) -> VermaChar:
    """Verma flag of ``T_{f(k,n)^w}``; raises :class:`Unknown` for the open case."""
    w = parse_word(w) if isinstance(w, str) else w
    return VermaChar(_tilting(k, n, w))


@lru_cache(maxsize=None)
def _projective(k: int, n: int, w: WeylElt) -> VermaChar:
    return _lookup("projective", k, n, w)


def projective(k: int, n: int, w: WeylElt | str) -> VermaChar:
    """Verma flag of the projective cover ``P_{f(k,n)^w}`` from the direct tables."""
    w = parse_word(w) if isinstance(w, str) else w
    return VermaChar(_projective(k, n, w))


def soergel_transform(c) -> VermaChar:
    """Negate every symbol; sends tilting flags to projective flags."""
    return VermaChar({-s: m for s, m in c.items()})


def labels(k: int, n: int, w: WeylElt) -> AtypicalLabel:
    return label(act(w, f(k, n)))


# T_2^0 in B_0 is a summand of a module with this flag.
_OPEN_BOUND = parse_formula(
    "M_{2}^{{0,1,2,2,e,e,e}} + M_{1}^{{0,1,e,e,e}} + M_{0}^{{0,2,e}} + M_{3}^{e}")


def open_case_bound() -> VermaChar:
    """Flag of the four-layer module containing the undetermined ``T_2^0`` as a summand."""
    out: Counter = Counter()
    for _, layer, ms in _OPEN_BOUND.index_sets(0, 0, S0):
        for u, m in ms.items():
            out[act(u, f(0, layer))] += m
    return VermaChar(out)


_UNKNOWN_P = frozenset(-s for s in open_case_bound())


def bgg_convert(k: int, n: int, w: WeylElt | str, reach: int = 3) -> Counter:
    """``[M_mu : L_lam] = (P_lam : M_mu)`` for ``mu = f(k,n)^w``, read off the projective tables.

    Projective flags only span layers ``m-2 .. m+2``; ``reach`` sets the search window.
    Raises :class:`Unknown` when an undetermined projective could contain ``M_mu``.
    """
    w = parse_word(w) if isinstance(w, str) else w
    mu = act(w, f(k, n))
    out: Counter = Counter()
    for m in range(max(0, n - reach), n + reach + 1):
        for lam_w in _canonical(k, m):
            try:
                p = _projective(k, m, lam_w)
            except Unknown:
                if mu in _UNKNOWN_P:
                    raise Unknown(
                        f"[M : L] for {mu} depends on the undetermined projective "
                        f"at (k={k}, n={m}, w={lam_w})") from None
                continue
            mult = p.get(mu, 0)
            if mult:
                out[labels(k, m, lam_w)] += mult
    return out


@lru_cache(maxsize=None)
def _canonical(k: int, n: int) -> tuple[WeylElt, ...]:
    return tuple(w for w in W_ELEMENTS if canonical_w(k, n, w) == w)


@lru_cache(maxsize=None)
def _jh(k: int, n: int, w: WeylElt) -> Counter:
    if k == 0:
        return bgg_convert(k, n, w)
    return _lookup("jh", k, n, w)


def jordan_holder(k: int, n: int, w: WeylElt | str) -> Counter:
    """Composition multiplicities ``[M_{f(k,n)^w} : L]`` as a multiset of labels.

    For ``k >= 1`` this evaluates the tables; for ``B_0``, which has no closed
    table, it is computed by BGG reciprocity from the projective flags.
    """
    w = parse_word(w) if isinstance(w, str) else w
    return Counter(_jh(k, n, w))


# ------------------------------------------------------------------ seeds

def _seed_rule(m: Match, k: int, n: int) -> SeedRule | None:
    name = str(m.sigma)
    for rule in m.row.seeds:
        if name not in rule.sigmas:
            continue
        if k < rule.kmin or (rule.kmax is not None and k > rule.kmax):
            continue
        if rule.only_n is not None and parse_layer(rule.only_n).eval(k, n) != n:
            continue
        return rule
    return None


def seed_for(k: int, n: int, w: WeylElt | str) -> tuple[Symbol, str]:
    """Highest weight ``g`` of the initial tilting module used for ``T_{f(k,n)^w}``.

    Returns ``(g, description)``.  Without a registry entry the seed is the
    standard one, ``f(k,n)^w - 2 delta``.
    """
    w = parse_word(w) if isinstance(w, str) else w
    m = row_for("tilting", k, n, w)
    rule = _seed_rule(m, k, n)
    if rule is None:
        return act(w, f(k, n)) - to_symbol(root("2d")), "standard"
    env = {"s": m.sigma}
    layer = parse_layer(rule.layer).eval(k, n)
    word = eval_word(rule.word, env)
    g = act(word, f(k, layer)) - to_symbol(root(rule.root))
    if rule.symbol is not None and g.as_tuple() != rule.symbol:
        raise EncodingError(f"seed for (k={k}, n={n}, w={w}) computes to {g}, "
                            f"registry says {Symbol(*rule.symbol)}")
    return g, f"f({k},{layer})^{word} - ({rule.root})"


def expected_summands(k: int, n: int, w: WeylElt | str) -> list[tuple[int, int, WeylElt]]:
    """Tilting labels whose sum translation should produce (the target first)."""
    w = parse_word(w) if isinstance(w, str) else w
    m = row_for("tilting", k, n, w)
    out = [(k, n, w)]
    for layer, word in m.row.summands:
        out.append((k, parse_layer(layer).eval(k, n), eval_word(word, {"s": m.sigma})))
    return out


def projective_index(w: WeylElt) -> WeylElt:
    """The index ``s0 w0 w`` with ``P_{f^w} = soergel(T_{f^{s0 w0 w}})``."""
    return S0 * W0 * w
