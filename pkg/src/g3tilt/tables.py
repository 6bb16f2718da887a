"""The tilting, projective and Jordan-Hoelder tables as data, with the seed registry.

Each :class:`Row` is one case of a table; ``thm`` is its case id.  ``s`` in a formula is the row
parameter (sigma for tilting rows, tau for projective rows); the target label
is ``f(k, layer)`` acted on by ``s`` or by ``0s`` when ``zero`` is set.

Row conditions on ``s`` (all must hold):

``asc1``/``asc2``   ``l(s) < l(s i)``;  ``desc1``/``desc2``   ``l(s) > l(s i)``;
``in:a,b``          ``s`` is one of the listed words;  ``not:a,b``  ``s`` is none of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

__all__ = ["Row", "SeedRule", "TILTING", "PROJECTIVE", "JORDAN_HOLDER", "ALL_ROWS"]


@dataclass(frozen=True)
class SeedRule:
    """Initial tilting module ``T_g`` with ``g = f(k, layer)^word - root``.

    ``symbol`` (doubled coordinates) is the literal seed the proof names; it
    must agree with the computed ``g``.
    """

    sigmas: tuple[str, ...]
    root: str
    layer: str = "n"
    word: str = "s"
    kmin: int = 0
    kmax: Optional[int] = None
    only_n: Optional[str] = None  # restrict to n == this layer expression
    symbol: Optional[tuple[int, int, int, int]] = None
    # set when the seed differs from the one printed in the proof
    deviation: Optional[str] = None


@dataclass(frozen=True)
class Row:
    thm: str
    kind: str  # "tilting" | "projective" | "jh"
    layer: str  # layer expression, or "n" for the generic rows
    zero: bool  # target lies in s0 W2
    formula: Optional[str]  # None marks an open case
    kmin: int = 0
    kmax: Optional[int] = None
    exclude: tuple[str, ...] = ()
    when: tuple[str, ...] = ()
    seeds: tuple[SeedRule, ...] = ()
    # extra tilting summands expected from translation, as (layer, word) pairs
    summands: tuple[tuple[str, str], ...] = ()
    note: str = field(default="", compare=False)
    # the formula as printed, when ``formula`` corrects it
    printed: Optional[str] = field(default=None, compare=False)


def _r(thm, kind, layer, zero, formula, **kw) -> Row:
    for key in ("exclude", "when", "seeds", "summands"):
        if key in kw:
            kw[key] = tuple(kw[key])
    return Row(thm, kind, layer, zero, formula, **kw)


def _seeds(root_map: dict[str, tuple[str, ...]], **kw) -> list[SeedRule]:
    return [SeedRule(sig, root, **kw) for root, sig in root_map.items()]


# ------------------------------------------------------------------ tilting, W2 part

_T_W2 = [
    _r("4.1(1)", "tilting", "n", False, "M_{n}^{[e,s]} + M_{n+1}^{[e,s]}",
       exclude=["k-1", "k", "3k", "3k+1"],
       seeds=_seeds({"d-e3": ("e", "1", "121", "212", "1212"),
                     "d+e2": ("2", "12", "21", "2121", "21212"),
                     "d+e1": ("12121", "w0")}, only_n="3k-3", kmin=2)),
    _r("4.1(2)", "tilting", "3k+1", False, "M_{3k+1}^{[e,s]/2} + M_{3k+2}^{[e,s]}",
       when=["desc2"]),
    _r("4.1(3)", "tilting", "k", False, "M_{k}^{[e,s]/1} + M_{k+1}^{[e,s]}",
       kmin=1, when=["desc1"]),
    _r("4.1(4)", "tilting", "k-1", False,
       "M_{k-1}^{[e,s]} + M_{k}^{[e,s]} + M_{k+1}^{[e,s]}",
       kmin=1, when=["asc1"],
       seeds=_seeds({"d-e3": ("e", "2", "12"), "d+e2": ("212",), "d+e1": ("1212",),
                     "d-e1": ("21212",)}, kmax=1)),
    _r("4.1(4)", "tilting", "k-1", False, "M_{k-1}^{[e,s]} + M_{k}^{[e,s]/1}",
       kmin=1, when=["desc1"],
       seeds=_seeds({"e2-e3": ("1",), "d+e1": ("21",), "d+e2": ("121", "w0"),
                     "d-e3": ("2121", "12121")})),
    _r("4.1(5)", "tilting", "3k", False,
       "M_{3k}^{[e,s]} + M_{3k+1}^{[e,s]} + M_{3k+2}^{[e,s]}",
       kmin=1, when=["asc2"]),
    _r("4.1(5)", "tilting", "3k", False, "M_{3k}^{[e,s]} + M_{3k+1}^{[e,s]/2}",
       kmin=1, when=["desc2"],
       seeds=_seeds({"d+e1": ("2", "212"), "e2-e3": ("12",), "d+e2": ("1212",),
                     "d-e3": ("21212", "w0")})),
    _r("4.2", "tilting", "0", False, "M_{0}^{[e,s]/1} + M_{1}^{[e,s]} + M_{2}^{[e,s]}",
       kmin=0, kmax=0, when=["desc1", "not:w0"]),
    _r("4.2", "tilting", "0", False, "M_{0}^{[e,s]/1} + M_{1}^{[e,s]/2}",
       kmin=0, kmax=0, when=["in:w0"],
       seeds=[SeedRule(("w0",), "d-e3", word="21212", symbol=(-3, 0, 0, 0))]),
]

# ------------------------------------------------------------------ tilting, s0 W2 part

# seeds for T_2^{0 sigma} in B_0
_SEEDS_T2 = _seeds({"d-e1": ("1", "21212"), "d+e1": ("21", "1212"),
                    "d+e2": ("212",), "d-e2": ("w0",),
                    "d-e3": ("2", "2121", "12121")}, layer="2", word="0s") + [
    SeedRule(("12",), "d", layer="2", word="01",
             deviation="printed f^0_2 - d; f^01_2 - d reproduces the row"),
    SeedRule(("121",), "d+e2", layer="2", word="0s",
             deviation="printed d-e2 does not reproduce the row; d+e2 does"),
]

_T_0W2 = [
    _r("5.1(1)", "tilting", "n", True, "M_{n}^{A1x[e,s]} + M_{n-1}^{A1x[e,s]}",
       exclude=["0", "k", "k+1", "3k+1", "3k+2"],
       seeds=_seeds({"d+e2": ("1", "12", "21212", "w0"),
                     "d-e3": ("21", "121", "212", "1212", "2121", "12121")},
                    only_n="3k+5", word="0s")
       + [SeedRule(("e", "2"), "d", word="0s", only_n="3k+5",
                   deviation="printed seed (d+e2 for e, d-e3 for 2) translates to "
                             "twice the target; f - d used")]),
    _r("5.1(2)", "tilting", "0", True, "M_{0}^{A1x[e,s]} + M_{0}^{[e,s]2} + M_{1}^{[e,s]}",
       kmin=2, when=["asc2"]),
    _r("5.1(2)", "tilting", "0", True, "M_{0}^{A1x[e,s]}",
       kmin=2, when=["desc2"],
       seeds=_seeds({"d+e2": ("212", "1212")}, layer="0", word="0s")
       + [SeedRule(("2", "12", "21212", "w0"), "d-e3", layer="0", word="0s",
                   deviation="printed with layer k+1; layer 0 as in the B_1 analogue")]),
    _r("5.1(3)", "tilting", "k", True, "M_{k}^{A1x[e,s]/1} + M_{k-1}^{A1x[e,s]}",
       kmin=1, when=["desc1"]),
    _r("5.1(4)", "tilting", "3k+1", True, "M_{3k+1}^{A1x[e,s]/2} + M_{3k}^{A1x[e,s]}",
       kmin=1, when=["desc2"]),
    _r("5.1(5)", "tilting", "k+1", True,
       "M_{k+1}^{A1x[e,s]} + M_{k}^{A1x[e,s]} + M_{k-1}^{A1x[e,s]}",
       kmin=1, when=["asc1"],
       seeds=_seeds({"d": ("e", "2"), "d+e2": ("12", "21212"), "d-e3": ("212", "1212")},
                    word="0s", kmax=1)),
    _r("5.1(5)", "tilting", "k+1", True, "M_{k+1}^{A1x[e,s]} + M_{k}^{A1x[e,s]/1}",
       kmin=1, when=["desc1"],
       seeds=_seeds({"d+e2": ("1", "2121"), "d-e3": ("21", "121"), "d+e1": ("12121",),
                     "d-e1": ("w0",)}, word="0s")),
    _r("5.1(6)", "tilting", "3k+2", True,
       "M_{3k+2}^{A1x[e,s]} + M_{3k+1}^{A1x[e,s]} + M_{3k}^{A1x[e,s]}",
       kmin=1, when=["asc2"]),
    _r("5.1(6)", "tilting", "3k+2", True, "M_{3k+2}^{A1x[e,s]} + M_{3k+1}^{A1x[e,s]/2}",
       kmin=1, when=["desc2"],
       seeds=_seeds({"d-e3": ("2", "12"), "d+e2": ("212",), "d+e1": ("1212",),
                     "d-e1": ("21212",), "d-e2": ("w0",)}, word="0s")),
    # block B_1, layer 0
    _r("5.2", "tilting", "0", True, "M_{0}^{A1} + M_{0}^{2} + M_{1}^{e} + M_{2}^{e}",
       kmin=1, kmax=1, when=["in:e"]),
    _r("5.2", "tilting", "0", True,
       "M_{0}^{A1x[e,s]} + M_{0}^{[e,s]2} + M_{1}^{[e,s]/1}",
       kmin=1, kmax=1, when=["asc2", "not:e"],
       seeds=_seeds({"d-e1": ("1",), "d+e1": ("21",), "d-e3": ("2121", "12121")},
                    word="0s")
       + [SeedRule(("121",), "d+e2", word="0s",
                   deviation="printed d-e3 does not reproduce the row; d+e2 does")]),
    _r("5.2", "tilting", "0", True, "M_{0}^{A1x[e,s]}",
       kmin=1, kmax=1, when=["desc2"],
       seeds=_seeds({"d+e2": ("212", "1212"), "d-e3": ("2", "12", "21212", "w0")},
                    word="0s")),
    # block B_0, layers 0, 1, 2
    _r("5.3(1)", "tilting", "0", True,
       "M_{0}^{A1x[e,s]/1} + M_{0}^{[e,s]|{is12,s12}} + M_{1}^{[e,s1]}",
       kmin=0, kmax=0, when=["in:2,12,212"]),
    _r("5.3(1)", "tilting", "0", True, "M_{0}^{A1} + M_{0}^{{2,12}} + M_{1}^{[e,1]}",
       kmin=0, kmax=0, when=["in:e"]),
    _r("5.3(1)", "tilting", "0", True,
       "M_{0}^{A1x[e,1212]/1} + M_{0}^{[e,12]/1|{21212}} + M_{1}^{[e,121]/2}",
       kmin=0, kmax=0, when=["in:1212"], summands=[("0", "w0")]),
    _r("5.3(1)", "tilting", "0", True, "M_{0}^{A1xW2/1}",
       kmin=0, kmax=0, when=["in:w0"],
       seeds=[SeedRule(("w0",), "d-e3", word="0s", symbol=(-1, 0, 0, 0))]),
    _r("5.3(2)", "tilting", "1", True, "M_{1}^{A1x[e,s]/2} + M_{0}^{A1x[e,s]}",
       kmin=0, kmax=0, when=["desc2", "not:w0"]),
    _r("5.3(2)", "tilting", "1", True, "M_{1}^{A1x[e,w0]/2} + M_{0}^{A1x[e,w0]/1}",
       kmin=0, kmax=0, when=["in:w0"],
       seeds=[SeedRule(("w0",), "e2-e3", word="0s", symbol=(3, 0, 0, 0))]),
    _r("5.3(3)", "tilting", "2", True,
       "M_{2}^{A1x[e,s]} + M_{1}^{A1x[e,s]} + M_{0}^{A1x[e,s]/1}",
       kmin=0, kmax=0, when=["asc2", "not:e"], seeds=_SEEDS_T2),
    _r("5.3(3)", "tilting", "2", True, "M_{2}^{A1x[e,s]} + M_{1}^{A1x[e,s]/2}",
       kmin=0, kmax=0, when=["desc2"], seeds=_SEEDS_T2),
    _r("5.3(3)", "tilting", "2", True, None, kmin=0, kmax=0, when=["in:e"],
       note="open: Verma flag of this tilting module is undetermined"),
]

TILTING = _T_W2 + _T_0W2

# ------------------------------------------------------------------ projective

_P = [
    _r("6.1(1)", "projective", "n", True, "M_{n}^{0[s,w0]} + M_{n+1}^{0[s,w0]}",
       exclude=["k-1", "k", "3k", "3k+1"]),
    _r("6.1(2)", "projective", "3k+1", True, "M_{3k+1}^{0[s,w0]/2} + M_{3k+2}^{0[s,w0]}",
       when=["asc2"]),
    _r("6.1(3)", "projective", "k", True, "M_{k}^{0[s,w0]/1} + M_{k+1}^{0[s,w0]}",
       kmin=1, when=["asc1"]),
    _r("6.1(4)", "projective", "k-1", True,
       "M_{k-1}^{0[s,w0]} + M_{k}^{0[s,w0]} + M_{k+1}^{0[s,w0]}", kmin=1, when=["desc1"]),
    _r("6.1(4)", "projective", "k-1", True, "M_{k-1}^{0[s,w0]} + M_{k}^{0[s,w0]/1}",
       kmin=1, when=["asc1"]),
    _r("6.1(5)", "projective", "3k", True,
       "M_{3k}^{0[s,w0]} + M_{3k+1}^{0[s,w0]} + M_{3k+2}^{0[s,w0]}", kmin=1, when=["desc2"]),
    _r("6.1(5)", "projective", "3k", True, "M_{3k}^{0[s,w0]} + M_{3k+1}^{0[s,w0]/2}",
       kmin=1, when=["asc2"]),
    _r("6.2(1)", "projective", "n", False, "M_{n}^{A1x[s,w0]} + M_{n-1}^{A1x[s,w0]}",
       exclude=["0", "k", "k+1", "3k+1", "3k+2"]),
    _r("6.2(2)", "projective", "0", False,
       "M_{0}^{A1x[s,w0]} + M_{0}^{0[s,w0]2} + M_{1}^{0[s,w0]}", kmin=2, when=["desc2"]),
    _r("6.2(2)", "projective", "0", False, "M_{0}^{A1x[s,w0]}", kmin=2, when=["asc2"]),
    _r("6.2(3)", "projective", "k", False, "M_{k}^{A1x[s,w0]/1} + M_{k-1}^{A1x[s,w0]}",
       kmin=1, when=["asc1"]),
    _r("6.2(4)", "projective", "3k+1", False,
       "M_{3k+1}^{A1x[s,w0]/2} + M_{3k}^{A1x[s,w0]}", kmin=1, when=["asc2"]),
    _r("6.2(5)", "projective", "k+1", False,
       "M_{k+1}^{A1x[s,w0]} + M_{k}^{A1x[s,w0]} + M_{k-1}^{A1x[s,w0]}",
       kmin=1, when=["desc1"]),
    _r("6.2(5)", "projective", "k+1", False, "M_{k+1}^{A1x[s,w0]} + M_{k}^{A1x[s,w0]/1}",
       kmin=1, when=["asc1"]),
    _r("6.2(6)", "projective", "3k+2", False,
       "M_{3k+2}^{A1x[s,w0]} + M_{3k+1}^{A1x[s,w0]} + M_{3k}^{A1x[s,w0]}",
       kmin=1, when=["desc2"]),
    _r("6.2(6)", "projective", "3k+2", False,
       "M_{3k+2}^{A1x[s,w0]} + M_{3k+1}^{A1x[s,w0]/2}", kmin=1, when=["asc2"]),
    # block B_1
    _r("6.3", "projective", "0", False,
       "M_{0}^{A1xw0} + M_{0}^{0w02} + M_{1}^{0w0} + M_{2}^{0w0}",
       kmin=1, kmax=1, when=["in:w0"]),
    _r("6.3", "projective", "0", False,
       "M_{0}^{A1x[s,w0]} + M_{0}^{0[s,w0]2} + M_{1}^{0[s,w0]/1}",
       kmin=1, kmax=1, when=["desc2", "not:w0"]),
    _r("6.3", "projective", "0", False, "M_{0}^{A1x[s,w0]}",
       kmin=1, kmax=1, when=["asc2"]),
    # block B_0
    _r("6.4", "projective", "0", True,
       "M_{0}^{0[s,w0]/1} + M_{1}^{0[s,w0]} + M_{2}^{0[s,w0]}",
       kmin=0, kmax=0, when=["asc1", "not:e"]),
    _r("6.4", "projective", "0", True, "M_{0}^{0[e,w0]/1} + M_{1}^{0[e,w0]/2}",
       kmin=0, kmax=0, when=["in:e"]),
    _r("6.5(1)", "projective", "0", False,
       "M_{0}^{A1x[s,w0]/1} + M_{0}^{0[s,w0]|{0p,0jp}} + M_{1}^{0[s1,w0]}",
       kmin=0, kmax=0, when=["in:12121,2121,121"]),
    _r("6.5(1)", "projective", "0", False,
       "M_{0}^{{w0,0w0}} + M_{0}^{{02121,012121}} + M_{1}^{{021212,0w0}}",
       kmin=0, kmax=0, when=["in:21212"]),
    _r("6.5(1)", "projective", "0", False,
       "M_{0}^{A1x[21,w0]/1} + M_{0}^{0[2121,w0]/1|{01}} + M_{1}^{0[212,w0]/2}",
       kmin=0, kmax=0, when=["in:2"]),
    _r("6.5(1)", "projective", "0", False, "M_{0}^{A1xW2/1}",
       kmin=0, kmax=0, when=["in:e"]),
    _r("6.5(2)", "projective", "1", False, "M_{1}^{A1x[s,w0]/2} + M_{0}^{A1x[s,w0]}",
       kmin=0, kmax=0, when=["asc2", "not:e"]),
    _r("6.5(2)", "projective", "1", False, "M_{1}^{A1x[e,w0]/2} + M_{0}^{A1x[e,w0]/1}",
       kmin=0, kmax=0, when=["in:e"]),
    _r("6.5(3)", "projective", "2", False,
       "M_{2}^{A1x[s,w0]} + M_{1}^{A1x[s,w0]} + M_{0}^{A1x[s,w0]/1}",
       kmin=0, kmax=0, when=["desc2", "not:w0"]),
    _r("6.5(3)", "projective", "2", False, "M_{2}^{A1x[s,w0]} + M_{1}^{A1x[s,w0]/2}",
       kmin=0, kmax=0, when=["asc2"]),
    _r("6.5(3)", "projective", "2", False, None, kmin=0, kmax=0, when=["in:w0"],
       note="open: dual to the undetermined tilting module"),
]

PROJECTIVE = _P

# ------------------------------------------------------------------ Jordan-Hoelder

_D1 = "{u in W2 : desc(u,1), u<=s}"
_D2 = "{u in W2 : desc(u,2), u<=s}"
_G1 = "{u in W2 : desc(u,1), l(u)<=l(s)-2}"
_G2 = "{u in W2 : desc(u,2), l(u)<=l(s)-2}"

_JH = [
    _r("7.1(1)", "jh", "0", False, "L_{0}^{[e,s]} + L_{1}^{[e,s]}", kmin=2),
    _r("7.1(2)", "jh", "k-1", False,
       f"L_{{k-1}}^{{[e,s]}} + L_{{k}}^{{[e,s]/1}} + L_{{k+1}}^{{{_D1}}}", kmin=1),
    _r("7.1(3)", "jh", "k", False,
       f"L_{{k}}^{{[e,s]/1}} + L_{{k+1}}^{{[e,s]}} + L_{{k+1}}^{{{_G1}}}",
       kmin=1, when=["desc1"]),
    _r("7.1(4)", "jh", "3k", False,
       f"L_{{3k}}^{{[e,s]}} + L_{{3k+1}}^{{[e,s]/2}} + L_{{3k+2}}^{{{_D2}}}", kmin=1),
    _r("7.1(5)", "jh", "3k+1", False,
       f"L_{{3k+1}}^{{[e,s]/2}} + L_{{3k+2}}^{{[e,s]}} + L_{{3k+2}}^{{{_G2}}}",
       kmin=1, when=["desc2"]),
    _r("7.1(6)", "jh", "n", False, "L_{n}^{[e,s]} + L_{n+1}^{[e,s]}",
       kmin=1, exclude=["0", "k-1", "k", "3k", "3k+1"]),
    _r("7.2(1)", "jh", "0", True,
       "L_{0}^{A1x[e,s]} + L_{1}^{[e,s]} + L_{0}^{{u in [e,s2] : desc(u,2)}}", kmin=2,
       printed="L_{0}^{A1x[e,s]} + L_{1}^{[e,s]}",
       note="erratum: P_0^u (l(u) > l(u2)) contributes L_0^u by BGG reciprocity"),
    _r("7.2(2)", "jh", "k-1", True,
       f"L_{{k-1}}^{{A1x[e,s]}} + L_{{k-2}}^{{0[e,s]}} + L_{{k}}^{{[e,s]/1}}"
       f" + L_{{k+1}}^{{{_D1}}} + L_{{0}}^{{{_D2}}}", kmin=2, kmax=2,
       printed=f"L_{{k-1}}^{{A1x[e,s]}} + L_{{k-2}}^{{0[e,s]}} + L_{{k}}^{{[e,s]/1}}"
               f" + L_{{k+1}}^{{{_D1}}}",
       note="erratum: P_0^u (l(u) > l(u2)) contributes L_0^u by BGG reciprocity"),
    _r("7.2(2)", "jh", "k-1", True,
       f"L_{{k-1}}^{{A1x[e,s]}} + L_{{k-2}}^{{0[e,s]}} + L_{{k}}^{{[e,s]/1}}"
       f" + L_{{k+1}}^{{{_D1}}}", kmin=3),
    _r("7.2(3)", "jh", "k", True,
       f"L_{{k}}^{{A1x[e,s]/1}} + L_{{k-1}}^{{0[e,s]}} + L_{{k-1}}^{{0{_G1}}}"
       f" + L_{{k+1}}^{{[e,s]}} + L_{{k+1}}^{{{_G1}}}", kmin=2, when=["desc1"]),
    _r("7.2(4)", "jh", "k+1", True,
       f"L_{{k+1}}^{{A1x[e,s]}} + L_{{k}}^{{0[e,s]/1}} + L_{{k-1}}^{{0{_D1}}}"
       f" + L_{{k+2}}^{{[e,s]}}", kmin=2),
    _r("7.2(5)", "jh", "3k", True,
       f"L_{{3k}}^{{A1x[e,s]}} + L_{{3k-1}}^{{0[e,s]}} + L_{{3k+1}}^{{[e,s]/2}}"
       f" + L_{{3k+2}}^{{{_D2}}}", kmin=1),
    _r("7.2(6)", "jh", "3k+1", True,
       f"L_{{3k+1}}^{{A1x[e,s]/2}} + L_{{3k}}^{{0[e,s]}} + L_{{3k}}^{{0{_G2}}}"
       f" + L_{{3k+2}}^{{[e,s]}} + L_{{3k+2}}^{{{_G2}}}", kmin=1, when=["desc2"]),
    _r("7.2(7)", "jh", "3k+2", True,
       f"L_{{3k+2}}^{{A1x[e,s]}} + L_{{3k+1}}^{{0[e,s]/2}} + L_{{3k}}^{{0{_D2}}}"
       f" + L_{{3k+3}}^{{[e,s]}}", kmin=1),
    _r("7.2(8)", "jh", "n", True,
       "L_{n}^{A1x[e,s]} + L_{n-1}^{0[e,s]} + L_{n+1}^{[e,s]}",
       kmin=1, exclude=["0", "1", "k-1", "k", "k+1", "3k", "3k+1", "3k+2"]),
    _r("7.2(8)", "jh", "1", True,
       f"L_{{1}}^{{A1x[e,s]}} + L_{{0}}^{{0[e,s]}} + L_{{2}}^{{[e,s]}} + L_{{0}}^{{{_D2}}}",
       kmin=3, printed="L_{n}^{A1x[e,s]} + L_{n-1}^{0[e,s]} + L_{n+1}^{[e,s]}",
       note="erratum: P_0^u (l(u) > l(u2)) contributes L_0^u by BGG reciprocity"),
    # block B_1
    _r("7.3(1)", "jh", "0", False,
       f"L_{{0}}^{{[e,s]}} + L_{{1}}^{{[e,s]/1}} + L_{{2}}^{{{_D1}}}", kmin=1, kmax=1),
    _r("7.3(2)", "jh", "0", True,
       f"L_{{0}}^{{A1x[e,s]}} + L_{{0}}^{{{{u in [e,s2] : desc(u,2)}}}}"
       f" + L_{{1}}^{{[e,s]/1}} + L_{{2}}^{{{_D1}}}", kmin=1, kmax=1),
    _r("7.3(3)", "jh", "1", True,
       f"L_{{1}}^{{A1x[e,s]/1}} + L_{{0}}^{{0[e,s]}} + L_{{0}}^{{0{_G1}}}"
       f" + L_{{2}}^{{[e,s]}} + L_{{2}}^{{{_G1}}} + L_{{0}}^{{{_D2}}}",
       kmin=1, kmax=1, when=["desc1"]),
    _r("7.3(4)", "jh", "2", True,
       f"L_{{2}}^{{A1x[e,s]}} + L_{{1}}^{{0[e,s]/1}} + L_{{0}}^{{0{_D1}}} + L_{{3}}^{{[e,s]}}",
       kmin=1, kmax=1, when=["not:w0"]),
    _r("7.3(4)", "jh", "2", True,
       f"L_{{2}}^{{A1x[e,s]}} + L_{{1}}^{{0[e,s]/1}} + L_{{0}}^{{0{_D1}}} + L_{{3}}^{{[e,s]}}"
       " + L_{0}^{w0}", kmin=1, kmax=1, when=["in:w0"]),
]

JORDAN_HOLDER = _JH

ALL_ROWS = TILTING + PROJECTIVE + JORDAN_HOLDER
