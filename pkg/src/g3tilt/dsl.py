"""A small language for the Weyl-group index sets and layer sums in the tables.

A formula is a sum of terms ``c M_{layer}^{set}`` (or ``L_...`` for simple
labels), for example::

    M_{n}^{[e,s]} + 2 M_{k}^{A1x[e,s]/1} + M_{n-1}^{0[s,w0]2}

Layers are integer-linear in ``n`` and ``k`` (``n+1``, ``k-1``, ``3k+2``, ``0``).
Set expressions evaluate to multisets of :class:`WeylElt`:

* ``[a,b]`` Bruhat interval inside ``A1 x W2``; ``W2``, ``A1`` the subgroups;
* ``{a,b,...}`` explicit elements;
* juxtaposition (optionally with ``x``) is the elementwise product, so
  ``A1x[e,s]`` and ``0[s,w0]2`` mean what they look like;
* ``X/1``, ``X/2`` replace ``X`` by the set of left cosets of ``<s_i>`` it meets,
  each rendered by its minimal element;
* ``X | Y`` is the multiset sum;
* ``{u in X : cond, cond}`` filters ``X`` with conditions ``desc(u,1)``
  (``l(u) > l(u1)``), ``desc(u,2)``, ``u<=w`` and ``l(u)<=l(w)-2``.

Words are strings over ``0 1 2 e w0`` plus the variables bound at evaluation
time: ``s`` (the row's sigma or tau), ``i`` and ``j`` (its first two letters)
and ``p`` (``s`` with those two letters removed).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Union

from .weyl import (
    E, S0, S1, S2, W0, W2_ELEMENTS, WeylElt, bruhat_leq, coset_rep,
)

__all__ = [
    "Interval", "Explicit", "Product", "CosetQuot", "Union_", "Guarded",
    "Layer", "Term", "Formula", "parse_set", "parse_formula", "parse_layer",
    "eval_word", "bindings_for", "DSLError",
]


class DSLError(ValueError):
    pass


# ---------------------------------------------------------------- words

_LETTERS = {"0": S0, "1": S1, "2": S2, "e": E}


def eval_word(text: str, env: Mapping[str, WeylElt]) -> WeylElt:
    acc = E
    i = 0
    while i < len(text):
        if text.startswith("w0", i):
            acc, i = acc * W0, i + 2
            continue
        c = text[i]
        if c in _LETTERS:
            acc = acc * _LETTERS[c]
        elif c in env:
            acc = acc * env[c]
        else:
            raise DSLError(f"unbound letter {c!r} in word {text!r}")
        i += 1
    return acc


def bindings_for(s: WeylElt) -> dict[str, WeylElt]:
    """Variables ``s``, ``i``, ``j``, ``p`` for a row parameter ``s``."""
    env = {"s": s}
    word = s.w2.word if 0 < s.w2.length < 6 else ()
    if len(word) >= 1:
        env["i"] = S1 if word[0] == 1 else S2
    if len(word) >= 2:
        env["j"] = S1 if word[1] == 1 else S2
        rest = E
        for letter in word[2:]:
            rest = rest * (S1 if letter == 1 else S2)
        env["p"] = WeylElt(s.s0, rest.w2)
    return env


# ---------------------------------------------------------------- set AST

@dataclass(frozen=True)
class Interval:
    lo: str
    hi: str

    def eval(self, env) -> Counter:
        lo, hi = eval_word(self.lo, env), eval_word(self.hi, env)
        return Counter(u for u in _ALL if bruhat_leq(lo, u) and bruhat_leq(u, hi))


@dataclass(frozen=True)
class Explicit:
    words: tuple[str, ...]

    def eval(self, env) -> Counter:
        return Counter(eval_word(w, env) for w in self.words)


@dataclass(frozen=True)
class Named:
    name: str  # "A1" | "W2"

    def eval(self, env) -> Counter:
        if self.name == "A1":
            return Counter([E, S0])
        return Counter(WeylElt(False, w) for w in W2_ELEMENTS)


@dataclass(frozen=True)
class Product:
    factors: tuple

    def eval(self, env) -> Counter:
        acc = Counter([E])
        for fac in self.factors:
            rhs = fac.eval(env)
            nxt: Counter = Counter()
            for a, m in acc.items():
                for b, n in rhs.items():
                    nxt[a * b] += m * n
            acc = nxt
        return acc


@dataclass(frozen=True)
class CosetQuot:
    inner: object
    i: int

    def eval(self, env) -> Counter:
        return Counter({coset_rep(u, self.i) for u in self.inner.eval(env)})


@dataclass(frozen=True)
class Union_:
    parts: tuple

    def eval(self, env) -> Counter:
        out: Counter = Counter()
        for p in self.parts:
            out.update(p.eval(env))
        return out


@dataclass(frozen=True)
class Guarded:
    domain: object
    conds: tuple[tuple[str, str], ...]  # (kind, argument)

    def eval(self, env) -> Counter:
        out: Counter = Counter()
        for u, m in self.domain.eval(env).items():
            if all(_cond(kind, arg, u, env) for kind, arg in self.conds):
                out[u] += m
        return out


def _cond(kind: str, arg: str, u: WeylElt, env) -> bool:
    if kind == "desc":
        g = S1 if arg == "1" else S2
        return u.length > (u * g).length
    if kind == "leq":
        return bruhat_leq(u, eval_word(arg, env))
    if kind == "len2":
        return u.length <= eval_word(arg, env).length - 2
    raise DSLError(f"unknown condition {kind}")  # pragma: no cover


_ALL = [WeylElt(a, w) for a in (False, True) for w in W2_ELEMENTS]

SetExpr = Union[Interval, Explicit, Named, Product, CosetQuot, Union_, Guarded]


# ---------------------------------------------------------------- set parser

_TOKEN = re.compile(r"\s*(w0|[A-Za-z0-9]+|<=|>=|\(|\)|\[|\]|\{|\}|,|/|\||:|-|\+)")
_WORD = re.compile(r"^(?:w0|[012eijps])+$")


def _tokenize(text: str) -> list[str]:
    toks, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise DSLError(f"bad character at {text[pos:]!r}")
        toks.append(m.group(1))
        pos = m.end()
    return toks


class _SetParser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, expect: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expect is not None and tok != expect):
            raise DSLError(f"expected {expect or 'token'} in {self.text!r}, got {tok!r}")
        self.pos += 1
        return tok

    def parse(self):
        node = self.union()
        if self.peek() is not None:
            raise DSLError(f"trailing input {self.toks[self.pos:]} in {self.text!r}")
        return node

    def union(self):
        parts = [self.chain()]
        while self.peek() == "|":
            self.take()
            parts.append(self.chain())
        return parts[0] if len(parts) == 1 else Union_(tuple(parts))

    def chain(self):
        factors = []
        dangling = False  # a product sign still waiting for its right factor
        while True:
            tok = self.peek()
            if tok == "x":
                self.take()
                dangling = True
                continue
            if tok in ("[", "{", "("):
                factors.append(self.atom())
            elif tok in ("A1", "W2"):
                self.take()
                factors.append(Named(tok))
            elif tok is not None and tok.startswith("A1x"):
                # "A1x" or run-together "A1xW2"
                if tok == "A1x":
                    self.take()
                else:
                    self.toks[self.pos] = tok[3:]
                factors.append(Named("A1"))
                dangling = True
                continue
            elif tok is not None and _WORD.match(tok):
                self.take()
                factors.append(Explicit((tok,)))
            else:
                break
            dangling = False
        if dangling:
            raise DSLError(f"product sign without a right factor in {self.text!r}")
        if not factors:
            raise DSLError(f"empty set expression in {self.text!r}")
        node = factors[0] if len(factors) == 1 else Product(tuple(factors))
        while self.peek() == "/":
            self.take()
            i = self.take()
            if i not in ("1", "2"):
                raise DSLError("quotient must be by 1 or 2")
            node = CosetQuot(node, int(i))
        return node

    def atom(self):
        tok = self.take()
        if tok == "(":
            node = self.union()
            self.take(")")
            return node
        if tok == "[":
            lo = self.word()
            self.take(",")
            hi = self.word()
            self.take("]")
            return Interval(lo, hi)
        # "{" : explicit list or guarded set
        if self.pos + 1 < len(self.toks) and self.toks[self.pos + 1] == "in":
            self.take("u")
            self.take("in")
            dom = self.chain()
            self.take(":")
            conds = [self.cond()]
            while self.peek() == ",":
                self.take()
                conds.append(self.cond())
            self.take("}")
            return Guarded(dom, tuple(conds))
        words = [self.word()]
        while self.peek() == ",":
            self.take()
            words.append(self.word())
        self.take("}")
        return Explicit(tuple(words))

    def word(self) -> str:
        return self.word_from(self.take())

    def word_from(self, tok: str) -> str:
        if not _WORD.match(tok):
            raise DSLError(f"not a group word: {tok!r} in {self.text!r}")
        return tok

    def cond(self) -> tuple[str, str]:
        tok = self.take()
        if tok == "desc":
            self.take("(")
            self.take("u")
            self.take(",")
            i = self.take()
            self.take(")")
            return ("desc", i)
        if tok == "u":
            self.take("<=")
            return ("leq", self.word())
        if tok == "l":
            # l(u)<=l(w)-2
            self.take("(")
            self.take("u")
            self.take(")")
            self.take("<=")
            self.take("l")
            self.take("(")
            w = self.word()
            self.take(")")
            self.take("-")
            self.take("2")
            return ("len2", w)
        raise DSLError(f"unknown condition starting {tok!r}")


def parse_set(text: str) -> SetExpr:
    return _SetParser(text).parse()


# ---------------------------------------------------------------- layers and formulas

@dataclass(frozen=True)
class Layer:
    """``cn*n + ck*k + c0``."""

    cn: int
    ck: int
    c0: int
    text: str

    def eval(self, k: int, n: int) -> int:
        return self.cn * n + self.ck * k + self.c0


_LAYER_TERM = re.compile(r"([+-]?)(\d*)([nk]?)")


def parse_layer(text: str) -> Layer:
    s = text.replace(" ", "")
    if not s:
        raise DSLError("empty layer")
    cn = ck = c0 = 0
    pos = 0
    while pos < len(s):
        m = _LAYER_TERM.match(s, pos)
        if not m or m.end() == pos or (pos > 0 and not m.group(1)):
            raise DSLError(f"bad layer expression {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        var = m.group(3)
        if not m.group(2) and not var:
            raise DSLError(f"bad layer expression {text!r}")
        coef = int(m.group(2)) if m.group(2) else 1
        if var == "n":
            cn += sign * coef
        elif var == "k":
            ck += sign * coef
        else:
            c0 += sign * coef
        pos = m.end()
    return Layer(cn, ck, c0, text)


@dataclass(frozen=True)
class Term:
    coef: int
    kind: str  # "M" or "L"
    layer: Layer
    index: SetExpr


@dataclass(frozen=True)
class Formula:
    text: str
    terms: tuple[Term, ...]

    def index_sets(self, k: int, n: int, s: WeylElt) -> list[tuple[str, int, Counter]]:
        """``(kind, layer, multiset of group elements)`` per term, coefficients applied."""
        env = bindings_for(s)
        out = []
        for t in self.terms:
            ms = t.index.eval(env)
            if t.coef != 1:
                ms = Counter({u: m * t.coef for u, m in ms.items()})
            out.append((t.kind, t.layer.eval(k, n), ms))
        return out


_TERM_HEAD = re.compile(r"\s*(\d*)\s*([ML])_\{([^}]*)\}\^")


def _balanced(text: str, pos: int) -> int:
    """End index (exclusive) of the braced group starting at ``text[pos] == '{'``."""
    depth = 0
    for i in range(pos, len(text)):
        if text[i] == "{":
            depth += 1
        elif text[i] == "}":
            depth -= 1
            if depth == 0:
                return i + 1
    raise DSLError(f"unbalanced braces in {text!r}")


def parse_formula(text: str) -> Formula:
    terms = []
    pos = 0
    while True:
        m = _TERM_HEAD.match(text, pos)
        if not m:
            raise DSLError(f"cannot parse term at {text[pos:]!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        start = m.end()
        if start >= len(text):
            raise DSLError(f"missing index set in {text!r}")
        if text[start] == "{":
            end = _balanced(text, start)
            body = text[start + 1:end - 1]
        else:  # bare word, e.g. M_{2}^e
            wm = re.compile(r"(?:w0|[012eijps])+").match(text, start)
            if not wm:
                raise DSLError(f"missing index set in {text!r}")
            end = wm.end()
            body = wm.group(0)
        terms.append(Term(coef, m.group(2), parse_layer(m.group(3)), parse_set(body)))
        rest = text[end:].lstrip()
        if not rest:
            break
        if rest[0] != "+":
            raise DSLError(f"expected '+' between terms in {text!r}")
        pos = len(text) - len(rest) + 1
    return Formula(text, tuple(terms))
