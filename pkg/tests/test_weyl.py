from itertools import product

import pytest
from hypothesis import given, strategies as st

from g3tilt.rootdata import Weight, coroot_pairing, root
from g3tilt.symbols import Symbol, atypicality, form, to_symbol, to_weight
from g3tilt.weyl import (
    E, S0, S1, S2, W0, W_ELEMENTS, act, bruhat_leq, bruhat_leq_subword,
    coset_mod, interval, min_coset_rep, parse_word, stabilizer, upper_interval,
)

W2 = [w for w in W_ELEMENTS if not w.s0]
words = st.sampled_from(W_ELEMENTS)
weights = st.builds(Weight, st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40))
_GEN_ROOT = {"0": root("2d"), "1": root("e2-e1"), "2": root("e1")}


def _reflect(lam: Weight, alpha: Weight) -> Weight:
    c = coroot_pairing(lam, alpha)
    if c.denominator != 1:  # 2delta with odd d2
        return Weight(-lam.d2, lam.a, lam.b)
    return lam - alpha.scale(int(c))


def act_on_weight(w, lam: Weight) -> Weight:
    """Independent route: reflections through the bilinear form, rightmost letter first."""
    for letter in reversed(str(w).replace("w0", "121212").replace("e", "")):
        lam = _reflect(lam, _GEN_ROOT[letter])
    return lam


def test_group_axioms():
    assert len(set(W_ELEMENTS)) == 24 and len(W2) == 12
    for u, v in product(W_ELEMENTS, repeat=2):
        assert u * v in W_ELEMENTS
        for x in W_ELEMENTS[:6]:
            assert (u * v) * x == u * (v * x)
    for u in W_ELEMENTS:
        assert u * E == u == E * u
        assert u * u.inverse() == E


def test_generators_change_length_by_one():
    for u in W2:
        for g in (S1, S2):
            assert abs((u * g).length - u.length) == 1


def test_one_descent_except_w0():
    for u in W2:
        if u.length == 0:
            continue
        downs = [g for g in (S1, S2) if (u * g).length < u.length]
        assert len(downs) == (2 if u == W0 else 1)


def test_act_examples():
    s = Symbol(-3, 0, -3, 3)
    assert act(S1, s) == Symbol(-3, -3, 0, 3)
    assert act(S2, Symbol(1, 2, -4, 2)) == Symbol(1, -2, -2, 4)
    assert act(E, s) == s
    assert act(S0, s) == Symbol(3, 0, -3, 3)


@given(words, words, weights)
def test_act_is_an_action(u, v, lam):
    s = to_symbol(lam)
    assert act(u * v, s) == act(u, act(v, s))


@given(words, weights)
def test_equivariance(w, lam):
    assert to_symbol(act_on_weight(w, lam)) == act(w, to_symbol(lam))


@given(words, weights, weights)
def test_act_preserves_form(w, a, b):
    sa, sb = to_symbol(a), to_symbol(b)
    assert form(act(w, sa), act(w, sb)) == form(sa, sb)


def test_act_preserves_atypicality():
    for d2 in range(-9, 10, 2):
        for x2 in range(-9, 10):
            for y2 in range(-9, 10):
                if (y2 - x2) % 3:
                    continue
                s = Symbol(d2, x2, y2, -x2 - y2)
                for g in (S0, S1, S2):
                    assert bool(atypicality(act(g, s))) == bool(atypicality(s))


def test_bruhat_against_subwords():
    for u, v in product(W_ELEMENTS, repeat=2):
        assert bruhat_leq(u, v) == bruhat_leq_subword(u, v)
    p = parse_word
    assert bruhat_leq(p("21"), p("121")) and not bruhat_leq(p("21"), p("12"))
    assert not bruhat_leq(S0, W0)
    assert all(bruhat_leq(E, v) for v in W_ELEMENTS)


def test_intervals():
    p = parse_word
    assert set(interval(p("12"))) == {E, S1, S2, p("12")}
    assert set(interval(W0)) == set(W2)
    assert interval(E) == [E]
    for s in W2:
        if s.length:
            assert len(interval(s)) == 2 * s.length
            a1 = [z * t for z in (E, S0) for t in interval(s)]
            assert len(set(a1)) == 4 * s.length
    assert set(upper_interval(p("121"))) == {p(w) for w in ["121", "2121", "1212", "12121", "21212", "w0"]}
    assert upper_interval(W0) == [W0]
    assert set(upper_interval(E)) == set(W2)


def test_coset_mod():
    p = parse_word
    assert set(coset_mod(interval(p("12")), 1)) == {E, S2, p("12")}
    assert coset_mod([E], 1) == [E]
    assert len(coset_mod(W2, 1)) == 6


def test_min_coset_rep():
    lam, coset = min_coset_rep(Symbol(-3, -3, 0, 3))
    assert lam == Symbol(-3, 0, -3, 3)
    assert set(coset) == {S1, parse_word("12")}
    f00 = Symbol(-1, -1, -1, 2)
    assert min_coset_rep(f00) == (f00, tuple(stabilizer(f00)))
    assert set(stabilizer(f00)) == {E, S1}
    assert set(stabilizer(Symbol(-3, 0, -3, 3))) == {E, S2}


def test_parse_word():
    assert parse_word("0w0") == parse_word("0121212") == S0 * W0
    assert parse_word("e") == E
    assert str(parse_word("212121")) == "w0"
    with pytest.raises(ValueError):
        parse_word("13")
