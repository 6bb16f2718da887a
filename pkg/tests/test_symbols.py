import pytest
from hypothesis import given, strategies as st

from g3tilt.rootdata import ODD_ISOTROPIC, Weight, bilinear_form, from_eps, rho
from g3tilt.symbols import Symbol, atypicality, form, parse_symbol, to_symbol, to_weight

weights = st.builds(Weight, st.integers(-60, 60), st.integers(-60, 60), st.integers(-60, 60))


def test_to_symbol_examples():
    assert to_symbol(from_eps(0, 1, 0)) == Symbol(0, 2, -1, -1)
    assert to_symbol(rho()) == Symbol(-5, 1, 4, -5)
    assert to_symbol(Weight(0, 0, 0)) == Symbol(0, 0, 0, 0)


def test_to_weight_examples():
    assert to_weight(Symbol(-1, -1, -1, 2)) == Weight(-1, 0, -1)
    assert to_weight(Symbol(0, 0, 0, 0)) == Weight(0, 0, 0)


def test_invariants_enforced():
    with pytest.raises(ValueError):
        Symbol(1, 1, 1, 1)
    with pytest.raises(ValueError):
        Symbol(1, 1, 0, -1)


@given(weights)
def test_roundtrip(w):
    assert to_weight(to_symbol(w)) == w


@given(weights, weights)
def test_form_matches_weights(u, v):
    assert form(to_symbol(u), to_symbol(v)) == bilinear_form(u, v)


def test_atypicality_examples():
    names = {r.name for r in atypicality(Symbol(-1, -1, -1, 2))}
    assert names == {"d+e1", "d+e2"}
    assert atypicality(Symbol(-3, 0, 0, 0)) == []
    assert atypicality(to_symbol(rho()))


def test_atypicality_against_form_exhaustive():
    gammas = [to_symbol(r.weight) for r in ODD_ISOTROPIC]
    for d2 in range(-41, 42, 2):
        for x2 in range(-40, 41):
            for y2 in range(x2 % 3 - 42, 41, 3):
                if abs(y2) > 40 or (y2 - x2) % 3:
                    continue
                s = Symbol(d2, x2, y2, -x2 - y2)
                direct = [g for g in gammas if form(s, g) == 0]
                assert len(atypicality(s)) == len(direct)


def test_parse_and_render():
    s = parse_symbol("[-3/2|0,-3/2,3/2]")
    assert s == Symbol(-3, 0, -3, 3)
    assert str(s) == "[-3/2 | 0, -3/2, 3/2]"
    assert parse_symbol(str(s)) == s
    for bad in ["[1|2,3]", "(1|0,0,0)", "[1/3|0,0,0]"]:
        with pytest.raises(ValueError):
            parse_symbol(bad)
