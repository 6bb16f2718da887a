from dataclasses import replace

from hypothesis import given, strategies as st

from g3tilt.blocks import f
from g3tilt.dsl import parse_layer
from g3tilt.formulas import _canonical, tilting
from g3tilt.jantzen import (
    FlagWitness, check_connectivity, find_flag_witness, height_order_coincides, jantzen_rhs,
    simple_coefficients, validate_witness, witnesses_from,
)
from g3tilt.reference import PROOF_CHAINS
from g3tilt.rootdata import POSITIVE_ROOTS, SIMPLE_ROOTS, rho
from g3tilt.symbols import Symbol, to_symbol
from g3tilt.weyl import act, parse_word as p


def test_simple_coefficients():
    assert [simple_coefficients(r.weight) for r in SIMPLE_ROOTS] == [(1, 0, 0), (0, 1, 0),
                                                                      (0, 0, 1)]
    for r in POSITIVE_ROOTS:
        c = simple_coefficients(r.weight)
        assert all(x >= 0 for x in c) and sum(c) == r.height


def test_height_order():
    assert height_order_coincides()


def test_rhs_of_rho_contains_simple_reflection():
    r = to_symbol(rho())
    rhs = jantzen_rhs(r)
    assert act(p("1"), r) in rhs.even and act(p("2"), r) in rhs.even
    assert len(rhs.even) == 6


def test_rhs_atypical_block_zero():
    rhs = jantzen_rhs(f(0, 0))
    assert f(0, 1) in rhs.musson
    assert set(rhs.as_dict()) == {"even", "musson"}


def test_odd_step_witness():
    w = find_flag_witness(f(0, 0), f(0, 1))
    assert w.clause == 3 and w.chain == ("d+e2",) and w.odd == ("d+e2",) and w.even == ()
    assert validate_witness(w)
    assert w.as_dict()["to"] == list(f(0, 1).as_tuple())


def test_two_odd_step_witness():
    lam = act(p("12"), f(2, 1))
    w = find_flag_witness(lam, act(p("12"), f(2, 3)))
    assert w.clause == 5 and w.chain == ("d-e2", "d-e3")


def test_no_witness_to_itself():
    assert find_flag_witness(f(1, 1), f(1, 1)) is None


def test_tampered_witness_is_rejected():
    w = find_flag_witness(f(0, 0), f(0, 1))
    assert not validate_witness(replace(w, clause=4))
    assert not validate_witness(replace(w, chain=("d+e1",)))
    assert not validate_witness(replace(w, target=f(0, 2)))
    assert not validate_witness(replace(w, chain=("nope",)))


@given(st.integers(0, 3), st.integers(0, 10), st.sampled_from(["e", "1", "21", "0", "0121"]))
def test_every_search_result_validates(k, n, word):
    lam = act(p(word), f(k, n))
    for tgt, w in witnesses_from(lam, max_chain=3).items():
        assert isinstance(w, FlagWitness) and w.target == tgt and validate_witness(w)


def test_proof_chains_are_found():
    for c in PROOF_CHAINS:
        for k in c.ks:
            src = act(p(c.sigma), f(k, parse_layer(c.src).eval(k, 0)))
            dst = act(p(c.target), f(k, parse_layer(c.dst).eval(k, 0)))
            w = find_flag_witness(src, dst)
            assert w is not None and w.clause == 5 and w.chain == (c.beta, c.gamma), c


def test_connectivity_of_generic_rows():
    rows = []
    for k in (2, 3):
        for n in range(3 * k + 3, 3 * k + 6):
            for w in _canonical(k, n):
                rows.append((act(w, f(k, n)), tilting(k, n, w)))
    rep = check_connectivity(rows)
    assert rep.coverage == 1 and not rep.missing
    assert rep.symbols == rep.witnessed == len(rep.chains)
