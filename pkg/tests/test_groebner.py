"""Buchberger, normal forms, standard monomials, dimension."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from mcalc.errors import UnitIdeal, NotZeroDimensional
from mcalc.groebner import (buchberger, krull_dimension, normal_form,
                            origin_support_check, spolynomial,
                            standard_monomials)
from mcalc.polyring import INFINITE, Monomial, MonomialOrder, Polynomial, RingSpec
from mcalc.scalars import FieldSpec

Q = FieldSpec.rationals()
F2 = FieldSpec.prime_field(2)


def _plane(field=Q, order=MonomialOrder.grevlex()):
    return RingSpec(field, ("x", "y"), order)


def _conic_ring():
    R = _plane(F2)
    x, y = R.variable("x"), R.variable("y")
    return RingSpec(F2, ("x", "y"), quotient=(x * x + x * y + y * y,))


def test_reduced_basis_conic_plus_line():
    R = _plane()
    x, y = R.variable("x"), R.variable("y")
    gb = buchberger(R, [x * x + x * y + y * y, x])
    assert gb.generators == (x, y * y)


def test_quotient_relations_folded_in():
    A = _conic_ring()
    x, y = A.variable("x"), A.variable("y")
    gb = buchberger(A, [x])
    assert gb.generators == (x, y * y)


def test_lex_elimination():
    R = RingSpec(Q, ("y", "x"), MonomialOrder.lex())
    y, x = R.variable("y"), R.variable("x")
    gb = buchberger(R, [x * y - R.one(), y * y - R.one()])
    assert gb.generators == (x * x - R.one(), y - x)


def test_char_two_line_cuts_conic():
    R = _plane(F2)
    x, y = R.variable("x"), R.variable("y")
    gb = buchberger(R, [x * x + x * y + y * y, x + y])
    assert gb.generators == (x + y, y * y)


def test_unit_ideal():
    R = _plane()
    x = R.variable("x")
    gb = buchberger(R, [x, x + R.one()])
    assert gb.is_unit_ideal()
    assert gb.generators == (R.one(),)
    with pytest.raises(UnitIdeal):
        krull_dimension(gb)


def test_empty_input_keeps_free_ring():
    R = _plane()
    gb = buchberger(R, [])
    assert gb.generators == ()
    assert krull_dimension(gb) == 2
    assert standard_monomials(gb) is INFINITE


def test_spolynomial_cancels_leads():
    R = _plane()
    x, y = R.variable("x"), R.variable("y")
    s = spolynomial(x * x, x * y + y * y, R.order)
    assert s == -(x * y * y)


def test_normal_form_with_witness():
    R = _plane()
    x, y = R.variable("x"), R.variable("y")
    gb = buchberger(R, [x * x + x * y + y * y, x])
    f = y ** 3 + y
    r, witness = normal_form(f, gb, with_witness=True)
    assert r == y
    acc = R.zero()
    for w, g in zip(witness, gb.generators):
        acc = acc + w * g
    assert acc + r == f


def test_normal_form_is_canonical():
    R = _plane()
    x, y = R.variable("x"), R.variable("y")
    gb = buchberger(R, [x * x + x * y + y * y, x])
    f = y ** 2 + x * y
    assert normal_form(f, gb).is_zero() == gb.contains(f)
    assert normal_form(normal_form(f, gb), gb) == normal_form(f, gb)
    # representatives of the same class share a normal form
    g = f + (x * x) * (y + R.one())
    assert normal_form(f, gb) == normal_form(g, gb)


def test_standard_monomials_finite():
    R = _plane()
    x, y = R.variable("x"), R.variable("y")
    gb = buchberger(R, [x, y * y])
    assert standard_monomials(gb) == [Monomial((0, 0)), Monomial((0, 1))]


def test_standard_monomials_infinite():
    R = _plane()
    x, y = R.variable("x"), R.variable("y")
    assert standard_monomials(buchberger(R, [x * y])) is INFINITE


def test_krull_dimension_chain():
    R = _plane()
    x, y = R.variable("x"), R.variable("y")
    assert krull_dimension(buchberger(R, [x])) == 1
    assert krull_dimension(buchberger(R, [x, y * y])) == 0
    A = _conic_ring()
    assert krull_dimension(buchberger(A, [])) == 1


def test_origin_support():
    R = _plane()
    x, y = R.variable("x"), R.variable("y")
    assert origin_support_check(buchberger(R, [x, y * y]))
    assert not origin_support_check(buchberger(R, [x - R.one(), y]))
    with pytest.raises(NotZeroDimensional):
        origin_support_check(buchberger(R, [x]))


def test_determinism_and_input_order_independence():
    R = _plane()
    x, y = R.variable("x"), R.variable("y")
    gens = [x * x + x * y + y * y, x * y ** 2, y ** 4 - x]
    first = buchberger(R, gens).generators
    again = buchberger(R, gens).generators
    shuffled = buchberger(R, list(reversed(gens))).generators
    assert first == again == shuffled


def test_membership_agrees_with_row_reduction():
    R = _plane(F2)
    x, y = R.variable("x"), R.variable("y")
    gens = [x * x + y, x * y]
    gb = buchberger(R, gens)
    probes = [y * y, x * x, x + y, y ** 3, x * x * y + y * y, R.one()]
    for f in probes:
        assert gb.contains(f) == oracles.brute_force_member(R, f, gens)


def _f2_polys(max_deg=2):
    mons = [Monomial(e) for e in itertools.product(range(3), repeat=2)
            if sum(e) <= max_deg]
    return st.lists(st.sampled_from(mons), min_size=1, max_size=4).map(
        lambda ms: sum((Polynomial.term(F2, 2, m, F2.one) for m in ms),
                       Polynomial.zero(F2, 2)))


@settings(max_examples=40, deadline=None)
@given(st.lists(_f2_polys(), min_size=1, max_size=3))
def test_ideal_combinations_reduce_to_zero(gens):
    R = _plane(F2)
    gens = [g for g in gens if not g.is_zero()]
    gb = buchberger(R, gens)
    x, y = R.variable("x"), R.variable("y")
    for g, m in zip(gens, itertools.cycle([R.one(), x, y, x * y])):
        assert normal_form(m * g, gb).is_zero()


@settings(max_examples=40, deadline=None)
@given(st.lists(_f2_polys(), min_size=1, max_size=2))
def test_standard_count_matches_enumeration(gens):
    R = _plane(F2)
    gens = [g for g in gens if not g.is_zero()]
    gb = buchberger(R, gens)
    sms = standard_monomials(gb)
    count = oracles.standard_monomial_count(R, gens)
    if sms is INFINITE:
        assert count is None
    else:
        assert count == len(sms)
