import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from contactlie.coeff import GaussRational, I, Poly, variables
from contactlie.contact import make_contact
from contactlie.exterior import Dx, Form, MultiVec, dx
from contactlie.expr import ParseError, format_value, normalize, parse, round_trips, tokenize
from contactlie.sampling import random_form, random_multivec, random_poly

x0, x1, x2 = variables(1)


def test_parse_mu_and_alpha():
    cs = make_contact(1)
    assert parse("Dx1^(Dx2 - x1*Dx0)", 1) == cs.mu
    assert parse("dx0 + x1*dx2", 1) == cs.alpha


def test_parse_scalars():
    assert parse("3/2*x1**2 - x2", 1) == (x1 ** 2).scale(Fraction(3, 2)) - x2
    assert parse("(1 + 2*i)*x0", 1) == x0.scale(GaussRational(1, 2))
    assert parse("i*i", 1) == -1
    assert parse("-(x1)", 1) == -x1


def test_kind_mismatch_has_position():
    with pytest.raises(ParseError) as e:
        parse("dx1 ^ Dx2", 1)
    assert e.value.pos == 4
    assert "kind mismatch" in str(e.value)


def test_errors():
    with pytest.raises(ParseError) as e:
        parse("x3", 1)
    assert e.value.pos == 0
    with pytest.raises(ParseError):
        parse("x1 $ x2", 1)
    with pytest.raises(ParseError):
        parse("(x1 + x2", 1)
    with pytest.raises(ParseError):
        parse("dx1**2", 1)
    with pytest.raises(ParseError):
        parse("x1**1/2", 1)
    with pytest.raises(ParseError):
        parse("dx1 + dx1^dx2", 1)
    with pytest.raises(ParseError):
        parse("dx1*dx2", 1)


def test_tokenize_positions():
    toks = tokenize(" Dx12 ^dx3")
    assert [(t.kind, t.text, t.pos) for t in toks[:3]] == [
        ("name", "Dx12", 1),
        ("op", "^", 6),
        ("name", "dx3", 7),
    ]


def test_format_examples():
    cs = make_contact(1)
    assert format_value(cs.mu) == "x1*Dx0^Dx1 + Dx1^Dx2"
    assert format_value(cs.alpha) == "dx0 + x1*dx2"
    assert format_value(x1.scale(I) - Poly.const(1, 1).scale(GaussRational(1, 3))) == "i*x1 + (-1-3*i)"
    assert format_value(dx(1, 1).scale(x1 + x2)) == "(x1 + x2)*dx1"
    assert format_value(Poly.zero(1)) == "0"
    assert format_value(MultiVec.zero(1, 2)) == "0"


def test_normalize():
    assert normalize(Form.scalar(x1)) == x1
    assert isinstance(normalize(Form.scalar(x1)), Poly)
    assert normalize(Dx(1, 1)) == Dx(1, 1)


@given(st.integers(0, 10**6), st.integers(1, 2))
def test_round_trip(seed, n):
    rng = random.Random(seed)
    p = random_poly(rng, n, 3)
    assert round_trips(p)
    assert round_trips(p.scale(GaussRational(rng.randint(-2, 2), rng.randint(-2, 2))))
    k = rng.randint(0, 2 * n + 1)
    assert round_trips(random_form(rng, n, k, 2))
    assert round_trips(random_multivec(rng, n, k, 2))
