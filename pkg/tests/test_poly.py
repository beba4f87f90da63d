import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trischroder.errors import ParseError
from trischroder.poly import A, ONE, Q, T, ZERO, LaurentPoly, QSeries, poly_sum

exps = st.tuples(st.integers(0, 4), st.integers(-4, 4), st.integers(0, 3))
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=6).map(LaurentPoly)


@given(polys)
def test_text_round_trip(p):
    assert LaurentPoly.parse(p.to_text()) == p


@given(polys)
def test_json_round_trip(p):
    assert LaurentPoly.parse(p.to_json(), "json") == p
    assert LaurentPoly.parse(json.dumps(p.to_json_obj()), "json") == p


@given(polys, st.randoms())
def test_parse_accepts_any_factor_and_term_order(p, rnd):
    terms = p.to_text().split(" + ") if p else ["0"]
    shuffled = []
    for term in terms:
        sign = "-" if term.startswith("-") else ""
        factors = term.lstrip("-").split("*")
        rnd.shuffle(factors)
        shuffled.append(sign + "*".join(factors))
    rnd.shuffle(shuffled)
    assert LaurentPoly.parse(" + ".join(shuffled)) == p


@given(polys, polys, polys)
def test_ring_axioms(p, r, s):
    assert p + r == r + p
    assert p * r == r * p
    assert (p * r) * s == p * (r * s)
    assert p * (r + s) == p * r + p * s
    assert p - p == ZERO
    assert p * ONE == p


@given(polys, st.integers(-3, 3), st.integers(-3, 3))
def test_shift_is_monomial_product(p, dq, dt):
    assert p.shift(q=dq, t=dt) == p * LaurentPoly.monomial(q=dq, t=dt)


@given(polys)
def test_a_coefficients_reassemble(p):
    parts = p.a_coefficients()
    assert poly_sum(c * A**k for k, c in enumerate(parts)) == p


def test_text_format():
    p = (ONE + A) * (ONE + A * T**-1)
    assert p.to_text() == "1 + t^-1*a + a + t^-1*a^2"
    assert (Q * T * 2 - A).to_text() == "2*q*t + -a"
    assert ZERO.to_text() == "0"


def test_json_shape():
    p = LaurentPoly.parse("3*q^2*t^-1*a")
    assert p.to_json_obj() == {"terms": [[1, -1, 2, "3"]]}


def test_json_coefficients_are_bignum_strings():
    big = 10**40
    p = LaurentPoly.const(big)
    assert LaurentPoly.parse(p.to_json(), "json").coeff() == big


@pytest.mark.parametrize("bad", ["", "q^", "q + + t", "x", "2*", "q t"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        LaurentPoly.parse(bad)


@pytest.mark.parametrize(
    "bad", ["[]", "{}", '{"terms": [[0, 0, 0]]}', '{"terms": [[0, 0, 0, 1]]}', "{"]
)
def test_parse_json_errors(bad):
    with pytest.raises(ParseError):
        LaurentPoly.parse(bad, "json")


def test_specialize():
    p = LaurentPoly.parse("q^2*t + 3*a*t^-1 + q")
    assert p.specialize(q=1) == LaurentPoly.parse("t + 3*a*t^-1 + 1")
    assert p.specialize(a=0) == LaurentPoly.parse("q^2*t + q")
    # u is carried in the t slot
    assert p.specialize(q=1, t_sub="u^(-2)") == LaurentPoly.parse("t^-2 + 3*a*t^2 + 1")


def test_qseries_geometric_inverse():
    one_minus_q = QSeries.from_poly(ONE - Q, 6)
    assert one_minus_q * QSeries.geometric(6) == QSeries.one(6)


def test_qseries_rejects_negative_q():
    with pytest.raises(ValueError):
        QSeries.from_poly(Q**-1, 3)


def test_qseries_product_matches_truncated_product():
    rnd = random.Random(7)
    for _ in range(20):
        p = LaurentPoly({(rnd.randint(0, 5), rnd.randint(-2, 2), 0): rnd.randint(-3, 3) for _ in range(4)})
        r = LaurentPoly({(rnd.randint(0, 5), rnd.randint(-2, 2), 1): rnd.randint(-3, 3) for _ in range(4)})
        assert QSeries.from_poly(p, 4) * QSeries.from_poly(r, 4) == QSeries.from_poly(p * r, 4)
