import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from trischroder.errors import NoBezoutInRange, NotCoprime, StrandBound
from trischroder.grid import Partition, delta_mn, full_triangle, validate_triple
from trischroder.knots import (
    BraidWord,
    appendixB,
    braid_invariants,
    build_braids,
    cable_params,
    cox_power,
    coxeter_braid,
    cycle_count,
    kr_series,
    ors_check,
    u_text,
)
from trischroder.poly import A, ONE, Q, T, LaurentPoly, QSeries
from trischroder.seqs import build_sequences

partitions = st.lists(st.integers(1, 5), min_size=0, max_size=4).map(
    lambda ps: Partition(tuple(sorted(ps, reverse=True)))
)


def test_braid_word_round_trip():
    b = BraidWord.parse("1 2 1 3")
    assert b.strands == 4 and str(b) == "1 2 1 3"
    with pytest.raises(ValueError):
        BraidWord(2, (2,))


def test_trefoil_examples():
    braids = build_braids(validate_triple(2, 3, 5))
    assert braids.binary == BraidWord(2, (1, 1, 1))
    assert coxeter_braid(Partition.of(1), 2) == BraidWord(2, (1, 1, 1))
    inv = braid_invariants(braids.binary)
    assert (inv.e, inv.c, inv.delta) == (3, 1, 1)


def test_cable_braid_232():
    # (cox_2 on the first two of four strands) followed by cox_4^6
    t = cable_params(2, 3, 2).triple
    b = build_braids(t).binary
    assert b == BraidWord(4, (1,)) * cox_power(4, 6)
    assert braid_invariants(b).delta == 8


def test_strand_bound():
    with pytest.raises(StrandBound):
        coxeter_braid(Partition.of(3, 1), 3)


@given(partitions, st.integers(0, 3))
def test_coxeter_delta_is_size(lam, extra):
    M = lam.row(1) + 1 + extra
    b = coxeter_braid(lam, M)
    assert braid_invariants(b).delta == lam.size == oracles.braid_delta(M, list(b.letters))


def test_torus_delta():
    for M in range(1, 9):
        for N in range(1, 9):
            assert braid_invariants(cox_power(M, N)).delta == oracles.torus_delta(M, N)


def test_binary_braids_are_knots():
    for m, n in oracles.coprime_pairs(40):
        for ell in range(1, m * n):
            t = validate_triple(m, n, ell)
            b = build_braids(t).binary
            assert cycle_count(b.permutation()) == 1
            assert braid_invariants(b).delta == t.tau.size


def test_kr_series():
    kr = kr_series(validate_triple(2, 3, 5), order=2)
    assert kr.delta == 1
    assert kr.body == (ONE + A) * (Q + T + A) * (ONE + Q + Q**2)
    assert kr.series() == QSeries.from_poly(kr.body, 2)
    assert kr_series(validate_triple(4, 3, 11)).delta == 3
    for m, n in [(2, 5), (3, 4), (3, 5)]:
        assert kr_series(validate_triple(m, n, m * n - 1)).delta == delta_mn(m, n)


def test_cable_params():
    cp = cable_params(2, 3, 2)
    assert (cp.pair.u, cp.pair.v, cp.delta) == ("0100", "0000001", 8)
    assert str(cp.triple) == "5,8,31"
    cp = cable_params(3, 4, 1)
    assert (cp.pair.u, cp.pair.v) == ("100", "00001")
    assert cp.delta == delta_mn(3, 4)
    assert cycle_count(build_braids(cp.triple).binary.permutation()) == 1
    with pytest.raises(NotCoprime):
        cable_params(2, 4, 1)


def test_appendix_b_examples():
    rec = appendixB(2, 3, 2)
    assert (rec.c, rec.d, rec.m, rec.n, rec.ell) == (1, 2, 5, 8, 31)
    assert (rec.u, rec.v) == ("0100", "0000001")
    assert rec.tau == Partition.of(3, 2, 2, 1)
    rec = appendixB(1, 2, 2)
    assert (rec.c, rec.d) == (0, 1)
    assert rec.tau == full_triangle(2, 4)
    assert appendixB(3, 2, 2).tau == full_triangle(6, 4)
    with pytest.raises(NoBezoutInRange):
        appendixB(1, 1, 3)


def test_appendix_b_sweep():
    for a, b in oracles.coprime_pairs(36):
        for g in range(2, 7):
            if a * b * g * g > 36 or (a, b) == (1, 1):
                continue
            rec = appendixB(a, b, g)
            assert a * rec.d - b * rec.c == 1
            t = validate_triple(rec.m, rec.n, rec.ell)
            seq = build_sequences(t)
            assert (seq.u, seq.v) == (rec.u, rec.v)
            assert t.tau == full_triangle(g * a, g * b)
            cp = cable_params(a, b, g)
            assert (cp.pair.u, cp.pair.v) == (rec.u, rec.v)


@pytest.mark.parametrize("mnd", [(2, 3, 1), (2, 3, 2), (3, 4, 1), (2, 5, 2)])
def test_ors(mnd):
    rep = ors_check(*mnd)
    assert rep.passed
    m, n, d = mnd
    # P_JC(1) counts the paths in the full triangle
    assert sum(rep.p_jc.terms.values()) == len(oracles.down_sets(frozenset(full_triangle(m * d, n * d).cells())))


def test_ors_cusp():
    rep = ors_check(2, 3, 1)
    assert u_text(rep.p_jc) == "1 + u^2"
    assert rep.p_jc == LaurentPoly.parse("1 + t^2")


def test_ors_reference_values():
    # the compactified-Jacobian side, brute force over paths of the full triangle
    for m, n, d in [(2, 3, 2), (2, 5, 2)]:
        rep = ors_check(m, n, d)
        M, N = m * d, n * d
        cells = frozenset(full_triangle(M, N).cells())
        t = rep.triple
        expected = {}
        for lam in oracles.down_sets(cells):
            k = 2 * rep.delta - 2 * oracles.dinv(lam, t.m, t.n)
            expected[(0, k, 0)] = expected.get((0, k, 0), 0) + 1
        assert rep.p_jc == LaurentPoly(expected)
