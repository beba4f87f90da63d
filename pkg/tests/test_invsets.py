import pytest

import oracles
from trischroder.errors import DomainError, NotInvariant
from trischroder.grid import Partition, semigroup_gaps, validate_triple
from trischroder.invsets import (
    D_map,
    bij_A,
    bij_A_inverse,
    construct,
    enumerate_inv0,
    generators,
    shift_I,
    shift_I_inverse,
    statistics,
    window_word,
    xi_k,
)
from trischroder.paths import DyckPath, enumerate_subpaths, path_statistics
from trischroder.seqs import build_sequences

# (gaps, area, 3-generators, codinv, dinv, cogenerators)
TABLE_43 = [
    ((), 0, (0, 1, 2), 0, 3, (-3, -2, -1)),
    ((1,), 1, (0, 2, 4), 1, 2, (-1, 1)),
    ((2,), 1, (0, 1, 5), 2, 1, (-3, 2)),
    ((1, 2), 2, (0, 4, 5), 2, 1, (1, 2)),
    ((1, 2, 5), 3, (0, 4, 8), 3, 0, (5,)),
]

# 8,5,26 by path: gaps >= 13 of D(pi), 5-generators, nonnegative cogenerators,
# area', codinv', dinv, xi values of the factors.  The statistics of (1,1) and
# (2) are recomputed from the definitions (codinv' of {13,16,21} is 1+2+1).
TABLE_8526 = [
    ((), (13, 16, 18, 21, 26), (4, 7, 15, 23, 31), (26,), 5, 5, 0, (0,)),
    ((1,), (13, 16, 18, 21), (4, 7, 15, 23, 26), (18, 21), 4, 4, 1, (0, 1)),
    ((1, 1), (13, 16, 21), (4, 7, 15, 18, 26), (10, 21), 3, 4, 1, (0, 1)),
    ((2,), (13, 16, 18), (4, 7, 15, 21, 23), (16, 18), 3, 3, 2, (0, 1)),
    ((2, 1), (13, 16), (4, 7, 15, 18, 21), (10, 13, 16), 2, 2, 3, (0, 1, 2)),
    ((3,), (13, 18), (4, 7, 15, 16, 23), (11, 18), 2, 3, 2, (0, 1)),
    ((2, 2), (16,), (4, 7, 13, 15, 21), (10, 16), 1, 2, 3, (0, 1)),
    ((3, 1), (13,), (4, 7, 15, 16, 18), (10, 11, 13), 1, 1, 4, (0, 1, 2)),
    ((3, 2), (), (4, 7, 13, 15, 16), (8, 10, 11), 0, 0, 5, (0, 1, 2)),
]

# A(pi) minus the semigroup, in the same path order
A_SETS_8526 = [
    (), (27,), (19, 27), (22, 27), (19, 22, 27), (17, 22, 27), (14, 19, 22, 27),
    (17, 19, 22, 27), (14, 17, 19, 22, 27),
]


@pytest.mark.parametrize("row", TABLE_43)
def test_table_43(row):
    gaps, area, ngen, codinv, dinv, cogen = row
    d = construct(4, 3, gaps)
    g = generators(d)
    st = statistics(d)
    assert (st.area, st.codinv, st.dinv) == (area, codinv, dinv)
    assert g.ngen == ngen
    assert g.cogen == cogen


def test_table_43_matches_paths():
    t = validate_triple(4, 3, 11)
    by_gaps = {tuple(bij_A(p).sorted_gaps()): path_statistics(p) for p in enumerate_subpaths(t)}
    for gaps, area, _, _, dinv, _ in TABLE_43:
        st = by_gaps[gaps]
        assert (st.area, st.dinv) == (area, dinv)


def test_construct_errors():
    assert construct(4, 3, {1, 2}).gaps == {1, 2}
    with pytest.raises(NotInvariant) as exc:
        construct(4, 3, {5})
    assert exc.value.gap == 5
    assert construct(5, 7, ()).gaps == frozenset()


def test_xi_examples():
    full = construct(4, 3, ())
    assert xi_k(full, -3) == 2
    assert xi_k(full, -1) == 0
    assert xi_k(construct(4, 3, {1, 2, 5}), 5) == 0


@pytest.mark.parametrize("row, aset", list(zip(TABLE_8526, A_SETS_8526)))
def test_table_8526(row, aset):
    parts, high_gaps, ngen, cogen, area_p, codinv_p, dinv, xis = row
    t = validate_triple(8, 5, 26)
    p = DyckPath(Partition(parts), t)
    a = bij_A(p)
    assert sorted(set(semigroup_gaps(8, 5)) - a.gaps) == list(aset)
    d = D_map(p)
    assert [k for k in range(13) if k in d] == [4, 7, 9, 12]
    assert tuple(g for g in d.sorted_gaps() if g >= 13) == high_gaps
    g = generators(d)
    st = statistics(d)
    assert g.ngen == ngen
    assert g.cogen_nonneg == cogen
    assert (st.area_p, st.codinv_p, path_statistics(p).dinv) == (area_p, codinv_p, dinv)
    assert sorted(xi_k(d, k) for k in g.cogen_nonneg) == list(xis)


def test_window_words():
    d = D_map(DyckPath(Partition(()), validate_triple(8, 5, 26)))
    assert window_word(d) == "0000100101001"
    gaps_74 = {0, 1, 2, 3, 4, 6, 7, 8, 10}
    assert window_word(construct(7, 4, gaps_74)) == "00000100010"
    assert window_word(construct(3, 5, ())) == "1" * 8


def test_bij_A_examples():
    t43 = validate_triple(4, 3, 11)
    assert bij_A(DyckPath(Partition.of(1), t43)).sorted_gaps() == [1, 2]
    t = validate_triple(7, 3, 11)
    full = bij_A(DyckPath(t.tau, t))
    outside = set(validate_triple(7, 3, 20).tau.cells()) - set(t.tau.cells())
    assert full.gaps == {21 - 3 * x - 7 * y for x, y in outside}


def test_inv0_matches_gap_subset_oracle_full_triangle():
    for m, n in oracles.coprime_pairs(30):
        t = validate_triple(m, n, m * n - 1)
        ours = sorted(sorted(d.gaps) for d in enumerate_inv0(t))
        assert ours == sorted(sorted(g) for g in oracles.invariant_gap_sets(m, n))


def test_bijection_and_identities():
    for m, n in oracles.coprime_pairs(30):
        for ell in range(1, m * n):
            t = validate_triple(m, n, ell)
            paths = enumerate_subpaths(t)
            sets = enumerate_inv0(t)
            assert len(paths) == len(sets)
            assert {bij_A(p) for p in paths} == set(sets)
            for p in paths:
                a = bij_A(p)
                assert bij_A_inverse(a, t) == p
                assert shift_I_inverse(shift_I(a, t), t) == a
                d = shift_I(a, t)
                st = statistics(d)
                ps = path_statistics(p)
                assert st.area_p == ps.area
                assert ps.dinv + st.codinv_p == t.tau.size
                assert xi_k(d, -1) == 1
                off = m * n - ell
                assert [k for k in range(off) if k in a] == [
                    k for k in range(off) if k not in semigroup_gaps(m, n)
                ]


def test_area_dinv_preserved_full_triangle():
    for m, n in oracles.coprime_pairs(30):
        t = validate_triple(m, n, m * n - 1)
        for p in enumerate_subpaths(t):
            st = statistics(bij_A(p))
            ps = path_statistics(p)
            assert (st.area, st.dinv) == (ps.area, ps.dinv)


def test_shifted_labels_are_nonneg_cogenerators():
    from trischroder.paths import boundary_data, shifted_label

    for m, n in oracles.coprime_pairs(30):
        for ell in range(1, m * n):
            t = validate_triple(m, n, ell)
            for p in enumerate_subpaths(t):
                labels = sorted(shifted_label(t, b) for b in boundary_data(p).addable)
                assert labels == list(generators(D_map(p)).cogen_nonneg)


def test_shift_I_examples():
    t = validate_triple(8, 5, 26)
    d = shift_I(construct(8, 5, set(semigroup_gaps(8, 5)) - {27}), t)
    assert [k for k in range(13) if k in d] == [4, 7, 9, 12]
    assert [g for g in d.sorted_gaps() if g >= 13] == [13, 16, 18, 21]
    with pytest.raises(DomainError):
        shift_I(construct(8, 5, ()), t)


def test_shift_by_seven_for_5418():
    t = validate_triple(5, 4, 18)
    assert build_sequences(t).w == "000000010"
    for a in enumerate_inv0(t):
        d = shift_I(a, t)
        # the shift moves every element up by 7
        assert all((k + 7 in d) == (k in a) for k in range(40))
