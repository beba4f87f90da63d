from collections import Counter

import pytest

import oracles
from trischroder.grid import Box, Partition, anderson_label, validate_triple
from trischroder.paths import (
    DyckPath,
    boundary_data,
    enumerate_subpaths,
    path_statistics,
    shifted_label,
)


def _path(parts, triple):
    return DyckPath(Partition(parts), validate_triple(*triple))


@pytest.mark.parametrize("triple, count", [((4, 3, 11), 5), ((8, 5, 26), 9), ((2, 3, 5), 2)])
def test_path_counts(triple, count):
    assert len(enumerate_subpaths(validate_triple(*triple))) == count


def test_enumeration_order_is_lexicographic():
    lams = [p.lam.parts for p in enumerate_subpaths(validate_triple(8, 5, 26))]
    assert lams == sorted(lams)
    assert lams == [(), (1,), (1, 1), (2,), (2, 1), (2, 2), (3,), (3, 1), (3, 2)]


def test_subpaths_match_down_set_oracle():
    for m, n in oracles.coprime_pairs(30):
        for ell in range(1, m * n):
            t = validate_triple(m, n, ell)
            ours = sorted(p.lam.parts for p in enumerate_subpaths(t))
            ref = sorted(oracles.rows_of(s) for s in oracles.down_sets(oracles.tau_cells(m, n, ell)))
            assert ours == ref


@pytest.mark.parametrize(
    "parts, area, dinv", [((2, 1), 0, 3), ((), 3, 0), ((1,), 2, 1), ((1, 1), 1, 1), ((2,), 1, 2)]
)
def test_statistics_43(parts, area, dinv):
    st = path_statistics(_path(parts, (4, 3, 11)))
    assert (st.area, st.dinv) == (area, dinv)


def test_dinv_matches_oracle():
    for m, n in oracles.coprime_pairs(30):
        for ell in range(1, m * n):
            t = validate_triple(m, n, ell)
            for p in enumerate_subpaths(t):
                cells = frozenset(p.lam.cells())
                assert path_statistics(p).dinv == oracles.dinv(cells, m, n)


def test_boundary_examples():
    b = boundary_data(_path((2, 1), (4, 3, 11)))
    assert set(b.addable) == {Box(3, 1), Box(2, 2), Box(1, 3)}
    assert sorted(b.xi.values()) == [0, 1, 2]

    b = boundary_data(_path((), (2, 3, 5)))
    assert b.addable == (Box(1, 1),)
    assert b.xi == {Box(1, 1): 0}

    b = boundary_data(_path((3, 2), (8, 5, 26)))
    assert sorted(b.xi.values()) == [0, 1, 2]


def test_boundary_invariants():
    for m, n in oracles.coprime_pairs(30):
        for ell in range(1, m * n):
            t = validate_triple(m, n, ell)
            for p in enumerate_subpaths(t):
                b = boundary_data(p)
                assert len(b.east) == n
                assert len({anderson_label(m, n, e) for e in b.east}) == n
                assert Counter(b.addable) == Counter(oracles.addable(frozenset(p.lam.cells())))
                assert all(shifted_label(t, box) >= 0 for box in b.addable)


def test_area_bounds():
    t = validate_triple(8, 5, 26)
    stats = [path_statistics(p) for p in enumerate_subpaths(t)]
    assert all(0 <= s.area <= t.tau.size for s in stats)
    assert stats[0].area == t.tau.size and stats[-1].area == 0


def test_path_must_fit():
    with pytest.raises(ValueError):
        _path((3,), (4, 3, 11))
