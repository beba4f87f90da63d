"""Subsets of the nonnegative integers closed under +m and +n.

A set is stored through its finite complement (its gaps).  The maps here are
the path-to-set bijection ``A``, the shift ``I`` onto sets seen through the
length ``m+n`` window, and their composite ``D``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd
from typing import Iterable, Iterator

from .errors import DomainError, NotCoprime, NotInvariant
from .grid import (
    Partition,
    TriangularTriple,
    anderson_label,
    cut_partition,
    delta_mn,
    in_semigroup,
    semigroup_gaps,
)
from .paths import DyckPath


@dataclass(frozen=True)
class InvariantSet:
    m: int
    n: int
    gaps: frozenset[int]

    def __contains__(self, k: int) -> bool:
        return k >= 0 and k not in self.gaps

    def sorted_gaps(self) -> list[int]:
        return sorted(self.gaps)

    @property
    def scan_limit(self) -> int:
        """Every interesting element lies below this bound."""
        return (max(self.gaps) if self.gaps else -1) + self.m + self.n + 1

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.sorted_gaps())) + "}"


@dataclass(frozen=True)
class Generators:
    ngen: tuple[int, ...]
    mgen: tuple[int, ...]
    cogen: tuple[int, ...]
    cogen_nonneg: tuple[int, ...]


@dataclass(frozen=True)
class SetStats:
    area: int
    codinv: int
    dinv: int
    area_p: int
    codinv_p: int


def construct(m: int, n: int, gaps: Iterable[int]) -> InvariantSet:
    if m <= 0 or n <= 0 or gcd(m, n) != 1:
        raise NotCoprime(f"({m},{n}) is not a coprime pair")
    gs = frozenset(int(g) for g in gaps)
    for g in sorted(gs):
        if g < 0:
            raise NotInvariant(f"negative gap {g}", g)
        for step in (m, n):
            if g - step >= 0 and g - step not in gs:
                raise NotInvariant(f"gap {g} but {g - step} lies in the set", g)
    return InvariantSet(m, n, gs)


def generators(d: InvariantSet) -> Generators:
    m, n = d.m, d.n
    top = d.scan_limit
    ngen = tuple(k for k in range(top) if k in d and (k - n) not in d)
    mgen = tuple(k for k in range(top) if k in d and (k - m) not in d)
    cogen = tuple(
        k for k in range(-min(m, n), top) if k not in d and (k + n) in d and (k + m) in d
    )
    return Generators(ngen, mgen, cogen, tuple(k for k in cogen if k >= 0))


def xi_k(d: InvariantSet, k: int, ngen: Iterable[int] | None = None) -> int:
    """Number of n-generators in ``[n+k+1, k+n+m]``."""
    if ngen is None:
        ngen = generators(d).ngen
    lo, hi = d.n + k + 1, k + d.n + d.m
    return sum(1 for x in ngen if lo <= x <= hi)


def statistics(d: InvariantSet) -> SetStats:
    m, n = d.m, d.n
    ngen = generators(d).ngen
    gaps = d.gaps
    codinv = sum(1 for k in ngen for g in gaps if k <= g <= k + m - 1)
    high = [g for g in gaps if g >= n + m]
    xi_m1 = xi_k(d, -1, ngen)
    codinv_p = sum(1 for k in ngen for g in high if k <= g <= k + m - 1) - comb(xi_m1, 2)
    return SetStats(
        area=len(gaps),
        codinv=codinv,
        dinv=delta_mn(m, n) - codinv,
        area_p=len(high),
        codinv_p=codinv_p,
    )


def window_word(d: InvariantSet) -> str:
    """Indicator of the set on ``[0, m+n-1]``."""
    return "".join("1" if i in d else "0" for i in range(d.m + d.n))


# -- the path bijection A ---------------------------------------------------

def _outside_labels(t: TriangularTriple) -> frozenset[int]:
    """Labels of the cells of tau_{m,n} that are not in tau_{m,n,ell}."""
    full = cut_partition(t.m, t.n, t.m * t.n - 1)
    return frozenset(
        anderson_label(t.m, t.n, c) for c in full.cells() if not t.tau.contains(*c)
    )


def bij_A(p: DyckPath) -> InvariantSet:
    t = p.triple
    full = cut_partition(t.m, t.n, t.m * t.n - 1)
    gaps = frozenset(anderson_label(t.m, t.n, c) for c in full.cells() if not p.lam.contains(*c))
    return InvariantSet(t.m, t.n, gaps)


def bij_A_inverse(d: InvariantSet, t: TriangularTriple) -> DyckPath:
    if (d.m, d.n) != (t.m, t.n):
        raise DomainError("set and triple use different (m, n)")
    full = cut_partition(t.m, t.n, t.m * t.n - 1)
    rows = []
    for y in range(1, full.rows + 1):
        row = 0
        for x in range(1, full.row(y) + 1):
            if anderson_label(t.m, t.n, (x, y)) in d:
                row = x
        rows.append(row)
    lam = Partition(tuple(rows))
    return DyckPath(lam, t)


def in_inv0(d: InvariantSet, t: TriangularTriple) -> bool:
    return 0 in d and _outside_labels(t) <= d.gaps


def enumerate_inv0(t: TriangularTriple) -> list[InvariantSet]:
    """All 0-normalized invariant sets whose gaps contain the labels outside tau.

    Built directly as down-closed subsets of the semigroup gaps, without
    going through Dyck paths.
    """
    m, n = t.m, t.n
    base = semigroup_gaps(m, n)
    forced = _outside_labels(t)
    base_set = set(base)
    out: list[InvariantSet] = []

    def rec(i: int, chosen: set[int]) -> None:
        if i == len(base):
            out.append(InvariantSet(m, n, frozenset(chosen)))
            return
        g = base[i]
        can_gap = all(g - s < 0 or g - s not in base_set or g - s in chosen for s in (m, n))
        # a gap g forces g-m, g-n to be gaps too (when they are semigroup gaps)
        if g not in forced:
            rec(i + 1, chosen)
        if can_gap:
            chosen.add(g)
            rec(i + 1, chosen)
            chosen.discard(g)

    rec(0, set())
    return sorted(out, key=lambda d: (len(d.gaps), d.sorted_gaps()))


# -- the shift I and the composite D ---------------------------------------

def _offset(t: TriangularTriple) -> int:
    return t.m * t.n - t.ell - (t.m + t.n)


def shift_I(d: InvariantSet, t: TriangularTriple) -> InvariantSet:
    """``(D - (mn - ell) + (n + m))`` intersected with the nonnegative integers."""
    if (d.m, d.n) != (t.m, t.n) or not in_inv0(d, t):
        raise DomainError(f"set {d} is not in Inv0 for triple {t}")
    off = _offset(t)
    gaps = frozenset(g - off for g in d.gaps if g - off >= 0)
    if off < 0:
        # negative shift exposes new small values below -off; those come from
        # negative integers and are gaps
        gaps |= frozenset(range(-off))
    return InvariantSet(t.m, t.n, gaps)


def shift_I_inverse(d: InvariantSet, t: TriangularTriple) -> InvariantSet:
    """``(D' + mn - ell - (n + m))`` united with the semigroup."""
    off = _offset(t)
    top = d.scan_limit + abs(off) + t.m * t.n
    members = {k + off for k in range(top) if k in d}
    gaps = frozenset(
        g for g in range(top + abs(off)) if g not in members and not in_semigroup(g, t.m, t.n)
    )
    return InvariantSet(t.m, t.n, gaps)


def D_map(p: DyckPath) -> InvariantSet:
    return shift_I(bij_A(p), p.triple)


def iter_window_sets(t: TriangularTriple) -> Iterator[InvariantSet]:
    for d in enumerate_inv0(t):
        yield shift_I(d, t)
