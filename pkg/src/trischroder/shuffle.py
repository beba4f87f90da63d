"""Hook components of the shuffle theorem under a line.

A Dyck path ``pi`` gives a tuple of skew rows ``nu(pi)``, its rotation into
columns ``nu(pi)^R``, and the vertical strip ``rho_pi``.  Tableaux on these
shapes carry attacking inversions; summing them over paths with the fillings
of weight ``(k, floor(s) - k)`` in the super alphabet recovers the
``a^k`` coefficient of the Schröder polynomial.

Both kinds of shape expose the same small interface (cells, a rational
position per cell, and row/column adjacencies), so enumeration, inversions
and standardization are written once.  A plain tableau is a super tableau
that only uses X letters.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterator, Mapping, NamedTuple, Sequence

from .errors import InternalMismatch, SlopeTooShallow
from .grid import Box, Partition, TriangularTriple, find_triples, validate_triple
from .paths import DyckPath, dinv_of, subpartitions
from .poly import LaurentPoly, poly_sum
from .recursion import resolve_threads, schroder

Cell = Hashable


# -- letters ----------------------------------------------------------------

class Letter(NamedTuple):
    """``k_X`` or ``k_Y``; ordered 1_X < 2_X < ... < ... < 2_Y < 1_Y."""

    alpha: str
    k: int

    @classmethod
    def x(cls, k: int) -> "Letter":
        return cls("X", k)

    @classmethod
    def y(cls, k: int) -> "Letter":
        return cls("Y", k)

    @property
    def is_y(self) -> bool:
        return self.alpha == "Y"

    def key(self) -> tuple[int, int]:
        return (1, -self.k) if self.is_y else (0, self.k)

    def __str__(self) -> str:
        return f"{self.k}{self.alpha}"


def super_alphabet(max_x: int, max_y: int) -> list[Letter]:
    """Letters in increasing order."""
    return [Letter.x(k) for k in range(1, max_x + 1)] + [Letter.y(k) for k in range(max_y, 0, -1)]


# -- shapes -----------------------------------------------------------------

@dataclass(frozen=True)
class SkewTuple:
    """Components ``outer/inner`` indexed ``j = 1, 2, ...``.

    A cell is ``(j, x, y)`` (north-east corner), with content
    ``x - y + j*eps``.
    """

    components: tuple[tuple[Partition, Partition], ...]
    eps: Fraction

    def __post_init__(self):
        if not 0 < self.eps * len(self.components) < 1:
            raise ValueError("need 0 < eps * (number of components) < 1")
        for outer, inner in self.components:
            if not inner.is_subpartition_of(outer):
                raise ValueError(f"{inner} is not inside {outer}")

    @classmethod
    def rows(cls, spans: Sequence[tuple[int, int]], eps: Fraction) -> "SkewTuple":
        """Single-row components with cells ``x`` in ``(lo, hi]``."""
        return cls(tuple((Partition((hi,)), Partition((lo,))) for lo, hi in spans), eps)

    @classmethod
    def columns(cls, spans: Sequence[tuple[int, int]], eps: Fraction) -> "SkewTuple":
        """Single-column components: column ``x`` holding rows ``1..height``."""
        return cls(
            tuple((Partition((x,) * h), Partition((x - 1,) * h)) for x, h in spans), eps
        )

    def component_cells(self, j: int) -> list[tuple[int, int, int]]:
        outer, inner = self.components[j - 1]
        return [
            (j, x, y)
            for y in range(1, outer.rows + 1)
            for x in range(inner.row(y) + 1, outer.row(y) + 1)
        ]

    def cells(self) -> list[tuple[int, int, int]]:
        return [c for j in range(1, len(self.components) + 1) for c in self.component_cells(j)]

    def position(self, cell) -> Fraction:
        j, x, y = cell
        return x - y + j * self.eps

    def adjacencies(self) -> tuple[list[tuple], list[tuple]]:
        cells = set(self.cells())
        rows = [(c, (c[0], c[1] + 1, c[2])) for c in cells if (c[0], c[1] + 1, c[2]) in cells]
        cols = [(c, (c[0], c[1], c[2] + 1)) for c in cells if (c[0], c[1], c[2] + 1) in cells]
        return sorted(rows), sorted(cols)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(o.size - i.size for o, i in self.components)

    def __len__(self) -> int:
        return sum(self.sizes)


@dataclass(frozen=True)
class RhoStrip:
    """``(lam + 1^{floor(s)}) / lam``: one cell per row, ordered by ``phi``."""

    lam: Partition
    triple: TriangularTriple
    phi: Mapping[Box, Fraction] = field(compare=False)

    def cells(self) -> list[Box]:
        return sorted(self.phi, key=lambda b: b.y)

    def position(self, cell: Box) -> Fraction:
        return self.phi[cell]

    def adjacencies(self) -> tuple[list[tuple], list[tuple]]:
        cells = set(self.phi)
        cols = [(b, Box(b.x, b.y + 1)) for b in cells if Box(b.x, b.y + 1) in cells]
        return [], sorted(cols)

    def columns(self) -> dict[int, list[Box]]:
        out: dict[int, list[Box]] = {}
        for b in self.cells():
            out.setdefault(b.x, []).append(b)
        return out

    def __len__(self) -> int:
        return len(self.phi)


Shape = SkewTuple | RhoStrip


def rho_strip(p: DyckPath) -> RhoStrip:
    t = p.triple
    s = t.s
    floor_s = s.numerator // s.denominator
    slope = Fraction(t.n, t.m)
    phi = {}
    for y in range(1, floor_s + 1):
        a = p.lam.row(y)
        phi[Box(a + 1, y)] = s - slope * a - y
    if len(set(phi.values())) != len(phi):
        raise InternalMismatch(f"repeated phi value on rho for {p.lam} in {t}")
    return RhoStrip(p.lam, t, phi)


# -- nu(pi) -----------------------------------------------------------------

@dataclass(frozen=True)
class NuData:
    nu: SkewTuple
    nu_R: SkewTuple
    h: tuple[Fraction, ...]
    sigma: tuple[int, ...]
    gamma: tuple[tuple[int, int], ...]
    #: ``order[j-1]`` is the gamma index placed at position j of nu
    order: tuple[int, ...]
    rho: RhoStrip
    #: cell of ``nu_R`` to the matching cell of ``rho``
    psi: Mapping[tuple[int, int, int], Box] = field(compare=False)


def nu_of_path(p: DyckPath) -> NuData:
    t = p.triple
    r, s = t.r, t.s
    floor_s = s.numerator // s.denominator
    rt = r.numerator // r.denominator + 1
    eps = Fraction(1, rt + 1)
    tau_c, lam_c = t.tau.conjugate(), p.lam.conjugate()
    tau_t = (floor_s,) + tuple(tau_c.row(i) for i in range(1, rt))
    lam_t = (floor_s,) + tuple(lam_c.row(i) for i in range(1, rt)) + (0,)
    slope = Fraction(t.n, t.m)
    h = tuple(s - slope * (i - 1) - tau_t[i - 1] for i in range(1, rt + 1))
    if len(set(h)) != len(h):
        raise InternalMismatch(f"repeated h value for {t}")
    gamma = tuple((tau_t[i] - lam_t[i], tau_t[i] - lam_t[i + 1]) for i in range(rt))
    order = tuple(sorted(range(1, rt + 1), key=lambda i: h[i - 1]))
    rev = sorted(h[::-1])
    sigma = tuple(rev.index(v) + 1 for v in h[::-1])
    spans = [gamma[i - 1] for i in order]
    nu = SkewTuple.rows(spans, eps)
    nu_R = SkewTuple.columns([(hi, hi - lo) for lo, hi in spans], eps)
    rho = rho_strip(p)
    psi = {}
    for j, (lo, hi) in enumerate(spans, 1):
        c = order[j - 1]
        for yy in range(1, hi - lo + 1):
            x = hi - yy + 1
            y = tau_t[c - 1] - x + 1
            box = Box(p.lam.row(y) + 1, y)
            if box.x != c or box not in rho.phi:
                raise InternalMismatch(f"column {c} of rho does not match gamma_{c}")
            psi[(j, hi, yy)] = box
    return NuData(nu, nu_R, h, sigma, gamma, order, rho, psi)


# -- statistics -------------------------------------------------------------

def _attacking(p1: Fraction, p2: Fraction) -> bool:
    return 0 < abs(p1 - p2) < 1


def count_attacks(shape: Shape) -> int:
    pos = [shape.position(c) for c in shape.cells()]
    return sum(1 for a, b in itertools.combinations(pos, 2) if _attacking(a, b))


def count_inversions(shape: Shape, entries: Mapping[Cell, Letter]) -> int:
    """Attacking pairs whose earlier cell holds a larger letter, or an equal Y letter."""
    cells = sorted(shape.cells(), key=shape.position)
    pos = [shape.position(c) for c in cells]
    keys = [entries[c].key() for c in cells]
    ys = [entries[c].is_y for c in cells]
    inv = 0
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            if not _attacking(pos[i], pos[j]):
                continue
            if keys[i] > keys[j] or (keys[i] == keys[j] and ys[i]):
                inv += 1
    return inv


@dataclass(frozen=True, eq=False)
class SuperTableau:
    shape: Shape
    entries: Mapping[Cell, Letter]

    @property
    def inv(self) -> int:
        return count_inversions(self.shape, self.entries)

    def weight(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Counts of ``1_X, 2_X, ...`` and of ``1_Y, 2_Y, ...``."""
        xs = [e.k for e in self.entries.values() if not e.is_y]
        ys = [e.k for e in self.entries.values() if e.is_y]
        return (
            tuple(xs.count(k) for k in range(1, max(xs, default=0) + 1)),
            tuple(ys.count(k) for k in range(1, max(ys, default=0) + 1)),
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, SuperTableau) and self.shape == other.shape and dict(
            self.entries
        ) == dict(other.entries)

    def __hash__(self) -> int:
        return hash(tuple(sorted((repr(c), e) for c, e in self.entries.items())))


def _legal_pair(lo: Letter, hi: Letter, strict_alpha: str) -> bool:
    """``lo`` sits left of / below ``hi``; equality is illegal for ``strict_alpha`` letters."""
    if lo.key() < hi.key():
        return True
    return lo == hi and lo.alpha != strict_alpha


def is_legal(shape: Shape, entries: Mapping[Cell, Letter]) -> bool:
    rows, cols = shape.adjacencies()
    return all(_legal_pair(entries[a], entries[b], "Y") for a, b in rows) and all(
        _legal_pair(entries[a], entries[b], "X") for a, b in cols
    )


def enumerate_tableaux(
    shape: Shape,
    max_x: int = 0,
    max_y: int = 0,
    weight: tuple[Sequence[int], Sequence[int]] | None = None,
) -> list[SuperTableau]:
    """All legal fillings with letters up to ``max_x`` / ``max_y``, or of a fixed weight.

    X letters strictly increase up columns, Y letters strictly increase along
    rows, and entries weakly increase otherwise.  With ``max_y = 0`` these are
    ordinary semistandard tableaux.
    """
    if weight is not None:
        mu, eta = (tuple(w) for w in weight)
        max_x, max_y = len(mu), len(eta)
        if sum(mu) + sum(eta) != len(shape):
            return []
        budget = {Letter.x(k): c for k, c in enumerate(mu, 1)}
        budget.update({Letter.y(k): c for k, c in enumerate(eta, 1)})
    else:
        budget = None
    letters = super_alphabet(max_x, max_y)
    cells = shape.cells()
    rows, cols = shape.adjacencies()
    checks: dict[Cell, list[tuple[Cell, bool, str]]] = {c: [] for c in cells}
    index = {c: i for i, c in enumerate(cells)}
    for pairs, strict in ((rows, "Y"), (cols, "X")):
        for a, b in pairs:
            # check each constraint when its later cell is filled
            if index[a] < index[b]:
                checks[b].append((a, True, strict))
            else:
                checks[a].append((b, False, strict))
    out: list[SuperTableau] = []
    filling: dict[Cell, Letter] = {}

    def rec(i: int) -> None:
        if i == len(cells):
            out.append(SuperTableau(shape, dict(filling)))
            return
        c = cells[i]
        for v in letters:
            if budget is not None and budget[v] == 0:
                continue
            ok = True
            for other, other_is_low, strict in checks[c]:
                lo, hi = (filling[other], v) if other_is_low else (v, filling[other])
                if not _legal_pair(lo, hi, strict):
                    ok = False
                    break
            if not ok:
                continue
            filling[c] = v
            if budget is not None:
                budget[v] -= 1
            rec(i + 1)
            if budget is not None:
                budget[v] += 1
            del filling[c]

    rec(0)
    return out


def standard_tableaux(shape: Shape) -> list[dict[Cell, int]]:
    """Standard fillings ``cell -> 1..n``, increasing along rows and up columns."""
    n = len(shape)
    return [
        {c: e.k for c, e in T.entries.items()}
        for T in enumerate_tableaux(shape, weight=((1,) * n, ()))
    ]


def standard_inv(shape: Shape, S: Mapping[Cell, int]) -> int:
    return count_inversions(shape, {c: Letter.x(v) for c, v in S.items()})


# -- LLT polynomials ----------------------------------------------------------

#: monomial exponent vector -> coefficient in t
MonomialExpansion = dict[tuple, LaurentPoly]


def _add_term(acc: dict, key, coeff: LaurentPoly) -> None:
    v = acc.get(key)
    acc[key] = coeff if v is None else v + coeff
    if acc[key].is_zero():
        del acc[key]


def _x_exponents(weight: tuple[int, ...], num_vars: int) -> tuple[int, ...]:
    return weight + (0,) * (num_vars - len(weight))


def llt_poly(shape: Shape, num_vars: int) -> MonomialExpansion:
    """``sum_T t^inv(T) x^T`` over semistandard fillings with entries at most ``num_vars``."""
    if num_vars < 1:
        raise ValueError("num_vars must be at least 1")
    acc: MonomialExpansion = {}
    for T in enumerate_tableaux(shape, max_x=num_vars):
        _add_term(acc, _x_exponents(T.weight()[0], num_vars), LaurentPoly.monomial(t=T.inv))
    return acc


def super_llt_poly(shape: Shape, max_x: int, max_y: int) -> MonomialExpansion:
    """Superized LLT polynomial; keys are ``(x exponents, y exponents)``."""
    acc: MonomialExpansion = {}
    for T in enumerate_tableaux(shape, max_x=max_x, max_y=max_y):
        mu, eta = T.weight()
        key = (_x_exponents(mu, max_x), _x_exponents(eta, max_y))
        _add_term(acc, key, LaurentPoly.monomial(t=T.inv))
    return acc


# -- the bijection Psi --------------------------------------------------------

def transport_psi(T: SuperTableau, data: NuData) -> SuperTableau:
    """Move a filling of ``nu(pi)^R`` onto ``rho_pi``, column by column."""
    if T.shape != data.nu_R:
        raise ValueError("tableau is not on the rotated tuple of this path")
    return SuperTableau(data.rho, {data.psi[c]: v for c, v in T.entries.items()})


# -- standardization and Gessel expansions -----------------------------------

def standardize(T: SuperTableau, mode: str = "plain") -> dict[Cell, int]:
    """Standard filling ranking cells by letter, ties broken by position.

    ``plain`` breaks every tie by increasing position.  ``super`` does that
    for X letters and uses decreasing position for Y letters.
    """
    if mode not in ("plain", "super"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "plain" and any(e.is_y for e in T.entries.values()):
        raise ValueError("plain standardization needs X letters only")
    shape = T.shape

    def key(c):
        e = T.entries[c]
        p = shape.position(c)
        return (e.key(), -p if e.is_y else p)

    ranked = sorted(T.entries, key=key)
    return {c: i for i, c in enumerate(ranked, 1)}


def descent_set(shape: Shape, S: Mapping[Cell, int]) -> frozenset[int]:
    """``k`` such that the cell holding ``k + 1`` comes earlier in position order."""
    by_value = {v: c for c, v in S.items()}
    n = len(by_value)
    return frozenset(
        k for k in range(1, n) if shape.position(by_value[k]) > shape.position(by_value[k + 1])
    )


def gessel_expand(
    n: int,
    J,
    num_vars: int = 0,
    mode: str = "plain",
    max_x: int = 0,
    max_y: int = 0,
) -> dict[tuple, int]:
    """Monomial expansion of the (super) fundamental quasisymmetric function.

    Plain mode sums ``x_{a_1}...x_{a_n}`` over ``a_1 <= ... <= a_n`` in
    ``1..num_vars`` with ``a_i = a_{i+1}`` only for ``i`` outside ``J``.  Super
    mode runs over the super alphabet with X ties needing ``i`` outside ``J``
    and Y ties needing ``i`` in ``J``; keys are ``(x exponents, y exponents)``.
    """
    J = frozenset(J)
    if any(not 1 <= i <= n - 1 for i in J):
        raise ValueError(f"J must lie in 1..{n - 1}")
    if mode == "plain":
        letters = super_alphabet(num_vars, 0)
    elif mode == "super":
        letters = super_alphabet(max_x, max_y)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    out: dict[tuple, int] = {}
    for word in itertools.combinations_with_replacement(letters, n):
        if any(
            word[i - 1] == word[i] and ((i in J) != word[i].is_y) for i in range(1, n)
        ):
            continue
        xs = tuple(sum(1 for w in word if w == Letter.x(k)) for k in range(1, len(letters) + 1))
        if mode == "plain":
            key = xs[:num_vars]
        else:
            key = (
                tuple(sum(1 for w in word if w == Letter.x(k)) for k in range(1, max_x + 1)),
                tuple(sum(1 for w in word if w == Letter.y(k)) for k in range(1, max_y + 1)),
            )
        out[key] = out.get(key, 0) + 1
    return out


def gessel_side(shape: Shape, num_vars: int = 0, mode: str = "plain", max_x: int = 0,
                max_y: int = 0) -> MonomialExpansion:
    """``sum over standard S of t^inv(S) Q_{n, descents(S)}``."""
    n = len(shape)
    acc: MonomialExpansion = {}
    for S in standard_tableaux(shape):
        w = LaurentPoly.monomial(t=standard_inv(shape, S))
        for key, c in gessel_expand(n, descent_set(shape, S), num_vars, mode, max_x, max_y).items():
            _add_term(acc, key, w.scale(c))
    return acc


# -- hook coefficients --------------------------------------------------------

def _floor_s(t: TriangularTriple) -> int:
    return (t.ell // t.m)


def slope_compliant(t: TriangularTriple) -> bool:
    return _floor_s(t) >= t.tau.rows + 1


def _llt_hook_term(lam: Partition, t: TriangularTriple) -> list[LaurentPoly]:
    p = DyckPath(lam, t)
    rho = rho_strip(p)
    I = count_attacks(rho)
    base = LaurentPoly.monomial(q=t.tau.size - lam.size, t=dinv_of(lam, t.m, t.n) - I)
    fs = _floor_s(t)
    out = []
    for k in range(fs + 1):
        tabs = enumerate_tableaux(rho, weight=((k,) if k else (), (fs - k,) if fs - k else ()))
        out.append(poly_sum(base.shift(t=T.inv) for T in tabs))
    return out


def _llt_chunk(args) -> list[LaurentPoly]:
    m, n, ell, idx, workers = args
    t = validate_triple(m, n, ell)
    lams = list(subpartitions(t.tau))[idx::workers]
    total = [LaurentPoly.zero()] * (_floor_s(t) + 1)
    for lam in lams:
        total = [a + b for a, b in zip(total, _llt_hook_term(lam, t))]
    return total


def hook_coefficients(
    t: TriangularTriple, route: str = "schroder", threads: int | None = None, bound: int = 30
) -> list[LaurentPoly]:
    """Hook components indexed by ``k``; trailing zeros dropped.

    The ``llt`` route needs ``floor(l/m) >= rows(tau) + 1``; otherwise
    :class:`SlopeTooShallow` carries a compliant triple for the same
    partition when one exists with ``m, n <= bound``.
    """
    if route == "schroder":
        return schroder(t).a_coefficients()
    if route != "llt":
        raise ValueError(f"unknown route {route!r}")
    if not slope_compliant(t):
        better = [c for c in find_triples(t.tau, bound) if slope_compliant(c)]
        hint = better[0] if better else None
        msg = f"floor({t.ell}/{t.m}) = {_floor_s(t)} is not above rows(tau) = {t.tau.rows}"
        if hint is not None:
            msg += f"; try --triple {hint}"
        raise SlopeTooShallow(msg, hint)
    workers = resolve_threads(threads)
    if workers == 1:
        total = _llt_chunk((t.m, t.n, t.ell, 0, 1))
    else:
        chunks = [(t.m, t.n, t.ell, i, workers) for i in range(workers)]
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_llt_chunk, chunks))
        total = [poly_sum(col) for col in zip(*parts)]
    while total and total[-1].is_zero():
        total.pop()
    return total


def iter_paths(t: TriangularTriple) -> Iterator[DyckPath]:
    for lam in subpartitions(t.tau):
        yield DyckPath(lam, t)
