"""The trinary recursion Q, the binary recursion R, and the Schröder
polynomial of a triple computed three independent ways.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import CycleDetected, DomainError, InvarianceViolation, NonKnotInput, RouteMismatch
from .grid import Partition, TriangularTriple, find_triples, validate_triple
from .invsets import enumerate_inv0, generators, shift_I, statistics, xi_k
from .paths import DyckPath, boundary_data, dinv_of, subpartitions
from .poly import ONE, ZERO, LaurentPoly, QSeries, poly_sum
from .seqs import BULLET, BinaryPair, TrinaryPair, build_sequences

ROUTES = ("recursion", "paths", "invsets")


def _a_factor(xi: int) -> LaurentPoly:
    """1 + a t^{-xi}."""
    return LaurentPoly._raw({(0, 0, 0): 1, (0, -xi, 1): 1})


def _ones(s: str) -> int:
    return s.count("1")


# -- Q ----------------------------------------------------------------------

def _q_step(x: str, y: str) -> tuple[int, list[tuple[str, str]]] | None:
    """Head case and children of a state; ``None`` for the base case.

    Case 0 is ``(0,0)``, case 1 is ``(1,1)``; every other admissible head
    passes its single child through unchanged (case 2).
    """
    if not x.strip(BULLET) and not y.strip(BULLET):
        return None
    hx, hy, tx, ty = x[0], y[0], x[1:], y[1:]
    if hx == "0" and hy == "0":
        return 0, [(tx + "1", ty + "1"), (tx + "0", ty + "0")]
    if hx == "1" and hy == "0":
        return 2, [(tx + "1", ty + BULLET)]
    if hx == BULLET and hy == BULLET:
        return 2, [(tx + BULLET, ty + BULLET)]
    if hx == "1" and hy == "1":
        return 1, [(tx + BULLET, ty + BULLET)]
    if hx == "0" and hy == "1":
        return 2, [(tx + BULLET, ty + "1")]
    raise DomainError(f"inadmissible head pair ({hx},{hy}) in ({x},{y})")


# Inside eval_Q a polynomial is a dict keyed by one packed integer
# e_q*B^2 + e_t*B + e_a, so a monomial shift is a single integer addition.
_B = 1 << 24
_H = _B >> 1


def _pack(eq: int, et: int, ea: int) -> int:
    return (eq * _B + et) * _B + ea


def _unpack(k: int) -> tuple[int, int, int]:
    ea = (k + _H) % _B - _H
    k = (k - ea) // _B
    et = (k + _H) % _B - _H
    return ((k - et) // _B, et, ea)


def _merge_shifted(p: dict[int, int], dp: int, r: dict[int, int], dr: int) -> dict[int, int]:
    out = {k + dp: c for k, c in p.items()}
    get = out.get
    for k, c in r.items():
        k += dr
        v = get(k, 0) + c
        if v:
            out[k] = v
        else:
            del out[k]
    return out


def _combine(case: int, k: int, vals: list[dict[int, int]]) -> dict[int, int]:
    # weights are monomials, so shifts and one addition suffice
    if case == 2:
        return vals[0]
    if case == 0:
        return _merge_shifted(vals[0], _pack(0, -k, 0), vals[1], _pack(1, -k, 0))
    return _merge_shifted(vals[0], _pack(0, k, 0), vals[0], _pack(0, 0, 1))


def eval_Q(pair: TrinaryPair | tuple[str, str]) -> LaurentPoly:
    """Evaluate Q on a knot pair (one 1 in each sequence).

    Memoized per call; a state reached again while still being expanded
    raises :class:`CycleDetected`.
    """
    x, y = (pair.x, pair.y) if isinstance(pair, TrinaryPair) else pair
    if _ones(x) != 1 or _ones(y) != 1:
        raise NonKnotInput(f"({x},{y}) has {_ones(x)} and {_ones(y)} ones; use eval_R_series")
    memo: dict[tuple[str, str], dict[int, int]] = {}
    on_stack: set[tuple[str, str]] = set()
    root = (x, y)
    stack: list[tuple[tuple[str, str], list | None]] = [(root, None)]
    while stack:
        state, kids = stack[-1]
        if state in memo:
            stack.pop()
            continue
        if kids is None:
            step = _q_step(*state)
            if step is None:
                memo[state] = {0: 1}
                stack.pop()
                continue
            stack[-1] = (state, step)
            on_stack.add(state)
            pending = [c for c in step[1] if c not in memo]
            for c in pending:
                if c in on_stack:
                    raise CycleDetected(f"state {c} repeats while evaluating {root}")
                stack.append((c, None))
            continue
        case, kids = kids
        memo[state] = _combine(case, _ones(state[0][1:]), [memo[c] for c in kids])
        on_stack.discard(state)
        stack.pop()
    return LaurentPoly._raw({_unpack(k): c for k, c in memo[root].items()})


# -- R ----------------------------------------------------------------------

def eval_R_series(pair: BinaryPair | tuple[str, str], order: int) -> QSeries:
    """R as a power series in q up to ``q^order``; needs ``|u| = |v|``."""
    u, v = (pair.u, pair.v) if isinstance(pair, BinaryPair) else pair
    if _ones(u) != _ones(v):
        raise DomainError(f"|u| = {_ones(u)} differs from |v| = {_ones(v)}")
    if set(u + v) - {"0", "1"}:
        raise DomainError("binary sequences only")
    base = QSeries.geometric(order).scale_poly(LaurentPoly._raw({(0, 0, 0): 1, (0, 0, 1): 1}))
    memo: dict[tuple[str, str, int], QSeries] = {}

    def rec(u: str, v: str, budget: int) -> QSeries:
        key = (u, v, budget)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if not u or not v:
            rest = u or v
            res = base.truncate(budget) ** len(rest)
        else:
            hu, hv, tu, tv = u[0], v[0], u[1:], v[1:]
            k = _ones(tu)
            if hu == "0" and hv == "0":
                res = rec(tu + "1", tv + "1", budget)
                if budget:
                    res = res + QSeries(budget, [ZERO] + rec(tu + "0", tv + "0", budget - 1).coeffs)
                res = res.scale_poly(LaurentPoly.monomial(t=-k))
            elif hu == "1" and hv == "0":
                res = rec(tu + "1", tv, budget)
            elif hu == "0" and hv == "1":
                res = rec(tu, tv + "1", budget)
            else:
                res = rec(tu, tv, budget).scale_poly(
                    LaurentPoly.monomial(t=k) + LaurentPoly.monomial(a=1)
                )
        memo[key] = res
        return res

    return rec(u, v, order)


# -- Schröder polynomial ---------------------------------------------------

def _paths_chunk(args) -> LaurentPoly:
    m, n, ell, first_rows = args
    t = validate_triple(m, n, ell)
    total = []
    for lam in subpartitions(t.tau):
        if lam.row(1) not in first_rows:
            continue
        total.append(_path_term(DyckPath(lam, t)))
    return poly_sum(total)


def _path_term(p: DyckPath) -> LaurentPoly:
    t = p.triple
    term = LaurentPoly.monomial(q=t.tau.size - p.lam.size, t=dinv_of(p.lam, t.m, t.n))
    for xi in boundary_data(p).xi.values():
        term = term * _a_factor(xi)
    return term


def _invsets_term(d, t: TriangularTriple) -> LaurentPoly:
    w = shift_I(d, t)
    st = statistics(w)
    g = generators(w)
    term = LaurentPoly.monomial(q=st.area_p, t=t.tau.size - st.codinv_p)
    for k in g.cogen_nonneg:
        term = term * _a_factor(xi_k(w, k, g.ngen))
    return term


def _invsets_chunk(args) -> LaurentPoly:
    m, n, ell, idx, workers = args
    t = validate_triple(m, n, ell)
    sets = enumerate_inv0(t)
    return poly_sum(_invsets_term(d, t) for d in sets[idx::workers])


def resolve_threads(threads: int | None) -> int:
    if threads is None:
        env = os.environ.get("TRISCH_THREADS")
        threads = int(env) if env else 1
    return max(1, threads)


def schroder_paths(t: TriangularTriple, threads: int | None = None) -> LaurentPoly:
    workers = resolve_threads(threads)
    if workers == 1 or t.tau.size < 8:
        return poly_sum(_path_term(DyckPath(lam, t)) for lam in subpartitions(t.tau))
    # split on the first row length; the sum does not depend on the schedule
    rows = list(range(t.tau.row(1) + 1))
    chunks = [(t.m, t.n, t.ell, frozenset(rows[i::workers])) for i in range(workers)]
    with ProcessPoolExecutor(workers) as ex:
        return poly_sum(ex.map(_paths_chunk, chunks))


def schroder_invsets(t: TriangularTriple, threads: int | None = None) -> LaurentPoly:
    workers = resolve_threads(threads)
    if workers == 1 or t.tau.size < 8:
        return poly_sum(_invsets_term(d, t) for d in enumerate_inv0(t))
    chunks = [(t.m, t.n, t.ell, i, workers) for i in range(workers)]
    with ProcessPoolExecutor(workers) as ex:
        return poly_sum(ex.map(_invsets_chunk, chunks))


def schroder_recursion(t: TriangularTriple) -> LaurentPoly:
    seq = build_sequences(t)
    return eval_Q(seq.trinary).shift(t=t.tau.size)


def schroder(t: TriangularTriple, route: str = "recursion", threads: int | None = None) -> LaurentPoly:
    if route == "recursion":
        return schroder_recursion(t)
    if route == "paths":
        return schroder_paths(t, threads)
    if route == "invsets":
        return schroder_invsets(t, threads)
    if route == "all":
        results = {r: schroder(t, r, threads) for r in ROUTES}
        first = results["recursion"]
        if any(p != first for p in results.values()):
            raise RouteMismatch(
                f"routes disagree for {t}: "
                + "; ".join(f"{k}={v.to_text()}" for k, v in results.items()),
                results,
            )
        return first
    raise ValueError(f"unknown route {route!r}")


def catalan(t: TriangularTriple, route: str = "recursion", threads: int | None = None) -> LaurentPoly:
    return schroder(t, route, threads).specialize(a=0)


def rational_schroder_full_cogen(m: int, n: int) -> LaurentPoly:
    """Sum over 0-normalized (m,n)-sets of q^area t^dinv prod over all cogenerators.

    Negative cogenerators are included; this is the ``ell = mn - 1`` formula.
    """
    t = validate_triple(m, n, m * n - 1)
    total = []
    for d in enumerate_inv0(t):
        st = statistics(d)
        g = generators(d)
        term = LaurentPoly.monomial(q=st.area, t=st.dinv)
        for k in g.cogen:
            term = term * _a_factor(xi_k(d, k, g.ngen))
        total.append(term)
    return poly_sum(total)


@dataclass(frozen=True)
class CrossReport:
    partition: Partition
    triples: tuple[TriangularTriple, ...]
    polynomial: LaurentPoly | None


def cross_verify(lam: Partition, bound: int, route: str = "recursion") -> CrossReport:
    """Schröder polynomial of every triple cutting out ``lam``, asserted equal."""
    triples = find_triples(lam, bound)
    results = {str(t): schroder(t, route) for t in triples}
    values = list(results.values())
    if values and any(v != values[0] for v in values):
        raise InvarianceViolation(
            f"triples for {lam} disagree: "
            + "; ".join(f"{k} -> {v.to_text()}" for k, v in results.items()),
            results,
        )
    return CrossReport(lam, tuple(triples), values[0] if values else None)
