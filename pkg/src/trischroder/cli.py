"""Command-line front end and the bundled verification suite.

Exit codes: 0 on success, 1 for bad input, 2 when a mathematical check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterator, Sequence

from .errors import InputError, TriSchError, VerificationError
from .grid import Partition, TriangularTriple, find_triples, parse_triple, validate_triple
from .invsets import D_map, generators, statistics, xi_k
from .knots import (
    appendixB,
    braid_invariants,
    build_braids,
    cable_params,
    kr_series,
    ors_check,
    u_text,
)
from .paths import boundary_data, enumerate_subpaths, path_statistics
from .poly import LaurentPoly, QSeries
from .recursion import ROUTES, catalan, eval_Q, eval_R_series, schroder
from .seqs import build_sequences
from .shuffle import hook_coefficients, slope_compliant

VERBS = ("schroder", "catalan", "kr", "hook", "sequences", "braid", "cable", "ors", "verify")
MIN_MAX_MN = 6


# -- verification suite -------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    subject: str
    passed: bool
    detail: str = ""


@dataclass
class VerifyReport:
    max_mn: int
    q_order: int
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary(self) -> dict[str, tuple[int, int]]:
        """``name -> (passed, total)``."""
        out: dict[str, list[int]] = {}
        for c in self.checks:
            row = out.setdefault(c.name, [0, 0])
            row[0] += c.passed
            row[1] += 1
        return {k: (v[0], v[1]) for k, v in out.items()}

    def to_json_obj(self) -> dict:
        return {
            "max_mn": self.max_mn,
            "q_order": self.q_order,
            "passed": self.passed,
            "summary": {k: {"passed": p, "total": n} for k, (p, n) in self.summary().items()},
            "failures": [
                {"check": c.name, "subject": c.subject, "detail": c.detail}
                for c in self.checks
                if not c.passed
            ],
        }


def valid_triples(max_mn: int) -> Iterator[TriangularTriple]:
    for m in range(1, max_mn + 1):
        for n in range(1, max_mn // m + 1):
            if gcd(m, n) != 1 or m * n < 2:
                continue
            for ell in range(1, m * n):
                yield validate_triple(m, n, ell)


def _run(check: Callable[[], str | None], name: str, subject: str) -> Check:
    try:
        detail = check()
    except TriSchError as exc:
        return Check(name, subject, False, str(exc))
    return Check(name, subject, detail is None, detail or "")


def _check_routes(t: TriangularTriple) -> str | None:
    schroder(t, "all")
    return None


def _check_dmap(t: TriangularTriple) -> str | None:
    for p in enumerate_subpaths(t):
        st = path_statistics(p)
        d = D_map(p)
        ds = statistics(d)
        g = generators(d)
        if ds.area_p != st.area:
            return f"area' = {ds.area_p} but area = {st.area} for {p.lam}"
        if st.dinv + ds.codinv_p != t.tau.size:
            return f"dinv + codinv' = {st.dinv + ds.codinv_p} for {p.lam}"
        if xi_k(d, -1, g.ngen) != 1:
            return f"xi_-1 = {xi_k(d, -1, g.ngen)} for {p.lam}"
    return None


def _check_xi(t: TriangularTriple) -> str | None:
    for p in enumerate_subpaths(t):
        d = D_map(p)
        g = generators(d)
        path_side = Counter(boundary_data(p).xi.values())
        set_side = Counter(xi_k(d, k, g.ngen) for k in g.cogen_nonneg)
        if path_side != set_side:
            return f"xi values {sorted(path_side.elements())} vs {sorted(set_side.elements())} for {p.lam}"
    return None


def _check_rq(t: TriangularTriple, order: int) -> str | None:
    seq = build_sequences(t)
    r = eval_R_series((seq.u, seq.v), order)
    q = QSeries.from_poly(eval_Q((seq.x, seq.y)), order)
    return None if r == q else f"R = {r.to_poly().to_text()} but Q = {q.to_poly().to_text()}"


def _check_delta(t: TriangularTriple) -> str | None:
    b = build_braids(t)
    bi, ci = braid_invariants(b.binary), braid_invariants(b.coxeter)
    if bi.c != 1:
        return f"binary braid closes to {bi.c} components"
    if bi.delta != t.tau.size or ci.delta != t.tau.size:
        return f"delta binary {bi.delta}, coxeter {ci.delta}, |tau| {t.tau.size}"
    return None


def _check_hook(t: TriangularTriple) -> str | None:
    llt, sch = hook_coefficients(t, "llt"), hook_coefficients(t, "schroder")
    return None if llt == sch else "llt and schroder hook coefficients differ"


def _check_ors(m: int, n: int, d: int) -> str | None:
    r = ors_check(m, n, d)
    return None if r.passed else f"lhs {u_text(r.lhs)} vs rhs {u_text(r.rhs)}"


def _check_appendix(a: int, b: int, g: int) -> str | None:
    rec = appendixB(a, b, g)
    cp = cable_params(a, b, g)
    if (cp.pair.u, cp.pair.v) != (rec.u, rec.v):
        return "cable sequences differ from the closed forms"
    return None


def verify_suite(max_mn: int, q_order: int = 8) -> VerifyReport:
    """Every check over every valid triple with ``m*n <= max_mn``.

    Hook equality runs on slope-compliant triples with ``|tau| <= 6``; the
    cable checks run on ``(m, n, d)`` with ``(md)(nd) <= max_mn``.
    """
    if max_mn < MIN_MAX_MN:
        raise InputError(f"--max-mn must be at least {MIN_MAX_MN}, got {max_mn}")
    start = time.perf_counter()
    rep = VerifyReport(max_mn, q_order)
    add = rep.checks.append
    for t in valid_triples(max_mn):
        s = str(t)
        add(_run(lambda: _check_routes(t), "routes", s))
        add(_run(lambda: _check_dmap(t), "dmap", s))
        add(_run(lambda: _check_xi(t), "xi", s))
        add(_run(lambda: _check_rq(t, q_order), "r_vs_q", s))
        add(_run(lambda: _check_delta(t), "delta", s))
        if t.tau.size <= 6 and slope_compliant(t):
            add(_run(lambda: _check_hook(t), "hook", s))
    for m in range(1, max_mn + 1):
        for n in range(1, max_mn + 1):
            if gcd(m, n) != 1:
                continue
            for d in range(1, max_mn + 1):
                if (m * d) * (n * d) > max_mn or (d == 1 and m * n < 2):
                    continue
                add(_run(lambda: _check_ors(m, n, d), "ors", f"{m},{n},{d}"))
                if d >= 2 and (m, n) != (1, 1):
                    add(_run(lambda: _check_appendix(m, n, d), "appendix_b", f"{m},{n},{d}"))
    rep.seconds = time.perf_counter() - start
    return rep


# -- argument handling ------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="trischroder", description="Triangular Schröder polynomials and KR series.")
    p.add_argument("verb", choices=VERBS)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--triple", help="m,n,l")
    src.add_argument("--partition", help="p1,p2,... (a triple is found with --bound)")
    src.add_argument("--mnd", help="m,n,d for cable and ors")
    p.add_argument("--route", choices=ROUTES + ("llt", "all"), default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--q-order", type=int, default=8)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--threads", type=_positive_int, default=None)
    p.add_argument("--bound", type=_positive_int, default=50)
    p.add_argument("--max-mn", type=int, default=12)
    return p


def _triple_from(args) -> TriangularTriple:
    if args.triple:
        return parse_triple(args.triple)
    if args.partition is not None:
        lam = Partition.parse(args.partition)
        found = find_triples(lam, args.bound)
        if not found:
            raise InputError(f"no triple with m, n <= {args.bound} cuts out {lam}")
        return found[0]
    raise InputError("this command needs --triple or --partition")


def _mnd_from(args) -> tuple[int, int, int]:
    if not args.mnd:
        raise InputError("this command needs --mnd m,n,d")
    try:
        m, n, d = (int(v) for v in args.mnd.split(","))
    except ValueError:
        raise InputError(f"expected m,n,d but got {args.mnd!r}") from None
    return m, n, d


def _emit(out, args, input_obj, result_text: str, result_json, delta, route) -> None:
    if args.format == "json":
        obj = {"input": input_obj, "result": result_json, "delta": delta, "route": route}
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        out.write(result_text + "\n")


def _poly_route(args, default: str = "recursion") -> str:
    route = args.route or default
    if route == "llt":
        raise InputError("route llt only applies to hook")
    return route


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, out)
    except TriSchError as exc:
        err.write(f"{exc}\n")
        return exc.exit_code
    except ValueError as exc:
        err.write(f"InputError: {exc}\n")
        return 1


def _dispatch(args, out) -> int:
    verb = args.verb
    if verb in ("schroder", "catalan"):
        t = _triple_from(args)
        route = _poly_route(args)
        p = schroder(t, route, args.threads)
        if verb == "catalan":
            p = p.specialize(a=0)
        _emit(out, args, {"triple": str(t)}, p.to_text(), p.to_json_obj(), t.tau.size, route)
        return 0
    if verb == "kr":
        t = _triple_from(args)
        route = _poly_route(args)
        kr = kr_series(t, args.q_order, route)
        text = f"# {kr.header()}\n{kr.body.to_text()}"
        inp = {"triple": str(t), "q_order": args.q_order}
        _emit(out, args, inp, text, kr.body.to_json_obj(), kr.delta, route)
        return 0
    if verb == "hook":
        t = _triple_from(args)
        route = args.route or "schroder"
        route = "llt" if route == "llt" else "schroder"
        coeffs = hook_coefficients(t, route, args.threads, bound=args.bound)
        if args.k is not None:
            if args.k < 0:
                raise InputError("--k must be nonnegative")
            p = coeffs[args.k] if args.k < len(coeffs) else LaurentPoly.zero()
            inp = {"triple": str(t), "k": args.k}
            _emit(out, args, inp, p.to_text(), p.to_json_obj(), t.tau.size, route)
        else:
            text = "\n".join(f"k={k}: {p.to_text()}" for k, p in enumerate(coeffs))
            _emit(out, args, {"triple": str(t)}, text, [p.to_json_obj() for p in coeffs],
                  t.tau.size, route)
        return 0
    if verb == "sequences":
        t = _triple_from(args)
        s = build_sequences(t)
        rows = {"w": s.w, "x": s.x, "y": s.y, "u": s.u, "v": s.v}
        text = "\n".join(f"{k} = {v}" for k, v in rows.items())
        _emit(out, args, {"triple": str(t)}, text, rows, t.tau.size, "sequences")
        return 0
    if verb == "braid":
        t = _triple_from(args)
        b = build_braids(t)
        res = {}
        lines = []
        for name, word in (("coxeter", b.coxeter), ("binary", b.binary)):
            inv = braid_invariants(word)
            res[name] = {"strands": word.strands, "word": str(word), "e": inv.e, "c": inv.c,
                         "delta": inv.delta}
            lines.append(f"{name}: strands={word.strands} e={inv.e} c={inv.c} delta={inv.delta}")
            lines.append(f"  {word}")
        _emit(out, args, {"triple": str(t)}, "\n".join(lines), res, t.tau.size, "braid")
        return 0
    if verb == "cable":
        m, n, d = _mnd_from(args)
        cp = cable_params(m, n, d)
        trip = str(cp.triple) if cp.triple is not None else None
        res = {"u": cp.pair.u, "v": cp.pair.v, "triple": trip}
        text = f"u = {cp.pair.u}\nv = {cp.pair.v}\ndelta = {cp.delta}\ntriple = {trip}"
        _emit(out, args, {"mnd": f"{m},{n},{d}"}, text, res, cp.delta, "cable")
        return 0
    if verb == "ors":
        m, n, d = _mnd_from(args)
        r = ors_check(m, n, d)
        res = {
            "lhs": r.lhs.to_json_obj(),
            "rhs": r.rhs.to_json_obj(),
            "p_jc": r.p_jc.to_json_obj(),
            "triple": str(r.triple),
            "passed": r.passed,
        }
        text = (
            f"triple = {r.triple}\ndelta = {r.delta}\nP_JC(u) = {u_text(r.p_jc)}\n"
            f"lhs = {u_text(r.lhs)}\nrhs = {u_text(r.rhs)}\n{'PASS' if r.passed else 'FAIL'}"
        )
        _emit(out, args, {"mnd": f"{m},{n},{d}"}, text, res, r.delta, "ors")
        return 0 if r.passed else VerificationError.exit_code
    if verb == "verify":
        rep = verify_suite(args.max_mn, args.q_order)
        if args.format == "json":
            out.write(json.dumps({"input": {"max_mn": args.max_mn, "q_order": args.q_order},
                                  "result": rep.to_json_obj(), "delta": None, "route": "all"},
                                 sort_keys=True) + "\n")
        else:
            for name, (ok, total) in rep.summary().items():
                out.write(f"{'PASS' if ok == total else 'FAIL'} {name}: {ok}/{total}\n")
            for c in rep.checks:
                if not c.passed:
                    out.write(f"  {c.name} {c.subject}: {c.detail}\n")
        return 0 if rep.passed else VerificationError.exit_code
    raise AssertionError(verb)  # argparse restricts the verb


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))
