"""Positive braids, normalizing exponents, and the topology-side identities.

The KR series of ``K_tau`` is ``(a t^{-1/2} q^{-1/2})^delta * S / (1 - q)``.
The half-integral prefactor is a pure regrading, so it is carried as the
integer ``delta`` and never multiplied in.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InternalMismatch, NoBezoutInRange, NotCoprime, StrandBound
from .grid import Partition, TriangularTriple, delta_mn, full_triangle, validate_triple
from .poly import LaurentPoly, QSeries
from .recursion import catalan, schroder
from .seqs import BinaryPair, build_sequences


@dataclass(frozen=True)
class BraidWord:
    """A positive braid: ``letters`` are Artin generator indices."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        bad = [i for i in self.letters if not 1 <= i < self.strands]
        if bad:
            raise ValueError(f"generators {bad} out of range for {self.strands} strands")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        return BraidWord(self.strands, self.letters * k)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    @classmethod
    def parse(cls, s: str, strands: int | None = None) -> "BraidWord":
        letters = tuple(int(v) for v in s.split())
        return cls(strands if strands is not None else max(letters, default=0) + 1, letters)

    def permutation(self) -> tuple[int, ...]:
        """Where each strand position ends up (0-based one-line form)."""
        perm = list(range(self.strands))
        for i in self.letters:
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return tuple(perm)


@dataclass(frozen=True)
class BraidInvariants:
    e: int
    c: int
    strands: int
    delta: int


@dataclass(frozen=True)
class Braids:
    coxeter: BraidWord
    binary: BraidWord | None


def cox(strands: int) -> BraidWord:
    return BraidWord(strands, tuple(range(1, strands)))


def cox_power(M: int, N: int) -> BraidWord:
    return cox(M) ** N


def jucys_murphy(M: int, i: int) -> BraidWord:
    """``(s_{M-i+1} ... s_{M-1})(s_{M-1} ... s_{M-i+1})``."""
    up = tuple(range(M - i + 1, M))
    return BraidWord(M, up + up[::-1])


def coxeter_braid(lam: Partition, M: int) -> BraidWord:
    if M <= lam.row(1):
        raise StrandBound(f"need more than {lam.row(1)} strands for {lam}, got {M}")
    mu = [lam.column(x) for x in range(1, M + 1)]
    word = BraidWord(M, ())
    for i in range(2, M + 1):
        word = word * jucys_murphy(M, i) ** (mu[i - 2] - mu[i - 1])
    return word * cox(M)


def binary_braid(pair: BinaryPair) -> BraidWord:
    """``(s_1...s_i)(s_1...s_{m-1})^k (s_2...s_{m-1})^l`` for ``u = 0^i 1 0^j``, ``v = 0^k 1 0^l``."""
    u, v = pair.u, pair.v
    if u.count("1") != 1 or v.count("1") != 1:
        raise ValueError("binary braids need exactly one 1 in each sequence")
    i, k = u.index("1"), v.index("1")
    strands = len(u)
    l = len(v) - k - 1
    letters = tuple(range(1, i + 1)) + tuple(range(1, strands)) * k + tuple(range(2, strands)) * l
    return BraidWord(strands, letters)


def build_braids(source: TriangularTriple | Partition, M: int | None = None) -> Braids:
    """Coxeter braid of the partition and, for a triple, the binary braid of its sequences.

    ``M`` defaults to ``tau_1 + 1`` strands.
    """
    if isinstance(source, TriangularTriple):
        lam = source.tau
        seq = build_sequences(source)
        binary = binary_braid(BinaryPair(seq.u, seq.v))
    else:
        lam, binary = source, None
    strands = lam.row(1) + 1 if M is None else M
    return Braids(coxeter_braid(lam, strands), binary)


def cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    count = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        count += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return count


def braid_invariants(b: BraidWord) -> BraidInvariants:
    e = len(b.letters)
    c = cycle_count(b.permutation())
    twice = e + c - b.strands
    if twice % 2:
        raise InternalMismatch(f"odd e + c - strands for braid {b}")
    return BraidInvariants(e, c, b.strands, twice // 2)


# -- KR series ----------------------------------------------------------------

@dataclass(frozen=True)
class KrSeries:
    """``P^KR = (a t^{-1/2} q^{-1/2})^delta * body``, exact through ``q^order``.

    ``body`` is the polynomial ``S * (1 + q + ... + q^order)``; its
    coefficients agree with ``S / (1 - q)`` up to ``q^order``.
    """

    delta: int
    order: int
    body: LaurentPoly

    def series(self) -> QSeries:
        return QSeries.from_poly(self.body, self.order)

    def header(self) -> str:
        return (
            f"P^KR = (a t^(-1/2) q^(-1/2))^{self.delta} * body, "
            f"body = S/(1-q) truncated after q^{self.order}"
        )


def kr_series(t: TriangularTriple, order: int = 8, route: str = "recursion") -> KrSeries:
    if order < 0:
        raise ValueError("order must be nonnegative")
    geometric = LaurentPoly({(i, 0, 0): 1 for i in range(order + 1)})
    return KrSeries(t.tau.size, order, schroder(t, route) * geometric)


# -- Appendix B closed forms and cables ----------------------------------------

@dataclass(frozen=True)
class AppendixB:
    c: int
    d: int
    m: int
    n: int
    ell: int
    tau: Partition
    u: str
    v: str

    @property
    def triple(self) -> TriangularTriple:
        return validate_triple(self.m, self.n, self.ell)


def _bezout(a: int, b: int) -> tuple[int, int]:
    """``c, d`` with ``0 <= c <= a``, ``1 <= d <= b`` and ``a*d - b*c = 1``."""
    for d in range(1, b + 1):
        if (a * d - 1) % b == 0:
            c = (a * d - 1) // b
            if 0 <= c <= a:
                return c, d
    raise NoBezoutInRange(f"no c <= {a}, d <= {b} with {a}d - {b}c = 1")


def _closed_forms(a: int, b: int, g: int, c: int, d: int) -> AppendixB:
    m, n = g * a + c, g * b + d
    ell = (g * b + d) * g * a - 1
    u = "0" * (g - 1) + "1" + "0" * (g * (a - 1))
    v = "0" * (g * b) + "1"
    return AppendixB(c, d, m, n, ell, full_triangle(g * a, g * b), u, v)


def appendixB(a: int, b: int, g: int) -> AppendixB:
    """Triple cutting out ``tau_{ga,gb}`` with its sequence pair in closed form.

    ``c = 0`` is admitted when ``a = 1``; ``(a, b) = (1, 1)`` is rejected.
    The closed forms are checked against :func:`build_sequences`.
    """
    if a < 1 or b < 1 or gcd(a, b) != 1:
        raise NotCoprime(f"({a},{b}) is not a coprime pair of positive integers")
    if g < 2:
        raise ValueError("g must be at least 2")
    if (a, b) == (1, 1):
        raise NoBezoutInRange("(a, b) = (1, 1) has no positive c, d with ad - bc = 1")
    c, d = _bezout(a, b)
    rec = _closed_forms(a, b, g, c, d)
    _check_closed_forms(rec)
    return rec


def _check_closed_forms(rec: AppendixB) -> None:
    t = validate_triple(rec.m, rec.n, rec.ell)
    if t.tau != rec.tau:
        raise InternalMismatch(f"tau_{{{t}}} = {t.tau} but expected {rec.tau}")
    seq = build_sequences(t)
    if (seq.u, seq.v) != (rec.u, rec.v):
        raise InternalMismatch(
            f"sequences of {t} are ({seq.u},{seq.v}), closed forms give ({rec.u},{rec.v})"
        )


@dataclass(frozen=True)
class CableParams:
    m: int
    n: int
    d: int
    pair: BinaryPair
    delta: int
    triple: TriangularTriple


def cable_params(m: int, n: int, d: int) -> CableParams:
    """Sequences of the ``(d, mnd+1)``-cable of ``T(m, n)`` and a triple for ``tau_{md,nd}``."""
    if m < 1 or n < 1 or gcd(m, n) != 1:
        raise NotCoprime(f"({m},{n}) is not a coprime pair of positive integers")
    if d < 1:
        raise ValueError("d must be at least 1")
    pair = BinaryPair("0" * (d - 1) + "1" + "0" * ((m - 1) * d), "0" * (n * d) + "1")
    if d == 1:
        triple = validate_triple(m, n, m * n - 1) if m * n > 1 else None
    else:
        # the Appendix B triple, using c = 0 for the (1, 1) case it excludes
        c, dd = _bezout(m, n)
        rec = _closed_forms(m, n, d, c, dd)
        _check_closed_forms(rec)
        triple = rec.triple
    return CableParams(m, n, d, pair, delta_mn(m * d, n * d), triple)


# -- ORS at q = 1 ---------------------------------------------------------------

@dataclass(frozen=True)
class OrsReport:
    """Polynomials in ``u`` (stored in the t slot) and ``a``."""

    m: int
    n: int
    d: int
    delta: int
    triple: TriangularTriple
    lhs: LaurentPoly
    rhs: LaurentPoly
    p_jc: LaurentPoly

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def u_text(p: LaurentPoly) -> str:
    return p.to_text().replace("t", "u")


def ors_check(m: int, n: int, d: int) -> OrsReport:
    """Compare the lowest a-degree part of ``(1-q) P^KR`` at ``q=1, t=u^-2``
    with ``a^delta u^-delta P_JC(u)``.

    The left side comes from the recursion; ``P_JC = u^{2 delta} C(1, u^-2)``
    comes from the path enumeration.
    """
    cp = cable_params(m, n, d)
    t, delta = cp.triple, cp.delta
    if t is None:
        raise ValueError("the unknot (m = n = 1, d = 1) has no triple")
    if t.tau.size != delta:
        raise InternalMismatch(f"|tau| = {t.tau.size} differs from delta = {delta}")
    s = schroder(t, "recursion").specialize(q=1, t_sub="u^(-2)")
    # (a t^{-1/2})^delta at t = u^-2 is (a u)^delta
    full = s.shift(t=delta, a=delta)
    lhs = LaurentPoly({e: c for e, c in full.terms.items() if e[2] == delta})
    p_jc = catalan(t, "paths").specialize(q=1, t_sub="u^(-2)").shift(t=2 * delta)
    rhs = p_jc.shift(t=-delta, a=delta)
    return OrsReport(m, n, d, delta, t, lhs, rhs, p_jc)
