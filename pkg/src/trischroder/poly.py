"""Sparse Laurent polynomials in q, t, a with integer coefficients, and
q-truncated power series whose coefficients are Laurent polynomials in t, a.

Exponents are stored as ``(e_q, e_t, e_a)`` keys.  The canonical term order is
ascending in ``(e_a, e_t, e_q)``, which groups terms by a-degree.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Iterator, Mapping

from .errors import ParseError

Exps = tuple[int, int, int]

_VARS = ("q", "t", "a")


def _sort_key(e: Exps) -> tuple[int, int, int]:
    return (e[2], e[1], e[0])


class LaurentPoly:
    """Immutable sparse polynomial in q, t^{±1}, a (all exponents integral)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exps, int] | None = None):
        clean: dict[Exps, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[(int(e[0]), int(e[1]), int(e[2]))] = int(c)
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Exps, int]) -> "LaurentPoly":
        # trusted constructor: caller guarantees no zero coefficients
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw({(0, 0, 0): 1})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({(0, 0, 0): c} if c else {})

    @classmethod
    def monomial(cls, q: int = 0, t: int = 0, a: int = 0, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({(q, t, a): coeff} if coeff else {})

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[Exps, int]:
        """Copy of the term dictionary ``{(e_q, e_t, e_a): coeff}``."""
        return dict(self._terms)

    def items(self) -> list[tuple[Exps, int]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]))

    def __iter__(self) -> Iterator[tuple[Exps, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, q: int = 0, t: int = 0, a: int = 0) -> int:
        return self._terms.get((q, t, a), 0)

    def degree(self, var: str) -> int:
        """Maximal exponent of ``var``; raises on the zero polynomial."""
        i = _VARS.index(var)
        return max(e[i] for e in self._terms)

    def min_degree(self, var: str) -> int:
        i = _VARS.index(var)
        return min(e[i] for e in self._terms)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if not self._terms or not other._terms:
            return LaurentPoly.zero()
        out: dict[Exps, int] = {}
        for (q1, t1, a1), c1 in self._terms.items():
            for (q2, t2, a2), c2 in other._terms.items():
                e = (q1 + q2, t1 + t2, a1 + a2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPoly._raw({(e[0] * k, e[1] * k, e[2] * k): c ** (-k)})
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, q: int = 0, t: int = 0, a: int = 0) -> "LaurentPoly":
        """Multiply by the monomial q^q t^t a^a."""
        if not (q or t or a):
            return self
        return LaurentPoly._raw(
            {(e[0] + q, e[1] + t, e[2] + a): c for e, c in self._terms.items()}
        )

    def scale(self, c: int) -> "LaurentPoly":
        if not c:
            return LaurentPoly.zero()
        return LaurentPoly._raw({e: c * v for e, v in self._terms.items()})

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # -- specialization -----------------------------------------------------
    def specialize(
        self,
        q: int | None = None,
        a: int | None = None,
        t_sub: str | None = None,
    ) -> "LaurentPoly":
        """Substitute integer values for q and/or a.

        ``t_sub="u^(-2)"`` replaces t^j by u^(-2j); the result keeps u in the
        t slot.
        """
        if t_sub not in (None, "u^(-2)"):
            raise ValueError(f"unsupported t substitution {t_sub!r}")
        out: dict[Exps, int] = {}
        for (eq, et, ea), c in self._terms.items():
            if q is not None:
                if eq < 0 and q not in (1, -1):
                    raise ValueError("negative q power needs q = ±1")
                c *= q ** abs(eq)
                eq = 0
            if a is not None:
                if ea < 0 and a not in (1, -1):
                    raise ValueError("negative a power needs a = ±1")
                c *= a ** abs(ea)
                ea = 0
            if t_sub is not None:
                et = -2 * et
            if c:
                key = (eq, et, ea)
                out[key] = out.get(key, 0) + c
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    def a_coefficients(self) -> list["LaurentPoly"]:
        """``[p_0, p_1, ...]`` with ``self = sum_k a^k p_k``; empty for zero."""
        if not self._terms:
            return []
        lo = min(e[2] for e in self._terms)
        if lo < 0:
            raise ValueError("negative a-degree has no a-coefficient list")
        top = max(e[2] for e in self._terms)
        parts: list[dict[Exps, int]] = [{} for _ in range(top + 1)]
        for (eq, et, ea), c in self._terms.items():
            parts[ea][(eq, et, 0)] = c
        return [LaurentPoly._raw(p) for p in parts]

    def map_terms(self, fn) -> "LaurentPoly":
        """Rebuild from ``fn((eq, et, ea), c) -> ((eq, et, ea), c)``."""
        out: dict[Exps, int] = {}
        for e, c in self._terms.items():
            e2, c2 = fn(e, c)
            out[e2] = out.get(e2, 0) + c2
        return LaurentPoly(out)

    # -- codecs -------------------------------------------------------------
    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_term_text(e, c) for e, c in self.items())

    def to_json_obj(self) -> dict:
        return {"terms": [[ea, et, eq, str(c)] for (eq, et, ea), c in self.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def codec(self, fmt: str) -> str:
        if fmt == "text":
            return self.to_text()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown format {fmt!r}")

    @classmethod
    def parse(cls, s: str, fmt: str = "text") -> "LaurentPoly":
        if fmt == "text":
            return parse_text(s)
        if fmt == "json":
            return parse_json(s)
        raise ValueError(f"unknown format {fmt!r}")


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")


def _term_text(e: Exps, c: int) -> str:
    factors = []
    for name, k in zip(_VARS, e):
        if k == 1:
            factors.append(name)
        elif k:
            factors.append(f"{name}^{k}")
    if not factors:
        return str(c)
    body = "*".join(factors)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[qta])(?:\^(?P<exp>-?\d+))?)\s*")


def parse_text(s: str) -> LaurentPoly:
    """Inverse of :meth:`LaurentPoly.to_text`; accepts factors in any order."""
    text = s.strip()
    if text == "0":
        return LaurentPoly.zero()
    if not text:
        raise ParseError("empty polynomial", 0)
    out: dict[Exps, int] = {}
    pos = 0
    n = len(s)
    while True:
        # one term: optional sign, then factors separated by '*'
        while pos < n and s[pos].isspace():
            pos += 1
        sign = 1
        if pos < n and s[pos] == "-":
            sign = -1
            pos += 1
        coeff = 1
        exps = [0, 0, 0]
        seen_factor = False
        while True:
            m = _TOKEN.match(s, pos)
            if not m or m.end() == pos:
                raise ParseError("expected integer or variable", pos)
            if m.group("int") is not None:
                coeff *= int(m.group("int"))
            else:
                k = int(m.group("exp")) if m.group("exp") is not None else 1
                exps[_VARS.index(m.group("var"))] += k
            seen_factor = True
            pos = m.end()
            if pos < n and s[pos] == "*":
                pos += 1
                continue
            break
        if not seen_factor:
            raise ParseError("empty term", pos)
        key = (exps[0], exps[1], exps[2])
        out[key] = out.get(key, 0) + sign * coeff
        if pos >= n:
            break
        if s[pos] != "+":
            raise ParseError(f"unexpected character {s[pos]!r}", pos)
        pos += 1
    return LaurentPoly(out)


def parse_json(s: str | dict) -> LaurentPoly:
    try:
        obj = json.loads(s) if isinstance(s, str) else s
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(obj, dict) or not isinstance(obj.get("terms"), list):
        raise ParseError("expected an object with a 'terms' list", 0)
    out: dict[Exps, int] = {}
    for i, entry in enumerate(obj["terms"]):
        if (
            not isinstance(entry, list)
            or len(entry) != 4
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in entry[:3])
            or not isinstance(entry[3], str)
        ):
            raise ParseError("malformed term entry", i)
        try:
            c = int(entry[3])
        except ValueError:
            raise ParseError(f"bad coefficient {entry[3]!r}", i) from None
        ea, et, eq = entry[:3]
        key = (eq, et, ea)
        out[key] = out.get(key, 0) + c
    return LaurentPoly(out)


# Handy generators.
Q = LaurentPoly.monomial(q=1)
T = LaurentPoly.monomial(t=1)
A = LaurentPoly.monomial(a=1)
ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()


def poly_sum(items: Iterable[LaurentPoly]) -> LaurentPoly:
    """Sum without rebuilding the accumulator on every step."""
    acc: dict[Exps, int] = {}
    for p in items:
        for e, c in p._terms.items():
            acc[e] = acc.get(e, 0) + c
    return LaurentPoly._raw({e: c for e, c in acc.items() if c})


def arithmetic(p1: LaurentPoly, p2: LaurentPoly, kind: str) -> LaurentPoly:
    if kind == "add":
        return p1 + p2
    if kind == "mul":
        return p1 * p2
    raise ValueError(f"unknown operation {kind!r}")


class QSeries:
    """Power series in q truncated after ``q^order``.

    ``coeffs[i]`` is the coefficient of q^i, a Laurent polynomial in t and a.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[LaurentPoly] | None = None):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = list(coeffs) if coeffs is not None else []
        cs = cs[: order + 1]
        cs += [ZERO] * (order + 1 - len(cs))
        for c in cs:
            if any(e[0] for e in c._terms):
                raise ValueError("QSeries coefficients must not involve q")
        self.order = order
        self.coeffs = cs

    @classmethod
    def from_poly(cls, p: LaurentPoly, order: int) -> "QSeries":
        """Truncate a polynomial; negative q powers are rejected."""
        cs: list[dict[Exps, int]] = [{} for _ in range(order + 1)]
        for (eq, et, ea), c in p._terms.items():
            if eq < 0:
                raise ValueError("negative q exponent in power series")
            if eq <= order:
                cs[eq][(0, et, ea)] = c
        return cls(order, [LaurentPoly._raw(c) for c in cs])

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls(order, [ONE])

    @classmethod
    def geometric(cls, order: int) -> "QSeries":
        """1/(1-q) = 1 + q + q^2 + ..."""
        return cls(order, [ONE] * (order + 1))

    def __add__(self, other: "QSeries") -> "QSeries":
        n = min(self.order, other.order)
        return QSeries(n, [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, LaurentPoly):
            other = QSeries.from_poly(other, self.order)
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            out.append(poly_sum(self.coeffs[i] * other.coeffs[k - i] for i in range(k + 1)))
        return QSeries(n, out)

    __rmul__ = __mul__

    def scale_poly(self, p: LaurentPoly) -> "QSeries":
        """Multiply every coefficient by a q-free polynomial."""
        return QSeries(self.order, [c * p for c in self.coeffs])

    def shift_q(self, k: int = 1) -> "QSeries":
        """Multiply by q^k, dropping what falls past the order."""
        return QSeries(self.order, [ZERO] * k + self.coeffs[: self.order + 1 - k])

    def __pow__(self, k: int) -> "QSeries":
        out = QSeries.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def to_poly(self) -> LaurentPoly:
        return poly_sum(c.shift(q=i) for i, c in enumerate(self.coeffs))

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return QSeries(order, self.coeffs[: order + 1])

    def __repr__(self) -> str:
        return f"QSeries(order={self.order}, {self.to_poly().to_text()!r})"
