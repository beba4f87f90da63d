"""Binary window words and the trinary/binary sequence pairs of a triple.

Sequences are 0-indexed strings; ``*`` stands for the bullet letter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalMismatch
from .grid import TriangularTriple, in_semigroup

BULLET = "*"


@dataclass(frozen=True)
class TrinaryPair:
    x: str
    y: str

    def binary(self) -> "BinaryPair":
        return BinaryPair(self.x.replace(BULLET, ""), self.y.replace(BULLET, ""))


@dataclass(frozen=True)
class BinaryPair:
    u: str
    v: str


@dataclass(frozen=True)
class Sequences:
    w: str
    x: str
    y: str
    u: str
    v: str

    @property
    def trinary(self) -> TrinaryPair:
        return TrinaryPair(self.x, self.y)

    @property
    def binary(self) -> BinaryPair:
        return BinaryPair(self.u, self.v)


def window_of_triple(t: TriangularTriple) -> str:
    """``w_i = 1`` iff ``i + mn - ell - (n + m)`` is in the semigroup."""
    off = t.m * t.n - t.ell - (t.m + t.n)
    return "".join("1" if in_semigroup(i + off, t.m, t.n) else "0" for i in range(t.m + t.n))


def trinary_from_window(w: str, m: int, n: int) -> TrinaryPair:
    def read(step: int, length: int) -> str:
        out = []
        for i in range(length):
            if w[step + i] == "0":
                out.append("0")
            elif w[i] == "1":
                out.append(BULLET)
            else:
                out.append("1")
        return "".join(out)

    if len(w) != m + n:
        raise ValueError(f"window word must have length {m + n}")
    return TrinaryPair(read(n, m), read(m, n))


def trinary_closed_form(t: TriangularTriple) -> TrinaryPair:
    """Residue description: a 1 at ``ell mod m``, zeros at ``ell - n*k mod m``."""
    m, n, ell = t.m, t.n, t.ell

    def build(mod: int, other: int) -> str:
        seq = [BULLET] * mod
        for k in range(1, ell // other + 1):
            seq[(ell - other * k) % mod] = "0"
        # the 1 position is never also a zero: ell - other*k = ell mod mod would need mod | k
        seq[ell % mod] = "1"
        return "".join(seq)

    return TrinaryPair(build(m, n), build(n, m))


def build_sequences(t: TriangularTriple) -> Sequences:
    w = window_of_triple(t)
    pair = trinary_from_window(w, t.m, t.n)
    closed = trinary_closed_form(t)
    if pair != closed:
        raise InternalMismatch(
            f"window route gives {pair.x},{pair.y} but residue route gives {closed.x},{closed.y}"
        )
    b = pair.binary()
    return Sequences(w, pair.x, pair.y, b.u, b.v)


def admissible(w: str, m: int, n: int) -> bool:
    """Whether some invariant set has window word ``w``.

    The closure of ``supp(w)`` under +m, +n, united with everything past the
    window, is a witness exactly when the closure adds nothing inside it.
    """
    if len(w) != m + n:
        raise ValueError(f"window word must have length {m + n}")
    size = m + n
    support = {i for i, c in enumerate(w) if c == "1"}
    closure = set(support)
    stack = list(support)
    while stack:
        k = stack.pop()
        for s in (m, n):
            j = k + s
            if j < size and j not in closure:
                closure.add(j)
                stack.append(j)
    return closure == support
