"""Boxes, partitions, triangular triples and Anderson labels.

A box is named by its north-east corner ``(x, y)``, so the cell in column x
and row y of a French diagram is ``(x, y)`` with ``x, y >= 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, NamedTuple, Sequence

from .errors import EllOutOfRange, NotCoprime, ParseError


class Box(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing parts with trailing zeros trimmed; ``parts[y-1]`` is row y."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, s: str) -> "Partition":
        s = s.strip()
        if not s or s == "0":
            return cls(())
        try:
            return cls(tuple(int(p) for p in s.split(",")))
        except ValueError as exc:
            raise ParseError(f"bad partition {s!r}: {exc}") from None

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "0"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def row(self, y: int) -> int:
        """Length of row y (1-based), zero past the last row."""
        return self.parts[y - 1] if 1 <= y <= len(self.parts) else 0

    def contains(self, x: int, y: int) -> bool:
        return x >= 1 and y >= 1 and x <= self.row(y)

    def __contains__(self, box) -> bool:
        return self.contains(box[0], box[1])

    def cells(self) -> list[Box]:
        return [Box(x, y) for y, p in enumerate(self.parts, 1) for x in range(1, p + 1)]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def column(self, x: int) -> int:
        """Height of column x."""
        return sum(1 for p in self.parts if p >= x)

    def addable(self) -> list[Box]:
        """Boxes whose addition gives a partition, bottom row first."""
        out = []
        for y in range(1, self.rows + 2):
            x = self.row(y) + 1
            if y == 1 or self.row(y - 1) >= x:
                out.append(Box(x, y))
        return out

    def is_subpartition_of(self, other: "Partition") -> bool:
        return self.rows <= other.rows and all(p <= other.row(y) for y, p in enumerate(self.parts, 1))

    def arm(self, x: int, y: int) -> int:
        return self.row(y) - x

    def leg(self, x: int, y: int) -> int:
        return self.column(x) - y


@dataclass(frozen=True)
class TriangularTriple:
    """Validated ``(m, n, ell)``; ``tau`` holds the cells with ``n*x + m*y <= ell``."""

    m: int
    n: int
    ell: int
    tau: Partition = field(compare=False, repr=False)

    def __str__(self) -> str:
        return f"{self.m},{self.n},{self.ell}"

    @property
    def r(self):
        from fractions import Fraction

        return Fraction(self.ell, self.n)

    @property
    def s(self):
        from fractions import Fraction

        return Fraction(self.ell, self.m)


def cut_partition(m: int, n: int, ell: int) -> Partition:
    """Cells ``(x, y) >= 1`` with ``n*x + m*y <= ell``."""
    parts = []
    y = 1
    while m * y + n <= ell:
        parts.append((ell - m * y) // n)
        y += 1
    return Partition(tuple(parts))


def validate_triple(m: int, n: int, ell: int) -> TriangularTriple:
    if m <= 0 or n <= 0:
        raise NotCoprime(f"m and n must be positive, got ({m},{n})")
    if gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m},{n}) = {gcd(m, n)}")
    if not 0 < ell < m * n:
        raise EllOutOfRange(f"need 0 < l < {m * n}, got {ell}")
    return TriangularTriple(m, n, ell, cut_partition(m, n, ell))


def parse_triple(s: str) -> TriangularTriple:
    try:
        m, n, ell = (int(v) for v in s.split(","))
    except ValueError:
        raise ParseError(f"expected m,n,l but got {s!r}") from None
    return validate_triple(m, n, ell)


def partition_of_triple(t: TriangularTriple) -> Partition:
    return cut_partition(t.m, t.n, t.ell)


def full_triangle(M: int, N: int) -> Partition:
    """Cells weakly below the diagonal of the M x N rectangle.

    For coprime M, N this is ``tau_{M,N}``; otherwise cells touching the
    diagonal are included, which gives ``|tau| = delta(M, N)``.
    """
    return cut_partition(M, N, M * N)


def delta_mn(M: int, N: int) -> int:
    """(MN - M - N + gcd(M, N)) / 2."""
    return (M * N - M - N + gcd(M, N)) // 2


def find_triples(lam: Partition, bound: int) -> list[TriangularTriple]:
    """All ``(m, n, ell)`` with ``m, n <= bound`` cutting out ``lam``.

    For each coprime pair, ``ell`` is the largest ``n*x + m*y`` over the
    cells (or 1 for the empty partition).  The search is incomplete past
    ``bound``.
    """
    if bound < 2:
        raise ValueError("bound must be at least 2")
    cells = lam.cells()
    out = []
    for m in range(1, bound + 1):
        for n in range(1, bound + 1):
            if gcd(m, n) != 1 or m * n < 2:
                continue
            ell = max((n * x + m * y for x, y in cells), default=1)
            if ell >= m * n:
                continue
            if cut_partition(m, n, ell) == lam:
                out.append(TriangularTriple(m, n, ell, lam))
    return out


def anderson_label(m: int, n: int, box: Sequence[int]) -> int:
    """mn - n*x - m*y."""
    x, y = box
    return m * n - n * x - m * y


def in_semigroup(k: int, m: int, n: int) -> bool:
    """Whether k lies in the semigroup generated by m and n."""
    if k < 0:
        return False
    for i in range(k // n + 1):
        if (k - i * n) % m == 0:
            return True
    return False


def semigroup_gaps(m: int, n: int) -> list[int]:
    """The finitely many nonnegative integers outside the semigroup (m, n coprime)."""
    return [k for k in range(max(m * n - m - n + 1, 0)) if not in_semigroup(k, m, n)]
