"""Dyck paths under a triangular partition and their statistics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .grid import Box, Partition, TriangularTriple, anderson_label


@dataclass(frozen=True)
class DyckPath:
    """A subpartition ``lam`` of ``triple.tau``."""

    lam: Partition
    triple: TriangularTriple

    def __post_init__(self):
        if not self.lam.is_subpartition_of(self.triple.tau):
            raise ValueError(f"{self.lam} is not contained in {self.triple.tau}")


@dataclass(frozen=True)
class PathStats:
    area: int
    dinv: int


@dataclass(frozen=True)
class Boundary:
    addable: tuple[Box, ...]
    east: tuple[Box, ...]
    xi: dict[Box, int]


def subpartitions(tau: Partition) -> Iterator[Partition]:
    """All partitions inside ``tau``, lexicographic on part lists."""
    rows = tau.rows

    def rec(y: int, cap: int, prefix: list[int]) -> Iterator[Partition]:
        if y > rows or cap == 0:
            yield Partition(tuple(prefix))
            return
        hi = min(cap, tau.row(y))
        # part 0 ends the partition; it sorts first lexicographically
        yield Partition(tuple(prefix))
        for p in range(1, hi + 1):
            prefix.append(p)
            yield from rec(y + 1, p, prefix)
            prefix.pop()

    yield from rec(1, tau.row(1), [])


def enumerate_subpaths(t: TriangularTriple) -> list[DyckPath]:
    return [DyckPath(lam, t) for lam in subpartitions(t.tau)]


def dinv_of(lam: Partition, m: int, n: int) -> int:
    """Boxes with leg/(arm+1) < n/m <= (leg+1)/arm (upper bound infinite at arm 0)."""
    conj = lam.conjugate()
    count = 0
    for y, row in enumerate(lam.parts, 1):
        for x in range(1, row + 1):
            arm = row - x
            leg = conj.row(x) - y
            if leg * m < n * (arm + 1) and (arm == 0 or n * arm <= m * (leg + 1)):
                count += 1
    return count


def path_statistics(p: DyckPath) -> PathStats:
    t = p.triple
    return PathStats(area=t.tau.size - p.lam.size, dinv=dinv_of(p.lam, t.m, t.n))


def east_boundary(lam: Partition, n: int) -> tuple[Box, ...]:
    """For each row y in 1..n, the box ``(lam_y, y)`` just west of the path's vertical step."""
    return tuple(Box(lam.row(y), y) for y in range(1, n + 1))


def boundary_data(p: DyckPath) -> Boundary:
    m, n = p.triple.m, p.triple.n
    addable = tuple(p.lam.addable())
    east = east_boundary(p.lam, n)
    east_labels = [anderson_label(m, n, b) for b in east]
    xi = {}
    for box in addable:
        g = anderson_label(m, n, box)
        xi[box] = sum(1 for e in east_labels if g + n < e <= g + n + m)
    return Boundary(addable, east, xi)


def shifted_label(t: TriangularTriple, box) -> int:
    """Anderson label moved by ``-(mn - ell) + (m + n)``."""
    return anderson_label(t.m, t.n, box) - (t.m * t.n - t.ell) + (t.m + t.n)
