"""Ferrers diagrams, hook numbers and t-core counts.

Three independent ways to get ``c_4(n)`` live side by side: direct enumeration
of partitions with their hooks (``c_t_bruteforce``), the generating function
(``qseries.c_t_series``), and counting representations of ``8n + 5`` by
``x^2 + 2y^2 + 2z^2`` with odd positive ``x, y, z`` (``rep_count``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator, Sequence

from .arith import is_squarefree
from .quadforms import class_number

BRUTE_FORCE_LIMIT = 40


@dataclass(frozen=True)
class PartitionDiagram:
    rows: tuple[int, ...]

    def __init__(self, rows: Sequence[int] = ()):
        rows = tuple(rows)
        if any(r < 1 for r in rows):
            raise ValueError("row lengths must be positive")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"row lengths must be non-increasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return sum(self.rows)

    def columns(self) -> tuple[int, ...]:
        """Column heights, i.e. the conjugate partition."""
        if not self.rows:
            return ()
        return tuple(sum(1 for r in self.rows if r > j) for j in range(self.rows[0]))


def hook_numbers(d: PartitionDiagram | Sequence[int]) -> list[int]:
    """Hook number of every node, listed row by row."""
    if not isinstance(d, PartitionDiagram):
        d = PartitionDiagram(d)
    cols = d.columns()
    return [
        (row - j - 1) + (cols[j] - i - 1) + 1
        for i, row in enumerate(d.rows)
        for j in range(row)
    ]


def is_t_core(d: PartitionDiagram | Sequence[int], t: int) -> bool:
    if t < 1:
        raise ValueError(f"t must be a positive integer, got {t}")
    return all(h % t for h in hook_numbers(d))


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples, parts bounded by ``largest``."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def c_t_bruteforce(n: int, t: int) -> int:
    """Count t-cores of ``n`` by enumerating every partition of ``n``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"brute-force enumeration is limited to n <= {BRUTE_FORCE_LIMIT}, got {n}"
        )
    if t < 1:
        raise ValueError(f"t must be a positive integer, got {t}")
    return sum(1 for p in partitions(n) if is_t_core(p, t))


def rep_count(n: int) -> int:
    """Ordered triples of odd positive ``(x, y, z)`` with ``x^2 + 2y^2 + 2z^2 = 8n + 5``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    m = 8 * n + 5
    count = 0
    for x in range(1, isqrt(m) + 1, 2):
        rx = m - x * x
        for y in range(1, isqrt(rx // 2) + 1, 2):
            r = rx - 2 * y * y
            if r <= 0 or r % 2:
                continue
            z = isqrt(r // 2)
            if z * z * 2 == r and z % 2:
                count += 1
    return count


def ono_sze(n: int) -> Fraction:
    """Half the class number of discriminant ``-32n - 20``; equals ``c_4(n)``
    whenever ``8n + 5`` is squarefree."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not is_squarefree(8 * n + 5):
        raise ValueError(f"8n+5 = {8 * n + 5} is not squarefree")
    return Fraction(class_number(-32 * n - 20), 2)
