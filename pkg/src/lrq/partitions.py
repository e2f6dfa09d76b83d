"""Integer partitions, skew shapes, words, and classical tableau counts.

Partitions are plain tuples of positive integers in weakly decreasing order.
Use :func:`partition` to validate and normalize arbitrary input.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]
Word = tuple[int, ...]
Cell = tuple[int, int]


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return the normalized partition.

    Trailing zeros are stripped. Raises ``ValueError`` for negative parts or
    parts that increase.
    """
    parts = tuple(int(x) for x in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for i, x in enumerate(parts):
        if x <= 0:
            raise ValueError(f"partition parts must be positive, got {parts!r}")
        if i and x > parts[i - 1]:
            raise ValueError(f"partition parts must be weakly decreasing, got {parts!r}")
    return parts


def parse_partition(text: str | None) -> Partition:
    """Parse the comma-separated text format, e.g. ``"3,2"``; empty means the empty partition."""
    if text is None:
        return ()
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(x) for x in lam)


def size(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def contains(inner: Partition, outer: Partition) -> bool:
    """True iff ``inner`` fits inside ``outer`` cell-wise."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def partitions_of(n: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> partitions_of(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n, max_length))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int, max_length: int | None) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    if max_length == 0:
        return ()
    out = []
    rest = None if max_length is None else max_length - 1
    for first in range(min(n, largest), 0, -1):
        for tail in _partitions(n - first, first, rest):
            out.append((first,) + tail)
    return tuple(out)


def partitions_up_to(n: int) -> list[Partition]:
    """All partitions of size at most ``n``, by size then reverse-lex."""
    return [lam for d in range(n + 1) for lam in partitions_of(d)]


def subpartitions(outer: Partition) -> list[Partition]:
    """All partitions contained in ``outer``, by size then reverse-lex."""
    return [mu for mu in partitions_up_to(size(outer)) if contains(mu, outer)]


def zee(mu: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``mu``."""
    return prod(i**m * factorial(m) for i, m in Counter(mu).items())


def word_of_partition(lam: Partition) -> Word:
    """Row ``i`` filled with ``i``, read right to left, top to bottom."""
    return tuple(i + 1 for i, row in enumerate(lam) for _ in range(row))


def is_lattice(word: Sequence[int]) -> bool:
    """True iff every prefix has at least as many ``i`` as ``i+1``, for all ``i``."""
    counts: Counter[int] = Counter()
    for a in word:
        if a < 1:
            raise ValueError(f"word letters must be positive, got {a}")
        counts[a] += 1
        if a > 1 and counts[a] > counts[a - 1]:
            return False
    return True


class SkewShape(NamedTuple):
    outer: Partition
    inner: Partition = ()

    @classmethod
    def of(cls, outer: Iterable[int], inner: Iterable[int] = ()) -> "SkewShape":
        outer, inner = partition(outer), partition(inner)
        if not contains(inner, outer):
            raise ValueError(f"{inner} is not contained in {outer}")
        return cls(outer, inner)

    def inner_row(self, r: int) -> int:
        return self.inner[r] if r < len(self.inner) else 0

    def cells(self) -> list[Cell]:
        """Cells ``(row, col)``, zero-based, in row-major order."""
        return [(r, c) for r, row in enumerate(self.outer) for c in range(self.inner_row(r), row)]

    def __contains__(self, cell: object) -> bool:
        r, c = cell  # type: ignore[misc]
        return 0 <= r < len(self.outer) and self.inner_row(r) <= c < self.outer[r]

    @property
    def size(self) -> int:
        return size(self.outer) - size(self.inner)


def _fillings(shape: SkewShape, content: Sequence[int]) -> Iterator[dict[Cell, int]]:
    # row-major backtracking; letters bounded by len(content)
    cells = shape.cells()
    remaining = list(content)
    filling: dict[Cell, int] = {}

    def go(i: int) -> Iterator[dict[Cell, int]]:
        if i == len(cells):
            yield dict(filling)
            return
        r, c = cells[i]
        low = 1
        if (r, c - 1) in filling:
            low = filling[(r, c - 1)]
        if (r - 1, c) in filling:
            low = max(low, filling[(r - 1, c)] + 1)
        for a in range(low, len(remaining) + 1):
            if remaining[a - 1]:
                remaining[a - 1] -= 1
                filling[(r, c)] = a
                yield from go(i + 1)
                del filling[(r, c)]
                remaining[a - 1] += 1

    if shape.size != sum(content):
        return
    yield from go(0)


def reading_word(filling: dict[Cell, int]) -> Word:
    """Right to left, top to bottom."""
    return tuple(filling[cell] for cell in sorted(filling, key=lambda rc: (rc[0], -rc[1])))


@lru_cache(maxsize=4096)
def classical_tableau_count(shape: SkewShape, content: Partition) -> int:
    """Number of semistandard tableaux of skew ``shape`` with content ``content``."""
    return sum(1 for _ in _fillings(shape, content))


@lru_cache(maxsize=16384)
def classical_lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson number: lattice semistandard tableaux of shape lam/mu, content nu."""
    if not contains(mu, lam) or size(lam) != size(mu) + size(nu):
        return 0
    shape = SkewShape(lam, mu)
    return sum(1 for f in _fillings(shape, nu) if is_lattice(reading_word(f)))


def kostka(lam: Partition, mu: Partition) -> int:
    return classical_tableau_count(SkewShape(lam, ()), mu)
