"""k-tableaux: skew fillings by monomials ``a * t^b`` with ``0 <= b < k``.

Entries are compared by ``(b, a)``, i.e. the order obtained by substituting a
large positive number for ``t``. A k-tableau is semistandard for that order:
rows weakly increase, columns strictly increase.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, Mapping

from .laurent import ZERO, LaurentPoly
from .partitions import Cell, Partition, SkewShape, Word, contains, is_lattice, partition, size, word_of_partition


@total_ordering
@dataclass(frozen=True)
class MonomialEntry:
    a: int
    b: int = 0

    def __post_init__(self):
        if self.a < 1 or self.b < 0:
            raise ValueError(f"invalid entry {self.a}*t^{self.b}")

    @property
    def key(self) -> tuple[int, int]:
        return (self.b, self.a)

    def __lt__(self, other: "MonomialEntry") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        return str(self.a) if self.b == 0 else f"{self.a}·t^{self.b}"


@dataclass(frozen=True)
class KTableau:
    """A filling of ``shape`` by :class:`MonomialEntry`, stored row by row over the skew cells."""

    shape: SkewShape
    rows: tuple[tuple[MonomialEntry, ...], ...]
    k: int

    @classmethod
    def from_rows(cls, outer, inner, rows: Iterable[Iterable], k: int) -> "KTableau":
        """Build from per-row entries; each entry is a ``MonomialEntry`` or an ``(a, b)`` pair."""
        shape = SkewShape.of(outer, inner)
        built = tuple(
            tuple(x if isinstance(x, MonomialEntry) else MonomialEntry(*x) for x in row) for row in rows
        )
        T = cls(shape, built, k)
        T.validate()
        return T

    def validate(self) -> None:
        shape = self.shape
        if len(self.rows) != len(shape.outer):
            raise ValueError("row count does not match shape")
        for r, row in enumerate(self.rows):
            if len(row) != shape.outer[r] - shape.inner_row(r):
                raise ValueError(f"row {r} has wrong length")
        for cell, x in self.items():
            if x.b >= self.k:
                raise ValueError(f"entry {x} exceeds k={self.k}")
        if not self.is_semistandard():
            raise ValueError("filling is not semistandard")

    def __getitem__(self, cell: Cell) -> MonomialEntry:
        r, c = cell
        if cell not in self.shape:
            raise KeyError(cell)
        return self.rows[r][c - self.shape.inner_row(r)]

    def items(self) -> Iterator[tuple[Cell, MonomialEntry]]:
        for r, row in enumerate(self.rows):
            start = self.shape.inner_row(r)
            for i, x in enumerate(row):
                yield (r, start + i), x

    def is_semistandard(self) -> bool:
        for (r, c), x in self.items():
            if (r, c - 1) in self.shape and self[(r, c - 1)] > x:
                return False
            if (r - 1, c) in self.shape and not self[(r - 1, c)] < x:
                return False
        return True

    def content(self) -> tuple[int, ...]:
        """Letter counts of the ``t = 1`` specialization, indexed from letter 1."""
        counts: dict[int, int] = {}
        for _, x in self.items():
            counts[x.a] = counts.get(x.a, 0) + 1
        top = max(counts, default=0)
        return tuple(counts.get(a, 0) for a in range(1, top + 1))

    def degree(self) -> int:
        return sum(x.b for _, x in self.items())

    def __str__(self) -> str:
        return render(self)


def statistic(T: KTableau) -> LaurentPoly:
    """``t`` raised to the total ``t``-degree of the entries."""
    return LaurentPoly.monomial(T.degree())


def layers(T: KTableau) -> list[dict[Cell, int]]:
    """Split ``T`` into ordinary partial tableaux, one per power of ``t``.

    Layer ``i`` maps each cell whose entry is ``a * t^i`` to ``a``.
    """
    out: list[dict[Cell, int]] = [{} for _ in range(T.k)]
    for cell, x in T.items():
        out[x.b][cell] = x.a
    return out


def _layer_word(layer: Mapping[Cell, int]) -> Word:
    return tuple(layer[cell] for cell in sorted(layer, key=lambda rc: (rc[0], -rc[1])))


def reading_word(T: KTableau, kappa: Iterable[int] = ()) -> Word:
    """``w(kappa)`` followed by the words of layers ``0, 1, ..., k-1``."""
    word = list(word_of_partition(partition(kappa)))
    for layer in layers(T):
        word.extend(_layer_word(layer))
    return tuple(word)


def filtration(T: KTableau) -> list[Partition]:
    """Chain ``inner = mu^0 <= mu^1 <= ... <= mu^k = outer``; ``mu^(i+1) - mu^i`` is layer ``i``.

    Raises ``ValueError`` if some union of the inner shape with the first
    layers is not a Young diagram.
    """
    shape = T.shape
    chain = [shape.inner]
    for i in range(T.k):
        rows = []
        for r in range(len(shape.outer)):
            length = shape.inner_row(r)
            while (r, length) in shape and T[(r, length)].b <= i:
                length += 1
            rows.append(length)
        if any(T[cell].b <= i for cell in shape.cells() if cell[1] >= rows[cell[0]]):
            raise ValueError(f"layers 0..{i} do not fill a left-justified region")
        mu = partition(rows)
        chain.append(mu)
    if chain[-1] != shape.outer:
        raise ValueError("filtration does not reach the outer shape")
    return chain


def _row_content(nu: Partition, kappa: Partition) -> list[int]:
    return [x - (kappa[i] if i < len(kappa) else 0) for i, x in enumerate(nu)]


def enumerate_tableaux(
    shape: SkewShape,
    content_outer: Iterable[int],
    content_inner: Iterable[int] = (),
    k: int = 1,
    lattice: bool = False,
) -> list[KTableau]:
    """All semistandard k-tableaux of ``shape`` whose ``t = 1`` content is ``nu - kappa``.

    With ``lattice=True`` only tableaux whose word ``w(kappa) w(T^0) w(T^1)...``
    is a lattice permutation are kept. Raises ``ValueError`` when
    ``kappa`` is not inside ``nu`` or the sizes disagree; a legal query with
    no solutions returns ``[]``.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    shape = SkewShape.of(*shape)
    nu, kappa = partition(content_outer), partition(content_inner)
    if not contains(kappa, nu):
        raise ValueError(f"content inner {kappa} is not contained in {nu}")
    if shape.size != size(nu) - size(kappa):
        raise ValueError(f"shape has {shape.size} cells but content has {size(nu) - size(kappa)}")
    tableaux = list(_backtrack(shape, _row_content(nu, kappa), k))
    if lattice:
        tableaux = [T for T in tableaux if is_lattice(reading_word(T, kappa))]
    return tableaux


def _backtrack(shape: SkewShape, remaining: list[int], k: int) -> Iterator[KTableau]:
    cells = shape.cells()
    candidates = sorted(
        (MonomialEntry(a, b) for a in range(1, len(remaining) + 1) for b in range(k)),
        key=lambda x: x.key,
    )
    filling: dict[Cell, MonomialEntry] = {}

    def build() -> KTableau:
        rows = tuple(
            tuple(filling[(r, c)] for c in range(shape.inner_row(r), shape.outer[r]))
            for r in range(len(shape.outer))
        )
        return KTableau(shape, rows, k)

    def go(i: int) -> Iterator[KTableau]:
        if i == len(cells):
            yield build()
            return
        r, c = cells[i]
        left = filling.get((r, c - 1))
        up = filling.get((r - 1, c))
        for x in candidates:
            if left is not None and x < left:
                continue
            if up is not None and not up < x:
                continue
            if not remaining[x.a - 1]:
                continue
            remaining[x.a - 1] -= 1
            filling[(r, c)] = x
            yield from go(i + 1)
            del filling[(r, c)]
            remaining[x.a - 1] += 1

    yield from go(0)


def weighted_sum(tableaux: Iterable[KTableau]) -> LaurentPoly:
    """Sum of ``c(T)`` over ``tableaux``."""
    counts: dict[int, int] = {}
    for T in tableaux:
        d = T.degree()
        counts[d] = counts.get(d, 0) + 1
    return LaurentPoly(counts) if counts else ZERO


def render(T: KTableau) -> str:
    """One row per line; inner cells as ``.``, entries as ``a`` or ``a·t^b``."""
    lines = []
    for r, row in enumerate(T.rows):
        cells = ["."] * T.shape.inner_row(r) + [str(x) for x in row]
        lines.append(" ".join(cells))
    return "\n".join(lines)
