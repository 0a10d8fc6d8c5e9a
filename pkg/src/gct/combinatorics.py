"""Partitions, skew shapes, tableaux and words.

Everything here is immutable; tableaux are stored row by row with the
boxes of each skew row listed left to right.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import zip_longest
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def size(self) -> int:
        return sum(self.parts)

    def height(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        # zero beyond the last part, so shapes can be indexed freely
        if isinstance(i, slice):
            return self.parts[i]
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if n < len(self.parts):
            raise ValueError(f"{self} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def contains(self, other: "Partition") -> bool:
        return all(self[i] >= p for i, p in enumerate(other.parts))

    def scaled(self, k: int) -> "Partition":
        return Partition(k * p for p in self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def dominates(self, other: "Partition") -> bool:
        a = b = 0
        for x, y in zip_longest(self.parts, other.parts, fillvalue=0):
            a += x
            b += y
            if a < b:
                return False
        return True

    def __repr__(self) -> str:
        return f"Partition({self.parts})"


def partitions(n: int, max_height: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest: int, bound: int, h: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        if max_height is not None and h >= max_height:
            return
        for p in range(min(rest, bound), 0, -1):
            for tail in rec(rest - p, p, h + 1):
                yield (p,) + tail

    for parts in rec(n, max_part, 0):
        yield Partition(parts)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = field(default_factory=Partition)

    def __post_init__(self):
        if not isinstance(self.outer, Partition):
            object.__setattr__(self, "outer", Partition(self.outer))
        if not isinstance(self.inner, Partition):
            object.__setattr__(self, "inner", Partition(self.inner))
        if self.inner.height() > self.outer.height() or not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def inner_padded(self) -> tuple[int, ...]:
        return self.inner.padded(self.outer.height())

    def row_ranges(self) -> list[tuple[int, int]]:
        """Column range [start, stop) of each row."""
        return list(zip(self.inner_padded, self.outer.parts))

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, (a, b) in enumerate(self.row_ranges()) for j in range(a, b)]

    def size(self) -> int:
        return self.outer.size() - self.inner.size()


def as_shape(shape) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    if isinstance(shape, Partition):
        return SkewShape(shape)
    return SkewShape(Partition(shape))


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = as_shape(self.shape)
        object.__setattr__(self, "shape", shape)
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        widths = [b - a for a, b in shape.row_ranges()]
        if [len(r) for r in rows] != widths:
            raise ValueError(f"row lengths {[len(r) for r in rows]} do not fill shape {widths}")
        if any(x < 1 for r in rows for x in r):
            raise ValueError("tableau entries must be positive")

    @classmethod
    def straight(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        return cls(SkewShape(Partition(len(r) for r in rows)), tuple(tuple(r) for r in rows))

    def entry(self, i: int, j: int) -> int | None:
        """Entry in row i, absolute column j, or None outside the skew shape."""
        if i >= len(self.rows):
            return None
        start = self.shape.inner[i]
        if start <= j < start + len(self.rows[i]):
            return self.rows[i][j - start]
        return None

    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def to_json(self) -> dict:
        return {
            "outer": list(self.shape.outer.parts),
            "inner": list(self.shape.inner.parts),
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        shape = SkewShape(Partition(data["outer"]), Partition(data.get("inner", [])))
        return cls(shape, tuple(tuple(r) for r in data["rows"]))


def is_semistandard(t: Tableau) -> bool:
    for i, row in enumerate(t.rows):
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        start = t.shape.inner[i]
        for j, x in enumerate(row, start):
            above = t.entry(i - 1, j) if i else None
            if above is not None and above >= x:
                return False
    return True


def is_standard(t: Tableau) -> bool:
    entries = sorted(x for r in t.rows for x in r)
    if entries != list(range(1, len(entries) + 1)):
        return False
    return is_semistandard(t)


def row_word(t: Tableau) -> tuple[int, ...]:
    """Rows read left to right, bottom row first."""
    return tuple(x for row in reversed(t.rows) for x in row)


def content(t: Tableau | Sequence[int]) -> tuple[int, ...]:
    letters = row_word(t) if isinstance(t, Tableau) else tuple(t)
    if not letters:
        return ()
    counts = [0] * max(letters)
    for x in letters:
        counts[x - 1] += 1
    return tuple(counts)


def is_reverse_lattice_word(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for x in reversed(word):
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def enumerate_ssyt(shape, max_entry: int, weight: Sequence[int] | None = None) -> list[Tableau]:
    """Semistandard fillings with entries in 1..max_entry.

    Output is lexicographic in the row-major entry sequence.  With
    ``weight`` given, only fillings of that content are produced.
    """
    if max_entry < 1:
        raise ValueError("max_entry must be at least 1")
    shape = as_shape(shape)
    cells = shape.cells()
    inner = shape.inner_padded
    outer = shape.outer.parts
    # boxes strictly below (i, j) in the same column bound how large x may be
    below = {}
    for i, j in cells:
        k = i + 1
        while k < len(outer) and inner[k] <= j < outer[k]:
            k += 1
        below[(i, j)] = k - i - 1
    remaining = None
    if weight is not None:
        remaining = list(weight)
        while remaining and remaining[-1] == 0:
            remaining.pop()
        if len(remaining) > max_entry or sum(remaining) != len(cells) or min(remaining, default=0) < 0:
            return []
        remaining += [0] * (max_entry - len(remaining))

    grid: dict[tuple[int, int], int] = {}
    out: list[Tableau] = []

    def rec(idx: int):
        if idx == len(cells):
            rows = tuple(tuple(grid[(i, j)] for j in range(a, b)) for i, (a, b) in enumerate(zip(inner, outer)))
            out.append(Tableau(shape, rows))
            return
        i, j = cells[idx]
        lo = max(grid.get((i, j - 1), 1), grid.get((i - 1, j), 0) + 1)
        hi = max_entry - below[(i, j)]
        for x in range(lo, hi + 1):
            if remaining is not None:
                if remaining[x - 1] == 0:
                    continue
                remaining[x - 1] -= 1
            grid[(i, j)] = x
            rec(idx + 1)
            if remaining is not None:
                remaining[x - 1] += 1
        grid.pop((i, j), None)

    rec(0)
    return out


def enumerate_syt(shape) -> list[Tableau]:
    shape = as_shape(shape)
    n = shape.size()
    if n == 0:
        return enumerate_ssyt(shape, 1)
    return enumerate_ssyt(shape, n, weight=[1] * n)


def superstandard(shape: Partition) -> Tableau:
    """Row r filled entirely with r."""
    shape = Partition(shape)
    return Tableau.straight([[r + 1] * p for r, p in enumerate(shape.parts)])
