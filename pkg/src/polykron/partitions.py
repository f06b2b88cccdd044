"""Partitions, compositions, skew shapes, and contingency-matrix enumeration.

All objects are immutable after construction and safe to share across
threads.  Enumeration orders are deterministic (descending lexicographic for
partitions, row-major lexicographic for matrices) so outputs are reproducible
byte for byte.
"""

from __future__ import annotations

from functools import lru_cache, total_ordering

from .errors import DegreeMismatchError, SizeBoundError

#: Default cap on enumerate_partitions; p(30) = 5604 keeps sweeps bounded.
PARTITION_ENUMERATION_BOUND = 30


@total_ordering
class Partition:
    """A weakly decreasing sequence of positive integers.

    Trailing zeros are stripped on construction; the empty sequence is the
    unique partition of 0.
    """

    __slots__ = ("parts", "size")

    def __init__(self, parts=()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, x in enumerate(parts):
            if x <= 0:
                raise ValueError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < x:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        self.parts = parts
        self.size = sum(parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def text(self) -> str:
        """Canonical comma-separated encoding; the empty partition is "0"."""
        return ",".join(str(x) for x in self.parts) if self.parts else "0"

    def row(self, i: int) -> int:
        """Part at 0-based index i, with implicit zeros past the last row."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram: result_i = #{j : parts_j >= i}."""
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for p in self.parts:
            for i in range(p):
                cols[i] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        """Cell-wise containment of other's Young diagram in this one."""
        if len(other) > len(self.parts):
            return False
        return all(other.parts[i] <= self.parts[i] for i in range(len(other)))

    def outer_corners(self):
        """Cells (i, parts_i), 1-indexed, where the diagram steps down.

        The last row always carries a corner.  Raises on the empty partition,
        which has none.
        """
        if not self.parts:
            raise ValueError("the empty partition has no outer corners")
        corners = []
        for i, p in enumerate(self.parts):
            if i + 1 == len(self.parts) or self.parts[i + 1] < p:
                corners.append((i + 1, p))
        return corners

    def one_box_moves(self):
        """All partitions != self of the same size reachable by moving one box.

        A move removes one corner cell and re-adds a box at any addable
        position of the intermediate shape.  Duplicates are collapsed; the
        result is in descending lexicographic order.
        """
        moves = set()
        for (r, _c) in self.outer_corners():
            removed = list(self.parts)
            removed[r - 1] -= 1
            if removed[-1] == 0:
                removed.pop()
            for r2 in range(len(removed) + 1):
                if r2 > 0 and removed[r2 - 1] == (removed[r2] if r2 < len(removed) else 0):
                    continue  # not an addable position: row above has equal length
                grown = list(removed)
                if r2 == len(grown):
                    grown.append(1)
                else:
                    grown[r2] += 1
                alpha = Partition(grown)
                if alpha != self:
                    moves.add(alpha)
        return sorted(moves, key=lambda p: p.parts, reverse=True)


class Composition:
    """A sequence of non-negative integers with explicit length.

    Zeros are significant: (1, 0, 1) and (1, 1) are different weights.
    """

    __slots__ = ("entries", "degree")

    def __init__(self, entries=()):
        entries = tuple(int(x) for x in entries)
        for x in entries:
            if x < 0:
                raise ValueError(f"composition entries must be non-negative, got {entries}")
        self.entries = entries
        self.degree = sum(entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        return isinstance(other, Composition) and self.entries == other.entries

    def __hash__(self):
        return hash(("composition", self.entries))

    def __repr__(self):
        return f"Composition({list(self.entries)})"

    def text(self) -> str:
        """Canonical comma-separated encoding; the empty composition is "0"."""
        return ",".join(str(x) for x in self.entries) if self.entries else "0"

    def sorted_partition(self) -> Partition:
        """The nonzero entries, sorted decreasingly."""
        return Partition(sorted((x for x in self.entries if x), reverse=True))


class SkewShape:
    """A pair of nested partitions outer/inner."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer: Partition, inner: Partition):
        if not outer.contains(inner):
            raise ValueError(f"inner shape {inner!r} not contained in outer {outer!r}")
        self.outer = outer
        self.inner = inner

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __eq__(self, other):
        return (
            isinstance(other, SkewShape)
            and self.outer == other.outer
            and self.inner == other.inner
        )

    def __hash__(self):
        return hash((self.outer.parts, self.inner.parts))

    def __repr__(self):
        return f"SkewShape({self.outer!r}, {self.inner!r})"


class ContingencyMatrix:
    """A non-negative integer matrix with prescribed row and column sums."""

    __slots__ = ("rows", "row_sums", "col_sums")

    def __init__(self, rows, row_sums=None, col_sums=None):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("matrix rows must have equal length")
        if any(x < 0 for row in rows for x in row):
            raise ValueError("matrix entries must be non-negative")
        m = len(rows[0]) if rows else (len(col_sums) if col_sums is not None else 0)
        actual_rows = Composition(sum(row) for row in rows)
        actual_cols = Composition(sum(row[j] for row in rows) for j in range(m))
        if row_sums is not None and Composition(row_sums) != actual_rows:
            raise ValueError("row sums do not match matrix entries")
        if col_sums is not None and Composition(col_sums) != actual_cols:
            raise ValueError("column sums do not match matrix entries")
        self.rows = rows
        self.row_sums = actual_rows
        self.col_sums = actual_cols

    @classmethod
    def _trusted(cls, rows, row_sums, col_sums):
        # Fast path for the enumerator, which guarantees the margins.
        self = object.__new__(cls)
        self.rows = rows
        self.row_sums = row_sums
        self.col_sums = col_sums
        return self

    @property
    def total(self) -> int:
        return self.row_sums.degree

    def flatten(self) -> Composition:
        """Row-major flattening: a weight of length n*m."""
        return Composition(x for row in self.rows for x in row)

    def transpose(self) -> "ContingencyMatrix":
        m = len(self.col_sums)
        cols = tuple(tuple(row[j] for row in self.rows) for j in range(m))
        return ContingencyMatrix._trusted(cols, self.col_sums, self.row_sums)

    def __eq__(self, other):
        return isinstance(other, ContingencyMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ContingencyMatrix({[list(r) for r in self.rows]})"


@lru_cache(maxsize=None)
def partitions_of(d: int):
    """All partitions of d, descending lexicographic, as a cached tuple."""
    if d < 0:
        raise ValueError("d must be non-negative")
    out = []

    def rec(remaining, maxpart, acc):
        if remaining == 0:
            out.append(Partition(acc))
            return
        for first in range(min(remaining, maxpart), 0, -1):
            rec(remaining - first, first, acc + [first])

    rec(d, d if d else 1, [])
    return tuple(out)


def enumerate_partitions(d: int, *, bound: int = PARTITION_ENUMERATION_BOUND):
    """All partitions of d in descending lexicographic order.

    Raises SizeBoundError past the configured bound (default 30).
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    if d > bound:
        raise SizeBoundError(f"partition enumeration requested for d={d} > bound {bound}")
    return list(partitions_of(d))


def enumerate_compositions(d: int, length: int):
    """All weights of degree d with exactly `length` entries, descending lex."""
    if d < 0 or length < 0:
        raise ValueError("d and length must be non-negative")
    if length == 0:
        return [Composition(())] if d == 0 else []
    out = []

    def rec(i, remaining, acc):
        if i == length - 1:
            out.append(Composition(acc + [remaining]))
            return
        for x in range(remaining, -1, -1):
            rec(i + 1, remaining - x, acc + [x])

    rec(0, d, [])
    return out


def iter_contingency(mu: Composition, lam: Composition):
    """Yield every matrix with row sums mu and column sums lam exactly once.

    Matrices appear in descending row-major lexicographic order of their
    flattened entries.
    """
    if mu.degree != lam.degree:
        raise DegreeMismatchError(
            f"row sums have degree {mu.degree} but column sums have degree {lam.degree}"
        )
    n, m = len(mu), len(lam)
    if n == 0:
        if lam.degree == 0:
            yield ContingencyMatrix._trusted((), mu, lam)
        return

    def fill_row(j, need, rem, row):
        # Descending-lex vectors of length m summing to `need`, bounded by rem.
        if j == m:
            if need == 0:
                yield tuple(row)
            return
        tail_capacity = sum(rem[j + 1 :])
        lo = max(0, need - tail_capacity)
        for x in range(min(need, rem[j]), lo - 1, -1):
            row.append(x)
            yield from fill_row(j + 1, need - x, rem, row)
            row.pop()

    def fill(i, rem, rows):
        if i == n:
            if all(r == 0 for r in rem):
                yield ContingencyMatrix._trusted(tuple(rows), mu, lam)
            return
        for row in fill_row(0, mu[i], rem, []):
            nrem = [rem[j] - row[j] for j in range(m)]
            rows.append(row)
            yield from fill(i + 1, nrem, rows)
            rows.pop()

    yield from fill(0, list(lam.entries), [])


def enumerate_contingency(mu: Composition, lam: Composition):
    """All matrices with the prescribed margins, as a list."""
    return list(iter_contingency(mu, lam))
