"""Partitions, generalized partitions and skew diagrams.

Cells are pairs ``(i, j)`` with ``i`` the height (row, counted from 1 at the
top) and ``j`` the width (column).  Widths may be zero or negative for
diagrams of generalized partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "PartitionError",
    "Partition",
    "GeneralizedPartition",
    "SkewShape",
    "Reordering",
    "transpose",
    "squared_norm",
    "chi",
    "dominates",
    "equivalent",
    "reorder_decreasing",
    "reconstruct",
    "distinct_decreasing",
    "distinct_increasing",
    "skew_cells",
    "partitions_of",
    "partitions_in_box",
    "skew_shapes",
    "parse_ints",
    "parse_partition",
    "parse_generalized",
    "format_parts",
]


class PartitionError(ValueError):
    """Malformed partition data (not weakly decreasing, negative part, ...)."""

    code = "E_PARTITION"


def _is_weakly_decreasing(parts: Sequence[int]) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative integers, trailing zeros dropped."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise PartitionError(f"negative part in partition {tuple(parts)}")
        if not _is_weakly_decreasing(parts):
            raise PartitionError(f"parts not weakly decreasing: {tuple(parts)}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def padded(self, r: int) -> "GeneralizedPartition":
        """The same partition as a generalized partition of length ``r``."""
        if len(self) > r:
            raise PartitionError(f"partition {tuple(self)} has more than {r} parts")
        return GeneralizedPartition(tuple(self) + (0,) * (r - len(self)))

    def cells(self) -> list[tuple[int, int]]:
        """Young diagram, row by row."""
        return [(i + 1, j + 1) for i, part in enumerate(self) for j in range(part)]

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


class GeneralizedPartition(tuple):
    """Weakly decreasing integer tuple of fixed length ``r`` (parts may be negative)."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if not _is_weakly_decreasing(parts):
            raise PartitionError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def r(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def shift(self, k: int) -> "GeneralizedPartition":
        """Add ``k`` to every part (twist by the k-th power of the determinant)."""
        return GeneralizedPartition(p + k for p in self)

    def is_partition(self) -> bool:
        return not self or self[-1] >= 0

    def as_partition(self) -> Partition:
        return Partition(self)

    def __repr__(self) -> str:
        return f"GeneralizedPartition({tuple(self)!r})"


@dataclass(frozen=True)
class SkewShape:
    """Skew diagram ``outer / inner`` of two generalized partitions of equal length."""

    outer: GeneralizedPartition
    inner: GeneralizedPartition

    def __post_init__(self):
        outer = GeneralizedPartition(self.outer)
        inner = GeneralizedPartition(self.inner)
        if len(outer) != len(inner):
            raise PartitionError(
                f"outer and inner have different lengths: {len(outer)} != {len(inner)}"
            )
        if any(a < b for a, b in zip(outer, inner)):
            raise PartitionError(f"{tuple(inner)} is not contained in {tuple(outer)}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def r(self) -> int:
        return len(self.outer)

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight

    def cells(self) -> list[tuple[int, int]]:
        return skew_cells(self)


def transpose(u: Iterable[int]) -> Partition:
    u = u if type(u) is Partition else Partition(u)
    out = []
    k = len(u)
    for j in range(1, (u[0] if u else 0) + 1):
        while u[k - 1] < j:
            k -= 1
        out.append(k)
    return tuple.__new__(Partition, out)  # already a partition


def squared_norm(u: Iterable[int]) -> int:
    """Sum of the squared column lengths of ``u``."""
    return sum(c * c for c in transpose(u))


def chi(u: Sequence[int]) -> GeneralizedPartition:
    """The reversed generalized partition ``(-u_r, ..., -u_1)``."""
    return GeneralizedPartition(-p for p in reversed(tuple(u)))


def dominates(I: Iterable[int], J: Iterable[int]) -> bool:
    """True when ``I`` dominates ``J``.

    For different weights the comparison is made between ``|J| I`` and
    ``|I| J``, which for equal weights is the usual prefix-sum test.  A zero
    partition can only be compared with another zero partition.
    """
    I, J = Partition(I), Partition(J)
    wi, wj = I.weight, J.weight
    if (wi == 0) != (wj == 0):
        raise PartitionError("dominance with the zero partition is undefined for unequal weights")
    n = max(len(I), len(J))
    si = sj = 0
    for k in range(n):
        si += I[k] if k < len(I) else 0
        sj += J[k] if k < len(J) else 0
        if wj * si < wi * sj:
            return False
    return True


def equivalent(I: Iterable[int], J: Iterable[int]) -> bool:
    return dominates(I, J) and dominates(J, I)


class Reordering(NamedTuple):
    sorted: tuple[int, ...]
    inversions: int
    placement: tuple[int, ...]  # placement[k] = original index of the k-th sorted entry


def reorder_decreasing(a: Sequence[int]) -> Reordering:
    """Stable weakly decreasing rearrangement and its strict inversion count."""
    a = tuple(int(x) for x in a)
    placement = tuple(sorted(range(len(a)), key=lambda k: -a[k]))
    inversions = sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] < a[j])
    return Reordering(tuple(a[k] for k in placement), inversions, placement)


def reconstruct(a: Sequence[int], s: Sequence[int]) -> GeneralizedPartition:
    """Block sequence holding ``a[k]`` with multiplicity ``s[k] - s[k-1]``."""
    a, s = tuple(a), tuple(s)
    if len(a) != len(s):
        raise PartitionError(f"a and s differ in length: {len(a)} != {len(s)}")
    if any(a[k] <= a[k + 1] for k in range(len(a) - 1)):
        raise PartitionError(f"a must be strictly decreasing: {a}")
    if any(s[k] >= s[k + 1] for k in range(len(s) - 1)) or (s and s[0] <= 0):
        raise PartitionError(f"s must be strictly increasing and positive: {s}")
    parts: list[int] = []
    prev = 0
    for value, cut in zip(a, s):
        parts.extend([value] * (cut - prev))
        prev = cut
    return GeneralizedPartition(parts)


def distinct_decreasing(u: Sequence[int]) -> tuple[int, ...]:
    """``u^>``: the distinct terms of ``u`` in strictly decreasing order."""
    return tuple(sorted(set(u), reverse=True))


def distinct_increasing(u: Sequence[int]) -> tuple[int, ...]:
    """``u^<``: the distinct terms of ``u`` in strictly increasing order."""
    return tuple(sorted(set(u)))


def skew_cells(shape: SkewShape) -> list[tuple[int, int]]:
    return [
        (i + 1, j)
        for i, (hi, lo) in enumerate(zip(shape.outer, shape.inner))
        for j in range(lo + 1, hi + 1)
    ]


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None):
    """Partitions of ``n`` in reverse lexicographic order, optionally bounded."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rem, cap, slots):
        if rem == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in rec(rem - first, first, slots - 1):
                yield (first,) + rest

    for parts in rec(n, max_part, max_len):
        yield Partition(parts)


def partitions_in_box(rows: int, cols: int):
    """All partitions fitting in a ``rows x cols`` box, by weight."""
    for n in range(rows * cols + 1):
        yield from partitions_of(n, max_part=cols, max_len=rows)


def skew_shapes(n: int):
    """Skew shapes with ``n`` cells, no empty rows and no empty columns.

    Deleting the empty rows and columns of any skew diagram and translating
    gives exactly one of these.  The LR conditions only look at which cells
    share a row or a column and at the order of rows and columns, so this
    loses nothing.  Rows are built from the bottom up; the last inner part is 0.
    """

    def rec(rows, rem):
        if rem == 0:
            rows = rows[::-1]
            yield SkewShape(
                GeneralizedPartition(hi for _, hi in rows),
                GeneralizedPartition(lo for lo, _ in rows),
            )
            return
        lo_below, hi_below = rows[-1]
        # no empty column between this row and the one below: lo <= hi_below
        for lo in range(lo_below, hi_below + 1):
            for size in range(max(1, hi_below - lo), rem + 1):
                yield from rec(rows + [(lo, lo + size)], rem - size)

    if n == 0:
        yield SkewShape(GeneralizedPartition(), GeneralizedPartition())
    for first in range(1, n + 1):
        yield from rec([(0, first)], n - first)


# -- canonical text form ---------------------------------------------------


def parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "()", "0"):
        return () if text != "0" else (0,)
    try:
        return tuple(int(tok) for tok in text.strip("()[] ").split(","))
    except ValueError:
        raise PartitionError(f"cannot parse integer list {text!r}") from None


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2,1"``; the empty string or ``"0"`` is the zero partition."""
    return Partition(parse_ints(text))


def parse_generalized(text: str, r: int | None = None) -> GeneralizedPartition:
    """Parse ``"5,4,-1"`` or ``"2,1;r=4"``; a declared ``r`` pads with zeros."""
    body, _, tail = text.partition(";")
    if tail:
        key, _, val = tail.strip().partition("=")
        if key.strip() != "r":
            raise PartitionError(f"unknown qualifier {tail!r}")
        declared = int(val)
        if r is not None and r != declared:
            raise PartitionError(f"declared r={declared} conflicts with r={r}")
        r = declared
    parts = parse_ints(body)
    if r is not None:
        if len(parts) > r:
            raise PartitionError(f"{parts} has more than r={r} parts")
        if len(parts) < r:
            if parts and parts[-1] < 0:
                raise PartitionError(f"cannot zero-pad {parts} with a negative last part")
            parts = parts + (0,) * (r - len(parts))
    return GeneralizedPartition(parts)


def format_parts(parts: Sequence[int], r: int | None = None) -> str:
    body = ",".join(str(p) for p in parts)
    return f"{body};r={r}" if r is not None else body

