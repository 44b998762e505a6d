"""Littlewood-Richardson fillings and tensor products of Schur functors.

A numbering of a skew diagram is a bijection ``c = (c1, c2)`` from its cells
onto the Young diagram ``Y(v)`` of the content ``v``; ``b`` is the inverse.
The checks below work on batches of numberings at once (numpy arrays), which
is what the exhaustive sweeps need; the single-filling functions are thin
wrappers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .partitions import (
    GeneralizedPartition,
    Partition,
    PartitionError,
    SkewShape,
    transpose,
)

__all__ = [
    "lr_order_less",
    "lr_sorted",
    "SchurDecomposition",
    "LRFilling",
    "NumberingBatch",
    "check_classical",
    "satisfies_young",
    "check_eight",
    "EIGHT_CONDITIONS",
    "enumerate_fillings",
    "iter_lr",
    "lr_product",
    "lr_product_fillings",
    "is_height_increasing",
]

Cell = tuple[int, int]

EIGHT_CONDITIONS = ("h", "th", "w", "tw", "h'", "th'", "w'", "tw'")


def lr_order_less(x: Cell, y: Cell) -> bool:
    """``x <_LR y``: higher rows first, and right to left inside a row."""
    return x[0] < y[0] or (x[0] == y[0] and x[1] > y[1])


def _lr_key(x: Cell) -> tuple[int, int]:
    return (x[0], -x[1])


def lr_sorted(cells: Iterable[Cell]) -> list[Cell]:
    return sorted(cells, key=_lr_key)


@dataclass(frozen=True)
class SchurDecomposition:
    """Multiset of generalized partitions of a common length ``r``."""

    r: int
    terms: tuple[tuple[GeneralizedPartition, int], ...] = ()

    @classmethod
    def from_counts(cls, r: int, counts: Mapping[Sequence[int], int]) -> "SchurDecomposition":
        merged: Counter = Counter()
        for lam, mult in counts.items():
            lam = GeneralizedPartition(lam)
            if len(lam) != r:
                raise PartitionError(f"term {tuple(lam)} does not have length r={r}")
            merged[lam] += mult
        if any(m < 0 for m in merged.values()):
            raise ValueError("negative multiplicity in Schur decomposition")
        terms = tuple(sorted(((k, m) for k, m in merged.items() if m), reverse=True))
        return cls(r, terms)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, lam: Sequence[int]) -> int:
        lam = tuple(lam)
        for key, mult in self.terms:
            if key == lam:
                return mult
        return 0

    def as_dict(self) -> dict[GeneralizedPartition, int]:
        return dict(self.terms)

    def total(self) -> int:
        return sum(m for _, m in self.terms)

    def __add__(self, other: "SchurDecomposition") -> "SchurDecomposition":
        if self.r != other.r:
            raise PartitionError(f"cannot add decompositions with r={self.r} and r={other.r}")
        counts = Counter(self.as_dict())
        counts.update(other.as_dict())
        return SchurDecomposition.from_counts(self.r, counts)

    def scaled(self, k: int) -> "SchurDecomposition":
        return SchurDecomposition.from_counts(self.r, {lam: k * m for lam, m in self.terms})

    def to_json(self) -> dict:
        return {
            "terms": [{"partition": _trimmed(lam), "mult": m} for lam, m in self.terms],
            "r": self.r,
        }

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            (f"{m}*" if m > 1 else "") + "(" + ",".join(map(str, _trimmed(lam))) + ")"
            for lam, m in self.terms
        )


def _trimmed(lam: Sequence[int]) -> list[int]:
    out = list(lam)
    while out and out[-1] == 0:
        out.pop()
    return out


# -- numberings -------------------------------------------------------------


def _pairs(cells: Sequence[Cell], same: int) -> np.ndarray:
    """Index pairs (a, b) of cells sharing coordinate ``same`` with a before b."""
    other = 1 - same
    out = [
        (a, b) if cells[a][other] < cells[b][other] else (b, a)
        for a, b in combinations(range(len(cells)), 2)
        if cells[a][same] == cells[b][same]
    ]
    return np.array(out, dtype=np.intp).reshape(-1, 2)


class NumberingBatch:
    """A batch of bijections from the cells of a skew diagram onto ``Y(v)``.

    ``assignment[t, x]`` is the index (into ``content.cells()``) of the image
    of ``cells[x]`` under the ``t``-th numbering.
    """

    def __init__(self, cells: Sequence[Cell], content: Sequence[int], assignment):
        self.cells = list(cells)
        self.content = Partition(content)
        self.ycells = self.content.cells()
        n = len(self.cells)
        if n != len(self.ycells):
            raise PartitionError(
                f"{n} cells cannot be numbered by content of weight {len(self.ycells)}"
            )
        a = np.asarray(assignment, dtype=np.intp)
        if a.ndim == 1:
            a = a[None, :]
        if a.shape[1] != n:
            raise PartitionError(f"assignment rows must have {n} entries")
        self.assignment = a
        self.n = n
        self.size = a.shape[0]

        cell_row = np.array([c[0] for c in self.cells], dtype=np.int32)
        cell_col = np.array([c[1] for c in self.cells], dtype=np.int32)
        yrow = np.array([c[0] for c in self.ycells], dtype=np.int32)
        ycol = np.array([c[1] for c in self.ycells], dtype=np.int32)

        self.c1 = yrow[a]
        self.c2 = ycol[a]
        inv = np.empty_like(a)
        np.put_along_axis(inv, a, np.broadcast_to(np.arange(n), a.shape), axis=1)
        self.inverse = inv
        self.b1 = cell_row[inv]
        self.b2 = cell_col[inv]

        # LR order: position of each cell, and cells listed in that order
        order = sorted(range(n), key=lambda x: _lr_key(self.cells[x]))
        self.lr_order = np.array(order, dtype=np.intp)
        self.lr_rank = np.empty(n, dtype=np.intp)
        self.lr_rank[self.lr_order] = np.arange(n)

        self.col_pairs = _pairs(self.cells, 1)
        self.row_pairs = _pairs(self.cells, 0)
        self.ycol_pairs = _pairs(self.ycells, 1)
        self.yrow_pairs = _pairs(self.ycells, 0)

    @staticmethod
    def _holds(values: np.ndarray, pairs: np.ndarray, op) -> np.ndarray:
        if len(pairs) == 0:
            return np.ones(values.shape[0], dtype=bool)
        return op(values[:, pairs[:, 0]], values[:, pairs[:, 1]]).all(axis=1)

    # classical rules on c1 ------------------------------------------------

    def l1(self) -> np.ndarray:
        """c1 strictly increasing down each column."""
        return self._holds(self.c1, self.col_pairs, np.less)

    def l2(self) -> np.ndarray:
        """c1 weakly increasing along each row."""
        return self._holds(self.c1, self.row_pairs, np.less_equal)

    def sigma(self) -> np.ndarray:
        """``sigma[t, m, k-1]``: number of letters k among the first m+1 cells in LR order."""
        K = max(len(self.content), 1)
        c1_lr = self.c1[:, self.lr_order]
        onehot = c1_lr[:, :, None] == np.arange(1, K + 2, dtype=np.int32)[None, None, :]
        return np.cumsum(onehot, axis=1, dtype=np.int16)

    def l3(self) -> np.ndarray:
        if self.n == 0:
            return np.ones(self.size, dtype=bool)
        s = self.sigma()
        return (s[:, :, :-1] >= s[:, :, 1:]).all(axis=(1, 2))

    def classical(self) -> np.ndarray:
        return self.l1() & self.l2() & self.l3()

    def young(self) -> np.ndarray:
        """Condition (Y): every ``C(x) = {c(y) : y <=_LR x}`` is a Young diagram."""
        if self.n == 0:
            return np.ones(self.size, dtype=bool)
        t = self.lr_rank[self.inverse]  # LR position of the preimage of each Y-cell
        prefix = np.arange(1, self.n + 1)
        member = t[:, None, :] < prefix[None, :, None]  # (batch, prefix, ycell)
        index = {c: k for k, c in enumerate(self.ycells)}
        # a cell of C(x) needs its left and upper neighbours in C(x) as well
        links = [
            (k, index[nb])
            for k, (i, j) in enumerate(self.ycells)
            for nb in ((i, j - 1), (i - 1, j))
            if nb in index
        ]
        if not links:
            return np.ones(self.size, dtype=bool)
        cell, nb = np.array(links, dtype=np.intp).T
        return (~member[:, :, cell] | member[:, :, nb]).all(axis=(1, 2))

    def canonical_c2(self) -> np.ndarray:
        """``c2(x) = card{y <=_LR x : c1(y) = c1(x)}``, one row per numbering."""
        if self.n == 0:
            return np.zeros((self.size, 0), dtype=np.int64)
        s = self.sigma()
        c1_lr = self.c1[:, self.lr_order]
        c2_lr = np.take_along_axis(s, (c1_lr - 1)[:, :, None], axis=2)[:, :, 0]
        return c2_lr[:, self.lr_rank]

    # the eight symmetric conditions --------------------------------------

    def eight(self) -> dict[str, np.ndarray]:
        h = self._holds
        return {
            "h": h(self.c1, self.col_pairs, np.less),
            "th": h(self.c2, self.col_pairs, np.greater_equal),
            "w": h(self.c2, self.row_pairs, np.greater),
            "tw": h(self.c1, self.row_pairs, np.less_equal),
            "h'": h(self.b1, self.ycol_pairs, np.less),
            "th'": h(self.b2, self.ycol_pairs, np.greater_equal),
            "w'": h(self.b2, self.yrow_pairs, np.greater),
            "tw'": h(self.b1, self.yrow_pairs, np.less_equal),
        }

    def eight_all(self) -> np.ndarray:
        ok = np.ones(self.size, dtype=bool)
        for mask in self.eight().values():
            ok &= mask
        return ok


@dataclass(frozen=True)
class LRFilling:
    """A numbering ``c = (c1, c2)`` of ``shape`` onto ``Y(content)``."""

    shape: SkewShape
    content: Partition
    c1: Mapping[Cell, int]
    c2: Mapping[Cell, int] = field(default=None)

    def __post_init__(self):
        content = Partition(self.content)
        object.__setattr__(self, "content", content)
        cells = self.shape.cells()
        if set(self.c1) != set(cells):
            raise PartitionError("c1 is not defined exactly on the cells of the shape")
        c1 = {x: int(self.c1[x]) for x in cells}
        letters = Counter(c1.values())
        if any(letters[k + 1] != vk for k, vk in enumerate(content)) or sum(letters.values()) != content.weight:
            raise PartitionError(f"c1 does not have content {tuple(content)}")
        object.__setattr__(self, "c1", c1)
        if self.c2 is None:
            seen: Counter = Counter()
            c2 = {}
            for x in lr_sorted(cells):
                seen[c1[x]] += 1
                c2[x] = seen[c1[x]]
        else:
            c2 = {x: int(self.c2[x]) for x in cells}
        object.__setattr__(self, "c2", c2)

    @property
    def cells(self) -> list[Cell]:
        return self.shape.cells()

    def c(self, x: Cell) -> Cell:
        return (self.c1[x], self.c2[x])

    def b(self) -> dict[Cell, Cell]:
        """Inverse map ``Y(content) -> cells``."""
        return {self.c(x): x for x in self.cells}

    def batch(self) -> NumberingBatch:
        ycells = self.content.cells()
        index = {y: k for k, y in enumerate(ycells)}
        cells = self.cells
        try:
            row = [index[self.c(x)] for x in cells]
        except KeyError as exc:
            raise PartitionError(f"c maps a cell outside Y(v): {exc}") from None
        if len(set(row)) != len(row):
            raise PartitionError("c = (c1, c2) is not a bijection onto Y(v)")
        return NumberingBatch(cells, self.content, [row])

    def rows(self) -> list[list[int]]:
        """c1 read row by row, left to right."""
        out = []
        for i, (hi, lo) in enumerate(zip(self.shape.outer, self.shape.inner)):
            out.append([self.c1[(i + 1, j)] for j in range(lo + 1, hi + 1)])
        return out


def check_classical(f: LRFilling) -> bool:
    """(L1) column-strict, (L2) row-weak and (L3) the lattice condition on c1."""
    return bool(f.batch().classical()[0])


def satisfies_young(f: LRFilling) -> bool:
    return bool(f.batch().young()[0])


def check_eight(f: LRFilling) -> bool:
    return bool(f.batch().eight_all()[0])


# -- enumeration --------------------------------------------------------------


def enumerate_fillings(shape: SkewShape, content: Sequence[int]) -> list[LRFilling]:
    """All numberings of ``shape`` with the given content satisfying the LR rules.

    Cells are filled in LR order; the result is ordered lexicographically by
    the c1 word in that order.
    """
    content = Partition(content)
    cells = lr_sorted(shape.cells())
    if len(cells) != content.weight:
        raise PartitionError(
            f"shape has {len(cells)} cells but content {tuple(content)} has weight {content.weight}"
        )
    pos = {x: k for k, x in enumerate(cells)}
    right = [pos.get((i, j + 1)) for i, j in cells]
    above = [pos.get((i - 1, j)) for i, j in cells]
    K = len(content)
    word = [0] * len(cells)
    count = [0] * (K + 1)
    out: list[LRFilling] = []

    def rec(t: int):
        if t == len(cells):
            out.append(LRFilling(shape, content, dict(zip(cells, word))))
            return
        hi = K if right[t] is None else word[right[t]]
        lo = 1 if above[t] is None else word[above[t]] + 1
        for k in range(lo, hi + 1):
            if count[k] == content[k - 1]:
                continue
            if k > 1 and count[k] + 1 > count[k - 1]:
                continue
            count[k] += 1
            word[t] = k
            rec(t + 1)
            count[k] -= 1

    rec(0)
    return out


def iter_lr(u: Sequence[int], v: Sequence[int]) -> Iterator[tuple[GeneralizedPartition, tuple[tuple[int, ...], ...]]]:
    """LR fillings of all ``w / u`` with content ``v``, built row by row.

    Yields ``(w, rows)`` where ``rows[i]`` lists the letters of row ``i + 1``
    left to right.  ``u`` is a generalized partition whose length fixes the
    number of rows.
    """
    u = GeneralizedPartition(u)
    v = Partition(v)
    r, K = len(u), len(v)
    counts = [0] * K
    w = [0] * r
    rows: list[tuple[int, ...]] = [()] * r

    def row_choices(i: int):
        cap = None if i == 0 else w[i - 1] - u[i]
        m = [0] * K

        def rec(k: int, used: int):
            if k == K:
                yield tuple(m)
                return
            top = v[k] - counts[k]
            if k > 0:
                top = min(top, counts[k - 1] - counts[k])
            if cap is not None:
                top = min(top, cap - used)
            for mk in range(top, -1, -1):
                m[k] = mk
                yield from rec(k + 1, used + mk)
            m[k] = 0

        yield from rec(0, 0)

    def column_strict(i: int, letters: tuple[int, ...]) -> bool:
        if i == 0:
            return True
        prev = rows[i - 1]
        # columns shared with the row above run from u[i-1] + 1 to u[i] + len(letters)
        for c in range(u[i - 1] + 1, u[i] + len(letters) + 1):
            if letters[c - u[i] - 1] <= prev[c - u[i - 1] - 1]:
                return False
        return True

    def rec_row(i: int):
        if i == r:
            if counts == list(v):
                yield GeneralizedPartition(w), tuple(rows)
            return
        for m in row_choices(i):
            letters = tuple(k + 1 for k in range(K) for _ in range(m[k]))
            if not column_strict(i, letters):
                continue
            w[i] = u[i] + len(letters)
            rows[i] = letters
            for k in range(K):
                counts[k] += m[k]
            yield from rec_row(i + 1)
            for k in range(K):
                counts[k] -= m[k]

    yield from rec_row(0)


def _as_generalized(u: Sequence[int], v: Sequence[int], r: int | None) -> GeneralizedPartition:
    if r is None:
        if isinstance(u, GeneralizedPartition) or any(x < 0 for x in u):
            return GeneralizedPartition(u)
        r = len(Partition(u)) + len(Partition(v))
    u = tuple(u)
    if len(u) > r:
        raise PartitionError(f"{u} has more than r={r} parts")
    if len(u) < r and u and u[-1] < 0:
        raise PartitionError(f"cannot zero-pad {u}; give it as a length-{r} generalized partition")
    return GeneralizedPartition(u + (0,) * (r - len(u)))


def lr_product(u: Sequence[int], v: Sequence[int], r: int | None = None) -> SchurDecomposition:
    """Decompose ``S_u V (x) S_v V`` for ``dim V = r``.

    ``u`` may be a generalized partition; when ``r`` is omitted a
    :class:`GeneralizedPartition` (or any sequence with a negative part) keeps
    its own length and a plain partition is padded to ``len(u) + len(v)`` rows so that nothing is truncated.
    """
    u = _as_generalized(u, v, r)
    counts: Counter = Counter(w for w, _ in iter_lr(u, v))
    return SchurDecomposition.from_counts(len(u), counts)


def lr_product_fillings(
    u: Sequence[int], v: Sequence[int], r: int | None = None
) -> dict[GeneralizedPartition, list[LRFilling]]:
    """Same as :func:`lr_product` but keeping every filling ``(w, b)``."""
    u = _as_generalized(u, v, r)
    v = Partition(v)
    out: dict[GeneralizedPartition, list[LRFilling]] = {}
    for w, rows in iter_lr(u, v):
        c1 = {
            (i + 1, u[i] + 1 + t): letter
            for i, letters in enumerate(rows)
            for t, letter in enumerate(letters)
        }
        out.setdefault(w, []).append(LRFilling(SkewShape(w, u), v, c1))
    return out


def is_height_increasing(b: Mapping[Cell, Cell]) -> bool:
    return all(target[0] >= source[0] for source, target in b.items())


def transpose_decomposition(dec: SchurDecomposition, r: int) -> SchurDecomposition:
    """Transpose every (plain partition) term, re-padded to length ``r``."""
    return SchurDecomposition.from_counts(
        r, {transpose(Partition(lam)).padded(r): m for lam, m in dec}
    )
