"""Bott's theorem on flag varieties and its Grassmannian bookkeeping.

A non-admissible weight has no cohomology at all; the functions here return
``None`` for it rather than raising, since callers sum over many weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .partitions import (
    GeneralizedPartition,
    Partition,
    PartitionError,
    chi,
    reorder_decreasing,
    transpose,
)

__all__ = [
    "DimensionError",
    "BottResult",
    "FlagShape",
    "is_admissible",
    "bott",
    "expand_flag_weight",
    "bott_partial",
    "grassmann_bott",
    "GrassmannSplit",
    "lemma55",
    "SplitDiagram",
    "splitting",
    "beta_bijection",
]


class DimensionError(ValueError):
    code = "E_DIMENSION"


@dataclass(frozen=True)
class BottResult:
    """``H^q = S_psi V`` for ``q = i`` and zero otherwise."""

    i: int
    psi: GeneralizedPartition

    def to_json(self) -> dict:
        return {"admissible": True, "i": self.i, "psi": list(self.psi)}


@dataclass(frozen=True)
class FlagShape:
    """Partial flags of codimensions ``s_1 < ... < s_l <= d`` in ``C^d``."""

    d: int
    s: tuple[int, ...]

    def __post_init__(self):
        s = tuple(int(x) for x in self.s)
        object.__setattr__(self, "s", s)
        if self.d < 1:
            raise DimensionError(f"d must be positive, got {self.d}")
        if not s:
            raise DimensionError("s must be nonempty")
        if s[0] < 1 or any(s[k] >= s[k + 1] for k in range(len(s) - 1)) or s[-1] > self.d:
            raise DimensionError(f"s={s} must be strictly increasing in 1..{self.d}")

    @property
    def l(self) -> int:
        return len(self.s)

    @property
    def ranks(self) -> tuple[int, ...]:
        """Ranks of the quotient bundles ``Q_1, ..., Q_l``."""
        return tuple(b - a for a, b in zip((0,) + self.s, self.s))

    @property
    def dimension(self) -> int:
        """Complex dimension of the flag variety."""
        blocks = self.ranks + ((self.d - self.s[-1],) if self.s[-1] < self.d else ())
        total = sum(blocks)
        return (total * total - sum(b * b for b in blocks)) // 2


def is_admissible(a: Sequence[int]) -> bool:
    shifted = [x - k for k, x in enumerate(a, start=1)]
    return len(set(shifted)) == len(shifted)


def bott(a: Sequence[int]) -> BottResult | None:
    """Cohomology of the line bundle ``Q^a`` on the complete flag variety of ``C^d``, ``d = len(a)``."""
    if not is_admissible(a):
        return None
    shifted = [x - k for k, x in enumerate(a, start=1)]
    order = reorder_decreasing(shifted)
    psi = GeneralizedPartition(x + k for k, x in enumerate(order.sorted, start=1))
    return BottResult(order.inversions, psi)


def expand_flag_weight(flag: FlagShape, a: Sequence[int]) -> GeneralizedPartition:
    """``a_s`` padded with zeros to length ``d`` (the last block carries no twist)."""
    a = tuple(int(x) for x in a)
    if len(a) != flag.l:
        raise DimensionError(f"a has {len(a)} entries but the flag has l={flag.l} steps")
    parts: list[int] = []
    prev = 0
    for value, cut in zip(a, flag.s):
        parts.extend([value] * (cut - prev))
        prev = cut
    parts.extend([0] * (flag.d - prev))
    return tuple(parts)


def bott_partial(flag: FlagShape, a: Sequence[int]) -> BottResult | None:
    return bott(expand_flag_weight(flag, a))


def grassmann_bott(u: Sequence[int], v: Sequence[int]) -> BottResult | None:
    """``H^*(G_r(V), S_u Q (x) S_v S)`` with ``r = len(u)``, ``d - r = len(v)``."""
    return bott(tuple(u) + tuple(v))


@dataclass(frozen=True)
class GrassmannSplit:
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gamma_rows: tuple[int, ...]  # [gamma]_i = card{j : alpha_i < beta_j}
    gamma_cols: tuple[int, ...]  # <gamma>_j = card{i : alpha_i < beta_j}
    s_plus: tuple[int, ...]
    s_minus: tuple[int, ...]
    i: int
    psi: GeneralizedPartition


def _conjugate_padded(u: Sequence[int], width: int) -> tuple[int, ...]:
    ut = tuple(transpose(u))
    if len(ut) > width:
        raise DimensionError(
            f"transpose of {tuple(u)} has {len(ut)} parts; the subbundle has rank {width}"
        )
    return ut + (0,) * (width - len(ut))


def lemma55(w: Sequence[int], u: Sequence[int], d: int) -> GrassmannSplit | None:
    """Cohomology of ``S_w Q (x) S_{u~} S`` on ``G_r(C^d)`` through the alpha/beta split.

    Computes ``psi`` as the decreasing rearrangement of ``(s_+, s_-)`` and
    ``i = |s_+| - |w|`` without going through the inversion count.
    """
    w = GeneralizedPartition(w)
    u = Partition(u)
    r = len(w)
    ut = _conjugate_padded(u, d - r)
    alpha = tuple(w[k] - (k + 1) for k in range(r))
    beta = tuple(ut[k] - (r + k + 1) for k in range(d - r))
    if set(alpha) & set(beta):
        return None
    gamma_rows = tuple(sum(1 for b in beta if a < b) for a in alpha)
    gamma_cols = tuple(sum(1 for a in alpha if a < b) for b in beta)
    s_plus = tuple(x + g for x, g in zip(w, gamma_rows))
    s_minus = tuple(x - g for x, g in zip(ut, gamma_cols))
    psi = GeneralizedPartition(sorted(s_plus + s_minus, reverse=True))
    i = sum(s_plus) - sum(w)
    return GrassmannSplit(alpha, beta, gamma_rows, gamma_cols, s_plus, s_minus, i, psi)


@dataclass(frozen=True)
class SplitDiagram:
    """The cells of ``D(w / chi(u))`` sorted into ``Sigma_+`` and ``Sigma_-``."""

    w: GeneralizedPartition
    u: Partition
    cells: frozenset
    sigma_plus: frozenset
    sigma_minus: frozenset

    @property
    def r(self) -> int:
        return len(self.w)

    @property
    def admissible(self) -> bool:
        return len(self.sigma_plus) + len(self.sigma_minus) == len(self.cells)

    def plus_rows(self) -> tuple[int, ...]:
        """``[Sigma_+]``: number of Sigma_+ cells in each row ``1..r``."""
        return tuple(sum(1 for (i, _) in self.sigma_plus if i == k) for k in range(1, self.r + 1))

    def minus_column(self, j: int) -> int:
        """``<Sigma_->_j``: number of Sigma_- cells in column ``j``."""
        return sum(1 for (_, jj) in self.sigma_minus if jj == j)

    def reflected_minus_columns(self) -> tuple[int, ...]:
        """``<chi*(Sigma_-)>`` for columns ``1..u_1``; chi* sends column j to 1 - j."""
        width = self.u[0] if self.u else 0
        return tuple(self.minus_column(1 - k) for k in range(1, width + 1))

    def inversions(self) -> int:
        """``|u| - card(Sigma_-)``."""
        return self.u.weight - len(self.sigma_minus)

    def to_json(self) -> dict:
        return {
            "admissible": self.admissible,
            "card_plus": len(self.sigma_plus),
            "card_minus": len(self.sigma_minus),
            "s_plus": list(self.plus_rows()),
            "s_minus": list(self.reflected_minus_columns()),
            "i": self.inversions(),
        }


def _beta_exceeds(ut: Sequence[int], r: int, k: int, alpha: int) -> int:
    """Sign of ``beta_k - alpha`` where ``beta_k = u~_k - (r + k)``.

    Conjugate parts with ``k <= 0`` count as +infinity.
    """
    if k <= 0:
        return 1
    part = ut[k - 1] if k <= len(ut) else 0
    diff = part - (r + k) - alpha
    return (diff > 0) - (diff < 0)


def splitting(w: Sequence[int], u: Sequence[int]) -> SplitDiagram | None:
    """Split ``D(w / chi(u))``; ``None`` when a cell has ``beta_{1-j} = alpha_i``."""
    w = GeneralizedPartition(w)
    u = Partition(u)
    r = len(w)
    if len(u) > r:
        raise DimensionError(f"u={tuple(u)} has more than r={r} parts")
    inner = chi(u.padded(r))
    if any(lo > hi for lo, hi in zip(inner, w)):
        raise PartitionError(f"D(chi(u)) = {tuple(inner)} is not contained in D(w) = {tuple(w)}")
    ut = tuple(transpose(u))
    cells, plus, minus = set(), set(), set()
    for i in range(1, r + 1):
        alpha = w[i - 1] - i
        for j in range(inner[i - 1] + 1, w[i - 1] + 1):
            cells.add((i, j))
            sign = _beta_exceeds(ut, r, 1 - j, alpha)
            if sign > 0:
                plus.add((i, j))
            elif sign < 0:
                minus.add((i, j))
    split = SplitDiagram(w, u, frozenset(cells), frozenset(plus), frozenset(minus))
    return split if split.admissible else None


def beta_bijection(split: SplitDiagram) -> dict[tuple[int, int], tuple[int, int]]:
    """The bijection ``Sigma_+ u Sigma_- -> Y(psi)`` from the shortest reordering.

    Row ``i`` of Sigma_+ goes to the row where ``[Sigma_+]_i`` lands, left to
    right; column ``j`` of Sigma_- goes to the row where ``<Sigma_->_j`` lands,
    its cells taken from the bottom up (the order chi* puts them in).
    """
    rows = split.plus_rows()
    cols = split.reflected_minus_columns()
    order = reorder_decreasing(rows + cols)
    target_row = {src: pos + 1 for pos, src in enumerate(order.placement)}
    out = {}
    for i in range(1, split.r + 1):
        row = sorted(j for (ii, j) in split.sigma_plus if ii == i)
        for t, j in enumerate(row, start=1):
            out[(i, j)] = (target_row[i - 1], t)
    for k in range(1, len(cols) + 1):
        j = 1 - k
        column = sorted((i for (i, jj) in split.sigma_minus if jj == j), reverse=True)
        for t, i in enumerate(column, start=1):
            out[(i, j)] = (target_row[split.r + k - 1], t)
    return out
