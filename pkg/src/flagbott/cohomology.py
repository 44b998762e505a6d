"""Dolbeault cohomology tables of Schur bundles on Grassmannians and flag varieties.

Grassmannians ``G_r(C^d)`` parametrize rank ``r`` quotients; ``Q`` is the
universal quotient (rank ``r``) and ``S`` the subbundle (rank ``d - r``).
Each table entry ``H^{p,q}`` is a :class:`SchurDecomposition` of ``GL(V)``
representations with ``d = dim V``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod
from types import MappingProxyType
from typing import Mapping, Sequence

from .bott import DimensionError, FlagShape, grassmann_bott
from .lr import SchurDecomposition, lr_product
from .partitions import GeneralizedPartition, Partition, PartitionError, chi, partitions_of, transpose

__all__ = [
    "CohomologyTable",
    "omega_decomposition",
    "grassmann_cohomology",
    "flag_cohomology",
    "dim_schur",
    "table_dimensions",
]


@dataclass(frozen=True)
class CohomologyTable:
    """``(p, q) -> H^{p,q}`` with empty entries left out.

    ``space`` is ``("grassmannian", r, d)`` or ``("flag", d, s)``.
    """

    d: int
    space: tuple
    dimension: int
    entries: Mapping[tuple[int, int], SchurDecomposition] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (p, q), dec in sorted(self.entries.items()):
            if not (0 <= p <= self.dimension and 0 <= q <= self.dimension):
                raise DimensionError(f"bidegree ({p},{q}) outside 0..{self.dimension}")
            if dec:
                clean[(p, q)] = dec
        object.__setattr__(self, "entries", MappingProxyType(clean))

    def __getitem__(self, pq: tuple[int, int]) -> SchurDecomposition:
        return self.entries.get(pq, SchurDecomposition(self.d))

    def __iter__(self):
        return iter(self.entries.items())

    def row(self, p: int) -> "CohomologyTable":
        """The slice ``{(p, q)}_q``."""
        return CohomologyTable(
            self.d, self.space, self.dimension, {k: v for k, v in self.entries.items() if k[0] == p}
        )

    def terms(self):
        """Yield ``(p, q, rho, mult)`` for every stored term."""
        for (p, q), dec in self.entries.items():
            for rho, mult in dec:
                yield p, q, rho, mult

    def to_json(self, dims_only: bool = False) -> dict:
        kind, *params = self.space
        space = {"kind": kind, "d": self.d}
        if kind == "grassmannian":
            space["r"] = params[0]
        else:
            space["s"] = list(params[1])
        out = []
        for (p, q), dec in self.entries.items():
            entry = {"p": p, "q": q}
            if not dims_only:
                entry["terms"] = dec.to_json()["terms"]
            entry["dim"] = sum(m * dim_schur(lam, self.d) for lam, m in dec)
            out.append(entry)
        return {"space": space, "dimension": self.dimension, "entries": out}


def omega_decomposition(r: int, rank_s: int, p: int) -> list[Partition]:
    """Partitions ``u`` indexing ``Omega^p = sum S_u Q* (x) S_{u~} S``."""
    if r < 0 or rank_s < 0 or p < 0:
        raise DimensionError("ranks and degree must be nonnegative")
    return list(partitions_of(p, max_part=rank_s, max_len=r))


def _grassmann_dimension(r: int, d: int) -> int:
    return r * (d - r)


@lru_cache(maxsize=None)
def _grassmann_table(r: int, d: int, v: GeneralizedPartition) -> CohomologyTable:
    rank_s = d - r
    shift = v[-1] if v else 0
    base = Partition(x - shift for x in v)
    acc: dict[tuple[int, int], Counter] = defaultdict(Counter)
    for p in range(_grassmann_dimension(r, d) + 1):
        for u in omega_decomposition(r, rank_s, p):
            ut = tuple(transpose(u))
            ut = ut + (0,) * (rank_s - len(ut))
            for w, mult in lr_product(chi(u.padded(r)), base):
                w = w.shift(shift)
                res = grassmann_bott(w, ut)
                if res is not None:
                    acc[(p, res.i)][res.psi] += mult
    entries = {pq: SchurDecomposition.from_counts(d, c) for pq, c in acc.items()}
    return CohomologyTable(d, ("grassmannian", r, d), _grassmann_dimension(r, d), entries)


def grassmann_cohomology(r: int, d: int, v: Sequence[int] = ()) -> CohomologyTable:
    """``H^{p,q}(G_r(C^d), S_v Q)`` for every bidegree.

    ``v`` is a partition with at most ``r`` parts, or a generalized partition
    of length exactly ``r`` (a twist by a power of ``det Q``).
    """
    if not 1 <= r <= d:
        raise DimensionError(f"need 1 <= r <= d, got r={r}, d={d}")
    v = tuple(int(x) for x in v)
    if len(v) > r:
        raise DimensionError(f"v={v} has more than r={r} parts")
    if len(v) < r:
        if v and v[-1] < 0:
            raise PartitionError(f"cannot zero-pad {v}; give all r={r} parts")
        v = v + (0,) * (r - len(v))
    return _grassmann_table(r, d, GeneralizedPartition(v))


def _flag_table(flag: FlagShape, a: tuple[int, ...]) -> CohomologyTable:
    """Recursion over the projection to ``G_{s_l}``; ``a`` weakly decreasing."""
    r = flag.s[-1]
    if flag.l == 1:
        inner_dim = 0
        twisted = {((0, 0), GeneralizedPartition((a[0],) * r)): 1}
    else:
        # fibre: flags of type s' inside the rank s_l quotient
        top = a[-1]
        inner = _flag_table(FlagShape(r, flag.s[:-1]), tuple(x - top for x in a[:-1]))
        inner_dim = inner.dimension
        twisted = Counter()
        for p, q, rho, mult in inner.terms():
            twisted[((p, q), rho.shift(top))] += mult
    acc: dict[tuple[int, int], Counter] = defaultdict(Counter)
    for ((p_in, j), rho2), mult in twisted.items():
        outer = grassmann_cohomology(r, flag.d, rho2)
        for p_out, q_out, rho, m in outer.terms():
            acc[(p_in + p_out, j + q_out)][rho] += mult * m
    entries = {pq: SchurDecomposition.from_counts(flag.d, c) for pq, c in acc.items()}
    dim = _grassmann_dimension(r, flag.d) + inner_dim
    return CohomologyTable(flag.d, ("flag", flag.d, flag.s), dim, entries)


def flag_cohomology(flag: FlagShape, a: Sequence[int], P: int | None = None) -> CohomologyTable:
    """``H^{P,q}`` of the line bundle ``Q^a = (x)_k det(Q_k)^{a_k}`` on a partial flag variety.

    With ``P=None`` the whole table is returned.  Steps with ``l >= 2`` add
    up the terms of the spectral sequence for the projection to the last
    Grassmannian, assuming it degenerates.
    """
    a = tuple(int(x) for x in a)
    if len(a) != flag.l:
        raise DimensionError(f"a has {len(a)} entries but the flag has l={flag.l} steps")
    if any(a[k] <= a[k + 1] for k in range(len(a) - 1)):
        raise PartitionError(f"a={a} must be strictly decreasing")
    table = _flag_table(flag, a)
    if P is None:
        return table
    if not 0 <= P <= table.dimension:
        raise DimensionError(f"P={P} outside 0..{table.dimension}")
    return table.row(P)


def dim_schur(lam: Sequence[int], d: int | None = None) -> int:
    """Weyl dimension of ``S_lam C^d``; ``lam`` is zero-padded to length ``d``."""
    lam = tuple(int(x) for x in lam)
    if d is None:
        d = len(lam)
    if len(lam) > d:
        if any(lam[d:]):
            return 0
        lam = lam[:d]
    if len(lam) < d:
        if lam and lam[-1] < 0:
            raise PartitionError(f"cannot zero-pad {lam} to length {d}")
        lam = lam + (0,) * (d - len(lam))
    GeneralizedPartition(lam)
    num = prod(lam[i] - lam[j] + j - i for i in range(d) for j in range(i + 1, d))
    den = prod(j - i for i in range(d) for j in range(i + 1, d))
    return num // den


def table_dimensions(t: CohomologyTable) -> dict[tuple[int, int], int]:
    return {pq: sum(m * dim_schur(lam, t.d) for lam, m in dec) for pq, dec in t}
