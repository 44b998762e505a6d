"""Arithmetic certificates for vanishing of ``H^{p,q}(X, F(E))``.

``X`` is a compact complex manifold of dimension ``n`` and ``E`` a vector
bundle of rank ``d``.  Every verdict is conditional on the ampleness
hypothesis it names; a failed inequality means "not covered by this result",
never "nonzero".
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb, isqrt
from typing import Sequence, Union

from .bott import DimensionError
from .cohomology import dim_schur
from .lr import lr_product
from .partitions import Partition, PartitionError, dominates, parse_ints, transpose

__all__ = [
    "SchurLambda",
    "TensorMix",
    "Hook",
    "SymDet",
    "WedgePower",
    "SchurDet",
    "Bundle",
    "VanishingQuery",
    "Verdict",
    "Certificate",
    "delta",
    "schur_weight",
    "bundle_rank",
    "thm_1_1",
    "cor_1_2",
    "cor_1_2_lambda",
    "classical",
    "hook_vanishing",
    "ampleness_implication",
    "audit_tensor",
    "certify",
    "parse_bundle",
]


@dataclass(frozen=True)
class SchurLambda:
    """``Lambda_R E = S_{R~} E``."""

    R: Partition

    def __post_init__(self):
        object.__setattr__(self, "R", Partition(self.R))
        if not self.R:
            raise PartitionError("R must be a nonzero partition")

    def describe(self) -> str:
        return f"Lambda_({_fmt(self.R)}) E"


@dataclass(frozen=True)
class TensorMix:
    """``(x)_i S^{k_i} E (x) (x)_j Lambda^{s_j} E``."""

    k: tuple[int, ...] = ()
    s: tuple[int, ...] = ()

    def __post_init__(self):
        k = tuple(int(x) for x in self.k)
        s = tuple(int(x) for x in self.s)
        if any(x <= 0 for x in k + s):
            raise PartitionError("k and s entries must be positive")
        if not k and not s:
            raise PartitionError("empty tensor product")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "s", s)

    def describe(self) -> str:
        parts = [f"S^{x} E" for x in self.k] + [f"Lambda^{x} E" for x in self.s]
        return " (x) ".join(parts)


@dataclass(frozen=True)
class Hook:
    """``Gamma^alpha_k E = S_{(alpha+1, 1^(k-alpha-1))} E``."""

    alpha: int
    k: int

    def __post_init__(self):
        if not 0 <= self.alpha < self.k:
            raise PartitionError(f"need 0 <= alpha < k, got alpha={self.alpha}, k={self.k}")

    def describe(self) -> str:
        return f"Gamma^{self.alpha}_{self.k} E"


@dataclass(frozen=True)
class SymDet:
    """``S^r E (x) det E``."""

    r: int

    def __post_init__(self):
        if self.r < 0:
            raise PartitionError("r must be nonnegative")

    def describe(self) -> str:
        return f"S^{self.r} E (x) det E"


@dataclass(frozen=True)
class WedgePower:
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise PartitionError("r must be positive")

    def describe(self) -> str:
        return f"Lambda^{self.r} E"


@dataclass(frozen=True)
class SchurDet:
    """``S_R E (x) (det E)^m``."""

    R: Partition
    m: int

    def __post_init__(self):
        object.__setattr__(self, "R", Partition(self.R))
        if self.m < 0:
            raise PartitionError("m must be nonnegative")

    def describe(self) -> str:
        return f"S_({_fmt(self.R)}) E (x) (det E)^{self.m}"


Bundle = Union[SchurLambda, TensorMix, Hook, SymDet, WedgePower, SchurDet]


def _fmt(parts) -> str:
    return ",".join(map(str, parts))


@dataclass(frozen=True)
class VanishingQuery:
    n: int
    d: int
    p: int
    q: int
    bundle: Bundle

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise DimensionError("n and d must be positive")
        if not (0 <= self.p <= self.n and 0 <= self.q <= self.n):
            raise DimensionError(f"need 0 <= p, q <= n={self.n}")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "p": self.p,
            "q": self.q,
            "bundle": self.bundle.describe(),
        }


@dataclass(frozen=True)
class Verdict:
    theorem: str
    hypothesis: str  # the ampleness assumption the result needs
    condition: str
    value: int  # left-hand side of the inequality
    threshold: int
    satisfied: bool
    vacuous: bool = False

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypothesis": self.hypothesis,
            "condition": self.condition,
            "value": self.value,
            "threshold": self.threshold,
            "satisfied": self.satisfied,
            "vacuous": self.vacuous,
        }


@dataclass(frozen=True)
class Certificate:
    query: VanishingQuery
    verdicts: tuple[Verdict, ...] = field(default_factory=tuple)

    @property
    def certified(self) -> bool:
        return any(v.satisfied for v in self.verdicts)

    def to_json(self) -> dict:
        return {
            "query": self.query.to_json(),
            "certified": self.certified,
            "verdicts": [v.to_json() for v in self.verdicts],
        }


def delta(x: int) -> int:
    """The ``t >= 1`` with ``C(t,2) <= x < C(t+1,2)``."""
    if x < 0:
        raise ValueError("delta is defined on nonnegative integers")
    return (1 + isqrt(1 + 8 * x)) // 2


def schur_weight(bundle: Bundle, d: int) -> Partition | None:
    """``lam`` with ``bundle = S_lam E``, ``None`` for a reducible tensor product.

    ``lam`` may have more than ``d`` parts, in which case the bundle is zero.
    """
    if isinstance(bundle, SchurLambda):
        return transpose(bundle.R)
    if isinstance(bundle, WedgePower):
        return Partition((1,) * bundle.r)
    if isinstance(bundle, Hook):
        return Partition((bundle.alpha + 1,) + (1,) * (bundle.k - bundle.alpha - 1))
    if isinstance(bundle, SymDet):
        return Partition((bundle.r + 1,) + (1,) * (d - 1))
    if isinstance(bundle, SchurDet):
        if len(bundle.R) > d:
            return bundle.R
        padded = bundle.R + (0,) * (d - len(bundle.R))
        return Partition(x + bundle.m for x in padded)
    if isinstance(bundle, TensorMix):
        if len(bundle.k) + len(bundle.s) == 1:
            return Partition(bundle.k) if bundle.k else Partition((1,) * bundle.s[0])
        return None
    raise TypeError(f"unknown bundle {bundle!r}")


def bundle_rank(bundle: Bundle, d: int) -> int:
    if isinstance(bundle, TensorMix):
        out = 1
        for k in bundle.k:
            out *= comb(d + k - 1, k)
        for s in bundle.s:
            out *= comb(d, s)
        return out
    lam = schur_weight(bundle, d)
    return dim_schur(lam, d) if len(lam) <= d else 0


def _compare(theorem, hypothesis, condition, value, threshold) -> Verdict:
    return Verdict(theorem, hypothesis, condition, value, threshold, value > threshold)


def _vacuous(theorem, hypothesis, why) -> Verdict:
    return Verdict(theorem, hypothesis, why, 0, 0, True, True)


def thm_1_1(query: VanishingQuery) -> Verdict | None:
    """``p + q - n > sum r_i (d - r_i)`` for ``Lambda_R E`` ample.

    Applies to any bundle of the form ``S_lam E``, with ``R = lam~``.
    """
    lam = schur_weight(query.bundle, query.d)
    if lam is None:
        return None
    R = transpose(lam)
    hyp = f"Lambda_({_fmt(R)}) E ample"
    if R and R[0] > query.d:
        return _vacuous("1.1", hyp, f"r_1 = {R[0]} > d = {query.d}: the bundle is zero")
    threshold = sum(r * (query.d - r) for r in R)
    return _compare("1.1", hyp, "p + q - n > sum r_i (d - r_i)", query.p + query.q - query.n, threshold)


def cor_1_2_lambda(k: Sequence[int], s: Sequence[int]) -> Partition:
    """The ``lam`` with ``lam~ = (s_1, ..., s_m, 1^(sum k))`` (``s`` sorted)."""
    return transpose(sorted(tuple(s) + (1,) * sum(k), reverse=True))


def cor_1_2(query: VanishingQuery) -> Verdict | None:
    b = query.bundle
    if not isinstance(b, TensorMix):
        return None
    hyp = f"{b.describe()} ample"
    if any(x > query.d for x in b.s):
        return _vacuous("1.2", hyp, "some s_j > d: the bundle is zero")
    d = query.d
    threshold = sum(x * (d - x) for x in b.s) + (d - 1) * sum(b.k)
    lam = cor_1_2_lambda(b.k, b.s)
    return _compare(
        "1.2",
        hyp + f" (equivalently S_({_fmt(lam)}) E ample)",
        "p + q - n > sum s_j (d - s_j) + (d - 1) sum k_i",
        query.p + query.q - query.n,
        threshold,
    )


def classical(query: VanishingQuery) -> list[Verdict]:
    """The earlier results whose bundle shape matches the query."""
    n, d, p, q, b = query.n, query.d, query.p, query.q, query.bundle
    out: list[Verdict] = []
    lam = schur_weight(b, d)
    rank = bundle_rank(b, d)
    if rank == 0:
        return [_vacuous("zero", "none", "the bundle has rank 0")]
    if rank == 1:
        out.append(_compare("2.1", f"{b.describe()} ample (line bundle)", "p + q > n", p + q, n))
    if lam is not None and lam and lam[-1] == 1 and lam[0] == 1:
        r = len(lam)
        if p == n:
            out.append(_compare("2.2", "E ample", "q > d - r (p = n)", q, d - r))
        out.append(
            _compare("2.3", f"Lambda^{r} E ample", "p + q - n > r (d - r)", p + q - n, r * (d - r))
        )
    if isinstance(b, TensorMix) and not b.k:
        out.append(
            _compare(
                "2.4",
                "E ample",
                "p + q - n > sum s_j (d - s_j)",
                p + q - n,
                sum(x * (d - x) for x in b.s),
            )
        )
    if lam is not None and len(lam) == d and all(x == 1 for x in lam[1:]) and p == n:
        out.append(_compare("2.5", "E ample", f"q > 0 (p = n, S^{lam[0] - 1} E (x) det E)", q, 0))
    if isinstance(b, SchurDet) and b.m == len(b.R) and p == n:
        out.append(_compare("2.6", "E ample", "q > 0 (p = n, m = length of R)", q, 0))
    return out


def hook_vanishing(query: VanishingQuery) -> Verdict | None:
    """``p + q - n > (delta(n-p) + alpha)(d - k + 2 alpha) - alpha (alpha + 1)``.

    ``S^r E (x) det E`` is the hook with ``alpha = r``, ``k = r + d``.
    """
    b, n, d, p, q = query.bundle, query.n, query.d, query.p, query.q
    if isinstance(b, SymDet):
        alpha, k = b.r, b.r + d
    elif isinstance(b, Hook):
        alpha, k = b.alpha, b.k
    else:
        return None
    hyp = "E ample"
    if d - k + alpha < 0:
        return _vacuous("2.7", hyp, f"d - k + alpha = {d - k + alpha} < 0: the bundle is zero")
    threshold = (delta(n - p) + alpha) * (d - k + 2 * alpha) - alpha * (alpha + 1)
    return _compare(
        "2.7",
        hyp,
        "p + q - n > (delta(n - p) + alpha)(d - k + 2 alpha) - alpha (alpha + 1)",
        p + q - n,
        threshold,
    )


def ampleness_implication(I: Sequence[int], J: Sequence[int]) -> bool:
    """True when ampleness of ``S_I E`` forces ampleness of ``S_J E``."""
    I, J = Partition(I), Partition(J)
    if not I or not J:
        raise PartitionError("ampleness comparison needs nonzero partitions")
    return dominates(I, J)


def certify(query: VanishingQuery) -> Certificate:
    verdicts: list[Verdict] = []
    for fn in (thm_1_1, cor_1_2, hook_vanishing):
        v = fn(query)
        if v is not None:
            verdicts.append(v)
    verdicts.extend(classical(query))
    verdicts.sort(key=lambda v: (v.theorem, v.condition))
    return Certificate(query, tuple(verdicts))


def tensor_summands(k: Sequence[int], s: Sequence[int], d: int) -> Counter:
    """Irreducible summands ``S_mu E`` of the tensor product for ``rank E = d``."""
    factors = [Partition((x,)) for x in k] + [Partition((1,) * x) for x in s]
    acc: Counter = Counter({Partition(): 1})
    for f in factors:
        nxt: Counter = Counter()
        for mu, m in acc.items():
            if len(f) > d:
                continue
            for w, c in lr_product(mu.padded(d), f):
                nxt[Partition(w)] += m * c
        acc = nxt
    return acc


def audit_tensor(k: Sequence[int], s: Sequence[int], d: int) -> dict:
    """Check that ``lam`` dominates every summand and carries the largest threshold."""
    lam = cor_1_2_lambda(k, s)
    summands = tensor_summands(k, s, d)
    rows = []
    for mu in sorted(summands, reverse=True):
        R = transpose(mu)
        rows.append(
            {
                "partition": list(mu),
                "mult": summands[mu],
                "threshold": sum(r * (d - r) for r in R),
                "dominated_by_lambda": dominates(lam, mu),
            }
        )
    best = max((row["threshold"] for row in rows), default=None)
    lam_threshold = sum(r * (d - r) for r in transpose(lam))
    return {
        "lambda": list(lam),
        "lambda_is_summand": lam in summands,
        "lambda_threshold": lam_threshold,
        "max_threshold": best,
        "optimal": lam in summands and best == lam_threshold and all(r["dominated_by_lambda"] for r in rows),
        "summands": rows,
    }


def parse_bundle(text: str) -> Bundle:
    """Parse ``schur:2,1``, ``wedge:2``, ``symdet:3``, ``hook:1,4``,
    ``schurdet:2,1@2`` or ``tensor:k=1,2;s=3``."""
    kind, _, body = text.partition(":")
    kind = kind.strip().lower()
    try:
        if kind == "schur":
            return SchurLambda(Partition(parse_ints(body)))
        if kind == "wedge":
            return WedgePower(int(body))
        if kind == "symdet":
            return SymDet(int(body))
        if kind == "hook":
            alpha, k = parse_ints(body)
            return Hook(alpha, k)
        if kind == "schurdet":
            R, _, m = body.partition("@")
            return SchurDet(Partition(parse_ints(R)), int(m))
        if kind == "tensor":
            fields = {"k": (), "s": ()}
            for chunk in filter(None, body.split(";")):
                key, _, vals = chunk.partition("=")
                key = key.strip()
                if key not in fields:
                    raise PartitionError(f"unknown tensor field {key!r}")
                fields[key] = parse_ints(vals)
            return TensorMix(fields["k"], fields["s"])
    except ValueError as exc:
        if isinstance(exc, PartitionError):
            raise
        raise PartitionError(f"cannot parse bundle {text!r}: {exc}") from None
    raise PartitionError(f"unknown bundle kind {kind!r}")
