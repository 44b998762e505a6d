"""Brute-force ground truth through Schur polynomials.

Nothing here shares code with :mod:`flagbott.lr`; semistandard tableaux are
filled row-major and products are expanded back into the Schur basis by
peeling off leading monomials.  Slow by design.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Mapping, Sequence

from .lr import SchurDecomposition
from .partitions import Partition

__all__ = ["Polynomial", "semistandard_tableaux", "schur_polynomial", "expand_in_schur_basis", "oracle_product"]


class Polynomial:
    """Sparse polynomial in ``k`` variables with integer coefficients."""

    def __init__(self, k: int, coeffs: Mapping[tuple[int, ...], int] | None = None):
        self.k = k
        self.coeffs: dict[tuple[int, ...], int] = {}
        for exp, c in (coeffs or {}).items():
            if len(exp) != k:
                raise ValueError(f"exponent {exp} is not of length {k}")
            if c:
                self.coeffs[tuple(exp)] = self.coeffs.get(tuple(exp), 0) + c
        self.coeffs = {e: c for e, c in self.coeffs.items() if c}

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.k == other.k and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = defaultdict(int, self.coeffs)
        for e, c in other.coeffs.items():
            out[e] += c
        return Polynomial(self.k, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scaled(-1)

    def scaled(self, c: int) -> "Polynomial":
        return Polynomial(self.k, {e: c * v for e, v in self.coeffs.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.k != other.k:
            raise ValueError("polynomials in different numbers of variables")
        out: dict = defaultdict(int)
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return Polynomial(self.k, out)

    def evaluate(self, point: Sequence[int]) -> int:
        total = 0
        for e, c in self.coeffs.items():
            term = c
            for x, n in zip(point, e):
                term *= x**n
            total += term
        return total

    def swap(self, a: int, b: int) -> "Polynomial":
        """Exchange variables ``a`` and ``b``."""
        out = {}
        for e, c in self.coeffs.items():
            e = list(e)
            e[a], e[b] = e[b], e[a]
            out[tuple(e)] = c
        return Polynomial(self.k, out)

    def leading(self) -> tuple[tuple[int, ...], int]:
        e = max(self.coeffs)
        return e, self.coeffs[e]

    def __repr__(self):
        return f"Polynomial({self.k}, {self.coeffs!r})"


def semistandard_tableaux(lam: Sequence[int], k: int):
    """Semistandard tableaux of shape ``lam`` with entries in ``1..k``, as row lists."""
    lam = Partition(lam)
    cells = lam.cells()
    filling: dict[tuple[int, int], int] = {}

    def rec(t: int):
        if t == len(cells):
            yield [[filling[(i + 1, j + 1)] for j in range(part)] for i, part in enumerate(lam)]
            return
        i, j = cells[t]
        lo = 1
        if j > 1:
            lo = filling[(i, j - 1)]
        if i > 1:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for x in range(lo, k + 1):
            filling[(i, j)] = x
            yield from rec(t + 1)
        filling.pop((i, j), None)

    yield from rec(0)


def schur_polynomial(lam: Sequence[int], k: int) -> Polynomial:
    coeffs: dict = defaultdict(int)
    for tab in semistandard_tableaux(lam, k):
        exp = [0] * k
        for row in tab:
            for x in row:
                exp[x - 1] += 1
        coeffs[tuple(exp)] += 1
    return Polynomial(k, coeffs)


def expand_in_schur_basis(p: Polynomial, k: int | None = None) -> SchurDecomposition:
    """Write a Schur-positive symmetric polynomial as a sum of Schur polynomials."""
    k = p.k if k is None else k
    found: dict = {}
    rest = p
    while rest:
        exp, c = rest.leading()
        if any(exp[i] < exp[i + 1] for i in range(k - 1)):
            raise ValueError(f"leading exponent {exp} is not a partition: input is not symmetric")
        if c < 0:
            raise ValueError(f"negative coefficient {c} at {exp}: input is not Schur-positive")
        found[exp] = c
        rest = rest - schur_polynomial(exp, k).scaled(c)
    return SchurDecomposition.from_counts(k, found)


def oracle_product(u: Sequence[int], v: Sequence[int], k: int) -> SchurDecomposition:
    """``s_u * s_v`` in ``k`` variables, expanded in the Schur basis."""
    return expand_in_schur_basis(schur_polynomial(u, k) * schur_polynomial(v, k), k)
