import itertools
from math import comb, prod

import pytest

from flagbott.bott import DimensionError, FlagShape, expand_flag_weight
from flagbott.cohomology import (
    CohomologyTable,
    _flag_table,
    dim_schur,
    flag_cohomology,
    grassmann_cohomology,
    omega_decomposition,
    table_dimensions,
)
from flagbott.lr import SchurDecomposition
from flagbott.oracle import schur_polynomial
from flagbott.partitions import Partition, PartitionError, chi, dominates, partitions_of, squared_norm, transpose


def hook_content_dim(lam, d):
    """dim S_lam C^d as prod (d + content) / hook."""
    lam = Partition(lam)
    if len(lam) > d:
        return 0
    cols = [sum(1 for x in lam if x > j) for j in range(lam[0] if lam else 0)]
    num = prod(d + j - i for i, row in enumerate(lam) for j in range(row))
    den = prod(row - j + cols[j] - i - 1 for i, row in enumerate(lam) for j in range(row))
    return num // den


def q_multinomial(sizes):
    """Coefficients of [n; sizes]_q, built from Gaussian binomials as polynomial products."""

    def qint_factorial(n):
        poly = [1]
        for m in range(1, n + 1):
            step = [1] * m
            out = [0] * (len(poly) + m - 1)
            for i, a in enumerate(poly):
                for j, b in enumerate(step):
                    out[i + j] += a * b
            poly = out
        return poly

    def divide(num, den):
        num = list(num)
        out = [0] * (len(num) - len(den) + 1)
        for k in range(len(out)):
            c = num[k] // den[0]
            out[k] = c
            for j, b in enumerate(den):
                num[k + j] -= c * b
        assert not any(num)
        return out

    res = qint_factorial(sum(sizes))
    for s in sizes:
        res = divide(res, qint_factorial(s))
    return res


def hodge_diagonal(table):
    dims = table_dimensions(table)
    assert all(p == q for p, q in dims)
    return [dims.get((p, p), 0) for p in range(table.dimension + 1)]


# -- helpers ---------------------------------------------------------------------


def test_omega_examples():
    assert omega_decomposition(2, 2, 0) == [()]
    assert omega_decomposition(2, 2, 2) == [(2,), (1, 1)]
    assert omega_decomposition(2, 1, 2) == [(1, 1)]
    assert omega_decomposition(1, 3, 4) == []
    with pytest.raises(DimensionError):
        omega_decomposition(-1, 2, 0)


def test_omega_ranks_add_up():
    for r in range(1, 4):
        for s in range(1, 4):
            for p in range(r * s + 1):
                rank = sum(dim_schur(u, r) * hook_content_dim(transpose(u), s) for u in omega_decomposition(r, s, p))
                assert rank == comb(r * s, p)


@pytest.mark.parametrize(
    "lam, d, expected",
    [((), 3, 1), ((1,), 4, 4), ((2,), 3, 6), ((1, 1), 4, 6), ((2, 1), 3, 8), ((1, 1, 1), 2, 0), ((1, 1, 0, 0), 2, 1)],
)
def test_dim_schur_examples(lam, d, expected):
    assert dim_schur(lam, d) == expected


def test_dim_schur_generalized():
    assert dim_schur((0, -1)) == 2
    assert dim_schur((-1, -1, -1)) == 1
    with pytest.raises(PartitionError):
        dim_schur((1, -1), 3)


def test_dim_schur_independent_formulas():
    for d in range(1, 6):
        for n in range(8):
            for lam in partitions_of(n):
                assert dim_schur(lam, d) == hook_content_dim(lam, d)
                if d <= 3 and n <= 5:
                    assert dim_schur(lam, d) == schur_polynomial(lam, d).evaluate([1] * d)


# -- Grassmannians -----------------------------------------------------------------


def test_grassmann_trivial_bundle_hodge_numbers():
    for d in range(2, 6):
        for r in range(1, d):
            assert hodge_diagonal(grassmann_cohomology(r, d)) == q_multinomial([r, d - r])


def test_grassmann_projective_line():
    t = grassmann_cohomology(1, 2, (2,))
    assert t[(0, 0)].as_dict() == {(2, 0): 1}
    assert t[(1, 0)].as_dict() == {(1, 1): 1}
    assert len(t.entries) == 2
    t = grassmann_cohomology(1, 2, (-2,))
    assert t[(0, 1)].as_dict() == {(-1, -1): 1}
    assert t[(1, 1)].as_dict() == {(0, -2): 1}


def test_grassmann_lemma_properties():
    # every term keeps the weight of v and is dominated by v; with v_r > 0, rho = v only at (0,0)
    for d in range(2, 6):
        for r in range(1, d):
            for n in range(5):
                for v in partitions_of(n, max_len=r):
                    vp = tuple(v.padded(r)) + (0,) * (d - r)
                    t = grassmann_cohomology(r, d, v)
                    for p, q, rho, _ in t.terms():
                        assert sum(rho) == n
                        assert dominates(vp, rho)
                        if tuple(rho) == vp and len(v) == r:
                            assert (p, q) == (0, 0)
                    assert t[(0, 0)][vp] == 1


def test_grassmann_v_with_zero_last_part_repeats_v():
    # S_(1,0)Q on G_2(C^3) is Q; Q times the Kaehler class gives V again in H^{1,1}
    t = grassmann_cohomology(2, 3, (1,))
    assert t[(1, 1)][(1, 0, 0)] == 1
    assert grassmann_cohomology(1, 2)[(1, 1)][(0, 0)] == 1


def test_grassmann_serre_duality():
    for d in range(2, 6):
        for r in range(1, d):
            N = r * (d - r)
            for v in itertools.product(range(-2, 3), repeat=r):
                if list(v) != sorted(v, reverse=True):
                    continue
                t = grassmann_cohomology(r, d, v)
                dual = grassmann_cohomology(r, d, chi(v))
                flipped = {
                    (N - p, N - q): SchurDecomposition.from_counts(d, {chi(rho): m for rho, m in dec})
                    for (p, q), dec in t
                }
                assert dict(dual.entries) == flipped, (r, d, v)


def test_grassmann_validation():
    with pytest.raises(DimensionError):
        grassmann_cohomology(0, 3)
    with pytest.raises(DimensionError):
        grassmann_cohomology(4, 3)
    with pytest.raises(DimensionError):
        grassmann_cohomology(1, 3, (1, 1))
    with pytest.raises(PartitionError):
        grassmann_cohomology(2, 3, (-1,))
    assert grassmann_cohomology(3, 3).dimension == 0


def test_determinant_table():
    for d in range(2, 7):
        for r in range(1, d):
            t = grassmann_cohomology(r, d, (1,) * r)
            assert list(t.entries) == [(0, 0)]
            assert table_dimensions(t) == {(0, 0): comb(d, r)}


# -- flag varieties --------------------------------------------------------------------


def test_flag_single_step_is_grassmannian():
    for d in range(2, 6):
        for r in range(1, d):
            for k in range(-2, 4):
                f = flag_cohomology(FlagShape(d, (r,)), (k,))
                g = grassmann_cohomology(r, d, (k,) * r)
                assert dict(f.entries) == dict(g.entries)
                assert f.dimension == g.dimension


def test_flag_hodge_numbers_are_q_multinomials():
    for d in range(2, 6):
        for l in range(1, d):
            for s in itertools.combinations(range(1, d), l):
                flag = FlagShape(d, s)
                t = _flag_table(flag, (0,) * l)
                assert t.dimension == flag.dimension
                blocks = [b - a for a, b in zip((0,) + s, s + (d,))]
                assert hodge_diagonal(t) == q_multinomial(blocks), s


def test_flag_row_zero_is_sections():
    for d in range(2, 6):
        for l in range(1, d):
            for s in itertools.combinations(range(1, d), l):
                flag = FlagShape(d, s)
                for a in itertools.combinations(range(4, 0, -1), l):
                    row = flag_cohomology(flag, a, P=0)
                    a_s = expand_flag_weight(flag, a)
                    assert row.entries == {(0, 0): SchurDecomposition.from_counts(d, {a_s: 1})}


def test_flag_properties_for_positive_last_entry():
    # with a_l >= 1 every term at p > 0 is strictly dominated by a_s and has larger norm
    for d in range(2, 6):
        for l in range(1, d):
            for s in itertools.combinations(range(1, d), l):
                flag = FlagShape(d, s)
                for a in itertools.combinations(range(3, 0, -1), l):
                    a_s = expand_flag_weight(flag, a)
                    norm = squared_norm(Partition(a_s))
                    for p, q, rho, _ in flag_cohomology(flag, a).terms():
                        if p == 0:
                            continue
                        assert dominates(a_s, rho) and tuple(rho) != tuple(a_s)
                        assert p + q + 1 + norm <= squared_norm(Partition(rho))


def test_flag_with_zero_last_entry_keeps_fibre_classes():
    # on F_{1,3}(C^4) the bundle det(Q_1)^2 comes from P^3; the fibre's (1,1) class survives
    flag = FlagShape(4, (1, 3))
    t = flag_cohomology(flag, (2, 0))
    assert t[(1, 1)][(2, 0, 0, 0)] >= 1


def test_flag_validation_and_json():
    flag = FlagShape(4, (1, 3))
    with pytest.raises(DimensionError):
        flag_cohomology(flag, (1,))
    with pytest.raises(PartitionError):
        flag_cohomology(flag, (1, 1))
    with pytest.raises(DimensionError):
        flag_cohomology(flag, (2, 1), P=6)
    data = flag_cohomology(flag, (2, 1), P=0).to_json()
    assert data == {
        "space": {"kind": "flag", "d": 4, "s": [1, 3]},
        "dimension": 5,
        "entries": [{"p": 0, "q": 0, "terms": [{"partition": [2, 1, 1], "mult": 1}], "dim": 15}],
    }
    assert flag_cohomology(flag, (2, 1), P=0).to_json(dims_only=True)["entries"] == [{"p": 0, "q": 0, "dim": 15}]


def test_table_rejects_out_of_range_bidegree():
    with pytest.raises(DimensionError):
        CohomologyTable(2, ("grassmannian", 1, 2), 1, {(2, 0): SchurDecomposition.from_counts(2, {(0, 0): 1})})
    t = CohomologyTable(2, ("grassmannian", 1, 2), 1, {(1, 0): SchurDecomposition(2)})
    assert not t.entries and not t[(1, 0)]
