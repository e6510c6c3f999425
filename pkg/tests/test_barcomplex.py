import pytest

from schurres.barcomplex import (
    augmentation_row,
    build_borel_resolution,
    build_weyl_resolution,
    differential,
    enumerate_bar_basis,
    homotopy,
    reduce_mod,
)
from schurres.combinatorics import (
    enumerate_compositions,
    enumerate_dominance_chains,
    enumerate_partitions,
    enumerate_weight_matrices,
    matrix_marginal,
    max_chain_length,
)
from schurres.complexes import Matrix
from schurres.homology import homology, verify_exactness
from schurres.tableaux import semistandard_tableau_count

D20 = ((2, 0), (0, 0))
U11 = ((1, 1), (0, 0))
D11 = ((1, 0), (0, 1))


def test_bar_basis_examples():
    assert set(enumerate_bar_basis((1, 1), 0)) == {(D11,), (U11,)}
    assert enumerate_bar_basis((1, 1), 1) == ((D20, U11),)
    assert enumerate_bar_basis((1, 1), 2) == ()


def test_bar_basis_chain_constraints():
    for lam in enumerate_compositions(3, 3):
        for k in range(max_chain_length(3, 3) + 1):
            for variant in ("borel", "full"):
                for tup in enumerate_bar_basis(lam, k, variant):
                    assert len(tup) == k + 1
                    assert matrix_marginal(tup[-1], 1) == lam
                    for a, b in zip(tup, tup[1:]):
                        assert matrix_marginal(a, 1) == matrix_marginal(b, 2)


def test_bar_basis_vanishes_beyond_chain_bound():
    for n, r in [(2, 2), (2, 3), (3, 2)]:
        bound = max_chain_length(n, r)
        for lam in enumerate_compositions(n, r):
            for k in range(bound, bound + 3):
                assert enumerate_bar_basis(lam, k, "borel") == ()
                assert enumerate_bar_basis(lam, k, "full") == ()


def test_direct_sum_shape():
    # degree-k tuples with given head marginal factor through dominance chains
    lam = (1, 1, 1)
    n, r = 3, 3

    def edge_count(nu, mu):
        return len(enumerate_weight_matrices(n, r, col_sums=mu, row_sums=nu,
                                             min_degree=1))

    for k in range(1, max_chain_length(n, r)):
        basis = enumerate_bar_basis(lam, k, "borel")
        for mu in enumerate_compositions(n, r):
            got = sum(1 for tup in basis if matrix_marginal(tup[0], 1) == mu)
            chain_total = 0
            for chain in enumerate_dominance_chains(lam, k):
                if chain[0] != mu:
                    continue
                shapes = chain + (lam,)
                count = 1
                for a, b in zip(shapes, shapes[1:]):
                    count *= edge_count(a, b)
                chain_total += count
            heads = len(enumerate_weight_matrices(n, r, col_sums=mu,
                                                  upper_triangular=True))
            assert got == heads * chain_total


def test_differential_example():
    d1 = differential((1, 1), 1, "borel")
    basis0 = enumerate_bar_basis((1, 1), 0)
    col_target = basis0.index((U11,))
    expected = Matrix.zeros(2, 1)
    expected.rows[col_target][0] = 1
    assert d1 == expected


def test_differential_squares_to_zero():
    for lam in enumerate_compositions(3, 3):
        for variant in ("borel", "full"):
            k = 1
            prev = differential(lam, 1, variant)
            while True:
                cur_basis = enumerate_bar_basis(lam, k + 1, variant)
                if not cur_basis:
                    break
                cur = differential(lam, k + 1, variant)
                assert (prev @ cur).is_zero()
                prev, k = cur, k + 1


def test_empty_degree_gives_empty_matrix():
    d = differential((2, 0), 1, "borel")
    assert (d.nrows, d.ncols) == (1, 0)


def test_homotopy_examples():
    s_minus1 = homotopy((1, 1), -1)
    basis0 = enumerate_bar_basis((1, 1), 0)
    assert s_minus1.rows[basis0.index((D11,))][0] == 1
    assert s_minus1.rows[basis0.index((U11,))][0] == 0

    s0 = homotopy((1, 1), 0)
    assert s0.rows[0][basis0.index((D11,))] == 0
    assert s0.rows[0][basis0.index((U11,))] == 1

    # homotopy out of the top degree is the empty matrix
    s1 = homotopy((1, 1), 1)
    assert (s1.nrows, s1.ncols) == (0, 1)


def test_borel_resolution_small():
    cx = build_borel_resolution((1, 1))
    assert [cx.rank(k) for k in cx.degrees()] == [1, 2, 1]
    assert verify_exactness(cx).ok
    assert cx.euler_characteristic() == 0


def test_borel_homotopy_identities():
    for n, r in [(2, 2), (2, 3), (3, 2)]:
        for lam in enumerate_compositions(n, r):
            cx = build_borel_resolution(lam)
            assert cx.differential(0) @ cx.homotopy(-1) == Matrix.identity(1)
            for k in range(0, cx.hi + 1):
                lhs = (cx.differential(k + 1) @ cx.homotopy(k)
                       + cx.homotopy(k - 1) @ cx.differential(k))
                assert lhs == Matrix.identity(cx.rank(k))


def test_weyl_resolution_small():
    cx = build_weyl_resolution((1, 1))
    assert [cx.rank(k) for k in cx.degrees()] == [4, 3]
    assert homology(cx, 1).is_trivial
    h0 = homology(cx, 0)
    assert h0.free_rank == 1 and h0.is_free
    assert cx.euler_characteristic() == h0.free_rank


def test_top_composition_has_length_zero():
    for lam in [(2, 0), (3, 0, 0), (4,)]:
        cx = build_borel_resolution(lam)
        assert cx.hi == 0
        assert cx.rank(0) == len(enumerate_weight_matrices(
            len(lam), sum(lam), col_sums=lam, upper_triangular=True))
        w = build_weyl_resolution(lam)
        assert w.hi == 0


def test_degenerate_r_zero():
    lam = (0, 0)
    cx = build_borel_resolution(lam)
    assert [cx.rank(k) for k in cx.degrees()] == [1, 1]
    assert verify_exactness(cx).ok
    w = build_weyl_resolution(lam)
    assert homology(w, 0).free_rank == 1


def test_weyl_h0_matches_tableau_count():
    for lam in enumerate_partitions(2, 3):
        cx = build_weyl_resolution(lam)
        assert verify_exactness(cx, list(range(1, cx.hi + 1))).ok
        h0 = homology(cx, 0)
        assert h0.is_free
        assert h0.free_rank == semistandard_tableau_count(lam, 2)
        assert cx.euler_characteristic() == h0.free_rank


def test_reduce_mod():
    cx = build_weyl_resolution((1, 1))
    doubled = build_weyl_resolution((2, 0))
    m2 = reduce_mod(cx, 2)
    assert m2.modulus == 2
    assert all(m2.rank(k) == cx.rank(k) for k in cx.degrees())
    assert all(v in (0, 1) for mat in m2.differentials.values()
               for row in mat.rows for v in row)
    with pytest.raises(ValueError):
        reduce_mod(cx, 4)
    with pytest.raises(ValueError):
        reduce_mod(m2, 2)
    assert reduce_mod(doubled, 3).modulus == 3


def test_mod_p_exactness_small():
    for lam in enumerate_partitions(2, 3):
        cx = build_weyl_resolution(lam)
        expected = homology(cx, 0).free_rank
        for p in (2, 3, 5):
            modp = reduce_mod(cx, p)
            for k in range(1, modp.hi + 1):
                assert homology(modp, k).is_trivial
            assert homology(modp, 0).free_rank == expected


def test_augmentation_row():
    row = augmentation_row((1, 1))
    basis0 = enumerate_bar_basis((1, 1), 0)
    assert row.rows[0][basis0.index((D11,))] == 1
    assert row.rows[0][basis0.index((U11,))] == 0
