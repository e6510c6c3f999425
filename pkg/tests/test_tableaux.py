from math import factorial

import pytest

from schurres.combinatorics import (
    enumerate_compositions,
    enumerate_partitions,
    enumerate_weight_matrices,
    matrix_marginal,
)
from schurres.complexes import ChainComplex, Matrix
from schurres.homology import smith_normal_form
from schurres.schur import structure_constants
from schurres.schurfunctor import (
    all_permutations,
    compose_permutations,
    invert_permutation,
    multilinear_weight,
    permutation_weight_matrix,
)
from schurres.tableaux import (
    act,
    build_bh_complex,
    canonical_tableau,
    compare_with_schur_functor,
    expand_in_tableau_basis,
    is_row_semistandard,
    matrix_of_tableau,
    multilinear_tableaux,
    row_semistandard_tableaux,
    semistandard_tableau_count,
    standard_tableau_count,
    tableau_content,
    tableau_hom,
    tableau_of_matrix,
)


def hooks(rows):
    cells = [(i, j) for i, length in enumerate(rows) for j in range(length)]
    out = {}
    for i, j in cells:
        arm = rows[i] - j - 1
        leg = sum(1 for a, b in cells if b == j and a > i)
        out[(i, j)] = arm + leg + 1
    return out


def syt_hook_formula(rows):
    h = hooks(rows)
    value = factorial(sum(rows))
    for v in h.values():
        value //= v
    return value


def ssyt_hook_formula(rows, n):
    h = hooks(rows)
    num = den = 1
    for (i, j), hook in h.items():
        num *= n + j - i
        den *= hook
    assert num % den == 0
    return num // den


def test_rss_enumeration_examples():
    assert len(row_semistandard_tableaux((1, 1), (1, 1))) == 2
    got = row_semistandard_tableaux((2, 0), (1, 1))
    assert got == (((1, 2), ()),)
    for lam in enumerate_compositions(3, 3):
        count = factorial(3)
        for part in lam:
            count //= factorial(part)
        assert len(multilinear_tableaux(lam)) == count


def test_rss_matches_matrix_family():
    for lam in enumerate_compositions(3, 3):
        for mu in enumerate_compositions(3, 3):
            tabs = row_semistandard_tableaux(lam, mu)
            mats = enumerate_weight_matrices(3, 3, col_sums=mu, row_sums=lam)
            assert len(tabs) == len(mats)
            for tab in tabs:
                assert is_row_semistandard(tab)
                assert tableau_content(tab, 3) == mu


def test_matrix_tableau_roundtrip():
    assert matrix_of_tableau(((1,), (2,))) == ((1, 0), (0, 1))
    assert tableau_of_matrix(((1, 1), (0, 0))) == ((1, 2), ())
    for lam in enumerate_compositions(3, 3):
        for mu in enumerate_compositions(3, 3):
            for tab in row_semistandard_tableaux(lam, mu):
                assert tableau_of_matrix(matrix_of_tableau(tab)) == tab
            for m in enumerate_weight_matrices(3, 3, col_sums=mu, row_sums=lam):
                assert matrix_of_tableau(tableau_of_matrix(m)) == m
    with pytest.raises(ValueError):
        matrix_of_tableau(((2, 1), ()))


def test_canonical_tableau_and_action():
    assert canonical_tableau((2, 1, 0)) == ((1, 2), (3,), ())
    t = canonical_tableau((2, 1))
    assert act((1, 2, 3), t) == t
    assert act((3, 1, 2), t) == ((1, 3), (2,))


def test_tableau_hom_identity_and_row_collapse():
    lam = (2, 1, 0)
    diag = tuple(tuple(lam[s] if s == t else 0 for t in range(3)) for s in range(3))
    assert tableau_hom(tableau_of_matrix(diag)) == Matrix.identity(
        len(multilinear_tableaux(lam)))
    collapse = tableau_hom(((1, 2), ()))  # shape (2,0), content (1,1)
    assert collapse.nrows == 1 and collapse.ncols == 2
    assert collapse.rows == [[1, 1]]


def test_tableau_hom_is_equivariant():
    def action_matrix(sigma, shape):
        basis = multilinear_tableaux(shape)
        index = {t: i for i, t in enumerate(basis)}
        m = Matrix.zeros(len(basis), len(basis))
        for j, t in enumerate(basis):
            m.rows[index[act(sigma, t)]][j] = 1
        return m

    for lam in enumerate_compositions(3, 3):
        for mu in enumerate_compositions(3, 3):
            for tab in row_semistandard_tableaux(lam, mu):
                hom = tableau_hom(tab)
                for sigma in all_permutations(3):
                    assert action_matrix(sigma, lam) @ hom \
                        == hom @ action_matrix(sigma, mu)


def test_permutation_tableau_hom_permutes_basis():
    for r in (2, 3, 4):
        delta = multilinear_weight(r, r)
        basis = multilinear_tableaux(delta)
        index = {t: i for i, t in enumerate(basis)}
        t_delta = canonical_tableau(delta)
        for sigma in all_permutations(r):
            hom = tableau_hom(tableau_of_matrix(permutation_weight_matrix(sigma, r)))
            inv = invert_permutation(sigma)
            for tau in all_permutations(r):
                src = act(tau, t_delta)
                expected = act(compose_permutations(tau, inv), t_delta)
                col = index[src]
                for i, tab in enumerate(basis):
                    assert hom.rows[i][col] == (1 if tab == expected else 0)


def test_composition_matches_structure_constants():
    # two-route check: tableau-level composition against the algebra product
    for n, r in [(2, 2), (3, 2), (3, 3)]:
        mats = enumerate_weight_matrices(n, r)
        for om in mats:
            hom_left = tableau_hom(tableau_of_matrix(om))
            for pi in mats:
                if matrix_marginal(om, 1) != matrix_marginal(pi, 2):
                    continue
                product = hom_left @ tableau_hom(tableau_of_matrix(pi))
                expansion = expand_in_tableau_basis(
                    product, matrix_marginal(om, 2), matrix_marginal(pi, 1))
                assert expansion == dict(structure_constants(om, pi))


def test_expand_detects_non_equivariant():
    # M^(2,0) -> M^(1,1): both target tableaux share one profile class, so a
    # map hitting only one of them cannot be equivariant
    bad = Matrix.zeros(2, 1)
    bad.rows[0][0] = 1
    with pytest.raises(ValueError):
        expand_in_tableau_basis(bad, (1, 1), (2, 0))


def test_bh_complex_small():
    cx = build_bh_complex((1, 1))
    assert [cx.rank(k) for k in cx.degrees()] == [2, 1]
    snf = smith_normal_form(cx.differential(1))
    assert cx.rank(0) - snf.rank == 1 and all(f == 1 for f in snf.factors)

    top = build_bh_complex((2, 0))
    assert list(top.degrees()) == [0]
    assert top.rank(0) == 1


def test_bh_complex_axiom():
    for r in (2, 3):
        for lam in enumerate_partitions(r, r):
            build_bh_complex(lam).check_complex()


def test_bh_rejects_bad_input():
    with pytest.raises(ValueError):
        build_bh_complex((1, 2))
    with pytest.raises(ValueError):
        build_bh_complex((2, 1), 2)


def test_compare_small_cases():
    for lam in [(1, 1), (2, 0), (2, 1, 0), (1, 1, 1), (3, 0, 0)]:
        report = compare_with_schur_functor(lam)
        assert report.ok, (lam, report.matrices_equal, report.cokernel_ranks)


def test_compare_with_more_rows_than_boxes():
    for lam in [(1, 1, 0), (2, 0, 0), (2, 1, 0, 0), (1, 1, 1, 0)]:
        report = compare_with_schur_functor(lam)
        assert report.ok, lam


def test_compare_negative_control():
    # permuting one basis order without remapping the matrices must trip the
    # entrywise comparison; pick a degree-0 pair whose incoming rows differ
    lam = (1, 1, 1)
    bh = build_bh_complex(lam)
    d1 = bh.differential(1)
    swap = next((i, j) for i in range(d1.nrows) for j in range(i + 1, d1.nrows)
                if d1.rows[i] != d1.rows[j])
    labels0 = list(bh.labels[0])
    labels0[swap[0]], labels0[swap[1]] = labels0[swap[1]], labels0[swap[0]]
    hacked = ChainComplex({**bh.labels, 0: tuple(labels0)}, bh.differentials,
                          meta=bh.meta)
    report = compare_with_schur_functor(lam, bh=hacked)
    assert not report.ok
    assert not all(report.matrices_equal.values())


def test_tableau_counters_match_hook_formulas():
    for shape in [(2, 1), (2, 2), (3, 1), (2, 1, 1), (4,), (1, 1, 1, 1)]:
        assert standard_tableau_count(shape) == syt_hook_formula(list(shape))
    assert standard_tableau_count((2, 1)) == 2
    for shape, n in [((2, 1), 3), ((1, 1), 2), ((2, 0), 2), ((2, 2), 3), ((3, 1), 4)]:
        rows = [v for v in shape if v]
        assert semistandard_tableau_count(shape, n) == ssyt_hook_formula(rows, n)
    assert semistandard_tableau_count((2, 1), 3) == 8


def test_counters_reject_non_partitions():
    with pytest.raises(ValueError):
        standard_tableau_count((1, 2))
    with pytest.raises(ValueError):
        semistandard_tableau_count((1, 2), 2)
