"""Row-semistandard tableaux, permutation-module homomorphisms, and the
Boltje-Hartmann complex of a partition.

A tableau is a tuple of n rows (possibly empty) of positive integers; it is
row semistandard when every row is weakly increasing.  Row-semistandard
tableaux of shape lam and content mu biject with weight matrices whose row
sums are lam and column sums mu: entry (s, t) counts the t's in row s.

Tableaux of multilinear content (each of 1..r exactly once) index the
permutation module of their shape.  The homomorphism attached to a tableau
T of shape lam and content mu sends a multilinear tableau to the sum of
those multilinear tableaux of shape lam whose row s picks exactly
matrix(T)[s][t] entries out of row t of the argument; its matrix on the
tableau bases is 0/1.

The complex of a partition has, in degree k, one tensor factor chain per
strict dominance chain above the partition: a dual-basis functional on the
first permutation module followed by k homomorphisms with upper-triangular
matrices.  The differential composes adjacent factors with alternating
signs; compositions are re-expanded in the tableau basis by evaluating at
the canonical (row-filling) tableau, with no reference to the weight-matrix
structure constants, so the comparison with the idempotent-truncated
resolution is a genuine two-route check.
"""

from functools import lru_cache
from itertools import combinations, product as _product

from .combinatorics import (
    enumerate_dominance_chains,
    enumerate_weight_matrices,
    is_partition,
    is_upper_triangular,
    matrix_marginal,
    transpose_matrix,
)
from .complexes import ChainComplex, Matrix
from .schurfunctor import multilinear_weight

# ---------------------------------------------------------------------------
# tableaux and the matrix correspondence

def tableau_shape(tab):
    return tuple(len(row) for row in tab)


def tableau_content(tab, n):
    counts = [0] * n
    for row in tab:
        for v in row:
            if not 1 <= v <= n:
                raise ValueError(f"tableau entry {v} outside 1..{n}")
            counts[v - 1] += 1
    return tuple(counts)


def is_row_semistandard(tab):
    return all(all(row[i] <= row[i + 1] for i in range(len(row) - 1)) for row in tab)


def tableau_of_matrix(omega):
    """Row s lists t repeated omega[s][t] times, increasing in t."""
    n = len(omega)
    return tuple(tuple(t + 1 for t in range(n) for _ in range(omega[s][t]))
                 for s in range(n))


def matrix_of_tableau(tab):
    """Inverse correspondence; requires a row-semistandard filling."""
    if not is_row_semistandard(tab):
        raise ValueError("tableau is not row semistandard")
    n = len(tab)
    m = [[0] * n for _ in range(n)]
    for s, row in enumerate(tab):
        for v in row:
            if not 1 <= v <= n:
                raise ValueError(f"tableau entry {v} outside 1..{n}")
            m[s][v - 1] += 1
    return tuple(tuple(row) for row in m)


@lru_cache(maxsize=None)
def row_semistandard_tableaux(lam, mu):
    """All row-semistandard tableaux of shape lam and content mu, ordered by
    their weight matrices (canonical order)."""
    lam, mu = tuple(lam), tuple(mu)
    n = len(lam)
    mats = enumerate_weight_matrices(n, sum(lam), col_sums=mu, row_sums=lam)
    return tuple(tableau_of_matrix(w) for w in mats)


@lru_cache(maxsize=None)
def multilinear_tableaux(shape):
    """Basis tableaux of the permutation module: content all ones."""
    shape = tuple(shape)
    n = len(shape)
    return row_semistandard_tableaux(shape, multilinear_weight(n, sum(shape)))


def canonical_tableau(shape):
    """Rows filled with consecutive integers: 1..s1, s1+1..s1+s2, ..."""
    rows = []
    start = 1
    for length in shape:
        rows.append(tuple(range(start, start + length)))
        start += length
    return tuple(rows)


def act(sigma, tab):
    """Symmetric-group action on multilinear tableaux: relabel entries by
    sigma, then re-sort every row."""
    return tuple(tuple(sorted(sigma[v - 1] for v in row)) for row in tab)


# ---------------------------------------------------------------------------
# tableau homomorphisms

def _row_splits(row, sizes):
    """Partitions of a set row into labeled blocks of the given sizes."""
    if not sizes:
        yield ()
        return
    first, rest = sizes[0], sizes[1:]
    for chosen in combinations(row, first):
        remaining = tuple(v for v in row if v not in chosen)
        for tail in _row_splits(remaining, rest):
            yield (chosen,) + tail


def tableau_hom(tab):
    """Matrix of the homomorphism attached to a row-semistandard tableau.

    Columns run over the multilinear tableaux of the content shape, rows
    over those of the tableau's shape; every entry is 0 or 1.
    """
    omega = matrix_of_tableau(tab)
    return _tableau_hom_of_matrix(omega)


@lru_cache(maxsize=None)
def _tableau_hom_of_matrix(omega):
    n = len(omega)
    lam = matrix_marginal(omega, 2)
    mu = matrix_marginal(omega, 1)
    domain = multilinear_tableaux(mu)
    codomain = multilinear_tableaux(lam)
    cod_index = {tab: i for i, tab in enumerate(codomain)}
    mat = Matrix.zeros(len(codomain), len(domain))
    for col, source in enumerate(domain):
        # independently split row t of the source into blocks of sizes
        # omega[.][t]; row s of the image collects the s-blocks
        per_row = [list(_row_splits(source[t], tuple(omega[s][t] for s in range(n))))
                   for t in range(n)]
        for split in _product(*per_row):
            rows = []
            for s in range(n):
                merged = []
                for t in range(n):
                    merged.extend(split[t][s])
                rows.append(tuple(sorted(merged)))
            mat.rows[cod_index[tuple(rows)]][col] += 1
    return mat


def _intersection_profile(tab, blocks):
    """Matrix counting row-of-tab against membership in the given blocks."""
    n = len(blocks)
    where = {}
    for t, block in enumerate(blocks):
        for v in block:
            where[v] = t
    m = [[0] * n for _ in range(n)]
    for s, row in enumerate(tab):
        for v in row:
            m[s][where[v]] += 1
    return tuple(tuple(row) for row in m)


def expand_in_tableau_basis(mat, target_shape, source_shape):
    """Write an equivariant map between permutation modules as a combination
    of tableau homomorphisms.

    Evaluates the matrix at the canonical tableau of the source shape and
    groups image coefficients by their intersection profile with its rows;
    equivariance forces each profile class to carry one coefficient, which is
    asserted.  Returns {weight matrix of the tableau: coefficient}.
    """
    source = multilinear_tableaux(source_shape)
    codomain = multilinear_tableaux(target_shape)
    col = source.index(canonical_tableau(source_shape))
    blocks = canonical_tableau(source_shape)
    by_profile = {}
    for i, image_tab in enumerate(codomain):
        profile = _intersection_profile(image_tab, blocks)
        by_profile.setdefault(profile, []).append(mat.rows[i][col])
    out = {}
    for profile, coeffs in by_profile.items():
        if len(set(coeffs)) != 1:
            raise ValueError("map is not equivariant: profile class with "
                             "mixed coefficients")
        if coeffs[0]:
            out[profile] = coeffs[0]
    return out


# ---------------------------------------------------------------------------
# the permutation-module complex

def _basis_labels(lam, n, k):
    """Degree-k labels: (functional tableau, hom tableau 1, ..., hom tableau k)
    running over dominance chains above lam, in canonical chain order."""
    r = sum(lam)
    labels = []
    for chain in enumerate_dominance_chains(lam, k):
        shapes = chain + (lam,)
        factor_choices = [multilinear_tableaux(shapes[0])]
        for i in range(k):
            mats = enumerate_weight_matrices(
                n, r, col_sums=shapes[i + 1], row_sums=shapes[i], min_degree=1)
            factor_choices.append(tuple(tableau_of_matrix(w) for w in mats))
        for combo in _product(*factor_choices):
            labels.append(combo)
    return tuple(labels)


def _bh_differential(labels_k, labels_km1, k, n):
    index = {lab: i for i, lab in enumerate(labels_km1)}
    mat = Matrix.zeros(len(labels_km1), len(labels_k))
    for col, lab in enumerate(labels_k):
        functional, homs = lab[0], lab[1:]
        # t = 0: precompose the functional with the first homomorphism
        hom1 = tableau_hom(homs[0])
        fun_index = multilinear_tableaux(tableau_shape(functional)).index(functional)
        next_domain = multilinear_tableaux(_content_shape(homs[0], n))
        for j, target_fun in enumerate(next_domain):
            c = hom1.rows[fun_index][j]
            if c:
                target = (target_fun,) + homs[1:]
                mat.rows[index[target]][col] += c
        # t >= 1: compose adjacent homomorphisms, re-expanded over tableaux
        for t in range(1, k):
            sign = -1 if t % 2 else 1
            left, right = homs[t - 1], homs[t]
            product_matrix = tableau_hom(left) @ tableau_hom(right)
            expansion = expand_in_tableau_basis(
                product_matrix, tableau_shape(left), _content_shape(right, n))
            for omega, c in expansion.items():
                if not is_upper_triangular(omega):
                    raise ValueError("composition left the upper-triangular span")
                merged = tableau_of_matrix(omega)
                target = (functional,) + homs[:t - 1] + (merged,) + homs[t + 1:]
                mat.rows[index[target]][col] += sign * c
    return mat


def _content_shape(tab, n):
    return tableau_content(tab, n)


def build_bh_complex(lam, n=None):
    """Permutation-module complex of a partition, degrees >= 0.

    Degree -1 (the co-Specht module) is presented as the cokernel of the
    degree-1 differential rather than stored with a basis.
    """
    lam = tuple(lam)
    if n is None:
        n = len(lam)
    if len(lam) < n:
        lam = lam + (0,) * (n - len(lam))
    if not is_partition(lam):
        raise ValueError("the complex is built for partitions")
    r = sum(lam)
    if n < r:
        raise ValueError("needs n >= r for multilinear content")
    labels = {}
    k = 0
    while True:
        basis = _basis_labels(lam, n, k)
        if not basis:
            break
        labels[k] = basis
        k += 1
    hi = k - 1
    diffs = {}
    for k in range(1, hi + 1):
        diffs[k] = _bh_differential(labels[k], labels[k - 1], k, n)
    cx = ChainComplex(labels, diffs,
                      meta={"n": n, "r": r, "lam": lam, "variant": "bh"})
    cx.check_complex()
    return cx


# ---------------------------------------------------------------------------
# comparison with the idempotent-truncated resolution

def bh_label_of_bar_tuple(tup):
    """Translate a kept bar tuple into a complex label: the leading matrix
    transposes into the functional tableau, the tail matrices are the hom
    tableaux."""
    head = tableau_of_matrix(transpose_matrix(tup[0]))
    return (head,) + tuple(tableau_of_matrix(w) for w in tup[1:])


class ComparisonReport:
    """Degreewise matrix comparison of the two complexes under the basis
    bijection, plus the cokernel rank check at the bottom."""

    def __init__(self, lam, n, degree_match, matrices_equal, cokernel_ranks,
                 standard_count):
        self.lam = lam
        self.n = n
        self.degree_match = degree_match
        self.matrices_equal = matrices_equal
        self.cokernel_ranks = cokernel_ranks
        self.standard_count = standard_count

    @property
    def ok(self):
        return (self.degree_match and all(self.matrices_equal.values())
                and len(set(self.cokernel_ranks)) == 1
                and self.cokernel_ranks[0] == self.standard_count)


def compare_with_schur_functor(lam, n=None, fb=None, bh=None):
    """Check the two complexes agree entrywise under the tableau bijection."""
    from .homology import smith_normal_form
    from .schurfunctor import truncated_resolution

    lam = tuple(lam)
    if n is None:
        n = len(lam)
    if len(lam) < n:
        lam = lam + (0,) * (n - len(lam))
    if fb is None:
        fb = truncated_resolution(lam)
    if bh is None:
        bh = build_bh_complex(lam, n)

    degree_match = (fb.lo, fb.hi) == (bh.lo, bh.hi) and all(
        fb.rank(k) == bh.rank(k) for k in fb.degrees())
    matrices_equal = {}
    if degree_match:
        position = {}
        for k in fb.degrees():
            bh_index = {lab: i for i, lab in enumerate(bh.labels[k])}
            position[k] = [bh_index[bh_label_of_bar_tuple(tup)]
                           for tup in fb.labels[k]]
        for k in range(fb.lo + 1, fb.hi + 1):
            fmat = fb.differential(k)
            bmat = bh.differential(k)
            matrices_equal[k] = all(
                fmat.rows[i][j] == bmat.rows[position[k - 1][i]][position[k][j]]
                for i in range(fmat.nrows) for j in range(fmat.ncols))

    def cokernel_rank(cx):
        d1 = cx.differential(cx.lo + 1)
        snf = smith_normal_form(d1)
        if any(f > 1 for f in snf.factors):
            return -1  # torsion present: not a free cokernel
        return cx.rank(cx.lo) - snf.rank

    return ComparisonReport(
        lam, n, degree_match, matrices_equal,
        (cokernel_rank(fb), cokernel_rank(bh)),
        standard_tableau_count(lam))


# ---------------------------------------------------------------------------
# independent tableau counting oracles

def semistandard_tableau_count(lam, n):
    """Number of fillings by 1..n with weakly increasing rows and strictly
    increasing columns, by direct backtracking."""
    lam = tuple(v for v in lam)
    rows = [v for v in lam if v]
    if not is_partition(lam):
        raise ValueError("semistandard counting needs a partition")
    cells = [(s, t) for s, length in enumerate(rows) for t in range(length)]
    filling = {}
    count = 0

    def backtrack(idx):
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        s, t = cells[idx]
        lo = 1
        if t > 0:
            lo = max(lo, filling[(s, t - 1)])
        if s > 0:
            lo = max(lo, filling[(s - 1, t)] + 1)
        for v in range(lo, n + 1):
            filling[(s, t)] = v
            backtrack(idx + 1)
        filling.pop((s, t), None)

    backtrack(0)
    return count


def standard_tableau_count(lam):
    """Number of bijective fillings by 1..r increasing along rows and down
    columns, by direct backtracking."""
    rows = [v for v in lam if v]
    if not is_partition(tuple(lam)):
        raise ValueError("standard counting needs a partition")
    r = sum(rows)
    cells = [(s, t) for s, length in enumerate(rows) for t in range(length)]
    filling = {}
    used = [False] * (r + 1)
    count = 0

    def backtrack(idx):
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        s, t = cells[idx]
        lo = 1
        if t > 0:
            lo = max(lo, filling[(s, t - 1)] + 1)
        if s > 0:
            lo = max(lo, filling[(s - 1, t)] + 1)
        for v in range(lo, r + 1):
            if not used[v]:
                used[v] = True
                filling[(s, t)] = v
                backtrack(idx + 1)
                used[v] = False
        filling.pop((s, t), None)

    backtrack(0)
    return count
