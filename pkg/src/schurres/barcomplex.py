"""Reduced bar resolutions over the Borel subalgebra and their induction.

Basis elements in degree k are tuples (w0, w1, ..., wk) of weight matrices:
w1..wk are upper triangular of filtration degree >= 1, consecutive matrices
are chained by "column sums of the left = row sums of the right", and the
column sums of wk equal the resolved composition.  The Borel variant also
requires w0 upper triangular; the induced (full) variant lets w0 range over
all weight matrices.

The differential is the alternating sum over adjacent positions of the
algebra product, re-expanded in the lower-degree tuple basis.  The Borel
variant carries an explicit contracting homotopy: prepend the diagonal
idempotent matching the row sums of w0, killing tuples whose w0 is already
diagonal.
"""

from functools import lru_cache

from .combinatorics import (
    diagonal_matrix,
    enumerate_weight_matrices,
    flatten,
    is_diagonal,
    matrix_marginal,
    max_chain_length,
)
from .complexes import ChainComplex, Matrix
from .homology import is_prime
from .schur import structure_constants

VARIANTS = ("borel", "full")


def _normalize(lam):
    lam = tuple(lam)
    if any(v < 0 for v in lam):
        raise ValueError("composition parts must be non-negative")
    return lam


@lru_cache(maxsize=None)
def _bar_basis(lam, k, variant):
    n, r = len(lam), sum(lam)
    if k == 0:
        heads = enumerate_weight_matrices(n, r, col_sums=lam,
                                          upper_triangular=(variant == "borel"))
        return tuple((w0,) for w0 in heads)
    tails = []

    def extend(suffix, top):
        # suffix is (w_j, ..., w_k); top must equal its leading row sums
        if len(suffix) == k:
            tails.append(suffix)
            return
        for w in enumerate_weight_matrices(n, r, col_sums=top, min_degree=1):
            extend((w,) + suffix, matrix_marginal(w, 2))

    for wk in enumerate_weight_matrices(n, r, col_sums=lam, min_degree=1):
        extend((wk,), matrix_marginal(wk, 2))
    tuples = []
    for tail in tails:
        mu = matrix_marginal(tail[0], 2)
        for w0 in enumerate_weight_matrices(n, r, col_sums=mu,
                                            upper_triangular=(variant == "borel")):
            tuples.append((w0,) + tail)
    return tuple(sorted(tuples, key=lambda tup: tuple(flatten(w) for w in tup),
                        reverse=True))


def enumerate_bar_basis(lam, k, variant="borel"):
    """Degree-k tuple basis, canonical order; empty above the chain bound."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if k < 0:
        raise ValueError("degree must be non-negative")
    lam = _normalize(lam)
    if k >= max_chain_length(len(lam), sum(lam)):
        return ()
    return _bar_basis(lam, k, variant)


def differential(lam, k, variant="borel"):
    """Matrix of the degree-k differential (k >= 1) on tuple bases."""
    if k < 1:
        raise ValueError("the tuple differential starts at degree 1")
    lam = _normalize(lam)
    cur = enumerate_bar_basis(lam, k, variant)
    prev = enumerate_bar_basis(lam, k - 1, variant)
    index = {lab: i for i, lab in enumerate(prev)}
    mat = Matrix.zeros(len(prev), len(cur))
    for col, tup in enumerate(cur):
        for t in range(k):
            sign = -1 if t % 2 else 1
            for key, c in structure_constants(tup[t], tup[t + 1]):
                target = tup[:t] + (key,) + tup[t + 2:]
                mat.rows[index[target]][col] += sign * c
    return mat


def augmentation_row(lam):
    """Borel degree-0 differential onto the rank-one module: a tuple maps to
    1 exactly when its matrix is the diagonal of the resolved composition."""
    lam = _normalize(lam)
    basis = enumerate_bar_basis(lam, 0, "borel")
    target = diagonal_matrix(lam)
    mat = Matrix.zeros(1, len(basis))
    for col, (w0,) in enumerate(basis):
        if w0 == target:
            mat.rows[0][col] = 1
    return mat


def homotopy(lam, k):
    """Borel contracting homotopy from degree k to degree k + 1 (k >= -1)."""
    lam = _normalize(lam)
    nxt = enumerate_bar_basis(lam, k + 1, "borel")
    index = {lab: i for i, lab in enumerate(nxt)}
    if k == -1:
        mat = Matrix.zeros(len(nxt), 1)
        mat.rows[index[(diagonal_matrix(lam),)]][0] = 1
        return mat
    cur = enumerate_bar_basis(lam, k, "borel")
    mat = Matrix.zeros(len(nxt), len(cur))
    for col, tup in enumerate(cur):
        w0 = tup[0]
        if is_diagonal(w0):
            continue
        target = (diagonal_matrix(matrix_marginal(w0, 2)),) + tup
        mat.rows[index[target]][col] = 1
    return mat


def _top_degree(lam, variant):
    k = 0
    while enumerate_bar_basis(lam, k + 1, variant):
        k += 1
    return k


def build_borel_resolution(lam):
    """Augmented bar resolution of the rank-one module over the Borel
    subalgebra, with differentials and contracting homotopies."""
    lam = _normalize(lam)
    hi = _top_degree(lam, "borel")
    labels = {-1: ((),)}
    for k in range(hi + 1):
        labels[k] = enumerate_bar_basis(lam, k, "borel")
    diffs = {0: augmentation_row(lam)}
    for k in range(1, hi + 1):
        diffs[k] = differential(lam, k, "borel")
    homotopies = {k: homotopy(lam, k) for k in range(-1, hi)}
    cx = ChainComplex(labels, diffs, homotopies,
                      meta={"n": len(lam), "r": sum(lam), "lam": lam, "variant": "borel"})
    cx.check_complex()
    return cx


def build_weyl_resolution(lam):
    """Induced resolution over the full algebra, degrees >= 0.

    The resolved module is not given a stored basis; it is the degree-0
    cokernel, with exactness guaranteed when the composition is a partition.
    """
    lam = _normalize(lam)
    hi = _top_degree(lam, "full")
    labels = {k: enumerate_bar_basis(lam, k, "full") for k in range(hi + 1)}
    diffs = {k: differential(lam, k, "full") for k in range(1, hi + 1)}
    cx = ChainComplex(labels, diffs,
                      meta={"n": len(lam), "r": sum(lam), "lam": lam, "variant": "weyl"})
    cx.check_complex()
    return cx


def reduce_mod(cx, p):
    """Entrywise reduction of a complex over the integers modulo a prime."""
    if cx.modulus is not None:
        raise ValueError("complex is already reduced")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    diffs = {k: m.mod(p) for k, m in cx.differentials.items()}
    homotopies = {k: m.mod(p) for k, m in cx.homotopies.items()}
    return ChainComplex(cx.labels, diffs, homotopies, modulus=p,
                        meta={**cx.meta, "modulus": p})
