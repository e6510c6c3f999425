"""Divided-power monomials, the matrix action on them, and the comparison
with principal left modules over the Schur algebra.

A monomial in a single divided-power factor is an exponent tuple over the
free generators; products follow the divided-power relations (the product
of two powers of one generator carries a binomial coefficient, powers of a
sum expand over all exponent splittings).  Tensor products of factors are
indexed by weight matrices whose column sums give the factor degrees, so a
basis monomial of the composition case is just a weight matrix with fixed
column marginal.

The action of an integer matrix on a basis monomial expands over weight
tensors with matching axis-1 marginal: each contributes its multiplicity
coefficient times the monomial evaluation of its axis-3 marginal, landing on
the monomial of its axis-2 marginal.  The same action computed through the
divided-power relations gives an independent route, and the identification
of monomials with algebra basis elements of fixed column marginal
(verify_equivariance) closes the triangle.
"""

from itertools import product as _product
from math import comb

from .combinatorics import (
    enumerate_compositions,
    enumerate_weight_matrices,
    multinomial,
)
from .oracles import monomial_eval, tensor_power_action
from .schur import AlgebraElement, basis_element, multiply


def divided_basis(lam):
    """Monomial basis of the divided-power product: weight matrices with
    column sums lam, canonical order."""
    lam = tuple(lam)
    return enumerate_weight_matrices(len(lam), sum(lam), col_sums=lam)


# ---------------------------------------------------------------------------
# single-factor normal form

def divided_product(x, y):
    """Product of two single-factor elements {exponent tuple: coeff}."""
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            if len(a) != len(b):
                raise ValueError("mixed generator counts in one factor")
            coeff = ca * cb
            for e, f in zip(a, b):
                coeff *= comb(e + f, e)
            key = tuple(e + f for e, f in zip(a, b))
            if coeff:
                out[key] = out.get(key, 0) + coeff
    return {k: c for k, c in out.items() if c}


def divided_power_of_vector(coeffs, k):
    """k-th divided power of a linear combination of the generators:
    expands over all exponent tuples of total k."""
    n = len(coeffs)
    out = {}
    for nu in enumerate_compositions(n, k):
        c = 1
        for q in range(n):
            if nu[q]:
                c *= coeffs[q] ** nu[q]
        if c:
            out[nu] = out.get(nu, 0) + c
    return out


def generator_power(q, k, n):
    """The basis monomial with the q-th generator raised to the k-th divided
    power (1-based q)."""
    return {tuple(k if i == q - 1 else 0 for i in range(n)): 1}


# ---------------------------------------------------------------------------
# the matrix action

def gl_action(g, pi):
    """Action of a square integer matrix on a basis monomial, via the
    weight-tensor expansion.  Returns {weight matrix: coefficient}."""
    n = len(pi)
    if len(g) != n:
        raise ValueError("matrix size mismatch")
    cells = [(t, q) for t in range(n) for q in range(n)]
    choices = [enumerate_compositions(n, pi[t][q]) for t, q in cells]
    out = {}
    for picks in _product(*choices):
        theta = [[[0] * n for _ in range(n)] for _ in range(n)]
        for (t, q), fiber in zip(cells, picks):
            for s in range(n):
                theta[s][t][q] = fiber[s]
        coeff = 1
        target = []
        evaluated = []
        for s in range(n):
            row2 = []
            row3 = []
            for q in range(n):
                fiber_t = tuple(theta[s][t][q] for t in range(n))
                coeff *= multinomial(fiber_t)
                row2.append(sum(fiber_t))
            for t in range(n):
                row3.append(sum(theta[s][t][q] for q in range(n)))
            target.append(tuple(row2))
            evaluated.append(tuple(row3))
        coeff *= monomial_eval(tuple(evaluated), g)
        if coeff:
            key = tuple(target)
            out[key] = out.get(key, 0) + coeff
    return {k: c for k, c in out.items() if c}


def gl_action_expanded(g, pi):
    """The same action computed inside the divided-power algebra: act on
    each generator, expand the divided powers, and multiply factor by
    factor.  Independent of the weight-tensor route."""
    n = len(pi)
    per_column = []
    for t in range(n):
        factor = {tuple([0] * n): 1}
        for s in range(n):
            k = pi[s][t]
            if k:
                image = divided_power_of_vector(tuple(g[q][s] for q in range(n)), k)
                factor = divided_product(factor, image)
        per_column.append(factor)
    out = {}
    for picks in _product(*(f.items() for f in per_column)):
        coeff = 1
        columns = []
        for key, c in picks:
            coeff *= c
            columns.append(key)
        matrix = tuple(tuple(columns[t][s] for t in range(n)) for s in range(n))
        if coeff:
            out[matrix] = out.get(matrix, 0) + coeff
    return {k: c for k, c in out.items() if c}


def compose_action(g, h, pi):
    """Act by h, then by g, extending the action linearly."""
    out = {}
    for mid, c in gl_action(h, pi).items():
        for key, d in gl_action(g, mid).items():
            out[key] = out.get(key, 0) + c * d
    return {k: v for k, v in out.items() if v}


def matmul(g, h):
    n = len(g)
    return tuple(tuple(sum(g[i][k] * h[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


# ---------------------------------------------------------------------------
# identification with principal modules

def to_algebra_element(x, n, r):
    """Linear extension of monomial -> basis element of the same matrix."""
    return AlgebraElement(n, r, dict(x))


def verify_equivariance(lam, g):
    """Check, on the whole monomial basis, that acting then identifying
    agrees with identifying then multiplying by the matrix's algebra image.

    Returns (ok, failures); a failure records the offending monomial.
    """
    lam = tuple(lam)
    n, r = len(lam), sum(lam)
    rho = tensor_power_action(g, r)
    failures = []
    for pi in divided_basis(lam):
        lhs = to_algebra_element(gl_action(g, pi), n, r)
        rhs = multiply(rho, basis_element(pi))
        if lhs != rhs:
            failures.append(pi)
    return not failures, tuple(failures)
