"""Exact integer linear algebra: Smith normal form, ranks, homology.

Smith reduction pivots on a minimal-absolute-value nonzero entry and works
with unbounded integers, so intermediate growth never loses exactness.
Ranks over the rationals use stdlib fractions as an independent elimination
route; ranks over a prime field use modular elimination.  Homology groups of
a chain complex come out as free rank plus a multiset of prime-power torsion
factors.
"""

from dataclasses import dataclass
from fractions import Fraction

from .complexes import Matrix


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors (nonzero, each dividing the next) of an integer
    matrix, optionally with unimodular transforms left @ M @ right = D."""

    factors: tuple
    shape: tuple
    left: Matrix | None = None
    right: Matrix | None = None

    @property
    def rank(self):
        return len(self.factors)

    def diagonal_matrix(self):
        m = Matrix.zeros(*self.shape)
        for i, d in enumerate(self.factors):
            m.rows[i][i] = d
        return m


def smith_normal_form(mat, transforms=False):
    """Smith normal form by elimination on minimal-absolute-value pivots."""
    m, n = mat.nrows, mat.ncols
    d = [row[:] for row in mat.rows]
    left = Matrix.identity(m).rows if transforms else None
    right = Matrix.identity(n).rows if transforms else None

    def row_add(i, j, c):
        d[i] = [a + c * b for a, b in zip(d[i], d[j])]
        if left is not None:
            left[i] = [a + c * b for a, b in zip(left[i], left[j])]

    def row_swap(i, j):
        d[i], d[j] = d[j], d[i]
        if left is not None:
            left[i], left[j] = left[j], left[i]

    def row_negate(i):
        d[i] = [-a for a in d[i]]
        if left is not None:
            left[i] = [-a for a in left[i]]

    def col_add(j, i, c):
        for row in d:
            row[j] += c * row[i]
        if right is not None:
            for row in right:
                row[j] += c * row[i]

    def col_swap(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        if right is not None:
            for row in right:
                row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(d[i][j])
                if v and (best is None or v < best):
                    pivot, best = (i, j), v
                    if v == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        if pivot != (t, t):
            row_swap(t, pivot[0])
            col_swap(t, pivot[1])
        while True:
            if d[t][t] < 0:
                row_negate(t)
            p = d[t][t]
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // p
                    if q:
                        row_add(i, t, -q)
                    if d[i][t]:
                        row_swap(t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, n):
                if d[t][j]:
                    q = d[t][j] // p
                    if q:
                        col_add(j, t, -q)
                    if d[t][j]:
                        col_swap(t, j)
                        dirty = True
                        break
            if dirty:
                continue
            # pivot divides the untouched block, or absorb an offending row
            if p == 1:
                break
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(t, offender, 1)
        t += 1

    factors = tuple(d[i][i] for i in range(min(m, n)) if d[i][i])
    return SmithForm(
        factors=factors,
        shape=(m, n),
        left=Matrix(m, m, left) if transforms else None,
        right=Matrix(n, n, right) if transforms else None,
    )


def rank(mat):
    """Rank over the rationals by fraction elimination."""
    rows = [[Fraction(v) for v in row] for row in mat.rows]
    rk = 0
    for col in range(mat.ncols):
        pivot = next((i for i in range(rk, mat.nrows) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        inv = 1 / rows[rk][col]
        rows[rk] = [v * inv for v in rows[rk]]
        for i in range(mat.nrows):
            if i != rk and rows[i][col]:
                c = rows[i][col]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[rk])]
        rk += 1
        if rk == mat.nrows:
            break
    return rk


def is_prime(p):
    if p < 2:
        return False
    q = 2
    while q * q <= p:
        if p % q == 0:
            return False
        q += 1
    return True


def rank_mod_p(mat, p):
    """Rank over the field of p elements by modular elimination."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    rows = [[v % p for v in row] for row in mat.rows]
    rk = 0
    for col in range(mat.ncols):
        pivot = next((i for i in range(rk, mat.nrows) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        inv = pow(rows[rk][col], p - 2, p)
        rows[rk] = [v * inv % p for v in rows[rk]]
        for i in range(mat.nrows):
            if i != rk and rows[i][col]:
                c = rows[i][col]
                rows[i] = [(a - c * b) % p for a, b in zip(rows[i], rows[rk])]
        rk += 1
        if rk == mat.nrows:
            break
    return rk


def prime_power_factors(d):
    """Prime-power decomposition of a positive integer, by trial division."""
    out = []
    q = 2
    while q * q <= d:
        if d % q == 0:
            power = 1
            while d % q == 0:
                d //= q
                power *= q
            out.append(power)
        q += 1
    if d > 1:
        out.append(d)
    return tuple(sorted(out))


@dataclass(frozen=True)
class HomologyGroup:
    """Finitely generated abelian group: free rank plus prime-power torsion."""

    free_rank: int
    torsion: tuple

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    @property
    def is_free(self):
        return not self.torsion

    def __str__(self):
        if self.is_trivial:
            return "0"
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{q}" for q in self.torsion)
        return " + ".join(parts)


def _group_from_factors(n_k, out_rank, in_factors):
    torsion = []
    for f in in_factors:
        if f > 1:
            torsion.extend(prime_power_factors(f))
    return HomologyGroup(n_k - out_rank - len(in_factors), tuple(sorted(torsion)))


def homology(complex_, k):
    """Homology of a chain complex at degree k.

    The free rank is rank(k) - rank d_k - rank d_{k+1}; torsion comes from
    the invariant factors of the incoming differential (the quotient by a
    direct summand keeps exactly that torsion).  Over a prime field only
    dimensions are reported.
    """
    if not complex_.lo <= k <= complex_.hi:
        raise ValueError(f"degree {k} outside the complex range")
    d_out = complex_.differential(k)
    d_in = complex_.differential(k + 1)
    n_k = complex_.rank(k)
    if complex_.modulus:
        p = complex_.modulus
        return HomologyGroup(n_k - rank_mod_p(d_out, p) - rank_mod_p(d_in, p), ())
    out_rank = len(smith_normal_form(d_out).factors)
    return _group_from_factors(n_k, out_rank, smith_normal_form(d_in).factors)


@dataclass(frozen=True)
class ExactnessReport:
    """Per-degree homology with pass/fail, plus the complex axiom check."""

    complex_ok: bool
    entries: tuple  # of (degree, HomologyGroup, ok)

    @property
    def ok(self):
        return self.complex_ok and all(flag for _, _, flag in self.entries)

    def failures(self):
        out = [] if self.complex_ok else [("complex axiom", None)]
        out.extend((k, h) for k, h, flag in self.entries if not flag)
        return out


def verify_exactness(complex_, degrees=None):
    """Check that homology vanishes in the given degrees (default: all).

    Each differential is reduced once and its rank shared between the two
    degrees it touches.
    """
    if degrees is None:
        degrees = list(complex_.degrees())
    complex_ok = True
    for k in range(complex_.lo + 2, complex_.hi + 1):
        prod = complex_.differential(k - 1) @ complex_.differential(k)
        if complex_.modulus:
            prod = prod.mod(complex_.modulus)
        if not prod.is_zero():
            complex_ok = False
    p = complex_.modulus
    cache = {}

    def reduced(k):
        if k not in cache:
            mat = complex_.differential(k)
            cache[k] = ((rank_mod_p(mat, p), ()) if p
                        else (None, smith_normal_form(mat).factors))
        return cache[k]

    entries = []
    for k in degrees:
        n_k = complex_.rank(k)
        if p:
            h = HomologyGroup(n_k - reduced(k)[0] - reduced(k + 1)[0], ())
        else:
            out_rank = len(reduced(k)[1])
            h = _group_from_factors(n_k, out_rank, reduced(k + 1)[1])
        entries.append((k, h, h.is_trivial))
    return ExactnessReport(complex_ok=complex_ok, entries=tuple(entries))
