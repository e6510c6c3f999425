"""Batch command-line front end.

Subcommands: enumerate (index families), multiply (basis products),
resolve (build a complex and emit one JSON document), verify (run named
invariant suites over one or all compositions).  Output is deterministic:
two runs with identical flags produce byte-identical files.  Exit codes:
0 success, 1 verification failure, 2 usage error.
"""

import argparse
import json
import random
import sys

from . import __version__
from .barcomplex import build_borel_resolution, build_weyl_resolution, reduce_mod
from .combinatorics import (
    enumerate_compositions,
    enumerate_partitions,
    enumerate_weight_matrices,
    filtration_degree,
    is_partition,
    is_upper_triangular,
    max_chain_length,
)
from .complexes import Matrix
from .homology import homology, verify_exactness
from .oracles import (
    compose,
    decode,
    endo_of_basis,
    green_convolution,
    tensor_power_action,
)
from .schur import (
    basis_element,
    format_element,
    multiply,
    multiply_basis,
    structure_constants,
)
from .schurfunctor import (
    all_permutations,
    compose_permutations,
    permutation_weight_matrix,
    truncated_resolution,
)
from .tableaux import (
    build_bh_complex,
    compare_with_schur_functor,
    semistandard_tableau_count,
)
from .dividedpowers import matmul, verify_equivariance


def _parse_composition(text, n, r):
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"malformed composition {text!r}")
    if any(p < 0 for p in parts):
        raise ValueError("composition parts must be non-negative")
    if len(parts) > n:
        raise ValueError(f"composition {text!r} has more than {n} parts")
    parts = parts + (0,) * (n - len(parts))
    if sum(parts) != r:
        raise ValueError(f"composition {text!r} does not sum to {r}")
    return parts


def _parse_matrix(text, n, r):
    try:
        rows = json.loads(text)
    except json.JSONDecodeError:
        raise ValueError(f"malformed matrix literal {text!r}")
    if (not isinstance(rows, list) or len(rows) != n
            or any(not isinstance(row, list) or len(row) != n for row in rows)
            or any(not isinstance(v, int) or isinstance(v, bool) or v < 0
                   for row in rows for v in row)):
        raise ValueError(f"{text!r} is not an {n}x{n} matrix of non-negative integers")
    m = tuple(tuple(row) for row in rows)
    if sum(v for row in m for v in row) != r:
        raise ValueError(f"matrix {text!r} does not sum to {r}")
    return m


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# enumerate

def cmd_enumerate(args):
    n, r = args.n, args.r
    if args.kind == "compositions":
        lines = [",".join(map(str, c)) for c in enumerate_compositions(n, r)]
    elif args.kind == "partitions":
        lines = [",".join(map(str, c)) for c in enumerate_partitions(n, r)]
    else:
        col = _parse_composition(args.col_sums, n, r) if args.col_sums else None
        row = _parse_composition(args.row_sums, n, r) if args.row_sums else None
        mats = enumerate_weight_matrices(
            n, r, col_sums=col, row_sums=row,
            upper_triangular=args.upper_triangular, min_degree=args.min_degree)
        lines = [json.dumps([list(rw) for rw in m], separators=(",", ":"))
                 for m in mats]
    _emit("".join(line + "\n" for line in lines), args.output)
    return 0


# ---------------------------------------------------------------------------
# multiply

def cmd_multiply(args):
    omega = _parse_matrix(args.omega, args.n, args.r)
    pi = _parse_matrix(args.pi, args.n, args.r)
    _emit(format_element(multiply_basis(omega, pi)) + "\n", args.output)
    return 0


# ---------------------------------------------------------------------------
# resolve

def _build_variant(variant, lam):
    if variant == "borel":
        return build_borel_resolution(lam)
    if variant == "weyl":
        return build_weyl_resolution(lam)
    if variant == "schur-functor":
        return truncated_resolution(lam)
    if variant == "bh":
        return build_bh_complex(lam, len(lam))
    raise ValueError(f"unknown variant {variant!r}")


def _serialize_label(label, variant):
    if variant == "bh":
        from .tableaux import matrix_of_tableau
        mats = [matrix_of_tableau(t) for t in label]
    else:
        mats = list(label)
    return [[list(row) for row in m] for m in mats]


def _matrix_doc(mat):
    return {"rows": mat.nrows, "cols": mat.ncols,
            "entries": [[i, j, v] for i, j, v in mat.entries()]}


def complex_document(cx, lam, variant):
    doc = {
        "metadata": {
            "tool": "schurres",
            "version": __version__,
            "n": cx.meta["n"],
            "r": cx.meta["r"],
            "lambda": list(lam),
            "variant": variant,
        },
        "degrees": list(cx.degrees()),
        "ranks": {str(k): cx.rank(k) for k in cx.degrees()},
        "basis": {str(k): [_serialize_label(lab, variant) for lab in cx.labels[k]]
                  for k in cx.degrees()},
        "differentials": {str(k): _matrix_doc(cx.differential(k))
                          for k in range(cx.lo + 1, cx.hi + 1)},
    }
    if cx.homotopies:
        doc["homotopies"] = {str(k): _matrix_doc(cx.homotopy(k))
                             for k in sorted(cx.homotopies)}
    doc["homology"] = {}
    for k in cx.degrees():
        h = homology(cx, k)
        doc["homology"][str(k)] = {"free_rank": h.free_rank,
                                   "torsion": list(h.torsion)}
    return doc


def cmd_resolve(args):
    lam = _parse_composition(args.lam, args.n, args.r)
    if args.variant in ("bh", "schur-functor") and args.n < args.r:
        raise ValueError(f"variant {args.variant} needs n >= r")
    if args.variant == "bh" and not is_partition(lam):
        raise ValueError("variant bh needs a partition")
    cx = _build_variant(args.variant, lam)
    doc = complex_document(cx, lam, args.variant)
    _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return 0


# ---------------------------------------------------------------------------
# verify

def _maybe_corrupt(cx, directive):
    if not directive:
        return cx
    k, i, j, delta = (int(x) for x in directive.split(","))
    if cx.lo + 1 <= k <= cx.hi:
        mat = cx.differential(k)
        if i < mat.nrows and j < mat.ncols:
            mat.rows[i][j] += delta
    return cx


def _fail(record):
    print(json.dumps(record, separators=(",", ":")))
    return False


def _check_exactness(n, r, lams, primes, corrupt):
    ok = True
    for lam in lams:
        borel = _maybe_corrupt(build_borel_resolution(lam), corrupt)
        report = verify_exactness(borel, list(borel.degrees()))
        if not report.ok:
            ok = _fail({"check": "exactness", "variant": "borel",
                        "lambda": list(lam),
                        "failures": [str(entry) for entry in report.failures()]})
        if not is_partition(lam):
            continue
        weyl = _maybe_corrupt(build_weyl_resolution(lam), corrupt)
        report = verify_exactness(weyl, list(range(1, weyl.hi + 1)))
        h0 = homology(weyl, 0)
        expected = semistandard_tableau_count(lam, n)
        if not (report.ok and h0.is_free and h0.free_rank == expected):
            ok = _fail({"check": "exactness", "variant": "weyl",
                        "lambda": list(lam), "h0": str(h0),
                        "expected_rank": expected,
                        "failures": [str(entry) for entry in report.failures()]})
            continue
        for p in primes:
            modp = reduce_mod(weyl, p)
            bad = [k for k in range(1, modp.hi + 1)
                   if not homology(modp, k).is_trivial]
            if bad or homology(modp, 0).free_rank != expected:
                ok = _fail({"check": "exactness", "variant": "weyl",
                            "lambda": list(lam), "mod": p, "degrees": bad})
    return ok


def _check_homotopy(n, r, lams, corrupt):
    ok = True
    for lam in lams:
        cx = _maybe_corrupt(build_borel_resolution(lam), corrupt)
        for k in range(0, cx.hi + 1):
            lhs = (cx.differential(k + 1) @ cx.homotopy(k)
                   + cx.homotopy(k - 1) @ cx.differential(k))
            if lhs != Matrix.identity(cx.rank(k)):
                ok = _fail({"check": "homotopy", "lambda": list(lam), "degree": k})
        if cx.differential(0) @ cx.homotopy(-1) != Matrix.identity(1):
            ok = _fail({"check": "homotopy", "lambda": list(lam), "degree": -1})
    return ok


def _check_oracle(n, r):
    ok = True
    mats = enumerate_weight_matrices(n, r)
    for omega in mats:
        fo = endo_of_basis(omega)
        for pi in mats:
            direct = multiply_basis(omega, pi)
            composed = decode(compose(fo, endo_of_basis(pi)))
            convolved = green_convolution(omega, pi)
            if not (direct == composed == convolved):
                ok = _fail({"check": "oracle", "omega": [list(rw) for rw in omega],
                            "pi": [list(rw) for rw in pi]})
    return ok


def _check_associativity(n, r, samples=1000, seed=0):
    ok = True
    mats = enumerate_weight_matrices(n, r)
    rng = random.Random(seed)
    if len(mats) ** 3 <= 10000:
        triples = [(a, b, c) for a in mats for b in mats for c in mats]
    else:
        triples = [tuple(rng.choice(mats) for _ in range(3)) for _ in range(samples)]
    for a, b, c in triples:
        left = multiply(multiply(basis_element(a), basis_element(b)), basis_element(c))
        right = multiply(basis_element(a), multiply(basis_element(b), basis_element(c)))
        if left != right:
            ok = _fail({"check": "associativity", "triple": [
                [list(rw) for rw in m] for m in (a, b, c)]})
    return ok


def _check_filtration(n, r):
    ok = True
    uppers = enumerate_weight_matrices(n, r, upper_triangular=True)
    for omega in uppers:
        s = filtration_degree(omega)
        for pi in uppers:
            t = filtration_degree(pi)
            for key, _ in structure_constants(omega, pi):
                if not (is_upper_triangular(key) and filtration_degree(key) >= s + t):
                    ok = _fail({"check": "filtration",
                                "omega": [list(rw) for rw in omega],
                                "pi": [list(rw) for rw in pi]})
    bound = max_chain_length(n, r)
    support = set(enumerate_weight_matrices(n, r, min_degree=1))
    generators = tuple(support)
    for _ in range(bound):
        nxt = set()
        for a in support:
            for b in generators:
                for key, _ in structure_constants(a, b):
                    nxt.add(key)
        support = nxt
        if not support:
            break
    if support:
        ok = _fail({"check": "filtration", "nilpotency": False,
                    "power": bound + 1})
    return ok


def _check_embedding(n, r):
    ok = True
    if n < r:
        return ok
    for sigma in all_permutations(r):
        ws = permutation_weight_matrix(sigma, n)
        for tau in all_permutations(r):
            expected = permutation_weight_matrix(compose_permutations(sigma, tau), n)
            terms = structure_constants(ws, permutation_weight_matrix(tau, n))
            if terms != ((expected, 1),):
                ok = _fail({"check": "embedding", "sigma": list(sigma),
                            "tau": list(tau)})
    return ok


def _check_boltje(n, r, lams):
    ok = True
    for lam in lams:
        if not is_partition(lam):
            continue
        report = compare_with_schur_functor(lam, n)
        if not report.ok:
            ok = _fail({"check": "boltje", "lambda": list(lam),
                        "degree_match": report.degree_match,
                        "matrices_equal": {str(k): v for k, v in
                                           report.matrices_equal.items()},
                        "cokernel_ranks": list(report.cokernel_ranks),
                        "expected": report.standard_count})
    return ok


def _check_divided(n, r, lams, seed=0):
    ok = True
    rng = random.Random(seed)
    for lam in lams:
        for _ in range(5):
            g = tuple(tuple(rng.randrange(-3, 4) for _ in range(n)) for _ in range(n))
            good, failures = verify_equivariance(lam, g)
            if not good:
                ok = _fail({"check": "divided", "lambda": list(lam),
                            "g": [list(rw) for rw in g],
                            "failures": len(failures)})
    for _ in range(20):
        g = tuple(tuple(rng.randrange(-2, 3) for _ in range(n)) for _ in range(n))
        h = tuple(tuple(rng.randrange(-2, 3) for _ in range(n)) for _ in range(n))
        if multiply(tensor_power_action(g, r), tensor_power_action(h, r)) != \
                tensor_power_action(matmul(g, h), r):
            ok = _fail({"check": "divided", "multiplicative": False})
    return ok


CHECKS = ("exactness", "homotopy", "oracle", "associativity", "filtration",
          "embedding", "boltje", "divided")


def cmd_verify(args):
    n, r = args.n, args.r
    checks = args.checks.split(",")
    for name in checks:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}; available: {', '.join(CHECKS)}")
    primes = [int(p) for p in args.mod.split(",")] if args.mod else []
    if args.all:
        lams = list(enumerate_compositions(n, r))
    elif args.lam:
        lams = [_parse_composition(args.lam, n, r)]
    else:
        lams = list(enumerate_partitions(n, r))
    ok = True
    for name in checks:
        if name == "exactness":
            good = _check_exactness(n, r, lams, primes, args.corrupt)
        elif name == "homotopy":
            good = _check_homotopy(n, r, lams, args.corrupt)
        elif name == "oracle":
            good = _check_oracle(n, r)
        elif name == "associativity":
            good = _check_associativity(n, r)
        elif name == "filtration":
            good = _check_filtration(n, r)
        elif name == "embedding":
            good = _check_embedding(n, r)
        elif name == "boltje":
            good = _check_boltje(n, r, lams)
        else:
            good = _check_divided(n, r, lams)
        print(f"{'ok' if good else 'FAIL'} {name} (n={n}, r={r})")
        ok = ok and good
    return 0 if ok else 1


# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="schurres",
        description="Exact Schur-algebra resolutions and their verification suites.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list index families")
    p.add_argument("kind", choices=("compositions", "partitions", "matrices"))
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--col-sums", dest="col_sums")
    p.add_argument("--row-sums", dest="row_sums")
    p.add_argument("--upper-triangular", action="store_true")
    p.add_argument("--min-degree", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("multiply", help="product of two basis elements")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("omega")
    p.add_argument("pi")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("resolve", help="build a resolution as JSON")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--variant", choices=("borel", "weyl", "bh", "schur-functor"),
                   default="weyl")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("verify", help="run invariant suites; exit 1 on failure")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--all", action="store_true",
                   help="run over every composition, not only partitions")
    p.add_argument("--checks", default="exactness")
    p.add_argument("--mod", help="comma-separated primes for base change")
    p.add_argument("--corrupt", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
