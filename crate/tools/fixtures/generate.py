#!/usr/bin/env python3
"""Offline fixture generator.

Computes the degree-reverse-lexicographical Groebner basis of each benchmark
polynomial system with sympy and writes the set of leading exponent vectors
in the text monomial format consumed by the library:

    # comment lines
    vars n
    d_1 d_2 ... d_n      (one monomial per line)

Variable order is x1 > x2 > ... > xn (row-major a11 > a12 > ... > ann for the
matrix systems).  These are offline, one-shot computations; the resulting
files are embedded in the crate and validated there against the expected
(m, n, d) sizes.

Usage: generate.py SYSTEM [--modulus P] [--out FILE]
"""

import argparse
import sys
import time

from sympy import symbols, groebner, prod
from sympy.polys.orderings import grevlex


def cyclic(n):
    xs = symbols(f"x1:{n + 1}")
    eqs = []
    for k in range(1, n):
        eqs.append(sum(prod(xs[(i + j) % n] for j in range(k)) for i in range(n)))
    eqs.append(prod(xs) - 1)
    return eqs, xs


def reimer5():
    # Canonical Reimer system with alternating signs.  The benchmark table's
    # input size (38 monomials, max degree 8) pins this variant down.
    x1, x2, x3, x4, x5 = xs = symbols("x1:6")
    eqs = [
        2 * x1**k - 2 * x2**k + 2 * x3**k - 2 * x4**k + 2 * x5**k - 1
        for k in range(2, 7)
    ]
    return eqs, xs


def katsura7():
    x1, x2, x3, x4, x5, x6, x7 = xs = symbols("x1:8")
    eqs = [
        x1**2 - x1 + 2 * x2**2 + 2 * x3**2 + 2 * x4**2 + 2 * x5**2 + 2 * x6**2 + 2 * x7**2,
        2 * x2 * x1 + 2 * x2 * x3 + 2 * x3 * x4 + 2 * x4 * x5 + 2 * x5 * x6 + 2 * x6 * x7 - x2,
        2 * x3 * x1 + 2 * x2 * x4 + 2 * x3 * x5 + 2 * x4 * x6 + 2 * x5 * x7 + x2**2 - x3,
        2 * x4 * x1 + 2 * x2 * x5 + 2 * x3 * x6 + 2 * x4 * x7 + 2 * x2 * x3 - x4,
        2 * x5 * x1 + 2 * x2 * x6 + 2 * x3 * x7 + 2 * x2 * x4 + x3**2 - x5,
        2 * x6 * x1 + 2 * x2 * x7 + 2 * x2 * x5 + 2 * x3 * x4 - x6,
        x1 + 2 * x2 + 2 * x3 + 2 * x4 + 2 * x5 + 2 * x6 + 2 * x7 - 1,
    ]
    return eqs, xs


def square(n):
    # A^2 = 0 for an n x n matrix of unknowns, row-major variable order.
    a = [[symbols(f"a{i + 1}{j + 1}") for j in range(n)] for i in range(n)]
    xs = tuple(a[i][j] for i in range(n) for j in range(n))
    eqs = [
        sum(a[i][k] * a[k][j] for k in range(n))
        for i in range(n)
        for j in range(n)
    ]
    return eqs, xs


SYSTEMS = {
    "cyc4": lambda: cyclic(4),
    "cyc5": lambda: cyclic(5),
    "cyc6": lambda: cyclic(6),
    "reimer5": reimer5,
    "katsura7": katsura7,
    "sq3": lambda: square(3),
    "sq4": lambda: square(4),
}


def leading_monomials(eqs, gens, modulus):
    kwargs = {"order": "grevlex"}
    if modulus:
        kwargs["modulus"] = modulus
    gb = groebner(eqs, *gens, **kwargs)
    lms = [max(p.monoms(), key=grevlex) for p in gb.polys]
    return sorted(set(lms), key=grevlex, reverse=True)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("system", choices=sorted(SYSTEMS))
    ap.add_argument("--modulus", type=int, default=0, help="prime field, 0 = rationals")
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    eqs, gens = SYSTEMS[args.system]()
    t0 = time.time()
    lms = leading_monomials(eqs, gens, args.modulus)
    elapsed = time.time() - t0

    n = len(gens)
    m = len(lms)
    d = max(sum(mon) for mon in lms)
    field = f"GF({args.modulus})" if args.modulus else "QQ"
    header = (
        f"# {args.system}: leading monomials of the degree-reverse-lexicographical\n"
        f"# Groebner basis, computed offline with sympy over {field}\n"
        f"# (tools/fixtures/generate.py), variable order x1 > x2 > ... > xn.\n"
        f"# size: m={m} monomials, n={n} variables, max total degree d={d}\n"
    )
    body = f"vars {n}\n" + "".join(" ".join(map(str, mon)) + "\n" for mon in lms)

    out = args.out or f"{args.system}.mon"
    with open(out, "w") as fh:
        fh.write(header + body)
    print(f"{args.system}: m={m} n={n} d={d} field={field} elapsed={elapsed:.1f}s -> {out}",
          flush=True)


if __name__ == "__main__":
    main()
