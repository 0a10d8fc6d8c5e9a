"""Brute-force oracles and fixture generators shared by the test modules.

Nothing here calls the routine it is used to check: the index corpus knows
its answer by construction, determinantal divisors come from minors, and the
odd-denominator search tries explicit candidate points.
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import reduce
from itertools import combinations, product
from math import gcd, lcm

from gct.polyhedra import RationalPolytope


def det(m):
    """Laplace-free Fraction elimination, independent of the package."""
    a = [[Fraction(x) for x in r] for r in m]
    n = len(a)
    sign, out = 1, Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        out *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return sign * out


def determinantal_divisors(M):
    """d_k = gcd of all k x k minors; the SNF diagonal is d_k / d_{k-1}."""
    m, n = len(M), len(M[0])
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, int(det([[M[i][j] for j in cols] for i in rows])))
        out.append(g)
    return out


def invariant_factors(M):
    divs = determinantal_divisors(M)
    out, prev = [], 1
    for d in divs:
        if d == 0:
            out.append(0)
            prev = 0
            continue
        out.append(d // prev)
        prev = d
    return out


def random_integer_matrix(rng: random.Random, m: int, n: int, bound: int = 9, rank_cap: int | None = None):
    if rank_cap is None:
        return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)]
    left = [[rng.randint(-3, 3) for _ in range(rank_cap)] for _ in range(m)]
    right = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rank_cap)]
    return [[sum(left[i][t] * right[t][j] for t in range(rank_cap)) for j in range(n)] for i in range(m)]


def random_unimodular(rng: random.Random, d: int, steps: int = 4):
    """Product of elementary integer row operations (determinant +-1)."""
    M = [[int(i == j) for j in range(d)] for i in range(d)]
    for _ in range(steps):
        if d == 1:
            break
        i, j = rng.sample(range(d), 2)
        q = rng.choice([-2, -1, 1, 2])
        M[i] = [a + q * b for a, b in zip(M[i], M[j])]
    if rng.random() < 0.5:
        M[0] = [-x for x in M[0]]
    return M


def index_polytope(rng: random.Random, d: int, fixed: int):
    """A point with prescribed denominators times a box of width >= 1, moved by
    an integer affine unimodular map.  Returns (P, expected index).

    kP meets Z^d exactly when k clears the denominators of the fixed
    coordinates, because every dilate of a width->=1 interval holds an
    integer; so the first nonzero dilation equals the lcm of those
    denominators.
    """
    lower, upper, dens = [], [], []
    for j in range(d):
        if j < fixed:
            q = rng.choice([1, 2, 3, 4, 5, 6])
            p = Fraction(rng.randint(-2 * q, 2 * q), q)
            lower.append(p)
            upper.append(p)
            dens.append(p.denominator)
        else:
            lo = Fraction(rng.randint(-6, 6), rng.choice([1, 2, 3]))
            width = 1 + Fraction(rng.randint(0, 3), rng.choice([1, 2, 4]))
            lower.append(lo)
            upper.append(lo + width)
    box = RationalPolytope.box(lower, upper)
    M_inv = random_unimodular(rng, d)
    shift = [rng.randint(-3, 3) for _ in range(d)]
    # y = M x + shift  <=>  x = M^-1 (y - shift)
    A = [[sum(row[t] * M_inv[t][j] for t in range(d)) for j in range(d)] for row in box.A]
    b = [rhs + sum(A[i][j] * shift[j] for j in range(d)) for i, rhs in enumerate(box.b)]
    P = RationalPolytope(tuple(map(tuple, A)), tuple(b), False, d)
    return P, (lcm(*dens) if dens else 1)


def index_corpus(seed: int = 7, count: int = 36):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        d = rng.randint(1, 3)
        fixed = 0 if i % 6 == 0 else rng.randint(1, d)
        out.append(index_polytope(rng, d, fixed))
    return out


def _rref(rows):
    a = [[Fraction(x) for x in r] for r in rows]
    pivots, r = [], 0
    ncols = len(a[0]) - 1 if a else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        a[r] = [x / a[r][c] for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def odd_denominator_witness(C, d, qmax: int = 15, radius: int = 6):
    """Search x = y / q (q odd) with integer free coordinates y."""
    n = len(C[0])
    a, pivots = _rref([list(row) + [v] for row, v in zip(C, d)])
    if any(not any(r[:-1]) and r[-1] for r in a):
        return None
    free = [j for j in range(n) if j not in pivots]
    for q in range(1, qmax + 1, 2):
        for ys in product(range(-radius, radius + 1), repeat=len(free)):
            x = [Fraction(0)] * n
            for j, y in zip(free, ys):
                x[j] = Fraction(y, q)
            for i, c in enumerate(pivots):
                x[c] = a[i][-1] - sum(a[i][j] * x[j] for j in free)
            if all(v.denominator % 2 for v in x):
                return x
    return None


def random_small_system(rng: random.Random):
    n = rng.randint(1, 3)
    m = rng.randint(1, n)
    C = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
    d = [rng.randint(-5, 5) for _ in range(m)]
    return C, d


def gcd_all(xs):
    return reduce(gcd, xs, 0)
