"""Invariants of finite matrix groups and torus stability.

Weights use the convention that diag(t_1, ..., t_n) scales the monomial
X^e by t^e, so the pairing of a one-parameter subgroup t -> diag(t^a) with
a weight is the plain dot product.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from .linalg import det, primitive_integer_vector, rank, solve
from .lp import OPTIMAL, solve_lp
from .polynomial import Polynomial

GROUP_CAP = 10_000

MatrixT = tuple[tuple[Fraction, ...], ...]


def _as_matrix(m: Sequence[Sequence]) -> MatrixT:
    return tuple(tuple(Fraction(x) for x in row) for row in m)


def _mul(a: MatrixT, b: MatrixT) -> MatrixT:
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols) for row in a)


def _identity(n: int) -> MatrixT:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


class InfiniteGroupError(ValueError):
    pass


@dataclass
class FiniteMatrixGroup:
    generators: list[MatrixT]
    cap: int = GROUP_CAP
    _elements: list[MatrixT] | None = field(default=None, repr=False)

    def __init__(self, generators: Iterable[Sequence[Sequence]], cap: int = GROUP_CAP):
        self.generators = [_as_matrix(g) for g in generators]
        if not self.generators:
            raise ValueError("need at least one generator")
        n = len(self.generators[0])
        if any(len(g) != n or any(len(r) != n for r in g) for g in self.generators):
            raise ValueError("generators must be square matrices of one size")
        self.cap = cap
        self._elements = None

    @property
    def degree(self) -> int:
        return len(self.generators[0])

    @property
    def elements(self) -> list[MatrixT]:
        if self._elements is None:
            ident = _identity(self.degree)
            seen = {ident}
            order = [ident]
            frontier = [ident]
            while frontier:
                nxt = []
                for g in frontier:
                    for h in self.generators:
                        gh = _mul(g, h)
                        if gh not in seen:
                            seen.add(gh)
                            order.append(gh)
                            nxt.append(gh)
                            if len(order) > self.cap:
                                raise InfiniteGroupError(f"closure exceeds {self.cap} elements")
                frontier = nxt
            self._elements = order
        return self._elements

    def order(self) -> int:
        return len(self.elements)


def reynolds(G: FiniteMatrixGroup, p: Polynomial) -> Polynomial:
    """(1/|G|) sum_g p(g x); the sum over g equals the sum over g^-1."""
    if p.nvars != G.degree:
        raise ValueError(f"polynomial has {p.nvars} variables, group acts on {G.degree}")
    total = Polynomial.zero(p.nvars)
    for g in G.elements:
        total = total + p.linear_substitute(g)
    return total * Fraction(1, G.order())


def char_poly_reversed(M: MatrixT) -> list[Fraction]:
    """Coefficients of det(I - z M) in ascending powers of z (Faddeev-LeVerrier)."""
    n = len(M)
    ident = _identity(n)
    coeffs = [Fraction(1)]
    prod = tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))
    for k in range(1, n + 1):
        shifted = tuple(tuple(prod[i][j] + coeffs[-1] * ident[i][j] for j in range(n)) for i in range(n))
        prod = _mul(M, shifted)
        coeffs.append(-sum((prod[i][i] for i in range(n)), Fraction(0)) / k)
    return coeffs


def invert_series(den: Sequence[Fraction], terms: int) -> list[Fraction]:
    if den[0] == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    out = []
    for k in range(terms):
        s = Fraction(1) if k == 0 else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            s -= den[j] * out[k - j]
        out.append(s / den[0])
    return out


def molien_series(G: FiniteMatrixGroup, degree_cap: int) -> list[Fraction]:
    """Coefficients of z^0..z^degree_cap of (1/|G|) sum_g 1/det(I - z g)."""
    total = [Fraction(0)] * (degree_cap + 1)
    for g in G.elements:
        series = invert_series(char_poly_reversed(g), degree_cap + 1)
        total = [a + b for a, b in zip(total, series)]
    return [x / G.order() for x in total]


def invariant_dimension(G: FiniteMatrixGroup, degree: int) -> int:
    """Rank of the Reynolds images of all degree-d monomials."""
    n = G.degree
    images = []
    for combo in combinations_with_replacement(range(n), degree):
        e = [0] * n
        for i in combo:
            e[i] += 1
        images.append(reynolds(G, Polynomial.monomial(e)))
    monos = sorted({e for p in images for e in p.terms})
    if not monos:
        return 0
    return rank([[p.coefficient(e) for e in monos] for p in images])


def polarize(p: Polynomial, from_vars: Sequence[int], to_vars: Sequence[int]) -> Polynomial:
    """sum_i Y_i dp/dX_i with X_i = variable from_vars[i], Y_i = to_vars[i]."""
    if set(from_vars) & set(to_vars):
        raise ValueError("variable families must be disjoint")
    if len(from_vars) != len(to_vars):
        raise ValueError("variable families must have equal length")
    out = Polynomial.zero(p.nvars)
    for x, y in zip(from_vars, to_vars):
        out = out + Polynomial.variable(p.nvars, y) * p.derivative(x)
    return out


@dataclass(frozen=True)
class WeightVector:
    components: tuple[int, ...]

    def __init__(self, components: Iterable[int]):
        object.__setattr__(self, "components", tuple(int(x) for x in components))

    def trace_zero(self) -> bool:
        return sum(self.components) == 0

    def pair(self, other: "WeightVector | Sequence") -> int:
        comps = other.components if isinstance(other, WeightVector) else tuple(other)
        return sum(a * b for a, b in zip(self.components, comps))

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)


def theta(w: Sequence[int]) -> tuple[int, ...]:
    """Y^n -> Z^{n-1}: partial sums m_1, m_1 + m_2, ..."""
    if sum(w) != 0:
        raise ValueError("theta is defined on trace-zero vectors")
    out, s = [], 0
    for x in list(w)[:-1]:
        s += x
        out.append(s)
    return tuple(out)


def theta_inverse(a: Sequence[int]) -> tuple[int, ...]:
    a = list(a)
    if not a:
        return (0,)
    return tuple([a[0]] + [a[i] - a[i - 1] for i in range(1, len(a))] + [-a[-1]])


def support_weights(f: Polynomial) -> set[WeightVector]:
    if f.is_zero():
        raise ValueError("the zero polynomial has empty support")
    return {WeightVector(e) for e in f.terms}


def matrix_coordinate_weight(i: int, j: int, n: int) -> WeightVector:
    """Weight of the (i, j) entry under conjugation by the diagonal torus (1-based)."""
    w = [0] * n
    w[i - 1] += 1
    w[j - 1] -= 1
    return WeightVector(w)


def _project(support: Iterable) -> list[tuple[Fraction, ...]]:
    out = []
    for chi in support:
        chi = tuple(chi)
        mean = Fraction(sum(chi), len(chi))
        out.append(tuple(Fraction(x) - mean for x in chi))
    return out


def _support_list(support) -> list[tuple[int, ...]]:
    pts = sorted({tuple(w) for w in support})
    if not pts:
        raise ValueError("support must be nonempty")
    if len({len(p) for p in pts}) != 1:
        raise ValueError("weights of different lengths")
    return pts


def torus_nullcone(support) -> WeightVector | None:
    """A trace-zero integer lambda with <lambda, chi> > 0 on the support, if any.

    Maximizes m subject to <lambda, chi> >= m, |lambda_i| <= 1, sum lambda = 0.
    """
    pts = _support_list(support)
    n = len(pts[0])
    # variables: lambda_1..lambda_n, m
    a_ub, b_ub = [], []
    for chi in pts:
        a_ub.append([-x for x in chi] + [1])
        b_ub.append(0)
    for i in range(n):
        e = [0] * (n + 1)
        e[i] = 1
        a_ub.append(e)
        b_ub.append(1)
        a_ub.append([-x for x in e])
        b_ub.append(1)
    a_ub.append([0] * n + [1])
    b_ub.append(1)
    res = solve_lp([0] * n + [1], a_ub, b_ub, [[1] * n + [0]], [0], nonneg=False)
    if res.status != OPTIMAL or res.value <= 0:
        return None
    return WeightVector(primitive_integer_vector(res.point[:n]))


def zero_in_hull(points: Sequence[Sequence]) -> bool:
    """Exact LP: is 0 a convex combination of the points?"""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    k, n = len(pts), len(pts[0])
    a_eq = [[p[i] for p in pts] for i in range(n)] + [[1] * k]
    b_eq = [0] * n + [1]
    res = solve_lp([0] * k, (), (), a_eq, b_eq, nonneg=True)
    return res.status == OPTIMAL


@dataclass(frozen=True)
class KempfResult:
    lam: WeightVector
    efficiency_sq: Fraction
    closest_point: tuple[Fraction, ...]
    m: int
    norm_sq: int


def min_norm_point(points: Sequence[Sequence[Fraction]]) -> tuple[Fraction, ...]:
    """Closest point to 0 in the convex hull, by exhaustive face search."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    dim = len(pts[0])
    best = None
    for size in range(1, min(len(pts), dim + 1) + 1):
        for subset in combinations(range(len(pts)), size):
            q = [pts[i] for i in subset]
            # minimize |sum mu_i q_i|^2 with sum mu_i = 1: KKT system
            gram = [[sum(a * b for a, b in zip(u, v)) for v in q] for u in q]
            system = [row + [Fraction(1)] for row in gram] + [[Fraction(1)] * size + [Fraction(0)]]
            if det(system) == 0:
                continue
            sol = solve(system, [Fraction(0)] * size + [Fraction(1)])
            mu = sol[:size]
            if any(x < 0 for x in mu):
                continue
            p = tuple(sum((m * v[i] for m, v in zip(mu, q)), Fraction(0)) for i in range(dim))
            norm = sum(x * x for x in p)
            # optimal over the whole hull iff every point lies beyond p
            if all(sum(a * b for a, b in zip(p, v)) >= norm for v in pts):
                if best is None or norm < best[0]:
                    best = (norm, p)
        if best is not None:
            return best[1]
    raise ArithmeticError("no face of the hull produced the closest point")


def kempf_optimal(support) -> KempfResult | None:
    """The most efficient destabilizing direction on the standard torus."""
    pts = _support_list(support)
    projected = _project(pts)
    p = min_norm_point(projected)
    if not any(p):
        return None
    lam = primitive_integer_vector(p)
    m = min(sum(a * b for a, b in zip(lam, chi)) for chi in pts)
    norm_sq = sum(a * a for a in lam)
    return KempfResult(WeightVector(lam), sum(x * x for x in p), p, m, norm_sq)


def efficiency_sq(lam: Sequence, support) -> Fraction:
    """m(lambda)^2 / |lambda|^2 when m(lambda) > 0, else 0."""
    lam = [Fraction(x) for x in lam]
    m = min(sum(a * b for a, b in zip(lam, chi)) for chi in support)
    norm = sum(x * x for x in lam)
    if m <= 0 or norm == 0:
        return Fraction(0)
    return m * m / norm
