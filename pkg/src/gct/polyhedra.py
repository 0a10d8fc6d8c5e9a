"""Exact rational polytopes {x : A x <= b, optionally x >= 0}.

Feasibility and optimization go through the exact simplex in ``lp``;
lattice points are enumerated over an integer bounding box with
per-coordinate pruning; Ehrhart quasipolynomials are fitted per residue
class from exact counts.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, floor, gcd, lcm
from typing import Iterator, Sequence

from .linalg import rank, rref, solve
from .lp import INFEASIBLE, OPTIMAL, UNBOUNDED, LPResult, solve_lp

PERIOD_CAP = 64


class UnboundedPolytope(ValueError):
    pass


class EmptyPolytope(ValueError):
    pass


def _frac_tuple(xs) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in xs)


@dataclass(frozen=True)
class RationalPolytope:
    A: tuple[tuple[Fraction, ...], ...]
    b: tuple[Fraction, ...]
    nonneg: bool = False
    dim: int | None = None

    def __post_init__(self):
        A = tuple(_frac_tuple(r) for r in self.A)
        b = _frac_tuple(self.b)
        if len(A) != len(b):
            raise ValueError(f"{len(A)} rows but {len(b)} right-hand sides")
        d = self.dim if self.dim is not None else (len(A[0]) if A else 0)
        if any(len(r) != d for r in A):
            raise ValueError("ragged constraint matrix")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "dim", d)

    def constraints(self) -> list[tuple[tuple[Fraction, ...], Fraction]]:
        """All inequalities, including x_i >= 0 written as -x_i <= 0."""
        rows = list(zip(self.A, self.b))
        if self.nonneg:
            for i in range(self.dim):
                rows.append((tuple(Fraction(-int(j == i)) for j in range(self.dim)), Fraction(0)))
        return rows

    def dilate(self, k) -> "RationalPolytope":
        return RationalPolytope(self.A, tuple(k * x for x in self.b), self.nonneg, self.dim)

    def contains(self, x: Sequence) -> bool:
        x = _frac_tuple(x)
        return all(sum(a * v for a, v in zip(row, x)) <= rhs for row, rhs in self.constraints())

    def to_json(self) -> dict:
        return {"A": [[_fmt(x) for x in r] for r in self.A], "b": [_fmt(x) for x in self.b], "nonneg": self.nonneg, "dim": self.dim}

    @classmethod
    def from_json(cls, data: dict) -> "RationalPolytope":
        A = [[Fraction(x) for x in r] for r in data["A"]]
        return cls(tuple(map(tuple, A)), _frac_tuple(Fraction(x) for x in data["b"]), bool(data.get("nonneg", False)), data.get("dim"))

    @classmethod
    def box(cls, lower: Sequence, upper: Sequence) -> "RationalPolytope":
        d = len(lower)
        A, b = [], []
        for i in range(d):
            e = [0] * d
            e[i] = 1
            A.append(tuple(e))
            b.append(Fraction(upper[i]))
            A.append(tuple(-x for x in e))
            b.append(-Fraction(lower[i]))
        return cls(tuple(A), tuple(b), False, d)


def _fmt(x: Fraction) -> str | int:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _split_rows(P: RationalPolytope):
    """Separate opposite inequality pairs into equalities for the LP."""
    seen = {}
    ub, eq = [], []
    for row, rhs in zip(P.A, P.b):
        key = (row, rhs)
        if key in seen:
            continue
        seen[key] = True
    keys = list(seen)
    used = set()
    for row, rhs in keys:
        if (row, rhs) in used:
            continue
        neg = (tuple(-x for x in row), -rhs)
        if neg in seen and neg not in used and any(row):
            eq.append((row, rhs))
            used.add(neg)
            used.add((row, rhs))
        else:
            ub.append((row, rhs))
            used.add((row, rhs))
    return ub, eq


def maximize(P: RationalPolytope, c: Sequence) -> LPResult:
    ub, eq = _split_rows(P)
    return solve_lp(
        _frac_tuple(c),
        [r for r, _ in ub], [v for _, v in ub],
        [r for r, _ in eq], [v for _, v in eq],
        nonneg=P.nonneg, nvars=P.dim,
    )


def feasible(P: RationalPolytope) -> tuple[Fraction, ...] | None:
    """A rational point of P, or None when P is empty."""
    if P.dim == 0:
        return () if all(v >= 0 for v in P.b) else None
    res = maximize(P, [0] * P.dim)
    return res.point if res.status == OPTIMAL else None


@dataclass(frozen=True)
class AffineSubspace:
    """{x : C x = d} with integer C, d and independent rows."""

    C: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    dim_ambient: int

    @property
    def dimension(self) -> int:
        return self.dim_ambient - len(self.C)

    def to_json(self) -> dict:
        return {"C": [list(r) for r in self.C], "d": list(self.d)}


def _integer_row(row: Sequence[Fraction], rhs: Fraction) -> tuple[tuple[int, ...], int]:
    den = lcm(*(Fraction(x).denominator for x in list(row) + [rhs]))
    ints = [int(Fraction(x) * den) for x in row]
    r = int(Fraction(rhs) * den)
    g = gcd(*ints, r)
    if g > 1:
        ints = [x // g for x in ints]
        r //= g
    return tuple(ints), r


def implicit_equalities(P: RationalPolytope) -> list[tuple[tuple[Fraction, ...], Fraction]]:
    """Constraints whose slack is 0 everywhere on P.

    One LP over the homogenized cone {(x, s) : A x <= s b, s >= 1}: give each
    row a slack t_i in [0, 1] and maximize sum t_i.  Scaling a relative
    interior point pushes every non-implicit t_i to 1, while implicit rows
    force t_i = 0, so the optimum reads off the implicit equalities directly.
    """
    ub, eq = _split_rows(P)
    known = set(eq) | {(tuple(-x for x in r), -v) for r, v in eq}
    # presolve: variables pinned by single-variable equalities are substituted
    fixed: dict[int, Fraction] = {}
    for row, rhs in eq:
        nz = [j for j, a in enumerate(row) if a]
        if len(nz) == 1:
            fixed[nz[0]] = rhs / row[nz[0]]
    keep = [j for j in range(P.dim) if j not in fixed]

    def reduce(row, rhs):
        rhs = rhs - sum((row[j] * v for j, v in fixed.items()), Fraction(0))
        return tuple(row[j] for j in keep), rhs

    eq = [reduce(r, v) for r, v in eq]
    eq = [(r, v) for r, v in eq if any(r) or v]
    if any(not any(r) for r, v in eq):
        raise EmptyPolytope("polytope is empty")
    d = len(keep)
    cons, originals, implicit = [], [], []
    for row, rhs in P.constraints():
        if not any(row) or (row, rhs) in known:
            continue
        r, v = reduce(row, rhs)
        if any(r):
            cons.append((r, v))
            originals.append((row, rhs))
        elif v == 0:
            implicit.append((row, rhs))
        elif v < 0:
            raise EmptyPolytope("polytope is empty")
    k = len(cons)
    nvars = d + 1 + k
    a_eq = [list(row) + [-rhs] + [0] * k for row, rhs in eq]
    a_ub, b_ub = [], []
    for i, (row, rhs) in enumerate(cons):
        t = [0] * k
        t[i] = 1
        a_ub.append(list(row) + [-rhs] + t)
        b_ub.append(0)
        e = [0] * nvars
        e[d + 1 + i] = 1
        a_ub.append(e)
        b_ub.append(1)
    a_ub.append([0] * d + [-1] + [0] * k)
    b_ub.append(-1)
    nonneg = [P.nonneg] * d + [True] * (k + 1)
    res = solve_lp([0] * (d + 1) + [1] * k, a_ub, b_ub, a_eq, [0] * len(a_eq), nonneg=nonneg, nvars=nvars)
    if res.status == INFEASIBLE:
        raise EmptyPolytope("polytope is empty")
    if res.status != OPTIMAL:
        raise ArithmeticError(f"slack LP ended with status {res.status}")
    tight = [originals[i] for i in range(k) if res.point[d + 1 + i] == 0]
    return [(r, v) for r, v in P.constraints() if (r, v) in known] + implicit + tight


def affine_span(P: RationalPolytope) -> AffineSubspace:
    if feasible(P) is None:
        raise EmptyPolytope("affine span of an empty polytope")
    eqs = implicit_equalities(P)
    if not eqs:
        return AffineSubspace((), (), P.dim)
    m, pivots = rref([list(r) + [v] for r, v in eqs])
    rows = [_integer_row(r[:-1], r[-1]) for r in m[: len(pivots)]]
    return AffineSubspace(tuple(r for r, _ in rows), tuple(v for _, v in rows), P.dim)


def dimension(P: RationalPolytope) -> int:
    return affine_span(P).dimension


def _integer_constraints(P: RationalPolytope, k: int = 1) -> list[tuple[list[int], int]]:
    out = []
    for row, rhs in P.constraints():
        den = lcm(*(x.denominator for x in row + (rhs,)))
        out.append(([int(x * den) for x in row], int(rhs * den) * k))
    return out


def _propagate(rows, lo, hi, integral: bool, rounds: int = 30) -> bool:
    """Tighten [lo, hi] from single rows; False if some interval empties."""
    d = len(lo)
    for _ in range(rounds):
        changed = False
        for row, rhs in rows:
            mins = []
            inf_count = 0
            total = Fraction(0)
            for j in range(d):
                a = row[j]
                if a == 0:
                    mins.append(0)
                    continue
                bound = lo[j] if a > 0 else hi[j]
                if bound is None:
                    mins.append(None)
                    inf_count += 1
                else:
                    v = a * bound
                    mins.append(v)
                    total += v
            if inf_count > 1:
                continue
            for j in range(d):
                a = row[j]
                if a == 0:
                    continue
                if mins[j] is None:
                    rest = total
                elif inf_count:
                    continue
                else:
                    rest = total - mins[j]
                limit = Fraction(rhs - rest) / a
                if a > 0:
                    if integral:
                        limit = Fraction(floor(limit))
                    if hi[j] is None or limit < hi[j]:
                        hi[j] = limit
                        changed = True
                else:
                    if integral:
                        limit = Fraction(ceil(limit))
                    if lo[j] is None or limit > lo[j]:
                        lo[j] = limit
                        changed = True
                if lo[j] is not None and hi[j] is not None and lo[j] > hi[j]:
                    return False
        if not changed:
            break
    return True


def bounding_box(P: RationalPolytope) -> list[tuple[Fraction, Fraction]] | None:
    """Exact coordinate ranges of P; None if P is empty.

    Rows are propagated first; any coordinate still unbounded after that
    is settled with an exact LP.  Raises UnboundedPolytope.
    """
    d = P.dim
    rows = _integer_constraints(P)
    lo: list = [None] * d
    hi: list = [None] * d
    if not _propagate(rows, lo, hi, integral=False):
        return None
    for j in range(d):
        e = [0] * d
        e[j] = 1
        if hi[j] is None:
            res = maximize(P, e)
            if res.status == INFEASIBLE:
                return None
            if res.status == UNBOUNDED:
                raise UnboundedPolytope(f"coordinate {j} is unbounded above")
            hi[j] = res.value
        if lo[j] is None:
            res = maximize(P, [-x for x in e])
            if res.status == INFEASIBLE:
                return None
            if res.status == UNBOUNDED:
                raise UnboundedPolytope(f"coordinate {j} is unbounded below")
            lo[j] = -res.value
    return list(zip(lo, hi))


def exact_bounding_box(P: RationalPolytope) -> list[tuple[Fraction, Fraction]] | None:
    """Tight coordinate ranges from 2d LPs."""
    out = []
    for j in range(P.dim):
        e = [int(i == j) for i in range(P.dim)]
        up, down = maximize(P, e), maximize(P, [-x for x in e])
        if up.status == INFEASIBLE:
            return None
        if UNBOUNDED in (up.status, down.status):
            raise UnboundedPolytope(f"coordinate {j} is unbounded")
        out.append((-down.value, up.value))
    return out


def lattice_points(P: RationalPolytope, k: int = 1, limit: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer points of kP, depth-first in lexicographic order."""
    d = P.dim
    box = bounding_box(P.dilate(k) if k != 1 else P)
    if box is None:
        return
    rows = _integer_constraints(P, k)
    lo = [Fraction(ceil(a)) for a, _ in box]
    hi = [Fraction(floor(b)) for _, b in box]
    if not _propagate(rows, lo, hi, integral=True):
        return
    lo = [int(x) for x in lo]
    hi = [int(x) for x in hi]
    if d == 0:
        if all(rhs >= 0 for _, rhs in rows):
            yield ()
        return
    # minimal contribution of coordinates t.. of each row, for pruning
    suffix = []
    for row, _ in rows:
        s = [0] * (d + 1)
        for t in range(d - 1, -1, -1):
            a = row[t]
            s[t] = s[t + 1] + (a * lo[t] if a > 0 else a * hi[t])
        suffix.append(s)
    partial = [0] * len(rows)
    x = [0] * d
    count = 0

    def rec(t: int):
        nonlocal count
        if t == d:
            count += 1
            yield tuple(x)
            return
        low, high = lo[t], hi[t]
        for i, (row, rhs) in enumerate(rows):
            a = row[t]
            if a == 0:
                continue
            room = rhs - partial[i] - suffix[i][t + 1]
            if a > 0:
                high = min(high, room // a)
            else:
                low = max(low, -(room // -a))
            if low > high:
                return
        for v in range(low, high + 1):
            x[t] = v
            for i, (row, _) in enumerate(rows):
                if row[t]:
                    partial[i] += row[t] * v
            yield from rec(t + 1)
            for i, (row, _) in enumerate(rows):
                if row[t]:
                    partial[i] -= row[t] * v
            if limit is not None and count >= limit:
                return

    yield from rec(0)


def count_lattice_points(P: RationalPolytope, k: int = 1) -> int:
    return sum(1 for _ in lattice_points(P, k))


def has_lattice_point(P: RationalPolytope, k: int = 1) -> bool:
    return next(iter(lattice_points(P, k, limit=1)), None) is not None


def vertices(P: RationalPolytope) -> list[tuple[Fraction, ...]]:
    """Vertices as feasible basic solutions of d tight constraints."""
    d = P.dim
    cons = P.constraints()
    found = set()
    for subset in combinations(range(len(cons)), d):
        a = [list(cons[i][0]) for i in subset]
        if rank(a) < d:
            continue
        x = solve(a, [cons[i][1] for i in subset])
        if x is not None and P.contains(x):
            found.add(tuple(x))
    return sorted(found)


@dataclass(frozen=True)
class Quasipolynomial:
    """f(k) = coeffs[i-1] evaluated at k when k = i mod period (i in 1..period).

    Coefficient lists are ascending in powers of k.
    """

    period: int
    coeffs: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.period < 1 or len(self.coeffs) != self.period:
            raise ValueError("need one coefficient vector per residue class")
        cleaned = []
        for c in self.coeffs:
            c = list(_frac_tuple(c))
            while c and c[-1] == 0:
                c.pop()
            cleaned.append(tuple(c))
        object.__setattr__(self, "coeffs", tuple(cleaned))

    def constituent(self, k: int) -> tuple[Fraction, ...]:
        r = k % self.period or self.period
        return self.coeffs[r - 1]

    def __call__(self, k: int) -> Fraction:
        return sum((c * Fraction(k) ** i for i, c in enumerate(self.constituent(k))), Fraction(0))

    @property
    def degree(self) -> int:
        return max((len(c) - 1 for c in self.coeffs), default=-1)

    def index(self) -> int:
        return next((i + 1 for i, c in enumerate(self.coeffs) if c), 0)

    def is_positive(self) -> bool:
        return all(x >= 0 for c in self.coeffs for x in c)

    def is_saturated(self) -> bool:
        return self(self.index()) != 0

    def to_json(self) -> dict:
        return {"period": self.period, "coeffs": [[_fmt_str(x) for x in c] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Quasipolynomial":
        return cls(int(data["period"]), tuple(tuple(Fraction(x) for x in c) for c in data["coeffs"]))


def _fmt_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def is_positive(q: Quasipolynomial) -> bool:
    return q.is_positive()


def is_saturated(q: Quasipolynomial) -> bool:
    return q.is_saturated()


def index(q: Quasipolynomial) -> int:
    return q.index()


def fit_polynomial(xs: Sequence[int], ys: Sequence) -> tuple[Fraction, ...]:
    """Exact interpolating polynomial (ascending coefficients)."""
    n = len(xs)
    sol = solve([[Fraction(x) ** p for p in range(n)] for x in xs], list(ys))
    if sol is None:
        raise ArithmeticError("singular Vandermonde system")
    return tuple(sol)


def vertex_period(P: RationalPolytope) -> int:
    return lcm(*(x.denominator for v in vertices(P) for x in v)) if P.dim else 1


class PeriodError(ArithmeticError):
    pass


def ehrhart_quasipolynomial(P: RationalPolytope, period_cap: int = PERIOD_CAP) -> Quasipolynomial:
    if feasible(P) is None:
        raise EmptyPolytope("Ehrhart function of an empty polytope")
    if P.dim:
        bounding_box(P)
    dim = affine_span(P).dimension
    period = vertex_period(P)
    counts: dict[int, int] = {}

    def f(k: int) -> int:
        if k not in counts:
            counts[k] = count_lattice_points(P, k)
        return counts[k]

    while period <= period_cap:
        coeffs = []
        ok = True
        for r in range(1, period + 1):
            ks = [r + period * t for t in range(dim + 1)]
            c = fit_polynomial(ks, [f(k) for k in ks])
            check = r + period * (dim + 1)
            if sum(ci * check ** i for i, ci in enumerate(c)) != f(check):
                ok = False
                break
            coeffs.append(c)
        if ok:
            return Quasipolynomial(period, tuple(coeffs))
        period *= 2
    raise PeriodError(f"no quasipolynomial with period <= {period_cap} fits")


def ehrhart_series(P: RationalPolytope, degree_cap: int = 30, q: Quasipolynomial | None = None) -> tuple[list[int], list[int]]:
    """Numerator and denominator of sum_{k>=0} f_P(k) t^k, with B = (1 - t^period)^(deg+1)."""
    q = q or ehrhart_quasipolynomial(P)
    ell, deg = q.period, max(q.degree, 0)
    base = [1] + [0] * (ell - 1) + [-1]
    B = [1]
    for _ in range(deg + 1):
        B = _poly_mul(B, base)
    values = [1] + [q(k) for k in range(1, degree_cap + 1)]
    if any(Fraction(v).denominator != 1 for v in values):
        raise ArithmeticError("non-integral Ehrhart values")
    product = _poly_mul(B, [int(v) for v in values])[: degree_cap + 1]
    nb = len(B) - 1
    A = product[:nb]
    if any(product[nb:]):
        raise ArithmeticError(f"series does not match a numerator of degree < {nb} through degree {degree_cap}")
    while len(A) > 1 and A[-1] == 0:
        A.pop()
    return A, B


def _poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def series_coefficients(A: Sequence[int], B: Sequence[int], n: int) -> list[Fraction]:
    """First n coefficients of A(t)/B(t) (B(0) nonzero)."""
    out = []
    for k in range(n):
        s = Fraction(A[k]) if k < len(A) else Fraction(0)
        for j in range(1, min(k, len(B) - 1) + 1):
            s -= B[j] * out[k - j]
        out.append(s / B[0])
    return out
