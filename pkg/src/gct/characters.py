"""Characters of S_n, Schur polynomials and the coefficients built from them.

Characters come from coefficient extraction in the product of the
Vandermonde with power sums; every number is an exact integer or Fraction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial, prod
from typing import Mapping, Sequence

from .combinatorics import Partition, enumerate_ssyt, enumerate_syt, partitions
from .linalg import det, rank
from .polynomial import Polynomial


class NotDetermined(ValueError):
    """Raised when a plethysm query needs more inner variables than given."""


@dataclass(frozen=True, order=True)
class CycleType:
    """Multiplicities (i_1, ..., i_n): i_j is the number of j-cycles."""

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(x) for x in self.multiplicities)
        if any(x < 0 for x in m):
            raise ValueError(f"negative multiplicity in {m}")
        object.__setattr__(self, "multiplicities", m)

    @classmethod
    def from_cycle_lengths(cls, lengths: Sequence[int], n: int | None = None) -> "CycleType":
        n = sum(lengths) if n is None else n
        m = [0] * n
        for length in lengths:
            m[length - 1] += 1
        return cls(tuple(m))

    @classmethod
    def identity(cls, n: int) -> "CycleType":
        return cls.from_cycle_lengths([1] * n, n)

    @property
    def n(self) -> int:
        return sum((j + 1) * i for j, i in enumerate(self.multiplicities))

    def cycle_lengths(self) -> Partition:
        return Partition(sorted((j + 1 for j, i in enumerate(self.multiplicities) for _ in range(i)), reverse=True))

    def z(self) -> int:
        """Order of the centralizer: prod_j j^{i_j} i_j!."""
        return prod((j + 1) ** i * factorial(i) for j, i in enumerate(self.multiplicities))

    def class_size(self) -> int:
        return factorial(self.n) // self.z()

    def __repr__(self) -> str:
        return f"CycleType{self.cycle_lengths().parts}"


def cycle_types(n: int) -> list[CycleType]:
    """All cycle types of S_n, identity first."""
    return [CycleType.from_cycle_lengths(p.parts, n) for p in reversed(list(partitions(n)))]


def _mul_bounded(p: dict, q: dict, bound: Sequence[int]) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            if any(x > b for x, b in zip(e, bound)):
                continue
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def frobenius_character(lam, c: CycleType) -> int:
    """chi_lambda on the class c: a coefficient of Delta * prod_j P_j^{i_j}."""
    lam = Partition(lam)
    if not isinstance(c, CycleType):
        c = CycleType(tuple(c))
    if lam.size() != c.n:
        raise ValueError(f"|lambda| = {lam.size()} but the cycle type has degree {c.n}")
    k = lam.height()
    if k == 0:
        return 1
    target = tuple(lam[i] + k - 1 - i for i in range(k))
    unit = tuple([0] * k)
    poly = {unit: 1}
    # exponents only grow under multiplication, so anything above target is dead
    for i in range(k):
        for j in range(i + 1, k):
            ei = tuple(int(t == i) for t in range(k))
            ej = tuple(int(t == j) for t in range(k))
            poly = _mul_bounded(poly, {ei: 1, ej: -1}, target)
    for j, mult in enumerate(c.multiplicities, start=1):
        pj = {tuple(j if t == v else 0 for t in range(k)): 1 for v in range(k)}
        for _ in range(mult):
            poly = _mul_bounded(poly, pj, target)
    return poly.get(target, 0)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: tuple[Partition, ...]
    cycle_types: tuple[CycleType, ...]
    values: tuple[tuple[int, ...], ...]

    def value(self, lam, c: CycleType) -> int:
        return self.values[self.partitions.index(Partition(lam))][self.cycle_types.index(c)]

    def row(self, lam) -> tuple[int, ...]:
        return self.values[self.partitions.index(Partition(lam))]

    def inner_product(self, f: Sequence, g: Sequence) -> Fraction:
        """Class-function inner product (1/n!) sum_g f(g) g(g)."""
        return sum((Fraction(a * b, c.z()) for a, b, c in zip(f, g, self.cycle_types)), Fraction(0))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "partitions": [list(p.parts) for p in self.partitions],
            "cycle_types": [list(c.multiplicities) for c in self.cycle_types],
            "values": [list(r) for r in self.values],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CharacterTable":
        return cls(
            data["n"],
            tuple(Partition(p) for p in data["partitions"]),
            tuple(CycleType(tuple(c)) for c in data["cycle_types"]),
            tuple(tuple(r) for r in data["values"]),
        )


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    if n < 1:
        raise ValueError("n must be at least 1")
    parts = tuple(partitions(n))
    classes = tuple(cycle_types(n))
    values = tuple(tuple(frobenius_character(p, c) for c in classes) for p in parts)
    return CharacterTable(n, parts, classes, values)


def dimension(lam) -> int:
    """dim S_lambda as the character value at the identity."""
    lam = Partition(lam)
    return frobenius_character(lam, CycleType.identity(lam.size()))


@lru_cache(maxsize=None)
def _schur(parts: tuple[int, ...], n: int) -> Polynomial:
    lam = Partition(parts)
    if lam.height() > n:
        return Polynomial.zero(n)
    terms: dict = {}
    for t in enumerate_ssyt(lam, n):
        e = [0] * n
        for row in t.rows:
            for x in row:
                e[x - 1] += 1
        e = tuple(e)
        terms[e] = terms.get(e, 0) + 1
    return Polynomial(n, terms)


def schur_polynomial(lam, n: int) -> Polynomial:
    """Sum of x^T over semistandard tableaux of shape lam with entries <= n."""
    return _schur(Partition(lam).parts, n)


def schur_bialternant_check(lam, n: int, point: Sequence) -> bool:
    lam = Partition(lam)
    point = [Fraction(x) for x in point]
    if len(point) != n:
        raise ValueError(f"expected {n} coordinates, got {len(point)}")
    if len(set(point)) != n:
        raise ValueError("point has repeated coordinates; the Vandermonde vanishes")
    if lam.height() > n:
        return schur_polynomial(lam, n)(point) == 0
    vander = det([[x ** (n - 1 - i) for x in point] for i in range(n)])
    alt = det([[x ** (lam[i] + n - 1 - i) for x in point] for i in range(n)])
    return schur_polynomial(lam, n)(point) * vander == alt


def kostka(lam, mu: Sequence[int]) -> int:
    lam = Partition(lam)
    mu = tuple(int(x) for x in mu)
    if lam.size() != sum(mu):
        raise ValueError(f"|lambda| = {lam.size()} but |mu| = {sum(mu)}")
    if lam.size() == 0:
        return 1
    return len(enumerate_ssyt(lam, max(len(mu), 1), weight=mu))


def decompose_into_schur(p: Polynomial) -> dict[Partition, Fraction]:
    """Coefficients c_lambda with p = sum c_lambda S_lambda (same variable count).

    Peels off the lexicographically largest exponent each round; that
    exponent is dominance-maximal, so a symmetric p always exposes a
    partition there.
    """
    if not p.is_homogeneous():
        raise ValueError("polynomial is not homogeneous")
    n = p.nvars
    rest = p
    out: dict[Partition, Fraction] = {}
    for _ in range(len(p.terms) * 1000 + 10):
        if rest.is_zero():
            return out
        lead = max(rest.terms)
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise ValueError(f"not symmetric: leading exponent {lead} is not a partition")
        c = rest.terms[lead]
        lam = Partition(lead)
        out[lam] = out.get(lam, Fraction(0)) + c
        rest = rest - schur_polynomial(lam, n) * c
    raise RuntimeError("Schur decomposition did not terminate")


def compose_schur(coeffs: Mapping, n: int) -> Polynomial:
    out = Polynomial.zero(n)
    for lam, c in coeffs.items():
        out = out + schur_polynomial(lam, n) * c
    return out


def kronecker_coefficient(lam, mu, pi) -> int:
    lam, mu, pi = Partition(lam), Partition(mu), Partition(pi)
    n = lam.size()
    if mu.size() != n or pi.size() != n:
        raise ValueError(f"sizes differ: {lam.size()}, {mu.size()}, {pi.size()}")
    if n == 0:
        return 1
    table = character_table(n)
    a, b, c = table.row(lam), table.row(mu), table.row(pi)
    total = sum((Fraction(x * y * z, ct.z()) for x, y, z, ct in zip(a, b, c, table.cycle_types)), Fraction(0))
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"Kronecker coefficient {total} is not a nonnegative integer")
    return int(total)


def _ssyt_exponents(mu: Partition, n: int) -> list[tuple[int, ...]]:
    exps = []
    for t in enumerate_ssyt(mu, n):
        e = [0] * n
        for row in t.rows:
            for x in row:
                e[x - 1] += 1
        exps.append(tuple(e))
    return exps


def plethysm_character(lam, mu, n: int) -> Polynomial:
    """S_lam evaluated at the monomials of S_mu in n variables."""
    lam, mu = Partition(lam), Partition(mu)
    monos = _ssyt_exponents(mu, n)
    big_n = len(monos)
    terms: dict = {}
    if big_n == 0:
        return Polynomial(n, {(0,) * n: 1} if lam.size() == 0 else {})
    for t in enumerate_ssyt(lam, big_n):
        e = [0] * n
        for row in t.rows:
            for x in row:
                for v, k in enumerate(monos[x - 1]):
                    e[v] += k
        e = tuple(e)
        terms[e] = terms.get(e, 0) + 1
    return Polynomial(n, terms)


def plethysm_constant(lam, mu, pi, n: int) -> int:
    """Multiplicity of V_pi(H) in V_lam(V_mu(H)) with dim H = n."""
    lam, mu, pi = Partition(lam), Partition(mu), Partition(pi)
    if mu.height() > n:
        raise ValueError(f"height of mu exceeds the {n} inner variables")
    if pi.size() != lam.size() * mu.size():
        return 0
    if pi.height() > n:
        raise NotDetermined(f"{pi} has more than {n} rows; raise the inner variable count")
    coeffs = decompose_into_schur(plethysm_character(lam, mu, n))
    c = coeffs.get(pi, Fraction(0))
    if c.denominator != 1 or c < 0:
        raise ArithmeticError(f"plethysm coefficient {c} is not a nonnegative integer")
    return int(c)


def specht_polynomial(lam: Partition, numbering: Sequence[Sequence[int]], n: int) -> Polynomial:
    """f_T: product over columns of (X_a - X_b) for a above b."""
    out = Polynomial.constant(n, 1)
    for j in range(lam[0] if lam.height() else 0):
        column = [numbering[i][j] for i in range(lam.height()) if lam[i] > j]
        for a, b in combinations(column, 2):
            out = out * (Polynomial.variable(n, a - 1) - Polynomial.variable(n, b - 1))
    return out


def specht_rank(lam) -> int:
    lam = Partition(lam)
    n = lam.size()
    if n == 0:
        return 1
    polys = set()
    for perm in permutations(range(1, n + 1)):
        rows, pos = [], 0
        for p in lam.parts:
            rows.append(perm[pos:pos + p])
            pos += p
        f = specht_polynomial(lam, rows, n)
        # f_T is fixed up to sign by the column sets
        polys.add(-f if f.terms[max(f.terms)] < 0 else f)
    monos = sorted({e for f in polys for e in f.terms})
    return rank([[f.coefficient(e) for e in monos] for f in polys])


def standard_tableaux_count(lam) -> int:
    return len(enumerate_syt(Partition(lam)))
