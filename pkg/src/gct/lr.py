"""Littlewood-Richardson coefficients: the tableau rule, the polytope, and
decisions built on them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .combinatorics import Partition, partitions
from .lattice import z2_feasible_polytope
from .polyhedra import EmptyPolytope, Quasipolynomial, RationalPolytope, affine_span, feasible, fit_polynomial


class StretchingError(ArithmeticError):
    """A stretching function failed to be a polynomial on held-out data."""


@dataclass(frozen=True)
class LRInstance:
    alpha: Partition
    beta: Partition
    gamma: Partition

    def __init__(self, alpha, beta, gamma):
        object.__setattr__(self, "alpha", Partition(alpha))
        object.__setattr__(self, "beta", Partition(beta))
        object.__setattr__(self, "gamma", Partition(gamma))

    def well_posed(self) -> bool:
        return self.gamma.size() == self.alpha.size() + self.beta.size() and self.gamma.contains(self.alpha)

    def max_height(self) -> int:
        return max(self.alpha.height(), self.beta.height(), self.gamma.height())

    def scaled(self, k: int) -> "LRInstance":
        return LRInstance(self.alpha.scaled(k), self.beta.scaled(k), self.gamma.scaled(k))

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta), "gamma": list(self.gamma)}

    @classmethod
    def from_json(cls, data: dict) -> "LRInstance":
        return cls(data["alpha"], data["beta"], data["gamma"])


def _as_instance(inst, beta=None, gamma=None) -> LRInstance:
    if isinstance(inst, LRInstance):
        return inst
    return LRInstance(inst, beta, gamma)


def lr_tableaux(inst: LRInstance) -> Iterator[tuple[tuple[int, ...], ...]]:
    """LR fillings of gamma/alpha with content beta, as tuples of skew rows.

    Cells are filled in reverse reading order (top row first, right to
    left), so the lattice condition is checked on every prefix.
    """
    alpha, beta, gamma = inst.alpha, inst.beta, inst.gamma
    if not inst.well_posed():
        return
    h = gamma.height()
    cells = [(i, j) for i in range(h) for j in range(gamma[i] - 1, alpha[i] - 1, -1)]
    nletters = beta.height()
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (nletters + 2)

    def rec(idx: int):
        if idx == len(cells):
            yield tuple(tuple(grid[(i, j)] for j in range(alpha[i], gamma[i])) for i in range(h))
            return
        i, j = cells[idx]
        hi = min(grid.get((i, j + 1), nletters), nletters, i + 1)
        lo = 1
        if i > 0 and j >= alpha[i - 1]:
            lo = grid[(i - 1, j)] + 1
        for x in range(lo, hi + 1):
            if counts[x] >= beta[x - 1]:
                continue
            if x > 1 and counts[x] + 1 > counts[x - 1]:
                continue
            counts[x] += 1
            grid[(i, j)] = x
            yield from rec(idx + 1)
            counts[x] -= 1
        grid.pop((i, j), None)

    yield from rec(0)


def lr_count(inst, beta=None, gamma=None) -> int:
    inst = _as_instance(inst, beta, gamma)
    return sum(1 for _ in lr_tableaux(inst))


def lr_count_rows(inst, beta=None, gamma=None) -> int:
    """Same count as lr_count, by dynamic programming over rows.

    A row of an LR filling is determined by how many of each letter it
    holds; the state carried between rows is the previous row's content and
    the running content, which is all the column and lattice conditions see.
    """
    inst = _as_instance(inst, beta, gamma)
    if not inst.well_posed():
        return 0
    alpha, beta, gamma = inst.alpha, inst.beta, inst.gamma
    h = gamma.height()
    m = beta.height()
    target = tuple(beta.padded(m))
    memo: dict = {}

    def rows(i: int, prev: tuple[int, ...], cum: tuple[int, ...]):
        # contents r_1..r_m of row i (0-based) given row i-1 and running totals
        length = gamma[i] - alpha[i]
        out = []
        r = [0] * m

        def rec(j: int, used: int, prev_prefix: int):
            # prev_prefix: letters < j+1 in the previous row, i.e. sum prev[:j]
            if j == m or j > i:
                if used == length:
                    out.append(tuple(r))
                return
            hi = min(length - used, target[j] - cum[j])
            if j > 0:
                # lattice: j+1's through row i never outnumber j's through row i-1
                hi = min(hi, cum[j - 1] - cum[j])
            if i > 0:
                # letters <= j+1 in row i must end left of letters <= j in row i-1
                hi = min(hi, alpha[i - 1] + prev_prefix - alpha[i] - used)
            for x in range(hi, -1, -1):
                r[j] = x
                rec(j + 1, used + x, prev_prefix + prev[j])
            r[j] = 0

        rec(0, 0, 0)
        return out

    def count(i: int, prev: tuple[int, ...], cum: tuple[int, ...]) -> int:
        if i == h:
            return int(cum == target)
        key = (i, prev, cum)
        if key in memo:
            return memo[key]
        total = 0
        for row in rows(i, prev, cum):
            total += count(i + 1, row, tuple(c + x for c, x in zip(cum, row)))
        memo[key] = total
        return total

    return count(0, (0,) * m, (0,) * m)


def _var(i: int, j: int, n: int) -> int:
    """Column of r^i_j (1-based i, j)."""
    return (i - 1) * n + (j - 1)


def lr_polytope(inst, n: int | None = None) -> RationalPolytope:
    """Polytope in the variables r^i_j (number of j's in row i) whose integer
    points are the LR tableaux of the instance."""
    inst = _as_instance(inst)
    if n is None:
        n = max(inst.max_height(), 1)
    if n < inst.max_height():
        raise ValueError(f"rank {n} is below the maximum height {inst.max_height()}")
    alpha, beta, gamma = inst.alpha, inst.beta, inst.gamma
    d = n * n
    A: list[list[int]] = []
    b: list[int] = []

    def row(coeffs: dict[int, int]) -> list[int]:
        r = [0] * d
        for k, v in coeffs.items():
            r[k] += v
        return r

    def leq(coeffs, rhs):
        A.append(row(coeffs))
        b.append(rhs)

    def eq(coeffs, rhs):
        leq(coeffs, rhs)
        leq({k: -v for k, v in coeffs.items()}, -rhs)

    for i in range(1, n + 1):
        eq({_var(i, j, n): 1 for j in range(1, n + 1)}, gamma[i - 1] - alpha[i - 1])
    for j in range(1, n + 1):
        eq({_var(i, j, n): 1 for i in range(1, n + 1)}, beta[j - 1])
    for i in range(1, n):
        for j in range(1, n + 1):
            coeffs: dict[int, int] = {}
            for k in range(1, j + 1):
                coeffs[_var(i + 1, k, n)] = coeffs.get(_var(i + 1, k, n), 0) + 1
            for k in range(1, j):
                coeffs[_var(i, k, n)] = coeffs.get(_var(i, k, n), 0) - 1
            leq(coeffs, alpha[i - 1] - alpha[i])
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            eq({_var(i, j, n): 1}, 0)
    for i in range(1, n + 1):
        for j in range(2, n + 1):
            coeffs = {}
            for ip in range(1, i + 1):
                coeffs[_var(ip, j, n)] = coeffs.get(_var(ip, j, n), 0) + 1
            for ip in range(1, i):
                coeffs[_var(ip, j - 1, n)] = coeffs.get(_var(ip, j - 1, n), 0) - 1
            leq(coeffs, 0)
    return RationalPolytope(tuple(map(tuple, A)), tuple(b), nonneg=True, dim=d)


def decide_nonvanishing(inst, beta=None, gamma=None) -> bool:
    """c > 0 iff the LR polytope is nonempty (saturation); no lattice search."""
    inst = _as_instance(inst, beta, gamma)
    if not inst.well_posed():
        return False
    return feasible(lr_polytope(inst)) is not None


def stretch_lr(inst, k: int) -> int:
    if k < 0:
        raise ValueError("stretch factor must be nonnegative")
    return lr_count_rows(_as_instance(inst).scaled(k))


def default_kmax(inst: LRInstance) -> int:
    try:
        dim = affine_span(lr_polytope(inst)).dimension
    except EmptyPolytope:
        dim = 0
    return dim + 2


def fit_stretching(inst, kmax: int | None = None) -> Quasipolynomial:
    """Fit k -> c(k alpha, k beta, k gamma) on k = 1..kmax-1, check k = kmax."""
    inst = _as_instance(inst)
    if kmax is None:
        kmax = default_kmax(inst)
    if kmax < 2:
        raise ValueError("need kmax >= 2 to hold out one sample")
    ks = list(range(1, kmax))
    coeffs = fit_polynomial(ks, [stretch_lr(inst, k) for k in ks])
    predicted = sum(c * Fraction(kmax) ** p for p, c in enumerate(coeffs))
    actual = stretch_lr(inst, kmax)
    if predicted != actual:
        raise StretchingError(f"stretching function of {inst} is not polynomial: predicted {predicted}, counted {actual}")
    return Quasipolynomial(1, (coeffs,))


def decide_nonvanishing_z2(P: RationalPolytope) -> bool:
    return z2_feasible_polytope(P)


def lr_corpus(max_size: int = 8, max_height: int = 4) -> Iterator[LRInstance]:
    """Every (alpha, beta, gamma) with |alpha| + |beta| = |gamma| <= max_size."""
    for total in range(max_size + 1):
        gammas = list(partitions(total, max_height))
        for a in range(total + 1):
            for alpha in partitions(a, max_height):
                for beta in partitions(total - a, max_height):
                    for gamma in gammas:
                        yield LRInstance(alpha, beta, gamma)
