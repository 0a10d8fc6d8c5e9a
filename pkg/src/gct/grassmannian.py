"""Plücker brackets, van der Waerden syzygies and straightening.

A bracket [i_1 ... i_d] stands for the d x d minor on those columns of a
d x n matrix.  Monomials are sorted tuples of increasing brackets.
"""
from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Iterable, Mapping, Sequence

from .characters import schur_polynomial
from .combinatorics import Partition, enumerate_ssyt
from .linalg import det, rank

Bracket = tuple[int, ...]
Monomial = tuple[Bracket, ...]

STEP_CAP = 10**6


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting seq (0 if seq has repeats)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def canonical_bracket(indices: Sequence[int]) -> tuple[int, Bracket]:
    """(sign, sorted indices); sign 0 for a repeated index."""
    return permutation_sign(indices), tuple(sorted(indices))


class BracketPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Monomial, Fraction] = {}
        for mono, c in items:
            c = Fraction(c)
            if not c:
                continue
            key = tuple(sorted(tuple(b) for b in mono))
            out[key] = out.get(key, Fraction(0)) + c
            if not out[key]:
                del out[key]
        self.terms = out

    @classmethod
    def from_brackets(cls, brackets: Sequence[Sequence[int]], coeff=1) -> "BracketPolynomial":
        sign = 1
        mono = []
        for b in brackets:
            s, key = canonical_bracket(b)
            sign *= s
            mono.append(key)
        return cls({tuple(mono): coeff * sign} if sign else {})

    def __add__(self, other: "BracketPolynomial") -> "BracketPolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return BracketPolynomial(out)

    def __sub__(self, other: "BracketPolynomial") -> "BracketPolynomial":
        return self + other * -1

    def __mul__(self, other) -> "BracketPolynomial":
        if isinstance(other, BracketPolynomial):
            out: dict = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    key = tuple(sorted(m1 + m2))
                    out[key] = out.get(key, 0) + c1 * c2
            return BracketPolynomial(out)
        c = Fraction(other)
        return BracketPolynomial({m: v * c for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, BracketPolynomial) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, matrix: Sequence[Sequence[int]]) -> Fraction:
        """Value at the maximal minors of a d x n matrix."""
        minors: dict[Bracket, Fraction] = {}
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = c
            for b in mono:
                if b not in minors:
                    minors[b] = det([[row[i - 1] for i in b] for row in matrix])
                term *= minors[b]
            total += term
        return total

    def to_json(self) -> dict[str, str]:
        out = {}
        for mono, c in sorted(self.terms.items()):
            out[json.dumps([list(b) for b in mono], separators=(",", ":"))] = str(c)
        return out

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "BracketPolynomial":
        out = BracketPolynomial()
        for key, c in data.items():
            out = out + cls.from_brackets(json.loads(key), Fraction(c))
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*" + "".join("[" + "".join(map(str, b)) + "]" for b in m) for m, c in sorted(self.terms.items()))


def _check_indices(indices: Sequence[int], n: int) -> None:
    if any(not 1 <= i <= n for i in indices):
        raise ValueError(f"bracket indices must lie in 1..{n}: {tuple(indices)}")


def vdw_syzygy(s: int, alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int], n: int, d: int) -> BracketPolynomial:
    """[[alpha, beta, gamma]] = sum over s-subsets tau of 1..d+1 of
    sgn(tau, tau*) [alpha, beta_tau*] [beta_tau, gamma]."""
    if not 1 <= s <= d:
        raise ValueError(f"s must lie in 1..{d}")
    if len(alpha) != s - 1 or len(beta) != d + 1 or len(gamma) != d - s:
        raise ValueError(f"arity mismatch: need |alpha|={s - 1}, |beta|={d + 1}, |gamma|={d - s}")
    for part in (alpha, beta, gamma):
        _check_indices(part, n)
    out = BracketPolynomial()
    positions = range(d + 1)
    for tau in combinations(positions, s):
        rest = tuple(p for p in positions if p not in tau)
        sign = permutation_sign(tau + rest)
        first = tuple(alpha) + tuple(beta[p] for p in rest)
        second = tuple(beta[p] for p in tau) + tuple(gamma)
        out = out + BracketPolynomial.from_brackets([first, second], sign)
    return out


def all_syzygies(n: int, d: int) -> list[BracketPolynomial]:
    out = []
    idx = range(1, n + 1)
    for s in range(1, d + 1):
        for alpha in combinations(idx, s - 1):
            for beta in combinations(idx, d + 1):
                for gamma in combinations(idx, d - s):
                    syz = vdw_syzygy(s, alpha, beta, gamma, n, d)
                    if not syz.is_zero():
                        out.append(syz)
    return out


def first_violation(mono: Monomial) -> tuple[int, int] | None:
    """(pair position, row) of the first adjacent columns breaking row order."""
    for k in range(len(mono) - 1):
        c, c2 = mono[k], mono[k + 1]
        for r, (a, b) in enumerate(zip(c, c2)):
            if a > b:
                return k, r
    return None


def is_standard_monomial(mono: Monomial) -> bool:
    return first_violation(tuple(sorted(mono))) is None


def straighten(p: BracketPolynomial, n: int | None = None, d: int | None = None, step_cap: int = STEP_CAP) -> BracketPolynomial:
    """Rewrite p on standard monomials using syzygies at the first violation."""
    if n is not None:
        for mono in p.terms:
            for b in mono:
                _check_indices(b, n)
                if d is not None and len(b) != d:
                    raise ValueError(f"bracket {b} does not have size {d}")
    current = dict(p.terms)
    steps = 0
    while True:
        bad = [m for m in current if first_violation(m) is not None]
        if not bad:
            return BracketPolynomial(current)
        steps += 1
        if steps > step_cap:
            raise RuntimeError("straightening exceeded its step cap")
        mono = max(bad)
        coeff = current.pop(mono)
        k, r = first_violation(mono)
        c, c2 = mono[k], mono[k + 1]
        size = len(c)
        s = r + 1
        syz = vdw_syzygy(s, c[:r], c[r:] + c2[:s], c2[s:], max(max(c), max(c2)), size)
        pair = tuple(sorted((c, c2)))
        lead = syz.terms.get(pair)
        if not lead:
            raise RuntimeError(f"syzygy for {mono} does not contain the violating pair")
        rest = mono[:k] + mono[k + 2:]
        # c c2 = -(syz - lead c c2) / lead, times the untouched brackets
        for m2, v in syz.terms.items():
            if m2 == pair:
                continue
            key = tuple(sorted(rest + m2))
            current[key] = current.get(key, 0) - coeff * v / lead
            if not current[key]:
                del current[key]


def standard_monomials(n: int, d: int, s: int) -> list[Monomial]:
    brackets = list(combinations(range(1, n + 1), d))
    return [m for m in combinations_with_replacement(brackets, s) if is_standard_monomial(m)]


def standard_monomial_count(n: int, d: int, s: int) -> int:
    return len(standard_monomials(n, d, s))


def borel_weil_check(n: int, d: int, s: int) -> bool:
    """Standard monomials of degree s versus SSYT of the d x s rectangle."""
    rect = Partition([s] * d)
    count = standard_monomial_count(n, d, s)
    ssyt = len(enumerate_ssyt(rect, n)) if d <= n else 0
    at_ones = schur_polynomial(rect, n)([1] * n)
    return count == ssyt == at_ones


def syzygy_codimension(n: int, d: int) -> tuple[int, int]:
    """(dimension of the degree-2 monomial space, rank of the syzygy span)."""
    brackets = list(combinations(range(1, n + 1), d))
    monos = list(combinations_with_replacement(brackets, 2))
    where = {m: i for i, m in enumerate(monos)}
    rows = []
    for syz in all_syzygies(n, d):
        v = [Fraction(0)] * len(monos)
        for m, c in syz.terms.items():
            v[where[m]] = c
        rows.append(v)
    assert len(monos) == comb(comb(n, d) + 1, 2)
    return len(monos), rank(rows) if rows else 0
