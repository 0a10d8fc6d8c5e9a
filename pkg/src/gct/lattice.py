"""Smith normal form and the odd-denominator / index computations built on it."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Sequence

from .linalg import det, identity, matmul
from .polyhedra import RationalPolytope, affine_span, feasible, has_lattice_point


@dataclass(frozen=True)
class SmithDecomposition:
    """C = U S V with U, V unimodular and S diagonal with s_11 | s_22 | ..."""

    C: tuple[tuple[int, ...], ...]
    U: tuple[tuple[int, ...], ...]
    S: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]
    U_inv: tuple[tuple[int, ...], ...]
    V_inv: tuple[tuple[int, ...], ...]

    @property
    def diagonal(self) -> list[int]:
        return [self.S[i][i] for i in range(min(len(self.S), len(self.S[0]) if self.S else 0))]

    def to_json(self) -> dict:
        return {"U": [list(r) for r in self.U], "S": [list(r) for r in self.S], "V": [list(r) for r in self.V]}


def _tuples(m):
    return tuple(tuple(r) for r in m)


def smith_normal_form(C: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Row/column reduction pivoting on the smallest nonzero entry."""
    S = [[int(x) for x in r] for r in C]
    m = len(S)
    n = len(S[0]) if m else 0
    U, U_inv = identity(m), identity(m)
    V, V_inv = identity(n), identity(n)

    # each helper updates S and keeps C = U S V, U_inv = U^-1, V_inv = V^-1
    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U_inv[i], U_inv[j] = U_inv[j], U_inv[i]
        for row in U:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):  # row_i += q row_j
        S[i] = [a + q * b for a, b in zip(S[i], S[j])]
        U_inv[i] = [a + q * b for a, b in zip(U_inv[i], U_inv[j])]
        for row in U:
            row[j] -= q * row[i]

    def negate_row(i):
        S[i] = [-a for a in S[i]]
        U_inv[i] = [-a for a in U_inv[i]]
        for row in U:
            row[i] = -row[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V_inv:
            row[i], row[j] = row[j], row[i]
        V[i], V[j] = V[j], V[i]

    def add_col(i, j, q):  # col_i += q col_j
        for row in S:
            row[i] += q * row[j]
        for row in V_inv:
            row[i] += q * row[j]
        V[j] = [a - q * b for a, b in zip(V[j], V[i])]

    for t in range(min(m, n)):
        while True:
            nonzero = [(abs(S[i][j]), i, j) for i in range(t, m) for j in range(t, n) if S[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = S[t][t]
            dirty = False
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // p))
                    dirty = dirty or S[i][t] != 0
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // p))
                    dirty = dirty or S[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if S[t][t] < 0:
            negate_row(t)
        if not any(S[i][j] for i in range(t, m) for j in range(t, n)):
            break
    return SmithDecomposition(_tuples(C), _tuples(U), _tuples(S), _tuples(V), _tuples(U_inv), _tuples(V_inv))


def two_adic_valuation(x: int) -> float:
    if x == 0:
        return float("inf")
    x = abs(x)
    return (x & -x).bit_length() - 1


def _pad_square(C: Sequence[Sequence[int]], d: Sequence[int]):
    m = len(C)
    n = len(C[0]) if m else 0
    size = max(m, n)
    C2 = [list(r) + [0] * (size - n) for r in C] + [[0] * size for _ in range(size - m)]
    d2 = list(d) + [0] * (size - m)
    return C2, d2


def _reduced_system(C, d):
    """Diagonal entries s_i and transformed right-hand sides U^-1 d."""
    if not C:
        return [], []
    C2, d2 = _pad_square(C, d)
    snf = smith_normal_form(C2)
    rhs = [sum(a * b for a, b in zip(row, d2)) for row in snf.U_inv]
    return snf.diagonal, rhs


def z2_feasible_affine(C: Sequence[Sequence[int]], d: Sequence[int]) -> bool:
    """Does {x : C x = d} contain a point whose coordinates all have odd denominators?"""
    diag, rhs = _reduced_system(C, d)
    for s, r in zip(diag, rhs):
        if s == 0:
            if r != 0:
                return False
        elif two_adic_valuation(r) < two_adic_valuation(s):
            return False
    return True


def z2_feasible_polytope(P: RationalPolytope) -> bool:
    if feasible(P) is None:
        return False
    aff = affine_span(P)
    return z2_feasible_affine(aff.C, aff.d)


def quasipolynomial_index(P: RationalPolytope) -> int:
    """lcm of the reduced moduli c_i in the diagonalized affine hull."""
    aff = affine_span(P)
    diag, rhs = _reduced_system(aff.C, aff.d)
    moduli = []
    for s, r in zip(diag, rhs):
        if s == 0:
            if r != 0:
                raise ArithmeticError("inconsistent affine hull: 0 = nonzero after diagonalization")
            continue
        moduli.append(s // gcd(s, r))
    return lcm(*moduli) if moduli else 1


def decide_saturated_ip(P: RationalPolytope, saturation_assumed: bool = True) -> bool:
    """Whether the dilation of P by its index holds an integer point.

    Under the saturation assumption this is exactly rational nonemptiness;
    without it the index dilation is searched directly.
    """
    if feasible(P) is None:
        return False
    if saturation_assumed:
        return True
    return has_lattice_point(P, quasipolynomial_index(P))


def is_unimodular(M: Sequence[Sequence[int]]) -> bool:
    return abs(det(M)) == 1


def check_decomposition(snf: SmithDecomposition) -> bool:
    if [list(r) for r in matmul(matmul(snf.U, snf.S), snf.V)] != [list(r) for r in snf.C]:
        return False
    diag = snf.diagonal
    for i, row in enumerate(snf.S):
        for j, x in enumerate(row):
            if i != j and x:
                return False
    nz = [x for x in diag if x]
    if any(x < 0 for x in diag) or diag[: len(nz)] != nz:
        return False
    if any(b % a for a, b in zip(nz, nz[1:])):
        return False
    return (not snf.U or is_unimodular(snf.U)) and (not snf.V or is_unimodular(snf.V))


def first_nonzero_dilation(P: RationalPolytope, k_max: int = 200) -> int | None:
    """Brute force: smallest k >= 1 with an integer point in kP."""
    for k in range(1, k_max + 1):
        if has_lattice_point(P, k):
            return k
    return None
