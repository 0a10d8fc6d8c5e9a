"""Type A crystal operators on words and tableaux.

Letters i and i+1 are paired when an i+1 stands to the left of an i
(bracketing); the unpaired letters read i...i (i+1)...(i+1).  f_i raises
the rightmost unpaired i, e_i lowers the leftmost unpaired i+1.  With
tableaux read bottom row first, this makes superstandard tableaux highest
weight and the tensor product b (x) b' the concatenation of their words.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .combinatorics import Partition, Tableau, as_shape, enumerate_ssyt, is_semistandard, row_word


@dataclass(frozen=True)
class CrystalWord:
    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        if any(not 1 <= x <= self.n for x in letters):
            raise ValueError(f"letters must lie in 1..{self.n}: {letters}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def tensor(self, other: "CrystalWord") -> "CrystalWord":
        return CrystalWord(self.letters + other.letters, max(self.n, other.n))

    def weight(self) -> tuple[int, ...]:
        counts = Counter(self.letters)
        return tuple(counts[i] for i in range(1, self.n + 1))

    def to_json(self) -> list[int]:
        return list(self.letters)


def _unpaired(letters: Sequence[int], i: int) -> tuple[list[int], list[int]]:
    """Positions of unpaired i's and unpaired (i+1)'s."""
    open_hi: list[int] = []  # unmatched i+1 waiting for an i to its right
    free_lo: list[int] = []
    for pos, x in enumerate(letters):
        if x == i + 1:
            open_hi.append(pos)
        elif x == i:
            if open_hi:
                open_hi.pop()
            else:
                free_lo.append(pos)
    return free_lo, open_hi


def f_op(w: CrystalWord, i: int) -> CrystalWord | None:
    if not 1 <= i < w.n:
        raise ValueError(f"operator index {i} outside 1..{w.n - 1}")
    free_lo, _ = _unpaired(w.letters, i)
    if not free_lo:
        return None
    pos = free_lo[-1]
    return CrystalWord(w.letters[:pos] + (i + 1,) + w.letters[pos + 1:], w.n)


def e_op(w: CrystalWord, i: int) -> CrystalWord | None:
    if not 1 <= i < w.n:
        raise ValueError(f"operator index {i} outside 1..{w.n - 1}")
    _, free_hi = _unpaired(w.letters, i)
    if not free_hi:
        return None
    pos = free_hi[0]
    return CrystalWord(w.letters[:pos] + (i,) + w.letters[pos + 1:], w.n)


def epsilon(w: CrystalWord, i: int) -> int:
    return len(_unpaired(w.letters, i)[1])


def phi(w: CrystalWord, i: int) -> int:
    return len(_unpaired(w.letters, i)[0])


def is_highest_weight(w: CrystalWord) -> bool:
    return all(e_op(w, i) is None for i in range(1, w.n))


@dataclass(frozen=True)
class CrystalElement:
    tableau: Tableau
    n: int

    def __post_init__(self):
        if self.tableau.shape.inner.size() or not is_semistandard(self.tableau):
            raise ValueError("crystal elements are semistandard tableaux of straight shape")

    @property
    def word(self) -> CrystalWord:
        return CrystalWord(row_word(self.tableau), self.n)

    def weight(self) -> tuple[int, ...]:
        return self.word.weight()


def word_to_tableau(word: Sequence[int], shape: Partition) -> Tableau:
    """Inverse of row_word for a fixed straight shape."""
    rows, pos = [], 0
    for length in reversed(shape.parts):
        rows.append(tuple(word[pos:pos + length]))
        pos += length
    return Tableau(as_shape(shape), tuple(reversed(rows)))


def tableau_f(t: Tableau, i: int, n: int) -> Tableau | None:
    w = f_op(CrystalWord(row_word(t), n), i)
    return None if w is None else word_to_tableau(w.letters, t.shape.outer)


def tableau_e(t: Tableau, i: int, n: int) -> Tableau | None:
    w = e_op(CrystalWord(row_word(t), n), i)
    return None if w is None else word_to_tableau(w.letters, t.shape.outer)


def crystal(shape, n: int) -> list[CrystalWord]:
    """Row words of B_shape: SSYT with entries <= n."""
    return [CrystalWord(row_word(t), n) for t in enumerate_ssyt(Partition(shape), n)]


def highest_weight_pairs(alpha, beta, n: int) -> Counter:
    """Weights of highest-weight elements of B_alpha (x) B_beta."""
    out: Counter = Counter()
    left = crystal(alpha, n)
    right = crystal(beta, n)
    for b in left:
        for b2 in right:
            w = b.tensor(b2)
            if is_highest_weight(w):
                out[Partition(w.weight())] += 1
    return out


def lr_via_crystals(alpha, beta, gamma, n: int | None = None) -> int:
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if n is None:
        n = max(alpha.height(), beta.height(), gamma.height(), 1)
    if n < max(alpha.height(), beta.height(), gamma.height()):
        raise ValueError(f"rank {n} is below the heights of the partitions")
    if gamma.size() != alpha.size() + beta.size():
        return 0
    return highest_weight_pairs(alpha, beta, n)[gamma]
