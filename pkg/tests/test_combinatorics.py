from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from gct.characters import schur_polynomial
from gct.combinatorics import (
    Partition, SkewShape, Tableau, content, enumerate_ssyt, enumerate_syt, is_reverse_lattice_word,
    is_semistandard, is_standard, partitions, row_word, superstandard,
)

# The LR filling of (8,6,3,2)/(6,3,2) with content (4,2,2).
WORKED = Tableau(SkewShape((8, 6, 3, 2), (6, 3, 2)), ((1, 1), (1, 2, 2), (3,), (1, 3)))


def brute_ssyt_count(outer, inner, max_entry):
    """Count fillings by trying every assignment and checking rows and columns."""
    inner = list(inner) + [0] * (len(outer) - len(inner))
    cells = [(i, j) for i in range(len(outer)) for j in range(inner[i], outer[i])]
    total = 0
    for values in product(range(1, max_entry + 1), repeat=len(cells)):
        grid = dict(zip(cells, values))
        ok = True
        for (i, j), x in grid.items():
            if (i, j + 1) in grid and grid[(i, j + 1)] < x:
                ok = False
            if (i + 1, j) in grid and grid[(i + 1, j)] <= x:
                ok = False
        total += ok
    return total


def brute_partition_count(n):
    # coefficient of q^n in prod 1/(1-q^k)
    ways = [1] + [0] * n
    for k in range(1, n + 1):
        for m in range(k, n + 1):
            ways[m] += ways[m - k]
    return ways[n]


def test_partition_normalizes_and_validates():
    assert Partition([3, 1, 0, 0]).parts == (3, 1)
    assert Partition([2, 2]).conjugate() == Partition([2, 2])
    assert Partition([4, 1]).conjugate() == Partition([2, 1, 1, 1])
    assert Partition([3, 1])[5] == 0
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_dominance_order():
    assert Partition([3]).dominates(Partition([2, 1]))
    assert not Partition([2, 1]).dominates(Partition([3]))
    assert not Partition([3, 1, 1, 1]).dominates(Partition([2, 2, 2]))


@pytest.mark.parametrize("n", range(0, 12))
def test_partition_counts_match_generating_function(n):
    assert len(list(partitions(n))) == brute_partition_count(n)


def test_partitions_bounded_height_and_part():
    got = [p.parts for p in partitions(6, max_height=2, max_part=4)]
    assert got == [(4, 2), (3, 3)]


def test_ssyt_examples():
    assert len(enumerate_ssyt(Partition([1]), 3)) == 3
    assert len(enumerate_ssyt(Partition([1, 1]), 4)) == 6
    assert len(enumerate_ssyt(Partition([2, 1]), 3)) == 8


@pytest.mark.parametrize("outer,inner,n", [
    ((2, 1), (), 3), ((2, 2), (), 3), ((3, 1), (1,), 3), ((2, 2, 1), (1,), 3), ((3, 2), (2, 1), 4), ((1, 1, 1), (), 4),
])
def test_ssyt_count_matches_brute_force(outer, inner, n):
    tabs = enumerate_ssyt(SkewShape(outer, inner), n)
    assert len(tabs) == brute_ssyt_count(outer, inner, n)
    assert all(is_semistandard(t) for t in tabs)
    assert len(set(tabs)) == len(tabs)


@pytest.mark.parametrize("lam", [(1,), (2,), (2, 1), (3, 1), (2, 2), (2, 1, 1), (3, 2, 1)])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ssyt_count_equals_schur_at_ones(lam, n):
    lam = Partition(lam)
    assert len(enumerate_ssyt(lam, n)) == schur_polynomial(lam, n)([1] * n)


def test_ssyt_with_weight_is_kostka_filter():
    shape = Partition([2, 1])
    all_tabs = enumerate_ssyt(shape, 3)
    for w in [(1, 1, 1), (2, 1), (1, 2), (3,), (2, 0, 1)]:
        expected = [t for t in all_tabs if content(t) + (0,) * (3 - len(content(t))) == tuple(w) + (0,) * (3 - len(w))]
        assert enumerate_ssyt(shape, 3, weight=w) == expected


def test_standard_tableaux():
    # hook length formula for (3,2): 5!/(4*3*1*2*1) = 5
    syt = enumerate_syt(Partition([3, 2]))
    assert len(syt) == 5
    assert all(is_standard(t) for t in syt)
    assert not is_standard(Tableau.straight([[1, 1]]))


def test_row_word_examples():
    assert "".join(map(str, row_word(WORKED))) == "13312211"
    assert row_word(Tableau.straight([])) == ()
    assert row_word(Tableau.straight([[1, 1, 2]])) == (1, 1, 2)


def test_reverse_lattice_examples():
    assert is_reverse_lattice_word([1, 3, 3, 1, 2, 2, 1, 1])
    assert is_reverse_lattice_word([])
    assert not is_reverse_lattice_word([2])


def test_content_examples():
    assert content(WORKED) == (4, 2, 2)
    assert content(Tableau.straight([])) == ()
    assert content(Tableau.straight([[1], [2], [3]])) == (1, 1, 1)


def test_worked_tableau_is_semistandard():
    assert is_semistandard(WORKED)


def test_superstandard_is_semistandard():
    t = superstandard(Partition([3, 2, 2]))
    assert t.rows == ((1, 1, 1), (2, 2), (3, 3))
    assert is_semistandard(t)


def test_tableau_json_round_trip():
    assert Tableau.from_json(WORKED.to_json()) == WORKED
    assert WORKED.to_json() == {"outer": [8, 6, 3, 2], "inner": [6, 3, 2], "rows": [[1, 1], [1, 2, 2], [3], [1, 3]]}


def test_tableau_rejects_misfit_rows():
    with pytest.raises(ValueError):
        Tableau(SkewShape((2, 1)), ((1,), (2,)))
    with pytest.raises(ValueError):
        SkewShape((2,), (1, 1))


def _suffix_oracle(word):
    for start in range(len(word)):
        suffix = word[start:]
        for i in range(1, max(word) + 1):
            if suffix.count(i + 1) > suffix.count(i):
                return False
    return True


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(1, 4), max_size=10))
def test_reverse_lattice_matches_suffix_counts(word):
    assert is_reverse_lattice_word(word) == _suffix_oracle(word)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 7).flatmap(lambda n: st.sampled_from(list(partitions(n, max_height=3)))), st.integers(1, 3))
def test_row_word_length_is_box_count(lam, n):
    for t in enumerate_ssyt(lam, n):
        assert len(row_word(t)) == lam.size()
