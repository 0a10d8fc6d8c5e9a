from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from gct.combinatorics import Partition, enumerate_ssyt, partitions, row_word
from gct.crystals import (
    CrystalElement, CrystalWord, crystal, e_op, epsilon, f_op, highest_weight_pairs, is_highest_weight,
    lr_via_crystals, phi, tableau_e, tableau_f, word_to_tableau,
)
from gct.lr import lr_count


def W(s, n=3):
    return CrystalWord(tuple(int(c) for c in s), n)


def reduced_signature(letters, i):
    """Cancel adjacent (i+1, i) pairs in the i/i+1 subsequence until none remain."""
    seq = [(pos, x) for pos, x in enumerate(letters) if x in (i, i + 1)]
    changed = True
    while changed:
        changed = False
        for k in range(len(seq) - 1):
            if seq[k][1] == i + 1 and seq[k + 1][1] == i:
                del seq[k:k + 2]
                changed = True
                break
    return seq


def oracle_f(letters, i):
    free = [pos for pos, x in reduced_signature(letters, i) if x == i]
    if not free:
        return None
    out = list(letters)
    out[free[-1]] = i + 1
    return tuple(out)


def oracle_e(letters, i):
    free = [pos for pos, x in reduced_signature(letters, i) if x == i + 1]
    if not free:
        return None
    out = list(letters)
    out[free[0]] = i
    return tuple(out)


def rows_are_semistandard(rows):
    if any(a > b for r in rows for a, b in zip(r, r[1:])):
        return False
    return all(rows[k][j] < rows[k + 1][j] for k in range(len(rows) - 1) for j in range(len(rows[k + 1])))


def test_operator_examples():
    assert f_op(W("11", 2), 1) == W("12", 2)
    assert f_op(W("1", 2), 1) == W("2", 2)
    assert e_op(W("2", 2), 1) == W("1", 2)
    assert e_op(W("", 2), 1) is None
    assert f_op(W("21", 2), 1) is None
    assert e_op(W("21", 2), 1) is None


def test_highest_weight_examples():
    assert is_highest_weight(W("21", 2))
    assert not is_highest_weight(W("12", 2))
    assert is_highest_weight(W("", 3))
    assert is_highest_weight(W("1121", 3))


def test_operator_index_and_letter_range():
    with pytest.raises(ValueError):
        f_op(W("1", 2), 2)
    with pytest.raises(ValueError):
        CrystalWord((4,), 3)


def test_operators_match_signature_oracle_exhaustively():
    n = 3
    for length in range(0, 6):
        for letters in product(range(1, n + 1), repeat=length):
            w = CrystalWord(letters, n)
            for i in range(1, n):
                fw, ew = f_op(w, i), e_op(w, i)
                assert (fw.letters if fw else None) == oracle_f(letters, i)
                assert (ew.letters if ew else None) == oracle_e(letters, i)


word_st = st.integers(2, 5).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n), max_size=10)))


@settings(max_examples=200, deadline=None)
@given(word_st, st.data())
def test_partial_inverse_and_weight_shift(nw, data):
    n, letters = nw
    w = CrystalWord(tuple(letters), n)
    i = data.draw(st.integers(1, n - 1))
    fw = f_op(w, i)
    if fw is not None:
        assert e_op(fw, i) == w
        shift = [0] * n
        shift[i - 1], shift[i] = -1, 1
        assert fw.weight() == tuple(a + s for a, s in zip(w.weight(), shift))
    ew = e_op(w, i)
    if ew is not None:
        assert f_op(ew, i) == w
    assert phi(w, i) - epsilon(w, i) == w.weight()[i - 1] - w.weight()[i]


@pytest.mark.parametrize("shape,n", [((2, 1), 3), ((3, 1), 3), ((2, 2), 3), ((2, 1, 1), 4), ((3,), 2)])
def test_tableau_crystal_is_closed(shape, n):
    tabs = enumerate_ssyt(Partition(shape), n)
    for t in tabs:
        assert word_to_tableau(row_word(t), Partition(shape)) == t
        for i in range(1, n):
            for op in (tableau_f, tableau_e):
                u = op(t, i, n)
                if u is not None:
                    assert rows_are_semistandard(u.rows)
                    assert u in tabs


@pytest.mark.parametrize("shape,n", [((2, 1), 3), ((3, 1), 3), ((2, 2), 3), ((2, 1, 1), 4)])
def test_unique_highest_weight_per_shape(shape, n):
    highs = [w for w in crystal(shape, n) if is_highest_weight(w)]
    assert len(highs) == 1
    assert highs[0].weight() == Partition(shape).padded(n)


def test_crystal_element():
    t = enumerate_ssyt(Partition((2, 1)), 3)[0]
    el = CrystalElement(t, 3)
    assert el.word.letters == row_word(t)
    assert sum(el.weight()) == 3


@pytest.mark.parametrize("alpha,beta,n", [((1,), (1,), 2), ((2, 1), (1,), 3), ((2, 1), (2, 1), 3), ((2,), (1, 1), 3), ((2, 2), (1,), 3)])
def test_tensor_dimension_balance(alpha, beta, n):
    hw = highest_weight_pairs(alpha, beta, n)
    total = sum(mult * len(enumerate_ssyt(gamma, n)) for gamma, mult in hw.items())
    assert total == len(enumerate_ssyt(Partition(alpha), n)) * len(enumerate_ssyt(Partition(beta), n))


def test_lr_via_crystals_examples():
    assert lr_via_crystals((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_via_crystals((1,), (1,), (2,)) == 1
    assert lr_via_crystals((1,), (1,), (1, 1)) == 1
    assert lr_via_crystals((1,), (1,), (3,)) == 0
    with pytest.raises(ValueError):
        lr_via_crystals((1, 1, 1), (1,), (2, 1, 1), n=2)


def test_lr_via_crystals_matches_tableau_rule():
    for size_a in range(0, 4):
        for size_b in range(0, 4):
            for alpha in partitions(size_a, max_height=3):
                for beta in partitions(size_b, max_height=3):
                    for gamma in partitions(size_a + size_b, max_height=3):
                        assert lr_via_crystals(alpha, beta, gamma, 3) == lr_count(alpha, beta, gamma)
