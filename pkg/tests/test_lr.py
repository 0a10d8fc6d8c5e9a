from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from gct.combinatorics import Partition, SkewShape, Tableau, content, is_reverse_lattice_word, is_semistandard, partitions, row_word
from gct.lr import (
    LRInstance, decide_nonvanishing, decide_nonvanishing_z2, fit_stretching, lr_corpus, lr_count,
    lr_count_rows, lr_polytope, lr_tableaux, stretch_lr,
)
from gct.polyhedra import RationalPolytope, count_lattice_points, lattice_points

WORKED = LRInstance((6, 3, 2), (4, 2, 2), (8, 6, 3, 2))


def brute_lr(alpha, beta, gamma):
    """Try every filling of gamma/alpha with letters 1..height(beta)."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if gamma.size() != alpha.size() + beta.size() or not gamma.contains(alpha):
        return 0
    cells = [(i, j) for i in range(gamma.height()) for j in range(alpha[i], gamma[i])]
    m = max(beta.height(), 1)
    total = 0
    for values in product(range(1, m + 1), repeat=len(cells)):
        grid = dict(zip(cells, values))
        if any((i, j + 1) in grid and grid[(i, j + 1)] < x for (i, j), x in grid.items()):
            continue
        if any((i + 1, j) in grid and grid[(i + 1, j)] <= x for (i, j), x in grid.items()):
            continue
        word = [grid[(i, j)] for i in reversed(range(gamma.height())) for j in range(alpha[i], gamma[i])]
        if [word.count(k) for k in range(1, m + 1)] != list(beta.padded(m)) and beta.size():
            continue
        counts = {}
        ok = True
        for x in reversed(word):
            counts[x] = counts.get(x, 0) + 1
            if x > 1 and counts[x] > counts.get(x - 1, 0):
                ok = False
                break
        total += ok
    return total


def small_triples(max_size, max_height=3):
    return [inst for inst in lr_corpus(max_size, max_height) if inst.well_posed()]


def test_examples():
    assert lr_count(WORKED) == 3
    for alpha in [(3, 1), (2, 2, 1), ()]:
        assert lr_count(alpha, (), alpha) == 1
    assert lr_count((2, 1), (2, 1), (3, 2, 1)) == 2


def test_ill_posed_instances_are_zero():
    assert lr_count((2,), (1,), (2,)) == 0
    assert lr_count((3,), (1,), (2, 2)) == 0
    assert lr_count_rows((3,), (1,), (2, 2)) == 0
    assert not decide_nonvanishing((2,), (1,), (4,))


def test_lr_tableaux_are_lr_fillings():
    alpha, beta = WORKED.alpha, WORKED.beta
    found = list(lr_tableaux(WORKED))
    assert len(found) == 3
    assert ((1, 1), (1, 2, 2), (3,), (1, 3)) in found
    for rows in found:
        t = Tableau(SkewShape(WORKED.gamma, alpha), rows)
        assert is_semistandard(t)
        assert content(t) == beta.parts
        assert is_reverse_lattice_word(row_word(t))


def test_lr_count_matches_brute_force():
    for inst in small_triples(5):
        assert lr_count(inst) == brute_lr(inst.alpha, inst.beta, inst.gamma), inst


def test_row_counter_matches_tableau_rule_on_corpus():
    for inst in lr_corpus(7, 4):
        assert lr_count_rows(inst) == lr_count(inst), inst


def test_polytope_examples():
    P = lr_polytope(WORKED)
    assert count_lattice_points(P) == lr_count(WORKED)
    Q = lr_polytope(LRInstance((2, 1), (), (2, 1)))
    assert list(lattice_points(Q)) == [(0,) * Q.dim]
    assert count_lattice_points(lr_polytope(LRInstance((2, 1), (2, 1), (3, 2, 1)))) == 2


def test_polytope_rank_too_small():
    with pytest.raises(ValueError):
        lr_polytope(WORKED, 3)


@pytest.mark.parametrize("inst", [WORKED, LRInstance((2, 1), (2, 1), (3, 2, 1)), LRInstance((2,), (2,), (2, 2)), LRInstance((1,), (1,), (3,))])
def test_polytope_count_is_rank_invariant(inst):
    h = max(inst.max_height(), 1)
    counts = {count_lattice_points(lr_polytope(inst, n)) for n in range(h, h + 3)}
    assert counts == {lr_count(inst)}


def test_decide_nonvanishing_examples():
    assert decide_nonvanishing(WORKED)
    assert not decide_nonvanishing((1,), (1,), (3,))


def test_decide_nonvanishing_equals_positivity():
    for inst in small_triples(6, 4):
        assert decide_nonvanishing(inst) == (lr_count(inst) > 0)


def test_stretching_examples():
    q = fit_stretching(LRInstance((2, 1), (), (2, 1)))
    assert q.period == 1 and q.coeffs == ((1,),)
    q = fit_stretching(LRInstance((2, 1), (2, 1), (3, 2, 1)))
    assert q.coeffs == ((1, 1),)
    assert [stretch_lr(LRInstance((2, 1), (2, 1), (3, 2, 1)), k) for k in (1, 2, 3)] == [2, 3, 4]
    assert stretch_lr(WORKED, 0) == 1


def test_stretching_worked_example_is_positive_and_predicts():
    q = fit_stretching(WORKED)
    assert q.is_positive()
    assert all(q(k) == stretch_lr(WORKED, k) for k in range(1, 9))


def test_stretching_rejects_short_window():
    with pytest.raises(ValueError):
        fit_stretching(WORKED, kmax=1)
    with pytest.raises(ValueError):
        stretch_lr(WORKED, -1)


def test_z2_decision_examples():
    empty = RationalPolytope(((1,), (-1,)), (0, -1))
    assert not decide_nonvanishing_z2(empty)
    assert not decide_nonvanishing_z2(RationalPolytope.box([Fraction(1, 2)], [Fraction(1, 2)]))
    assert decide_nonvanishing_z2(RationalPolytope.box([Fraction(1, 3)], [Fraction(1, 3)]))


def test_instance_json_round_trip():
    assert LRInstance.from_json(WORKED.to_json()) == WORKED
    assert WORKED.to_json() == {"alpha": [6, 3, 2], "beta": [4, 2, 2], "gamma": [8, 6, 3, 2]}


def test_corpus_size():
    assert sum(1 for _ in lr_corpus(8, 4)) == 4147


partition_st = st.integers(0, 5).flatmap(lambda n: st.sampled_from(list(partitions(n, max_height=3))))


@settings(max_examples=80, deadline=None)
@given(partition_st, partition_st, st.data())
def test_symmetries(alpha, beta, data):
    gamma = data.draw(st.sampled_from(list(partitions(alpha.size() + beta.size(), max_height=4))))
    c = lr_count(alpha, beta, gamma)
    assert lr_count(beta, alpha, gamma) == c
    assert lr_count(alpha.conjugate(), beta.conjugate(), gamma.conjugate()) == c
