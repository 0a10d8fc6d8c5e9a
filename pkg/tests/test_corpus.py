from gct.corpus import TripleResult, pairs, run_corpus, sweep_pair
from gct.combinatorics import Partition
from gct.lr import lr_corpus


def test_sweep_pair_example():
    rows = {r.gamma: r for r in sweep_pair(Partition((2, 1)), Partition((2, 1)), 3)}
    assert rows[(3, 2, 1)].tableau == rows[(3, 2, 1)].crystal == rows[(3, 2, 1)].schur == 2
    assert rows[(4, 2)].agree


def test_report_covers_every_triple():
    report = run_corpus(5, 3)
    assert len(report.results) == sum(1 for _ in lr_corpus(5, 3))
    summary = report.summary()
    assert summary["mismatches"] == 0 and summary["failures"] == []
    assert sum(row["triples"] for row in summary["table"]) == summary["triples"]
    assert summary["mismatches_by_engine"] == {"polytope": 0, "crystal": 0, "schur": 0, "nonvanishing": 0}


def test_workers_preserve_order():
    assert run_corpus(4, 3, workers=2).results == run_corpus(4, 3).results


def test_mismatch_is_reported():
    report = run_corpus(1, 1)
    report.results.append(TripleResult((1,), (1,), (2,), 1, 1, 0, 1, True))
    summary = report.summary()
    assert summary["mismatches"] == 1 and summary["mismatches_by_engine"]["crystal"] == 1
    assert summary["failures"][0]["gamma"] == [2]


def test_pairs_count():
    assert len(pairs(2, 2)) == 1 + 2 + 5
