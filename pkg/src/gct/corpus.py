"""Cross-engine LR sweep: tableau rule, polytope lattice count, crystal
highest weights and Schur-product decomposition, compared triple by triple."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .characters import decompose_into_schur, schur_polynomial
from .combinatorics import Partition, partitions
from .crystals import highest_weight_pairs
from .lr import LRInstance, decide_nonvanishing, lr_count, lr_polytope
from .polyhedra import count_lattice_points


@dataclass
class TripleResult:
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: tuple[int, ...]
    tableau: int
    polytope: int
    crystal: int
    schur: int
    nonvanishing: bool

    @property
    def agree(self) -> bool:
        return self.tableau == self.polytope == self.crystal == self.schur and self.nonvanishing == (self.tableau > 0)


@dataclass
class CorpusReport:
    max_size: int
    max_height: int
    results: list[TripleResult] = field(default_factory=list)

    def mismatches(self) -> list[TripleResult]:
        return [r for r in self.results if not r.agree]

    def summary(self) -> dict:
        nonzero = sum(1 for r in self.results if r.tableau > 0)
        engines = {
            "polytope": sum(1 for r in self.results if r.polytope != r.tableau),
            "crystal": sum(1 for r in self.results if r.crystal != r.tableau),
            "schur": sum(1 for r in self.results if r.schur != r.tableau),
            "nonvanishing": sum(1 for r in self.results if r.nonvanishing != (r.tableau > 0)),
        }
        by_size = {}
        for r in self.results:
            size = sum(r.gamma)
            row = by_size.setdefault(size, {"size": size, "triples": 0, "nonzero": 0, "mismatches": 0})
            row["triples"] += 1
            row["nonzero"] += r.tableau > 0
            row["mismatches"] += not r.agree
        return {
            "max_size": self.max_size,
            "max_height": self.max_height,
            "triples": len(self.results),
            "nonzero": nonzero,
            "mismatches": len(self.mismatches()),
            "mismatches_by_engine": engines,
            "table": [by_size[k] for k in sorted(by_size)],
            "failures": [
                {"alpha": list(r.alpha), "beta": list(r.beta), "gamma": list(r.gamma),
                 "tableau": r.tableau, "polytope": r.polytope, "crystal": r.crystal, "schur": r.schur}
                for r in self.mismatches()
            ],
        }


def pairs(max_size: int, max_height: int) -> list[tuple[Partition, Partition]]:
    out = []
    for total in range(max_size + 1):
        for a in range(total + 1):
            for alpha in partitions(a, max_height):
                for beta in partitions(total - a, max_height):
                    out.append((alpha, beta))
    return out


def sweep_pair(alpha: Partition, beta: Partition, max_height: int) -> list[TripleResult]:
    total = alpha.size() + beta.size()
    n = max_height
    crystal_counts = highest_weight_pairs(alpha, beta, n)
    product = schur_polynomial(alpha, n) * schur_polynomial(beta, n)
    schur_coeffs = decompose_into_schur(product) if not product.is_zero() else {}
    out = []
    for gamma in partitions(total, max_height):
        inst = LRInstance(alpha, beta, gamma)
        c_schur = schur_coeffs.get(gamma, 0)
        out.append(TripleResult(
            alpha.parts, beta.parts, gamma.parts,
            tableau=lr_count(inst),
            polytope=count_lattice_points(lr_polytope(inst)),
            crystal=crystal_counts.get(gamma, 0),
            schur=int(c_schur),
            nonvanishing=decide_nonvanishing(inst),
        ))
    return out


def _sweep_args(args):
    alpha, beta, h = args
    return sweep_pair(Partition(alpha), Partition(beta), h)


def run_corpus(max_size: int = 8, max_height: int = 4, workers: int = 1) -> CorpusReport:
    """Sweep every triple; per-pair results are merged in input order."""
    report = CorpusReport(max_size, max_height)
    jobs = [(a.parts, b.parts, max_height) for a, b in pairs(max_size, max_height)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks: Iterable = pool.map(_sweep_args, jobs, chunksize=4)
            for chunk in chunks:
                report.results.extend(chunk)
    else:
        for job in jobs:
            report.results.extend(_sweep_args(job))
    return report
