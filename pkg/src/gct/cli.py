"""Command-line front end: one subcommand per computation, JSON in and out.

The payload is read from ``--in`` or standard input.  Every subcommand
validates its payload into typed objects first; a failure there is a usage
error (exit 2) and nothing is computed.  Errors raised by the computation
itself are domain errors (exit 1).  Rationals are written as "p/q" strings.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from typing import Callable

from .characters import (
    character_table, decompose_into_schur, dimension, kronecker_coefficient,
    plethysm_constant, schur_polynomial, specht_rank, standard_tableaux_count,
)
from .combinatorics import Partition
from .corpus import run_corpus
from .crystals import lr_via_crystals
from .grassmannian import BracketPolynomial, is_standard_monomial, straighten, vdw_syzygy
from .lattice import quasipolynomial_index, smith_normal_form, z2_feasible_affine, z2_feasible_polytope
from .lr import LRInstance, fit_stretching, lr_count, lr_polytope, stretch_lr
from .polyhedra import (
    PERIOD_CAP, RationalPolytope, affine_span, count_lattice_points, ehrhart_quasipolynomial,
    ehrhart_series, feasible,
)
from .polynomial import Polynomial
from .stability import FiniteMatrixGroup, kempf_optimal, molien_series, reynolds, torus_nullcone

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Malformed payload or arguments."""


def q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- payload parsing

def _get(payload: dict, key: str):
    if key not in payload:
        raise UsageError(f"payload is missing required key {key!r}")
    return payload[key]


def _int(value, what: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise UsageError(f"{what} must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise UsageError(f"{what} must be at least {minimum}, got {value}")
    return value


def _int_list(value, what: str) -> list[int]:
    if not isinstance(value, list):
        raise UsageError(f"{what} must be a list of integers")
    return [_int(x, what) for x in value]


def _partition(payload: dict, key: str) -> Partition:
    parts = _int_list(_get(payload, key), key)
    try:
        return Partition(parts)
    except ValueError as exc:
        raise UsageError(f"{key} is not a partition: {exc}") from None


def _rational(value, what: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise UsageError(f"{what} must be an integer or a 'p/q' string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{what} is not a rational number: {value!r}") from None


def _matrix(value, what: str, rational: bool = False) -> list[list]:
    if not isinstance(value, list) or not value or not all(isinstance(r, list) for r in value):
        raise UsageError(f"{what} must be a nonempty list of rows")
    if len({len(r) for r in value}) != 1:
        raise UsageError(f"{what} has rows of different lengths")
    conv = (lambda x: _rational(x, what)) if rational else (lambda x: _int(x, what))
    return [[conv(x) for x in r] for r in value]


def _instance(payload: dict) -> LRInstance:
    return LRInstance(_partition(payload, "alpha"), _partition(payload, "beta"), _partition(payload, "gamma"))


def _polytope(payload: dict) -> RationalPolytope:
    A = _matrix(_get(payload, "A"), "A", rational=True)
    b = _get(payload, "b")
    if not isinstance(b, list):
        raise UsageError("b must be a list")
    b = [_rational(x, "b") for x in b]
    nonneg = payload.get("nonneg", False)
    if not isinstance(nonneg, bool):
        raise UsageError("nonneg must be a boolean")
    try:
        return RationalPolytope(tuple(map(tuple, A)), tuple(b), nonneg, len(A[0]))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _polynomial(value) -> Polynomial:
    if not isinstance(value, dict):
        raise UsageError("polynomial must be an object {nvars, terms}")
    nvars = _int(_get(value, "nvars"), "nvars", 1)
    terms = _get(value, "terms")
    if not isinstance(terms, list):
        raise UsageError("terms must be a list of [exponent, coefficient] pairs")
    parsed = []
    for t in terms:
        if not isinstance(t, list) or len(t) != 2:
            raise UsageError("each term must be [exponent, coefficient]")
        e = _int_list(t[0], "exponent")
        if len(e) != nvars or any(x < 0 for x in e):
            raise UsageError(f"exponent {e} does not fit {nvars} variables")
        parsed.append((tuple(e), _rational(t[1], "coefficient")))
    return Polynomial(nvars, parsed)


def _group(payload: dict) -> FiniteMatrixGroup:
    gens = _get(payload, "generators")
    if not isinstance(gens, list) or not gens:
        raise UsageError("generators must be a nonempty list of matrices")
    try:
        return FiniteMatrixGroup([_matrix(g, "generator", rational=True) for g in gens])
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _support(payload: dict) -> list[tuple[int, ...]]:
    pts = _get(payload, "support")
    if not isinstance(pts, list) or not pts:
        raise UsageError("support must be a nonempty list of weights")
    out = [tuple(_int_list(p, "weight")) for p in pts]
    if len({len(p) for p in out}) != 1 or not out[0]:
        raise UsageError("weights must be nonempty and of one length")
    return out


def _brackets(value, n: int, d: int) -> BracketPolynomial:
    if not isinstance(value, dict):
        raise UsageError('terms must map "[[i,...],...]" keys to coefficients')
    out = BracketPolynomial()
    for key, c in value.items():
        try:
            mono = json.loads(key)
        except json.JSONDecodeError:
            raise UsageError(f"bad bracket monomial key {key!r}") from None
        if not isinstance(mono, list) or not mono:
            raise UsageError(f"bad bracket monomial key {key!r}")
        for b in mono:
            b = _int_list(b, "bracket")
            if len(b) != d or any(not 1 <= i <= n for i in b):
                raise UsageError(f"bracket {b} must have {d} indices in 1..{n}")
        out = out + BracketPolynomial.from_brackets(mono, _rational(c, "coefficient"))
    return out


def _random_matrix(rng: random.Random, d: int, n: int) -> list[list[int]]:
    return [[rng.randint(-5, 5) for _ in range(n)] for _ in range(d)]


# ---------------------------------------------------------------- subcommands
# Each builder parses the payload and returns the computation as a closure.

Builder = Callable[[dict, argparse.Namespace], Callable[[], dict]]


def _stretch_json(inst: LRInstance, kmax: int | None) -> dict:
    qp = fit_stretching(inst, kmax)
    out = qp.to_json()
    out["positive"] = qp.is_positive()
    return out


def build_lr(p, args):
    inst = _instance(p)
    kmax = _int(p["kmax"], "kmax", 2) if "kmax" in p else None

    def run():
        c = lr_count(inst)
        return {"c": c, "nonzero": c > 0, "stretch": _stretch_json(inst, kmax)}
    return run


def _rank(p, args) -> int | None:
    if args.rank is not None:
        return args.rank
    return _int(p["rank"], "rank", 1) if "rank" in p else None


def build_lr_polytope(p, args):
    inst = _instance(p)
    n = _rank(p, args)

    def run():
        P = lr_polytope(inst, n)
        point = feasible(P)
        return {
            "polytope": P.to_json(),
            "lattice_points": count_lattice_points(P),
            "dimension": affine_span(P).dimension if point is not None else None,
        }
    return run


def build_nonvanish(p, args):
    inst = _instance(p)

    def run():
        point = feasible(lr_polytope(inst)) if inst.well_posed() else None
        return {"nonzero": point is not None, "witness": None if point is None else [q(x) for x in point]}
    return run


def build_stretch(p, args):
    inst = _instance(p)
    kmax = _int(p["kmax"], "kmax", 2) if "kmax" in p else None

    def run():
        out = _stretch_json(inst, kmax)
        k_top = len(out["coeffs"][0]) + 1 if kmax is None else kmax
        out["values"] = [stretch_lr(inst, k) for k in range(0, k_top + 1)]
        return out
    return run


def build_ehrhart(p, args):
    P = _polytope(p)
    period_cap = args.period_cap
    degree_cap = args.degree_cap

    def run():
        qp = ehrhart_quasipolynomial(P, period_cap)
        A, B = ehrhart_series(P, degree_cap, qp)
        out = qp.to_json()
        out.update({
            "index": qp.index(), "positive": qp.is_positive(), "saturated": qp.is_saturated(),
            "series": {"numerator": A, "denominator": B},
        })
        return out
    return run


def build_index(p, args):
    P = _polytope(p)
    return lambda: {"index": quasipolynomial_index(P)}


def build_z2(p, args):
    if "C" in p:
        C = _matrix(_get(p, "C"), "C")
        d = _int_list(_get(p, "d"), "d")
        if len(d) != len(C):
            raise UsageError("C and d have different numbers of rows")
        return lambda: {"z2_feasible": z2_feasible_affine(C, d)}
    P = _polytope(p)
    return lambda: {"z2_feasible": z2_feasible_polytope(P)}


def build_snf(p, args):
    M = _matrix(_get(p, "matrix"), "matrix")

    def run():
        snf = smith_normal_form(M)
        out = snf.to_json()
        out["diagonal"] = snf.diagonal
        return out
    return run


def build_char_table(p, args):
    n = _int(_get(p, "n"), "n", 1)
    return lambda: character_table(n).to_json()


def build_schur(p, args):
    if "polynomial" in p:
        poly = _polynomial(p["polynomial"])

        def run():
            dec = decompose_into_schur(poly)
            return {"decomposition": [[list(lam.parts), q(c)] for lam, c in sorted(dec.items(), key=lambda kv: kv[0].parts, reverse=True)]}
        return run
    lam = _partition(p, "lambda")
    n = _rank(p, args) or _int(_get(p, "n"), "n", 1)
    return lambda: {"polynomial": schur_polynomial(lam, n).to_json()}


def build_kron(p, args):
    lam, mu, pi = (_partition(p, k) for k in ("lambda", "mu", "pi"))
    return lambda: {"kronecker": kronecker_coefficient(lam, mu, pi)}


def build_plethysm(p, args):
    lam, mu, pi = (_partition(p, k) for k in ("lambda", "mu", "pi"))
    n = _rank(p, args) or _int(_get(p, "n"), "n", 1)
    return lambda: {"plethysm": plethysm_constant(lam, mu, pi, n)}


def build_specht_rank(p, args):
    lam = _partition(p, "lambda")
    return lambda: {"rank": specht_rank(lam), "dimension": dimension(lam), "standard_tableaux": standard_tableaux_count(lam)}


def build_crystal_lr(p, args):
    inst = _instance(p)
    n = _rank(p, args)
    return lambda: {"c": lr_via_crystals(inst.alpha, inst.beta, inst.gamma, n)}


def build_syzygy(p, args):
    s = _int(_get(p, "s"), "s", 1)
    n = _int(_get(p, "n"), "n", 1)
    d = _int(_get(p, "d"), "d", 1)
    alpha, beta, gamma = (_int_list(_get(p, k), k) for k in ("alpha", "beta", "gamma"))
    rng = random.Random(args.seed)

    def run():
        syz = vdw_syzygy(s, alpha, beta, gamma, n, d)
        checks = [syz.evaluate(_random_matrix(rng, d, n)) for _ in range(3)]
        return {"syzygy": syz.to_json(), "vanishes": all(v == 0 for v in checks)}
    return run


def build_straighten(p, args):
    n = _int(_get(p, "n"), "n", 1)
    d = _int(_get(p, "d"), "d", 1)
    poly = _brackets(_get(p, "terms"), n, d)
    rng = random.Random(args.seed)

    def run():
        out = straighten(poly, n, d)
        mats = [_random_matrix(rng, d, n) for _ in range(3)]
        return {
            "terms": out.to_json(),
            "standard": all(is_standard_monomial(m) for m in out.terms),
            "evaluation_equal": all(out.evaluate(m) == poly.evaluate(m) for m in mats),
        }
    return run


def build_molien(p, args):
    G = _group(p)
    cap = args.degree_cap

    def run():
        return {"order": G.order(), "coefficients": [q(x) for x in molien_series(G, cap)]}
    return run


def build_reynolds(p, args):
    G = _group(p)
    poly = _polynomial(_get(p, "polynomial"))
    return lambda: {"polynomial": reynolds(G, poly).to_json()}


def build_kempf(p, args):
    support = _support(p)

    def run():
        res = kempf_optimal(support)
        if res is None:
            return {"destabilizing": False, "lambda": None}
        return {
            "destabilizing": True,
            "lambda": list(res.lam.components),
            "efficiency_sq": q(res.efficiency_sq),
            "m": res.m,
            "norm_sq": res.norm_sq,
            "closest_point": [q(x) for x in res.closest_point],
        }
    return run


def build_nullcone(p, args):
    support = _support(p)

    def run():
        lam = torus_nullcone(support)
        return {"in_nullcone": lam is not None, "witness": None if lam is None else list(lam.components)}
    return run


def build_corpus(p, args):
    size = args.max_size
    height = args.rank if args.rank is not None else 4
    workers = args.workers

    def run():
        start = time.time()
        out = run_corpus(size, height, workers).summary()
        if not args.no_timestamp:
            out["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%S", time.localtime())
            out["seconds"] = round(time.time() - start, 3)
        return out
    return run


COMMANDS: dict[str, Builder] = {
    "lr": build_lr,
    "lr-polytope": build_lr_polytope,
    "nonvanish": build_nonvanish,
    "stretch": build_stretch,
    "ehrhart": build_ehrhart,
    "index": build_index,
    "z2": build_z2,
    "snf": build_snf,
    "char-table": build_char_table,
    "schur": build_schur,
    "kron": build_kron,
    "plethysm": build_plethysm,
    "specht-rank": build_specht_rank,
    "crystal-lr": build_crystal_lr,
    "syzygy": build_syzygy,
    "straighten": build_straighten,
    "molien": build_molien,
    "reynolds": build_reynolds,
    "kempf": build_kempf,
    "nullcone": build_nullcone,
    "corpus": build_corpus,
}

NO_PAYLOAD = {"corpus"}


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gct", description="Exact computations for representation-theoretic positivity.")
    parser.add_argument("command", choices=sorted(COMMANDS), help="computation to run")
    parser.add_argument("--in", dest="infile", help="read the JSON payload from this file instead of stdin")
    parser.add_argument("--out", help="write the JSON result here instead of stdout")
    parser.add_argument("--max-size", type=int, default=8, help="corpus: bound on |alpha| + |beta|")
    parser.add_argument("--rank", type=int, default=None, help="number of variables / rows to use")
    parser.add_argument("--degree-cap", type=int, default=10, help="series truncation degree")
    parser.add_argument("--period-cap", type=int, default=PERIOD_CAP, help="largest quasipolynomial period tried")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized evaluation checks")
    parser.add_argument("--workers", type=int, default=1, help="corpus: worker processes")
    parser.add_argument("--no-timestamp", action="store_true", help="omit run-dependent fields")
    return parser


def _read_payload(args) -> dict:
    try:
        if args.infile:
            with open(args.infile) as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
    except OSError as exc:
        raise UsageError(f"cannot read payload: {exc}") from None
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"payload is not valid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise UsageError("payload must be a JSON object")
    return payload


def run(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    for flag in ("max_size", "degree_cap", "period_cap", "workers"):
        if getattr(args, flag) < 1 and not (flag == "max_size" and args.max_size == 0):
            print(f"gct: error: --{flag.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_USAGE
    if args.rank is not None and args.rank < 1:
        print("gct: error: --rank must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        payload = {} if args.command in NO_PAYLOAD else _read_payload(args)
        job = COMMANDS[args.command](payload, args)
    except UsageError as exc:
        print(f"gct: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = job()
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"gct: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = json.dumps(result, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
