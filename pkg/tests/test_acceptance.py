"""End-to-end acceptance checks.

Each criterion prints one ``PASS``/``FAIL`` line with its wall time. Run
``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
"""

import random
import sys
import time

import pytest

from monideal.closure import closure_colon_identity, np_contains
from monideal.core import MonomialIdeal, Ring, power
from monideal.graphs import (
    complete_graph,
    cover_ideal,
    cycle_graph,
    fhv_square_decomposition,
    petersen_graph,
    random_graph,
    verify_p1,
)
from monideal.persistence import check_degree2_theorem, run_paper_example
from monideal.primes import associated_primes_decomp, associated_primes_witness, maximal_ideal_associated
from monideal.resolution import betti_numbers
from monideal.sampling import random_ideal

sys.path.insert(0, __file__.rsplit("/", 1)[0])
from oracles import equational_integral  # noqa: E402

SEED = 20240101


def graph_corpus():
    named = [("triangle", cycle_graph(3)), ("C4", cycle_graph(4)), ("C5", cycle_graph(5)),
             ("K4", complete_graph(4)), ("petersen", petersen_graph())]
    rng = random.Random(SEED)
    rand = [(f"random{i}", random_graph(rng.randint(2, 7), rng.uniform(0.3, 0.7), rng)) for i in range(25)]
    return named + rand


# -- criteria: each returns (passed, detail) --------------------------------------

def seven_variable_counterexample():
    rep = run_paper_example(kmax=3, exact_depth=True, audit=True, strict=False)
    failed = [c for c, (ok, _, _) in sorted(rep.clauses.items()) if not ok]
    return not failed, f"6 clauses, failed: {failed or 'none'}"


def square_decomposition_identity():
    bad = [name for name, G in graph_corpus() if fhv_square_decomposition(G) != power(cover_ideal(G), 2)]
    return not bad, f"30 graphs, mismatches: {bad or 'none'}"


def cover_closedness_sweep():
    bad = [name for name, G in graph_corpus() if not verify_p1(G).ok()]
    return not bad, f"30 graphs, failures: {bad or 'none'}"


def degree2_persistence():
    s = check_degree2_theorem(SEED, 100, 6, 3)
    return s.passed, f"100 trials, counterexample: {s.counterexample}"


def closure_colon_sweep():
    rng = random.Random(SEED + 5)
    bad = []
    for t in range(50):
        I = random_ideal(rng, rng.randint(1, 4), 4, 3)
        for n2 in range(1, 4):
            for m in range(1, n2 + 1):
                if not closure_colon_identity(I, n2, m):
                    bad.append((t, n2, m))
    return not bad, f"50 ideals x 6 (n', m) pairs, failures: {bad or 'none'}"


def ass_oracles_agree():
    rng = random.Random(SEED + 6)
    bad = []
    for t in range(200):
        I = random_ideal(rng, rng.randint(1, 5), 6, 3)
        if associated_primes_witness(I).primes != associated_primes_decomp(I).primes:
            bad.append(t)
    return not bad, f"200 ideals, disagreements: {bad or 'none'}"


def closure_oracle_agrees():
    rng = random.Random(SEED + 7)
    bad, hits = [], 0
    for t in range(50):
        n = rng.randint(1, 3)
        I = random_ideal(rng, n, 3, 3)
        a = tuple(rng.randint(0, 3) for _ in range(n))
        got = np_contains(I, a)
        hits += got
        if got != equational_integral(I.gens, a, 6):
            bad.append(t)
    return not bad, f"50 instances ({hits} members), disagreements: {bad or 'none'}"


def depth_consistency():
    rng = random.Random(SEED + 8)
    bad = []
    for t in range(50):
        I = random_ideal(rng, rng.randint(1, 4), 5, 3, full_support=True)
        table = betti_numbers(I)
        depth = I.n - table.projective_dimension()
        if (depth == 0) != maximal_ideal_associated(I)[0] or table.euler_characteristic() != 0:
            bad.append(t)
    return not bad, f"50 ideals, failures: {bad or 'none'}"


CRITERIA = [
    ("1 seven-variable counterexample", seven_variable_counterexample),
    ("2 squared cover ideal decomposition", square_decomposition_identity),
    ("3 cover ideal closedness and colon", cover_closedness_sweep),
    ("4 degree <= 2 strong persistence", degree2_persistence),
    ("5 closure colon identity", closure_colon_sweep),
    ("6 witness vs decomposition Ass", ass_oracles_agree),
    ("7 Newton polyhedron vs equational", closure_oracle_agrees),
    ("8 depth zero iff m associated", depth_consistency),
]


def run_criterion(label, check):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {label} ({elapsed:.1f}s): {detail}"
    return ok, line


@pytest.mark.parametrize("label, check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(label, check, capsys):
    ok, line = run_criterion(label, check)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


def test_degree2_is_exact_on_rerun():
    assert check_degree2_theorem(SEED, 10, 6, 3) == check_degree2_theorem(SEED, 10, 6, 3)


def test_closure_colon_example():
    xy = Ring(("x", "y"))
    assert closure_colon_identity(MonomialIdeal(xy, [(3, 0), (0, 2)]), 3, 2)


if __name__ == "__main__":
    results = [run_criterion(label, check) for label, check in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
