"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary.

All instances come from fixed seeds, so a run is reproducible.
"""

import random
import time
from itertools import combinations

import pytest

from kernelhood import (
    FiniteStructure,
    brute_force_kernels,
    check_locality,
    closure,
    clause_violations,
    coherent_kernel_chain,
    extend_kernel,
    height_bound_check,
    is_dag,
    is_kernel,
    is_vertex_sentence,
    kernel_of_well_founded,
    kernel_search,
    parse,
    tarski_eval,
    to_text,
    truth_class,
)
from kernelhood.gen import (
    DigraphConfig,
    SentenceConfig,
    cycle_digraph,
    random_digraph,
    random_extension_instance,
    random_formula,
    random_structure,
)
from kernelhood.syntax import depth

pytestmark = pytest.mark.acceptance


def test_c1_unique_kernel_of_finite_dags():
    """C1 unique kernel: 1000 random DAGs (<=14 vertices), search finds exactly the swept kernel, <60 s"""
    rng = random.Random(101)
    start = time.perf_counter()
    for _ in range(1000):
        g = random_digraph(rng, DigraphConfig(1, 14, rng.choice([0.15, 0.3, 0.5])))
        assert kernel_search(g) == [kernel_of_well_founded(g)]
    assert time.perf_counter() - start < 60


def _prop1_instances(rng, count):
    made = 0
    while made < count:
        if made % 2 == 0:
            g = random_digraph(rng, DigraphConfig(1, 12, rng.choice([0.2, 0.35])))
            d = closure(g, rng.sample(g.ordered(), rng.randint(0, len(g))))
            k0 = kernel_of_well_founded(g, d)
        else:
            inst = random_extension_instance(rng, rng.randint(1, 6), rng.randint(0, 6), 0.35)
            if inst is None:
                continue
            g, d, k0 = inst
        made += 1
        yield g, d, k0


def test_c2_kernel_extension():
    """C2 extension: 500 instances (half with cyclic closed parts), K kernel with K∩D=K0, unique by brute force, <120 s"""
    rng = random.Random(202)
    start = time.perf_counter()
    cyclic_cores = 0
    for g, d, k0 in _prop1_instances(rng, 500):
        k = extend_kernel(g, d, k0)
        assert is_kernel(g, k)
        assert k & d == k0
        assert len(g) <= 12
        assert brute_force_kernels(g, fixed=d, fixed_in=k0) == [k]
        cyclic_cores += not is_dag(g.induced(d))
    assert cyclic_cores >= 100
    assert time.perf_counter() - start < 120


@pytest.mark.parametrize("n, expected", [(3, 0), (5, 0), (7, 0), (4, 2), (6, 2), (8, 2)])
def test_c3_cycle_kernel_counts(n, expected):
    """C3 cycles: odd cycles have no kernel, even cycles exactly two"""
    assert len(kernel_search(cycle_digraph(n))) == expected


@pytest.fixture(scope="module")
def truth_instances():
    rng = random.Random(404)
    out = []
    while len(out) < 300:
        size = rng.randint(1, 4)
        m = FiniteStructure.zmod(size) if rng.random() < 0.4 else random_structure(rng, size, rng.choice([0.2, 0.5]))
        cfg = SentenceConfig(max_depth=rng.randint(0, 5), domain_size=size)
        seeds = [random_formula(rng, cfg) for _ in range(rng.randint(1, 4))]
        seeds = [s for s in seeds if is_vertex_sentence(m, s)]
        if not seeds:
            continue
        assert all(depth(s) <= 5 for s in seeds)
        out.append((m, seeds))
    return out


def test_c4_truth_class_is_tarski_truth(truth_instances):
    """C4 truth class = Tarski oracle on every vertex, 300 instances (domain <=4, depth <=5), <120 s"""
    start = time.perf_counter()
    vertices = 0
    for m, seeds in truth_instances:
        tc = truth_class(m, seeds)
        for s in tc.universe:
            assert (s in tc) == tarski_eval(m, s), to_text(s)
        vertices += len(tc.universe)
    assert vertices > 3000
    assert time.perf_counter() - start < 120


def test_c5_full_truth_class_clauses(truth_instances):
    """C5 the NOR, N and atomic truth clauses hold on every computed class from C4"""
    for m, seeds in truth_instances:
        assert clause_violations(truth_class(m, seeds)) == []


def test_c6_height_bound(truth_instances):
    """C6 Ht(Cl_m(F)) <= (2^(m+1)-1)|F| for m <= 4, |F| <= 4 on every generated sentence digraph"""
    rng = random.Random(606)
    checks = 0
    for m, seeds in truth_instances:
        sets = [seeds[:4]]
        universe = sorted(truth_class(m, seeds).universe, key=to_text)
        sets += [rng.sample(universe, min(len(universe), rng.randint(1, 4))) for _ in range(3)]
        for f in sets:
            for radius in range(5):
                r = height_bound_check(m, f, radius)
                assert r.holds, (r, [to_text(s) for s in f])
                checks += 1
    assert checks == 300 * 4 * 5


def test_c7_locality_sentences():
    """C7 every kernel satisfies sigma_{F,k} for all |F| <= 3, k <= 3, over 200 random DAGs"""
    rng = random.Random(707)
    for _ in range(200):
        g = random_digraph(rng, DigraphConfig(1, 10, rng.choice([0.2, 0.4])))
        k = kernel_of_well_founded(g)
        for r in range(4):
            for f in combinations(g.ordered(), r):
                for radius in range(4):
                    assert check_locality(g, k, f, radius)


def test_c8_chain_coherence():
    """C8 coherent chains: K_n = K_{n+1} ∩ Cl(B_n) at every step, 100 instances"""
    rng = random.Random(808)
    for _ in range(100):
        g = random_digraph(rng, DigraphConfig(1, 14, 0.3))
        frontier: set[str] = set()
        frontiers = []
        for _ in range(rng.randint(1, 5)):
            frontier |= set(rng.sample(g.ordered(), rng.randint(0, 3) if len(g) >= 3 else 0))
            frontiers.append(frozenset(frontier))
        steps = coherent_kernel_chain(g, frontiers)
        assert len(steps) == len(frontiers)
        for s in steps:
            assert s.region == closure(g, s.frontier)
            assert is_kernel(g, s.kernel, within=s.region)
        for lo, hi in zip(steps, steps[1:]):
            assert lo.kernel == hi.kernel & lo.region


def test_c9_syntax_round_trip():
    """C9 parse(print(f)) == f on 1000 random formulas of depth <= 8"""
    rng = random.Random(909)
    for _ in range(1000):
        f = random_formula(rng, SentenceConfig(max_depth=rng.randint(0, 8), domain_size=10, variables=4,
                                               atom_prob=0.15), closed=False)
        assert depth(f) <= 8
        assert parse(to_text(f)) == f
