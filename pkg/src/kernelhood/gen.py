"""Seeded random instances: digraphs, structures and sentences."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

from .digraph import Digraph, closure
from .kernels import kernel_search
from .syntax import Atom, Const, Formula, Nor, NoneSuch, Term, Var
from .truth import FiniteStructure

SEED_ENV = "KERNELHOOD_SEED"


def rng_from_env(default: int = 0) -> random.Random:
    raw = os.environ.get(SEED_ENV)
    return random.Random(int(raw) if raw else default)


@dataclass(frozen=True)
class DigraphConfig:
    min_vertices: int = 1
    max_vertices: int = 10
    edge_prob: float = 0.3
    acyclic: bool = True


@dataclass(frozen=True)
class SentenceConfig:
    max_depth: int = 5
    domain_size: int = 3
    variables: int = 3
    atom_prob: float = 0.25
    quantifier_prob: float = 0.4


def vertex_names(n: int) -> list[str]:
    # zero-padded so sorted order matches numeric order
    width = len(str(max(n - 1, 0)))
    return [f"v{i:0{width}d}" for i in range(n)]


def random_digraph(rng: random.Random, cfg: DigraphConfig = DigraphConfig()) -> Digraph:
    """Random digraph; when ``acyclic``, edges only go from a vertex to a
    later one in a shuffled order."""
    n = rng.randint(cfg.min_vertices, cfg.max_vertices)
    return random_digraph_on(rng, vertex_names(n), cfg.edge_prob, cfg.acyclic)


def cycle_digraph(n: int) -> Digraph:
    names = vertex_names(n)
    return Digraph(frozenset(names), frozenset((names[i], names[(i + 1) % n]) for i in range(n)))


def random_closed_set(rng: random.Random, g: Digraph, picks: int | None = None) -> frozenset[str]:
    verts = g.ordered()
    if picks is None:
        picks = rng.randint(0, max(1, len(verts) // 3))
    return closure(g, rng.sample(verts, min(picks, len(verts))))


def random_structure(rng: random.Random, size: int, density: float = 0.3) -> FiniteStructure:
    """Random Add/Mul relations as triple sets over ``0..size-1``."""
    r = range(size)
    triples = [(a, b, c) for a in r for b in r for c in r]
    add = frozenset(t for t in triples if rng.random() < density)
    mul = frozenset(t for t in triples if rng.random() < density)
    return FiniteStructure(size, add, mul)


def _term(rng: random.Random, bound: list[int], cfg: SentenceConfig, open_vars: bool) -> Term:
    pool = list(range(cfg.variables)) if open_vars else bound
    if pool and rng.random() < 0.6:
        return Var(rng.choice(pool))
    return Const(rng.randrange(cfg.domain_size))


def random_formula(rng: random.Random, cfg: SentenceConfig = SentenceConfig(),
                   closed: bool = True, _bound: tuple[int, ...] = ()) -> Formula:
    """Random formula of depth at most ``cfg.max_depth``.

    With ``closed`` every variable is bound, so the result is a sentence.
    Quantifiers draw from a small variable pool, so shadowing does occur.
    """
    depth = cfg.max_depth
    if depth <= 0 or rng.random() < cfg.atom_prob:
        bound = list(_bound)
        args = tuple(_term(rng, bound, cfg, not closed) for _ in range(3))
        return Atom(rng.choice(("Add", "Mul")), args)
    sub = SentenceConfig(depth - 1, cfg.domain_size, cfg.variables, cfg.atom_prob, cfg.quantifier_prob)
    if rng.random() < cfg.quantifier_prob:
        v = rng.randrange(cfg.variables)
        return NoneSuch(v, random_formula(rng, sub, closed, _bound + (v,)))
    return Nor(random_formula(rng, sub, closed, _bound), random_formula(rng, sub, closed, _bound))


def random_extension_instance(rng: random.Random, core_vertices: int, outer_vertices: int,
                              edge_prob: float = 0.3, core_acyclic: bool = False):
    """A digraph with a closed ``core`` (cycles allowed) and an acyclic rest.

    Outer vertices point among themselves (acyclically) and into the core;
    nothing points out of the core. Returns ``(g, core, k0)`` with ``k0`` a
    kernel of the core chosen at random, or None when the core has none.
    """
    names = vertex_names(core_vertices + outer_vertices)
    core, outer = names[:core_vertices], names[core_vertices:]
    rng.shuffle(outer)
    core_graph = random_digraph_on(rng, core, edge_prob, core_acyclic)
    kernels = kernel_search(core_graph)
    if not kernels:
        return None
    edges = set(core_graph.edges)
    for i, a in enumerate(outer):
        for b in outer[i + 1:] + core:
            if rng.random() < edge_prob:
                edges.add((a, b))
    g = Digraph(frozenset(names), frozenset(edges))
    return g, frozenset(core), rng.choice(kernels)


def random_digraph_on(rng: random.Random, names: list[str], edge_prob: float, acyclic: bool) -> Digraph:
    order = names[:]
    rng.shuffle(order)
    edges = {(a, b) for i, a in enumerate(order) for j, b in enumerate(order)
             if (j > i or not acyclic) and rng.random() < edge_prob}
    return Digraph(frozenset(names), frozenset(edges))
