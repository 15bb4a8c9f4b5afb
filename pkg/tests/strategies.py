"""Hypothesis strategies shared by the property tests."""

from __future__ import annotations

from hypothesis import strategies as st

from kernelhood import Digraph
from kernelhood.gen import vertex_names
from kernelhood.syntax import Atom, Const, Nor, NoneSuch, Var
from kernelhood.truth import FiniteStructure


@st.composite
def digraphs(draw, max_vertices: int = 12, acyclic: bool = False, min_vertices: int = 0):
    n = draw(st.integers(min_vertices, max_vertices))
    names = vertex_names(n)
    if acyclic:
        order = draw(st.permutations(names))
        pairs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n)]
    else:
        pairs = [(a, b) for a in names for b in names]
    edges = draw(st.sets(st.sampled_from(pairs), max_size=3 * n)) if pairs else set()
    return Digraph(frozenset(names), frozenset(edges))


@st.composite
def graph_and_subset(draw, **kw):
    g = draw(digraphs(**kw))
    sub = draw(st.sets(st.sampled_from(g.ordered()))) if len(g) else set()
    return g, frozenset(sub)


def terms(max_var: int = 3, max_const: int = 4):
    return st.one_of(st.builds(Var, st.integers(0, max_var)), st.builds(Const, st.integers(0, max_const)))


def formulas(max_depth: int = 8, max_var: int = 3, max_const: int = 4):
    atoms = st.builds(lambda r, a, b, c: Atom(r, (a, b, c)), st.sampled_from(["Add", "Mul"]),
                      terms(max_var, max_const), terms(max_var, max_const), terms(max_var, max_const))

    def grow(children):
        return st.one_of(st.builds(Nor, children, children),
                         st.builds(NoneSuch, st.integers(0, max_var), children))

    return st.recursive(atoms, grow, max_leaves=2 ** min(max_depth, 5))


@st.composite
def structures(draw, max_size: int = 4):
    n = draw(st.integers(1, max_size))
    triples = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(0, n - 1))
    return FiniteStructure(n, draw(st.frozensets(triples, max_size=20)), draw(st.frozensets(triples, max_size=20)))


@st.composite
def sentences_for(draw, m: FiniteStructure, max_depth: int = 4, bound: tuple[int, ...] = ()):
    """Sentences whose constants lie in ``m``'s domain."""
    def term():
        choices = [st.builds(Const, st.integers(0, m.size - 1))]
        if bound:
            choices.append(st.builds(Var, st.sampled_from(bound)))
        return st.one_of(*choices)

    kind = draw(st.sampled_from(["atom", "nor", "none"])) if max_depth > 0 else "atom"
    if kind == "atom":
        return Atom(draw(st.sampled_from(["Add", "Mul"])), (draw(term()), draw(term()), draw(term())))
    if kind == "nor":
        return Nor(draw(sentences_for(m, max_depth - 1, bound)), draw(sentences_for(m, max_depth - 1, bound)))
    v = draw(st.integers(0, 2))
    return NoneSuch(v, draw(sentences_for(m, max_depth - 1, bound + (v,))))
