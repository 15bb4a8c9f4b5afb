"""Finite structures, Tarskian evaluation and truth classes as kernels.

A sentence is a vertex when it is compound, or atomic and true in the
structure. A NOR sentence points at its two operands and ``N v. phi``
points at every instance ``phi(c_a)``, but only at operands and instances
that are vertices themselves. The kernel of this digraph is then exactly the
set of true sentences, which :func:`tarski_eval` checks independently.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .digraph import Digraph, closure_k, height
from .errors import DomainError, InputFormatError, PreconditionError
from .kernels import kernel_of_well_founded
from .syntax import Atom, Const, Formula, Nor, constants, require_sentence, substitute, to_text


@dataclass(frozen=True)
class FiniteStructure:
    """Domain ``0..size-1`` with ternary relations interpreting Add and Mul."""

    size: int
    add_rel: frozenset[tuple[int, int, int]]
    mul_rel: frozenset[tuple[int, int, int]]

    def __post_init__(self) -> None:
        if self.size < 1:
            raise DomainError("structure must have at least one element")
        object.__setattr__(self, "add_rel", frozenset(map(tuple, self.add_rel)))
        object.__setattr__(self, "mul_rel", frozenset(map(tuple, self.mul_rel)))
        for name, rel in (("ADD", self.add_rel), ("MUL", self.mul_rel)):
            for t in rel:
                if len(t) != 3 or any(not 0 <= x < self.size for x in t):
                    raise DomainError(f"{name} triple {t} outside domain 0..{self.size - 1}")

    @classmethod
    def zmod(cls, n: int) -> FiniteStructure:
        """Integers mod n with graph-of-addition and graph-of-multiplication."""
        r = range(n)
        return cls(
            n,
            frozenset((a, b, (a + b) % n) for a in r for b in r),
            frozenset((a, b, (a * b) % n) for a in r for b in r),
        )

    def holds(self, atom: Atom) -> bool:
        args = []
        for t in atom.args:
            if not isinstance(t, Const):
                raise DomainError(f"atomic formula has a free variable: {atom}")
            if not 0 <= t.element < self.size:
                raise DomainError(f"constant c{t.element} outside domain 0..{self.size - 1}")
            args.append(t.element)
        rel = self.add_rel if atom.relation == "Add" else self.mul_rel
        return tuple(args) in rel

    def to_text(self) -> str:
        lines = [f"STRUCT n={self.size}"]
        lines += [f"ADD {a} {b} {c}" for a, b, c in sorted(self.add_rel)]
        lines += [f"MUL {a} {b} {c}" for a, b, c in sorted(self.mul_rel)]
        return "\n".join(lines) + "\n"


def parse_structure(text: str) -> FiniteStructure:
    size = None
    add: set[tuple[int, int, int]] = set()
    mul: set[tuple[int, int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        if size is None:
            if len(toks) == 2 and toks[0] == "STRUCT" and toks[1].startswith("n="):
                try:
                    size = int(toks[1][2:])
                except ValueError:
                    size = None
                if size is not None:
                    continue
            raise InputFormatError("missing header", lineno, 1, ("'STRUCT n=<size>'",))
        if toks[0] in ("ADD", "MUL") and len(toks) == 4 and all(t.isdigit() for t in toks[1:]):
            (add if toks[0] == "ADD" else mul).add(tuple(int(t) for t in toks[1:]))
            continue
        raise InputFormatError(f"bad record {raw.strip()!r}", lineno, 1, ("'ADD a b c'", "'MUL a b c'"))
    if size is None:
        raise InputFormatError("empty structure file", expected=("'STRUCT n=<size>'",))
    return FiniteStructure(size, frozenset(add), frozenset(mul))


def check_constants(m: FiniteStructure, s: Formula) -> None:
    bad = sorted(c for c in constants(s) if c >= m.size)
    if bad:
        raise DomainError(f"constant c{bad[0]} outside domain 0..{m.size - 1} in {to_text(s)}")


def tarski_eval(m: FiniteStructure, s: Formula) -> bool:
    """Truth of sentence ``s`` in ``m`` by direct recursion on the syntax."""
    require_sentence(s)
    check_constants(m, s)
    return _eval(m, s)


def _eval(m: FiniteStructure, s: Formula) -> bool:
    if isinstance(s, Atom):
        return m.holds(s)
    if isinstance(s, Nor):
        return not _eval(m, s.left) and not _eval(m, s.right)
    return not any(_eval(m, substitute(s.body, s.var, a)) for a in range(m.size))


def is_vertex_sentence(m: FiniteStructure, s: Formula) -> bool:
    """Compound sentences always qualify; atomic ones only when true."""
    require_sentence(s)
    check_constants(m, s)
    return not isinstance(s, Atom) or m.holds(s)


def _children(m: FiniteStructure, s: Formula) -> list[Formula]:
    if isinstance(s, Atom):
        return []
    if isinstance(s, Nor):
        return [s.left, s.right]
    return [substitute(s.body, s.var, a) for a in range(m.size)]


def sentence_successors(m: FiniteStructure, s: Formula) -> list[Formula]:
    """Out-neighbours of ``s``, in operand / instance order, without repeats."""
    if not is_vertex_sentence(m, s):
        raise PreconditionError(f"false atomic sentence is not a vertex: {to_text(s)}")
    out: list[Formula] = []
    seen: set[Formula] = set()
    for c in _children(m, s):
        if c not in seen and (not isinstance(c, Atom) or m.holds(c)):
            seen.add(c)
            out.append(c)
    return out


@dataclass(frozen=True)
class SentenceDigraph:
    structure: FiniteStructure
    graph: Digraph
    sentences: dict[str, Formula]

    def sentence(self, vertex: str) -> Formula:
        return self.sentences[vertex]


def sentence_digraph(m: FiniteStructure, seeds: Sequence[Formula]) -> SentenceDigraph:
    """Everything reachable from ``seeds``; vertex ids are printed sentences."""
    seeds = list(seeds)
    for s in seeds:
        require_sentence(s)
        check_constants(m, s)
    rejected = [to_text(s) for s in seeds if isinstance(s, Atom) and not m.holds(s)]
    if rejected:
        raise PreconditionError("false atomic seed(s) are not vertices: " + "; ".join(rejected))

    sentences: dict[str, Formula] = {}
    edges: set[tuple[str, str]] = set()
    stack = []
    for s in seeds:
        key = to_text(s)
        if key not in sentences:
            sentences[key] = s
            stack.append((key, s))
    while stack:
        key, s = stack.pop()
        for c in sentence_successors(m, s):
            ckey = to_text(c)
            edges.add((key, ckey))
            if ckey not in sentences:
                sentences[ckey] = c
                stack.append((ckey, c))
    return SentenceDigraph(m, Digraph(frozenset(sentences), frozenset(edges)), sentences)


@dataclass(frozen=True)
class TruthClass:
    structure: FiniteStructure
    members: frozenset[Formula]
    universe: frozenset[Formula]
    digraph: SentenceDigraph

    def __contains__(self, s: object) -> bool:
        return s in self.members

    def lines(self) -> list[str]:
        """``T <sentence>`` / ``F <sentence>`` for every vertex, sorted by sentence."""
        keys = sorted(self.digraph.sentences)
        return [("T " if self.digraph.sentences[k] in self.members else "F ") + k for k in keys]


def truth_class(m: FiniteStructure, seeds: Sequence[Formula]) -> TruthClass:
    sd = sentence_digraph(m, seeds)
    kernel = kernel_of_well_founded(sd.graph)
    members = frozenset(sd.sentences[k] for k in kernel)
    return TruthClass(m, members, frozenset(sd.sentences.values()), sd)


def clause_violations(tc: TruthClass) -> list[str]:
    """Sentences of the universe where a compositional truth clause fails.

    A sentence outside the universe (a false atomic) counts as not in the class.
    """
    m, s_in = tc.structure, tc.members
    bad = []
    for s in sorted(tc.universe, key=to_text):
        if isinstance(s, Atom):
            ok = (s in s_in) == m.holds(s)
        elif isinstance(s, Nor):
            ok = (s in s_in) == (s.left not in s_in and s.right not in s_in)
        else:
            ok = (s in s_in) == (not any(c in s_in for c in _children(m, s)))
        if not ok:
            bad.append(to_text(s))
    return bad


@dataclass(frozen=True)
class BoundReport:
    radius: int
    seeds: int
    height: int | float
    bound: int

    @property
    def holds(self) -> bool:
        return self.height <= self.bound


def height_bound_check(m: FiniteStructure, seeds: Sequence[Formula], radius: int) -> BoundReport:
    """Compare Ht(Cl_radius(F)) against (2**(radius+1) - 1) * |F| for F = seeds."""
    sd = sentence_digraph(m, seeds)
    f = {to_text(s) for s in seeds}
    h = height(sd.graph, closure_k(sd.graph, f, radius))
    return BoundReport(radius, len(f), h, (2 ** (radius + 1) - 1) * len(f))
