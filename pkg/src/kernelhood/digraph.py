"""Finite digraphs and the structural operators on them.

Vertices are opaque strings. Every function here is pure; a ``Digraph`` never
changes after construction. Vertex sets are plain ``frozenset``\\ s, and
anything returned in sequence form is sorted so output is reproducible.

Heights are ints, or :data:`INFINITE` when the induced subdigraph has a cycle.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations

from .errors import CycleError, InputFormatError, UnknownVertexError

INFINITE = math.inf

VertexSet = frozenset


@dataclass(frozen=True)
class Digraph:
    vertices: frozenset[str]
    edges: frozenset[tuple[str, str]]
    _succ: dict[str, tuple[str, ...]] = field(init=False, repr=False, compare=False)
    _pred: dict[str, tuple[str, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(self.edges))
        succ: dict[str, list[str]] = {v: [] for v in self.vertices}
        pred: dict[str, list[str]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            if a not in succ:
                raise UnknownVertexError(a)
            if b not in succ:
                raise UnknownVertexError(b)
            succ[a].append(b)
            pred[b].append(a)
        object.__setattr__(self, "_succ", {v: tuple(sorted(s)) for v, s in succ.items()})
        object.__setattr__(self, "_pred", {v: tuple(sorted(p)) for v, p in pred.items()})

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], vertices: Iterable[str] = ()) -> Digraph:
        """Build a digraph; edge endpoints are added to the vertex set."""
        edges = frozenset(edges)
        vs = set(vertices)
        for a, b in edges:
            vs.add(a)
            vs.add(b)
        return cls(frozenset(vs), edges)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def ordered(self) -> list[str]:
        return sorted(self.vertices)

    def out(self, a: str) -> tuple[str, ...]:
        """Sorted successors of ``a`` (no membership check beyond a KeyError)."""
        try:
            return self._succ[a]
        except KeyError:
            raise UnknownVertexError(a) from None

    def into(self, b: str) -> tuple[str, ...]:
        try:
            return self._pred[b]
        except KeyError:
            raise UnknownVertexError(b) from None

    def induced(self, within: Iterable[str]) -> Digraph:
        w = _as_subset(self, within)
        return Digraph(w, frozenset((a, b) for a, b in self.edges if a in w and b in w))


def _as_subset(g: Digraph, xs: Iterable[str] | None) -> frozenset[str]:
    if xs is None:
        return g.vertices
    xs = frozenset(xs)
    for x in sorted(xs):
        if x not in g.vertices:
            raise UnknownVertexError(x)
    return xs


def successors(g: Digraph, a: str) -> frozenset[str]:
    return frozenset(g.out(a))


def reaches_n(g: Digraph, a: str, b: str, n: int) -> bool:
    """True iff there is a walk of exactly ``n`` edges from ``a`` to ``b``."""
    if n < 0:
        raise ValueError("n must be a natural number")
    _as_subset(g, (a, b))
    frontier = {a}
    for _ in range(n):
        frontier = {c for x in frontier for c in g.out(x)}
        if not frontier:
            return False
    return b in frontier


def find_cycle(g: Digraph, within: Iterable[str] | None = None) -> list[str] | None:
    """Return some directed cycle of the induced subdigraph, or None.

    Iterative three-colour DFS, visiting vertices and successors in sorted
    order so the witness is deterministic.
    """
    w = _as_subset(g, within)
    white, grey, black = 0, 1, 2
    colour = dict.fromkeys(w, white)
    for root in sorted(w):
        if colour[root] != white:
            continue
        path = [root]
        colour[root] = grey
        stack = [iter([c for c in g.out(root) if c in w])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                colour[path.pop()] = black
                continue
            if colour[nxt] == grey:
                return path[path.index(nxt):]
            if colour[nxt] == white:
                colour[nxt] = grey
                path.append(nxt)
                stack.append(iter([c for c in g.out(nxt) if c in w]))
    return None


def is_dag(g: Digraph) -> bool:
    return find_cycle(g) is None


def sinks(g: Digraph, within: Iterable[str] | None = None) -> frozenset[str]:
    """Sinks of the subdigraph induced on ``within``; edges leaving it are ignored."""
    w = _as_subset(g, within)
    return frozenset(b for b in w if not any(c in w for c in g.out(b)))


def peel_sinks(g: Digraph, within: Iterable[str] | None = None) -> frozenset[str]:
    """Repeatedly delete sinks; return whatever cannot be peeled away.

    The residue is empty exactly when every nonempty subset of ``within`` has
    a sink.
    """
    rest = set(_as_subset(g, within))
    outdeg = {v: sum(1 for c in g.out(v) if c in rest) for v in rest}
    ready = [v for v in rest if outdeg[v] == 0]
    while ready:
        v = ready.pop()
        rest.discard(v)
        for p in g.into(v):
            if p in rest:
                outdeg[p] -= 1
                if outdeg[p] == 0:
                    ready.append(p)
    return frozenset(rest)


def is_well_founded(g: Digraph, within: Iterable[str] | None = None) -> bool:
    # finite case: well-founded iff the induced subdigraph is acyclic
    return find_cycle(g, within) is None


def is_well_founded_by_peeling(g: Digraph, within: Iterable[str] | None = None) -> bool:
    return not peel_sinks(g, within)


def closure_k(g: Digraph, x: Iterable[str], k: int) -> frozenset[str]:
    """Vertices within ``k`` steps of ``x``: Cl_{j+1}(X) = X ∪ E[Cl_j(X)]."""
    if k < 0:
        raise ValueError("k must be a natural number")
    base = _as_subset(g, x)
    current = base
    for _ in range(k):
        nxt = base | {b for d in current for b in g.out(d)}
        if nxt == current:
            break
        current = frozenset(nxt)
    return current


def closure(g: Digraph, x: Iterable[str]) -> frozenset[str]:
    """Smallest closed superset of ``x``."""
    seen = set(_as_subset(g, x))
    stack = list(seen)
    while stack:
        for b in g.out(stack.pop()):
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return frozenset(seen)


def is_closed(g: Digraph, d: Iterable[str]) -> bool:
    d = _as_subset(g, d)
    return all(b in d for a in d for b in g.out(a))


def topological_order(g: Digraph, within: Iterable[str] | None = None) -> list[str]:
    """Order with every edge a→b placing b before a (sinks first).

    Raises CycleError with a witness when the induced subdigraph is cyclic.
    """
    w = _as_subset(g, within)
    outdeg = {v: sum(1 for c in g.out(v) if c in w) for v in w}
    ready = sorted((v for v in w if outdeg[v] == 0), reverse=True)
    order: list[str] = []
    while ready:
        v = ready.pop()
        order.append(v)
        freed = []
        for p in g.into(v):
            if p in w:
                outdeg[p] -= 1
                if outdeg[p] == 0:
                    freed.append(p)
        if freed:
            ready.extend(freed)
            ready.sort(reverse=True)
    if len(order) != len(w):
        raise CycleError(find_cycle(g, w) or [])
    return order


def height(g: Digraph, within: Iterable[str] | None = None) -> int | float:
    """Length of the longest directed path in the induced subdigraph.

    Returns INFINITE on a cycle; empty and edgeless sets have height 0.
    """
    w = _as_subset(g, within)
    try:
        order = topological_order(g, w)
    except CycleError:
        return INFINITE
    depth: dict[str, int] = {}
    for v in order:
        depth[v] = max((depth[c] + 1 for c in g.out(v) if c in w), default=0)
    return max(depth.values(), default=0)


def lfh_witness(g: Digraph, m: int) -> int | float:
    """Max height of Cl_m(F) over all F with |F| <= m.

    Brute force over every such F: cost grows like |V|^m. Only subsets that
    are maximal under inclusion matter, so sizes below m are skipped when
    the digraph has at least m vertices.
    """
    if m < 0:
        raise ValueError("m must be a natural number")
    verts = g.ordered()
    size = min(m, len(verts))
    best: int | float = 0
    for f in combinations(verts, size):
        h = height(g, closure_k(g, f, m))
        if h > best:
            best = h
            if best == INFINITE:
                break
    return best


def format_height(h: int | float) -> str:
    return "infinite" if h == INFINITE else str(int(h))


def format_set(xs: Iterable[str]) -> str:
    return " ".join(sorted(xs))


# ---------------------------------------------------------------- text formats

def parse_edge_list(text: str) -> Digraph:
    """Parse ``V <id>`` / ``E <a> <b>`` lines; ``#`` starts a comment.

    Edge endpoints need not be declared with ``V`` first.
    """
    vertices: set[str] = set()
    edges: set[tuple[str, str]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        kind, args = toks[0], toks[1:]
        if kind == "V" and len(args) == 1:
            vertices.add(args[0])
        elif kind == "E" and len(args) == 2:
            edges.add((args[0], args[1]))
        else:
            col = raw.index(toks[0]) + 1
            raise InputFormatError(f"bad record {raw.strip()!r}", lineno, col,
                                   ("'V <id>'", "'E <id> <id>'"))
    return Digraph.from_edges(edges, vertices)


def to_edge_list(g: Digraph) -> str:
    lines = [f"V {v}" for v in g.ordered()]
    lines += [f"E {a} {b}" for a, b in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def parse_vertex_set(text: str) -> frozenset[str]:
    """Whitespace-separated ids; ``#`` comments allowed."""
    return frozenset(tok for line in text.splitlines() for tok in line.split("#", 1)[0].split())


def _dot_id(v: str) -> str:
    return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Digraph, kernel: Iterable[str] | None = None, name: str = "G") -> str:
    kernel = frozenset(kernel or ())
    lines = [f"digraph {name} {{"]
    for v in g.ordered():
        style = " [peripheries=2]" if v in kernel else ""
        lines.append(f"  {_dot_id(v)}{style};")
    for a, b in sorted(g.edges):
        lines.append(f"  {_dot_id(a)} -> {_dot_id(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
