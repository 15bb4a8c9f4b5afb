"""Kernels of finite digraphs.

A kernel is a set K of vertices such that a vertex is in K exactly when none
of its successors is. Finite well-founded digraphs have exactly one; general
digraphs may have none or several.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .digraph import (
    Digraph,
    _as_subset,
    closure,
    closure_k,
    find_cycle,
    is_closed,
    topological_order,
)
from .errors import CycleError, PreconditionError


def is_kernel(g: Digraph, k: Iterable[str], within: Iterable[str] | None = None) -> bool:
    """Check the kernel biconditional at every vertex of ``within`` (default: all).

    With ``within`` given, ``k`` is tested as a kernel of the induced subdigraph.
    """
    w = _as_subset(g, within)
    k = _as_subset(g, k)
    if not k <= w:
        return False
    return all((a in k) == (not any(b in k for b in g.out(a) if b in w)) for a in w)


def kernel_of_well_founded(g: Digraph, within: Iterable[str] | None = None) -> frozenset[str]:
    """The unique kernel of an acyclic (induced sub)digraph.

    Sweeps sinks-first; a vertex joins once all its successors are decided
    and none of them joined. Raises CycleError otherwise.
    """
    w = _as_subset(g, within)
    order = topological_order(g, w)
    kernel: set[str] = set()
    for v in order:
        if not any(b in kernel for b in g.out(v) if b in w):
            kernel.add(v)
    return frozenset(kernel)


def extend_kernel(g: Digraph, d: Iterable[str], k0: Iterable[str]) -> frozenset[str]:
    """Extend a kernel ``k0`` of the closed set ``d`` to a kernel of all of ``g``.

    Requires ``d`` closed, ``k0`` a kernel of ``d`` and the rest of ``g``
    well-founded; each is checked. The result is the only kernel of ``g``
    agreeing with ``k0`` on ``d``. The undecided region shrinks by its sinks
    (all of whose successors are then decided) until nothing is left.
    """
    d = _as_subset(g, d)
    k0 = _as_subset(g, k0)
    if not is_closed(g, d):
        leak = next((a, b) for a in sorted(d) for b in g.out(a) if b not in d)
        raise PreconditionError(f"set is not closed: edge {leak[0]}→{leak[1]} leaves it")
    if not is_kernel(g, k0, within=d):
        raise PreconditionError("given set is not a kernel of the closed set")
    rest = g.vertices - d
    cycle = find_cycle(g, rest)
    if cycle is not None:
        raise CycleError(cycle, "complement of the closed set is not well-founded")

    kernel = set(k0)
    remaining = {v: sum(1 for c in g.out(v) if c in rest) for v in rest}
    ready = sorted((v for v, n in remaining.items() if n == 0), reverse=True)
    while ready:
        b = ready.pop()
        if not any(c in kernel for c in g.out(b)):
            kernel.add(b)
        for p in g.into(b):
            if p in remaining:
                remaining[p] -= 1
                if remaining[p] == 0:
                    ready.append(p)
    return frozenset(kernel)


def kernel_search(g: Digraph) -> list[frozenset[str]]:
    """All kernels of ``g`` by backtracking with unit propagation.

    Branches on the lowest undecided id, trying "in" before "out". Intended
    for small digraphs (a couple of dozen vertices).
    """
    order = g.ordered()
    found: list[frozenset[str]] = []

    def propagate(assign: dict[str, bool], queue: list[str]) -> bool:
        # queue holds vertices whose neighbourhood may now force a value
        while queue:
            v = queue.pop()
            for u in (v, *g.into(v)):
                succ = g.out(u)
                val = assign.get(u)
                if any(assign.get(s) is True for s in succ):
                    if val is True:
                        return False
                    if val is None:
                        assign[u] = False
                        queue.append(u)
                    continue
                open_ = [s for s in succ if assign.get(s) is None]
                if not open_:
                    # every successor is out, so u must be in
                    if val is False:
                        return False
                    if val is None:
                        assign[u] = True
                        queue.append(u)
                elif val is False and len(open_) == 1:
                    assign[open_[0]] = True
                    queue.append(open_[0])
                elif val is True:
                    for s in open_:
                        assign[s] = False
                        queue.append(s)
                    queue.append(u)
        return True

    def solve(assign: dict[str, bool]) -> None:
        pick = next((v for v in order if v not in assign), None)
        if pick is None:
            k = frozenset(v for v, inside in assign.items() if inside)
            if is_kernel(g, k):
                found.append(k)
            return
        for choice in (True, False):
            trial = dict(assign)
            trial[pick] = choice
            if propagate(trial, [pick]):
                solve(trial)

    start: dict[str, bool] = {}
    if propagate(start, list(order)):
        solve(start)
    return sorted(found, key=lambda k: sorted(k))


def brute_force_kernels(g: Digraph, fixed: Iterable[str] = (), fixed_in: Iterable[str] = ()
                        ) -> list[frozenset[str]]:
    """Every kernel of ``g`` by subset enumeration.

    Vertices in ``fixed`` are pinned: in the kernel iff in ``fixed_in``. Only
    the free vertices are enumerated, so keep them to about 20.
    """
    fixed = _as_subset(g, fixed)
    base = _as_subset(g, fixed_in) & fixed
    free = [v for v in g.ordered() if v not in fixed]
    out = []
    for mask in range(1 << len(free)):
        k = base | {v for i, v in enumerate(free) if mask >> i & 1}
        if is_kernel(g, k):
            out.append(frozenset(k))
    return sorted(out, key=lambda k: sorted(k))


@dataclass(frozen=True)
class ChainStep:
    stage: int
    frontier: frozenset[str]
    region: frozenset[str]
    kernel: frozenset[str]


def coherent_kernel_chain(g: Digraph, frontiers: Sequence[Iterable[str]]) -> list[ChainStep]:
    """Kernels of Cl(B_0) ⊆ Cl(B_1) ⊆ ..., each restricting to the previous one.

    ``frontiers`` must be increasing and ``g`` acyclic. Stage 0 takes the
    unique kernel of Cl(B_0); later stages extend across the new part.
    """
    cycle = find_cycle(g)
    if cycle is not None:
        raise CycleError(cycle)
    steps: list[ChainStep] = []
    prev_b: frozenset[str] | None = None
    for n, raw in enumerate(frontiers):
        b = _as_subset(g, raw)
        if prev_b is not None and not prev_b <= b:
            missing = sorted(prev_b - b)
            raise PreconditionError(f"frontiers not increasing at stage {n}: lost {' '.join(missing)}")
        region = closure(g, b)
        if not steps:
            kernel = kernel_of_well_founded(g, region)
        else:
            sub = g.induced(region)
            kernel = extend_kernel(sub, steps[-1].region, steps[-1].kernel)
        steps.append(ChainStep(n, b, region, kernel))
        prev_b = b
    return steps


def check_locality(g: Digraph, u: Iterable[str], f: Iterable[str], k: int) -> bool:
    """Evaluate the local kernel condition around ``f`` with radius ``k``.

    For each x in Cl_k(F): x ∈ U iff no successor of x lying in Cl_{k+1}(F)
    is in U.
    """
    u = _as_subset(g, u)
    inner = closure_k(g, f, k)
    outer = closure_k(g, f, k + 1)
    return all(
        (x in u) == (not any(y in u for y in g.out(x) if y in outer))
        for x in inner
    )
