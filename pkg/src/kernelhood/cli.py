"""Command-line front end.

Exit status: 0 on success, 1 for a domain error (no kernel, violated
precondition, failed check), 2 for usage or input-format errors. Every error
goes to stderr as a single ``ERR:<code>: <reason>`` line.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import digraph as dg
from . import gen
from .errors import FormulaError, InputFormatError, KernelhoodError, NoKernelError
from .kernels import (
    check_locality,
    coherent_kernel_chain,
    extend_kernel,
    kernel_of_well_founded,
    kernel_search,
)
from .syntax import parse_sentence_file, to_text
from .truth import (
    FiniteStructure,
    height_bound_check,
    parse_structure,
    tarski_eval,
    truth_class,
)


class UsageError(Exception):
    pass


class BoundViolation(KernelhoodError):
    code = "bound"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _graph(args) -> dg.Digraph:
    return dg.parse_edge_list(_read(args.graph))


def _set(path: str) -> frozenset[str]:
    return dg.parse_vertex_set(_read(path))


def _frontiers(path: str) -> list[frozenset[str]]:
    out = []
    for lineno, raw in enumerate(_read(path).splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        if toks[0] != "B":
            raise InputFormatError(f"bad frontier record {raw.strip()!r}", lineno, 1, ("'B <id>...'",))
        out.append(frozenset(toks[1:]))
    return out


def _structure(args) -> FiniteStructure:
    if args.zmod is not None:
        if args.zmod < 1:
            raise UsageError("--zmod needs a positive modulus")
        return FiniteStructure.zmod(args.zmod)
    return parse_structure(_read(args.struct))


def _kernel_block(k) -> list[str]:
    return [f"KERNEL n={len(k)}", *sorted(k)]


class Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []
        self.data: object = None

    def emit(self) -> None:
        if self.as_json:
            sys.stdout.write(json.dumps(self.data, sort_keys=True, ensure_ascii=False) + "\n")
        elif self.lines:
            sys.stdout.write("\n".join(self.lines) + "\n")


# ------------------------------------------------------------- subcommands

def cmd_kernel(args, out: Out) -> None:
    g = _graph(args)
    k = kernel_of_well_founded(g)
    if args.dot:
        out.lines = [dg.to_dot(g, k).rstrip("\n")]
    else:
        out.lines = _kernel_block(k)
    out.data = {"kernel": sorted(k)}


def cmd_kernels(args, out: Out) -> None:
    g = _graph(args)
    ks = kernel_search(g)
    if not ks:
        cyc = dg.find_cycle(g)
        why = f": cycle {'→'.join(cyc + cyc[:1])}" if cyc else ""
        raise NoKernelError(f"no kernel{why}")
    out.lines = [f"KERNELS count={len(ks)}"]
    for k in ks:
        out.lines += _kernel_block(k)
    out.data = {"kernels": [sorted(k) for k in ks]}


def cmd_extend(args, out: Out) -> None:
    g = _graph(args)
    k = extend_kernel(g, _set(args.closed), _set(args.kernel0))
    out.lines = [dg.to_dot(g, k).rstrip("\n")] if args.dot else _kernel_block(k)
    out.data = {"kernel": sorted(k)}


def cmd_closure(args, out: Out) -> None:
    g = _graph(args)
    x = _set(args.x)
    c = dg.closure(g, x) if args.k is None else dg.closure_k(g, x, args.k)
    out.lines = [dg.format_set(c)]
    out.data = {"closure": sorted(c)}


def cmd_height(args, out: Out) -> None:
    g = _graph(args)
    h = dg.height(g, _set(args.within) if args.within else None)
    out.lines = [dg.format_height(h)]
    out.data = {"height": None if h == dg.INFINITE else int(h)}


def cmd_wf(args, out: Out) -> None:
    g = _graph(args)
    within = _set(args.within) if args.within else None
    ok = dg.is_well_founded(g, within)
    out.lines = [str(ok).lower()]
    out.data = {"well_founded": ok}
    cyc = None if ok else dg.find_cycle(g, within)
    if cyc:
        out.data["cycle"] = cyc


def cmd_lfh(args, out: Out) -> None:
    h = dg.lfh_witness(_graph(args), args.m)
    out.lines = [dg.format_height(h)]
    out.data = {"m": args.m, "height": None if h == dg.INFINITE else int(h)}


def cmd_locality(args, out: Out) -> None:
    ok = check_locality(_graph(args), _set(args.u), _set(args.f), args.k)
    out.lines = [str(ok).lower()]
    out.data = {"holds": ok}


def cmd_chain(args, out: Out) -> None:
    steps = coherent_kernel_chain(_graph(args), _frontiers(args.frontiers))
    for s in steps:
        out.lines += [f"STEP n={s.stage}", f"B {dg.format_set(s.frontier)}".rstrip(),
                      f"CL {dg.format_set(s.region)}".rstrip(), f"K {dg.format_set(s.kernel)}".rstrip()]
    out.data = {"steps": [{"stage": s.stage, "frontier": sorted(s.frontier),
                           "closure": sorted(s.region), "kernel": sorted(s.kernel)} for s in steps]}


def _sentences(args):
    return parse_sentence_file(_read(args.sentences))


def cmd_truth(args, out: Out) -> None:
    tc = truth_class(_structure(args), _sentences(args))
    out.lines = tc.lines()
    out.data = {"sentences": [{"sentence": line[2:], "in_class": line[0] == "T"} for line in out.lines]}


def cmd_truth_dag(args, out: Out) -> None:
    tc = truth_class(_structure(args), _sentences(args))
    g = tc.digraph.graph
    kernel = {to_text(s) for s in tc.members}
    out.lines = [dg.to_dot(g, kernel, name="A").rstrip("\n")]
    out.data = {"vertices": g.ordered(), "edges": sorted(map(list, g.edges)), "kernel": sorted(kernel)}


def cmd_eval(args, out: Out) -> None:
    m = _structure(args)
    results = [(s, tarski_eval(m, s)) for s in _sentences(args)]
    out.lines = [("T " if v else "F ") + to_text(s) for s, v in results]
    out.data = {"results": [{"sentence": to_text(s), "value": v} for s, v in results]}


def cmd_bound(args, out: Out) -> None:
    r = height_bound_check(_structure(args), _sentences(args), args.m)
    out.lines = [f"height={dg.format_height(r.height)} bound={r.bound} holds={str(r.holds).lower()}"]
    out.data = {"m": r.radius, "seeds": r.seeds, "height": r.height, "bound": r.bound, "holds": r.holds}
    if not r.holds:
        out.emit()
        raise BoundViolation(out.lines[0])


def cmd_gen(args, out: Out) -> None:
    rng = gen.rng_from_env() if args.seed is None else random.Random(args.seed)
    if args.kind in ("dag", "digraph"):
        cfg = gen.DigraphConfig(args.n, args.n, args.p, acyclic=args.kind == "dag")
        g = gen.random_digraph(rng, cfg)
        out.lines = [dg.to_edge_list(g).rstrip("\n")]
        out.data = {"vertices": g.ordered(), "edges": sorted(map(list, g.edges))}
    elif args.kind == "struct":
        m = gen.random_structure(rng, args.n, args.p)
        out.lines = [m.to_text().rstrip("\n")]
        out.data = {"size": m.size, "add": sorted(m.add_rel), "mul": sorted(m.mul_rel)}
    else:
        cfg = gen.SentenceConfig(max_depth=args.depth, domain_size=args.n)
        ss = [gen.random_formula(rng, cfg) for _ in range(args.count)]
        out.lines = [to_text(s) for s in ss]
        out.data = {"sentences": out.lines}


# ------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    p = _Parser(prog="kernelhood", description="Digraph kernels and truth classes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("graph", help="edge-list file (V <id> / E <id> <id>)")
        sp.set_defaults(func=func)
        return sp

    sp = graph_cmd("kernel", cmd_kernel, "unique kernel of a finite DAG")
    sp.add_argument("--dot", action="store_true", help="emit DOT with kernel members doubled")
    graph_cmd("kernels", cmd_kernels, "all kernels, by backtracking search")
    sp = graph_cmd("extend", cmd_extend, "extend a kernel of a closed set to the whole digraph")
    sp.add_argument("--closed", required=True, metavar="FILE")
    sp.add_argument("--kernel0", required=True, metavar="FILE")
    sp.add_argument("--dot", action="store_true")
    sp = graph_cmd("closure", cmd_closure, "closure of a vertex set (bounded with --k)")
    sp.add_argument("--x", required=True, metavar="FILE")
    sp.add_argument("--k", type=int, default=None)
    sp = graph_cmd("height", cmd_height, "height of the (induced sub)digraph")
    sp.add_argument("--within", metavar="FILE")
    sp = graph_cmd("wf", cmd_wf, "well-foundedness of the (induced sub)digraph")
    sp.add_argument("--within", metavar="FILE")
    sp = graph_cmd("lfh", cmd_lfh, "max height of Cl_m(F) over |F| <= m (brute force)")
    sp.add_argument("--m", type=int, required=True)
    sp = graph_cmd("locality", cmd_locality, "evaluate the local kernel condition")
    sp.add_argument("--u", required=True, metavar="FILE")
    sp.add_argument("--f", required=True, metavar="FILE")
    sp.add_argument("--k", type=int, required=True)
    sp = graph_cmd("chain", cmd_chain, "coherent kernels along increasing frontiers")
    sp.add_argument("--frontiers", required=True, metavar="FILE", help="one 'B <id>...' line per stage")

    def truth_cmd(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--struct", metavar="FILE")
        src.add_argument("--zmod", type=int, metavar="N")
        sp.add_argument("--sentences", required=True, metavar="FILE")
        sp.set_defaults(func=func)
        return sp

    truth_cmd("truth", cmd_truth, "truth class as the kernel of the sentence digraph")
    truth_cmd("truth-dag", cmd_truth_dag, "DOT of the sentence digraph")
    truth_cmd("eval", cmd_eval, "direct recursive evaluation of each sentence")
    sp = truth_cmd("bound", cmd_bound, "check the height bound on Cl_m of the seeds")
    sp.add_argument("--m", type=int, required=True)

    sp = sub.add_parser("gen", parents=[common], help="random instances (seed: --seed or $KERNELHOOD_SEED)")
    sp.add_argument("kind", choices=("dag", "digraph", "struct", "sentences"))
    sp.add_argument("--n", type=int, default=6, help="vertex count or domain size")
    sp.add_argument("--p", type=float, default=0.3, help="edge or triple probability")
    sp.add_argument("--depth", type=int, default=4)
    sp.add_argument("--count", type=int, default=5)
    sp.add_argument("--seed", type=int, default=None)
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for name in ("m", "k", "n", "count", "depth"):
            if (getattr(args, name, None) or 0) < 0:
                raise UsageError(f"--{name} must be non-negative")
        out = Out(args.json)
        args.func(args, out)
    except UsageError as exc:
        print(f"ERR:usage: {exc}", file=sys.stderr)
        return 2
    except (InputFormatError, FormulaError) as exc:
        print(f"ERR:{exc.code}: {exc}", file=sys.stderr)
        return 2
    except KernelhoodError as exc:
        print(f"ERR:{exc.code}: {exc}", file=sys.stderr)
        return 1
    out.emit()
    return 0


if __name__ == "__main__":
    sys.exit(main())
