"""Digraph kernels and truth classes as kernels of sentence digraphs."""

from .digraph import (
    INFINITE,
    Digraph,
    closure,
    closure_k,
    find_cycle,
    height,
    is_closed,
    is_dag,
    is_well_founded,
    is_well_founded_by_peeling,
    lfh_witness,
    parse_edge_list,
    reaches_n,
    sinks,
    successors,
    to_dot,
    topological_order,
)
from .errors import (
    CycleError,
    DomainError,
    FormulaError,
    InputFormatError,
    KernelhoodError,
    NoKernelError,
    PreconditionError,
    UnknownVertexError,
)
from .kernels import (
    ChainStep,
    brute_force_kernels,
    check_locality,
    coherent_kernel_chain,
    extend_kernel,
    is_kernel,
    kernel_of_well_founded,
    kernel_search,
)
from .syntax import (
    Atom,
    Const,
    NoneSuch,
    Nor,
    Var,
    and_,
    exists,
    forall,
    free_vars,
    neg,
    or_,
    parse,
    parse_sentence,
    substitute,
    to_text,
)
from .truth import (
    FiniteStructure,
    TruthClass,
    clause_violations,
    height_bound_check,
    is_vertex_sentence,
    sentence_digraph,
    sentence_successors,
    tarski_eval,
    truth_class,
)

__version__ = "0.1.0"
