"""Exception hierarchy. Every error carries a short ``code`` used by the CLI."""

from __future__ import annotations


class KernelhoodError(Exception):
    code = "error"


class UnknownVertexError(KernelhoodError, KeyError):
    code = "unknown-vertex"

    def __init__(self, vertex: str):
        self.vertex = vertex
        super().__init__(f"unknown vertex {vertex!r}")

    def __str__(self) -> str:
        return self.args[0]


class CycleError(KernelhoodError):
    """Raised when an operation needs acyclicity; ``cycle`` is a witness."""

    code = "cycle"

    def __init__(self, cycle: list[str], context: str = "digraph is not well-founded"):
        self.cycle = list(cycle)
        super().__init__(f"{context}: cycle {format_cycle(self.cycle)}")


class PreconditionError(KernelhoodError):
    code = "precondition"


class NoKernelError(KernelhoodError):
    code = "no-kernel"


class FormulaError(KernelhoodError):
    code = "formula"


class DomainError(KernelhoodError):
    """A constant names an element outside the structure's domain."""

    code = "domain"


class InputFormatError(KernelhoodError):
    code = "parse"

    def __init__(self, message: str, line: int | None = None, column: int | None = None,
                 expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        tail = f" (expected {' or '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{where}{message}{tail}")


def format_cycle(cycle: list[str]) -> str:
    if not cycle:
        return ""
    return "→".join(cycle + [cycle[0]])
