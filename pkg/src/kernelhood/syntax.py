"""Sentences over two ternary relations, the NOR connective and the
"there are none such that" quantifier.

Concrete syntax, fully parenthesised on output::

    formula := atom | "(" formula "NOR" formula ")" | "N" var "." formula
    atom    := ("Add" | "Mul") "(" term "," term "," term ")"
    term    := "v" nat | "c" nat

``N v. phi`` reads "for no v, phi". Bound variables are never renamed, so
``N v0. Add(v0,v0,c0)`` and ``N v1. Add(v1,v1,c0)`` are different sentences.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import FormulaError, InputFormatError

RELATIONS = ("Add", "Mul")


@dataclass(frozen=True, order=True)
class Var:
    index: int

    def __str__(self) -> str:
        return f"v{self.index}"


@dataclass(frozen=True, order=True)
class Const:
    element: int

    def __str__(self) -> str:
        return f"c{self.element}"


Term = Union[Var, Const]


@dataclass(frozen=True)
class Atom:
    relation: str
    args: tuple[Term, Term, Term]

    def __post_init__(self) -> None:
        if self.relation not in RELATIONS:
            raise FormulaError(f"unknown relation {self.relation!r}")
        if len(self.args) != 3:
            raise FormulaError(f"{self.relation} takes 3 arguments, got {len(self.args)}")

    def __str__(self) -> str:
        return f"{self.relation}({','.join(map(str, self.args))})"


@dataclass(frozen=True)
class Nor:
    left: Formula
    right: Formula

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class NoneSuch:
    """``N v. body``: no element satisfies ``body`` at ``v``."""

    var: int
    body: Formula

    def __str__(self) -> str:
        return to_text(self)


Formula = Union[Atom, Nor, NoneSuch]


def add(*args: Term) -> Atom:
    return Atom("Add", tuple(args))


def mul(*args: Term) -> Atom:
    return Atom("Mul", tuple(args))


def to_text(f: Formula) -> str:
    # iterative so very deep formulas do not hit the recursion limit
    out: list[str] = []
    stack: list[Formula | str] = [f]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif isinstance(item, Atom):
            out.append(str(item))
        elif isinstance(item, Nor):
            stack.extend((")", item.right, " NOR ", item.left, "("))
        else:
            stack.extend((item.body, f"N v{item.var}. "))
    return "".join(out)


def free_vars(f: Formula) -> frozenset[int]:
    if isinstance(f, Atom):
        return frozenset(t.index for t in f.args if isinstance(t, Var))
    if isinstance(f, Nor):
        return free_vars(f.left) | free_vars(f.right)
    return free_vars(f.body) - {f.var}


def constants(f: Formula) -> frozenset[int]:
    if isinstance(f, Atom):
        return frozenset(t.element for t in f.args if isinstance(t, Const))
    if isinstance(f, Nor):
        return constants(f.left) | constants(f.right)
    return constants(f.body)


def is_sentence(f: Formula) -> bool:
    return not free_vars(f)


def require_sentence(f: Formula) -> Formula:
    fv = free_vars(f)
    if fv:
        names = ", ".join(f"v{i}" for i in sorted(fv))
        raise FormulaError(f"not a sentence, free variables {names}: {to_text(f)}")
    return f


def substitute(f: Formula, v: int, a: int) -> Formula:
    """Replace free occurrences of variable ``v`` by the constant for ``a``."""
    if isinstance(f, Atom):
        if Var(v) not in f.args:
            return f
        return Atom(f.relation, tuple(Const(a) if t == Var(v) else t for t in f.args))
    if isinstance(f, Nor):
        left, right = substitute(f.left, v, a), substitute(f.right, v, a)
        if left is f.left and right is f.right:
            return f
        return Nor(left, right)
    if f.var == v:
        return f
    body = substitute(f.body, v, a)
    return f if body is f.body else NoneSuch(f.var, body)


def depth(f: Formula) -> int:
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Nor):
        return 1 + max(depth(f.left), depth(f.right))
    return 1 + depth(f.body)


def size(f: Formula) -> int:
    if isinstance(f, Atom):
        return 1
    if isinstance(f, Nor):
        return 1 + size(f.left) + size(f.right)
    return 1 + size(f.body)


# derived connectives, each expanded into NOR and N

def neg(s: Formula) -> Formula:
    return Nor(s, s)


def or_(s0: Formula, s1: Formula) -> Formula:
    return neg(Nor(s0, s1))


def and_(s0: Formula, s1: Formula) -> Formula:
    return Nor(neg(s0), neg(s1))


def forall(v: int, f: Formula) -> Formula:
    return NoneSuch(v, neg(f))


def exists(v: int, f: Formula) -> Formula:
    return neg(NoneSuch(v, f))


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(?P<word>Add|Mul|NOR|N)\b|(?P<term>[vc]\d+)\b|(?P<punct>[(),.]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def where(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def fail(self, expected: tuple[str, ...], pos: int | None = None) -> InputFormatError:
        pos = self.pos if pos is None else pos
        while pos < len(self.text) and self.text[pos].isspace():
            pos += 1
        found = repr(self.text[pos:pos + 8]) if pos < len(self.text) else "end of input"
        line, col = self.where(pos)
        return InputFormatError(f"unexpected {found}", line, col, expected)

    def peek(self) -> tuple[str, str] | None:
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            return None
        kind = m.lastgroup
        return kind, m.group(kind)

    def take(self) -> tuple[str, str]:
        m = _TOKEN.match(self.text, self.pos)
        self.pos = m.end()
        return m.lastgroup, m.group(m.lastgroup)

    def expect(self, value: str) -> None:
        tok = self.peek()
        if tok is None or tok[1] != value:
            raise self.fail((repr(value),))
        self.take()

    def term(self) -> Term:
        tok = self.peek()
        if tok is None or tok[0] != "term":
            raise self.fail(("'v<n>'", "'c<n>'"))
        _, text = self.take()
        n = int(text[1:])
        return Var(n) if text[0] == "v" else Const(n)

    def var(self) -> int:
        tok = self.peek()
        if tok is None or tok[0] != "term" or not tok[1].startswith("v"):
            raise self.fail(("'v<n>'",))
        return int(self.take()[1][1:])

    def formula(self) -> Formula:
        # explicit stack: frames are ("nor", left-or-None) or ("none", var)
        frames: list[tuple[str, object]] = []
        while True:
            tok = self.peek()
            if tok == ("punct", "("):
                self.take()
                frames.append(("nor", None))
                continue
            if tok == ("word", "N"):
                self.take()
                v = self.var()
                self.expect(".")
                frames.append(("none", v))
                continue
            if tok is not None and tok[1] in RELATIONS:
                _, rel = self.take()
                self.expect("(")
                a = self.term()
                self.expect(",")
                b = self.term()
                self.expect(",")
                c = self.term()
                self.expect(")")
                result: Formula = Atom(rel, (a, b, c))
            else:
                raise self.fail(("'Add'", "'Mul'", "'('", "'N'"))
            # reduce finished subformulas
            while frames:
                kind, payload = frames[-1]
                if kind == "none":
                    frames.pop()
                    result = NoneSuch(payload, result)
                elif payload is None:
                    self.expect("NOR")
                    frames[-1] = ("nor", result)
                    break
                else:
                    self.expect(")")
                    frames.pop()
                    result = Nor(payload, result)
            else:
                return result


def parse(text: str) -> Formula:
    """Parse one formula; the whole input must be consumed."""
    p = _Parser(text)
    f = p.formula()
    if text[p.pos:].strip():
        raise p.fail(("end of input",))
    return f


def parse_sentence(text: str) -> Formula:
    return require_sentence(parse(text))


def parse_sentence_file(text: str) -> list[Formula]:
    """One sentence per line; blank lines and ``#`` comments are skipped.

    Errors report line numbers relative to the file.
    """
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        try:
            f = parse(body)
        except InputFormatError as exc:
            raise InputFormatError(f"unexpected input in {body.strip()!r}", lineno, exc.column,
                                   exc.expected) from None
        try:
            out.append(require_sentence(f))
        except FormulaError as exc:
            raise FormulaError(f"line {lineno}: {exc}") from None
    return out
