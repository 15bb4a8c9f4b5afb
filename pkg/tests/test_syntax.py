import pytest
from hypothesis import given, settings

from kernelhood import (
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
from kernelhood.errors import FormulaError, InputFormatError
from kernelhood.syntax import add, depth, mul, parse_sentence_file
from strategies import formulas

c0, c1, c2, c3 = Const(0), Const(1), Const(2), Const(3)
v0, v1, v2 = Var(0), Var(1), Var(2)
A = add(c0, c0, c0)
B = mul(c1, c1, c1)


def test_free_vars_examples():
    assert free_vars(add(v0, c1, v2)) == {0, 2}
    assert free_vars(NoneSuch(0, add(v0, v0, c0))) == frozenset()
    assert free_vars(Nor(A, mul(v1, c0, c0))) == {1}


def test_substitute_examples():
    assert substitute(add(v0, v0, c1), 0, 2) == add(c2, c2, c1)
    f = NoneSuch(0, add(v0, v1, c0))
    assert substitute(f, 0, 3) == f
    assert substitute(f, 1, 3) == NoneSuch(0, add(v0, c3, c0))


def test_derived_constructors_expand_exactly():
    assert neg(A) == Nor(A, A)
    q = NoneSuch(0, add(v0, v0, c1))
    assert exists(0, add(v0, v0, c1)) == Nor(q, q)
    assert or_(A, B) == Nor(Nor(A, B), Nor(A, B))
    assert and_(A, B) == Nor(Nor(A, A), Nor(B, B))
    assert forall(0, add(v0, c0, v0)) == NoneSuch(0, Nor(add(v0, c0, v0), add(v0, c0, v0)))


def test_parse_examples():
    assert parse("Add(c0,c0,c0)") == Atom("Add", (c0, c0, c0))
    assert parse("(Add(c0,c0,c0) NOR Mul(c1,c1,c1))") == Nor(A, B)
    assert parse("N v0. Add(v0,v0,c1)") == NoneSuch(0, add(v0, v0, c1))


def test_parse_is_whitespace_insensitive():
    assert parse("  ( Add ( c0 , c0,c0 )\n NOR\tMul(c1,c1,c1) ) ") == Nor(A, B)
    assert parse("N v0 .N v1.Add(v0,v1,c0)") == NoneSuch(0, NoneSuch(1, add(v0, v1, c0)))


def test_print_is_canonical():
    assert to_text(Nor(A, NoneSuch(2, mul(v2, c0, c1)))) == "(Add(c0,c0,c0) NOR N v2. Mul(v2,c0,c1))"


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("Add(c0,c0)", 1, 10),
        ("(Add(c0,c0,c0) Mul(c0,c0,c0))", 1, 16),
        ("N c0. Add(c0,c0,c0)", 1, 3),
        ("Add(c0,c0,c0)\n  extra", 2, 3),
        ("", 1, 1),
        ("Sub(c0,c0,c0)", 1, 1),
    ],
)
def test_parse_errors_locate_problem(text, line, column):
    with pytest.raises(InputFormatError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert info.value.expected


def test_parse_error_lists_expected_tokens():
    with pytest.raises(InputFormatError, match="expected 'NOR'"):
        parse("(Add(c0,c0,c0) Mul(c0,c0,c0))")


def test_sentence_requires_closed_formula():
    with pytest.raises(FormulaError, match="v1"):
        parse_sentence("N v0. Add(v0,v1,c0)")


def test_sentence_file():
    text = "# header\nAdd(c0,c0,c0)\n\n(Add(c0,c0,c0) NOR Add(c0,c0,c1))  # trailing\n"
    assert parse_sentence_file(text) == [A, Nor(A, add(c0, c0, c1))]
    with pytest.raises(InputFormatError, match="line 2"):
        parse_sentence_file("Add(c0,c0,c0)\nAdd(c0,c0\n")


def test_deep_formula_prints_and_parses():
    f = A
    for i in range(3000):
        f = NoneSuch(i % 3, f) if i % 2 else Nor(f, A)
    text = to_text(f)
    # compare printed forms; dataclass equality recurses per level
    assert to_text(parse(text)) == text


@settings(max_examples=1000, deadline=None)
@given(formulas(max_depth=8))
def test_round_trip(f):
    assert parse(to_text(f)) == f


@settings(max_examples=300, deadline=None)
@given(formulas(max_depth=6))
def test_substitution_free_vars(f):
    for v in range(4):
        assert free_vars(substitute(f, v, 7)) == free_vars(f) - {v}


@settings(max_examples=300, deadline=None)
@given(formulas(max_depth=6))
def test_substitution_of_non_free_variable_is_identity(f):
    for v in range(4):
        if v not in free_vars(f):
            assert substitute(f, v, 1) == f


@settings(max_examples=200, deadline=None)
@given(formulas(max_depth=6))
def test_derived_constructors_add_expected_depth(f):
    assert depth(neg(f)) == depth(f) + 1
    assert depth(exists(0, f)) == depth(f) + 2
