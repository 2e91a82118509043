"""Grammar, identifier resolution, canonical formatting, round trips."""

from fractions import Fraction
from random import Random

import pytest

from polydiff.errors import ParseError
from polydiff.parser import format_poly, parse
from polydiff.poly import ScalarPoly, VectorPoly, as_vector_poly, variables
from polydiff.positivity import counterexample_cubic
from polydiff.sampling import rand_vector_poly

CUBIC_TEXT = (
    "x1^3 + x2^3 + x3^3 + 3*x1^2*(x2+x3) + 3*x2^2*(x1+x3) "
    "+ 3*x3^2*(x1+x2) - 6*x1*x2*x3"
)


def test_parse_cubic_matches_packaged_counterexample():
    assert parse(CUBIC_TEXT) == counterexample_cubic()


def test_parse_zero():
    p = parse("0")
    assert p.is_zero
    assert p.nvars == 0


def test_parse_rational_coefficient():
    p = parse("1/2*x1*x2")
    assert p.coefficient((1, 1)) == (Fraction(1, 2),)


def test_parse_single_bare_identifier():
    p = parse("x^2 + x")
    assert p.nvars == 1
    (x,) = variables(1)
    assert p == as_vector_poly(x**2 + x)
    assert parse("t^3") == as_vector_poly(x**3)


def test_parse_auto_indexing_uses_max_index():
    p = parse("x3^2")
    assert p.nvars == 3
    assert p.coefficient((0, 0, 2)) == (Fraction(1),)


def test_parse_declared_variables():
    p = parse("a*b - 2", var_names=["a", "b"])
    x1, x2 = variables(2)
    assert p == as_vector_poly(x1 * x2 - 2)


def test_parse_vector_expression():
    p = parse("[x1 + x2, x1^2]")
    assert p.codim == 2
    assert p.nvars == 2


def test_parse_precedence_and_unary_minus():
    (x,) = variables(1)
    assert parse("-x^2") == as_vector_poly(-(x**2))
    assert parse("(-x)^2") == as_vector_poly(x**2)
    assert parse("2^3*x") == as_vector_poly(8 * x)
    # subtraction is left-associative: (1 - 2) - 3
    assert parse("1 - 2 - 3") == as_vector_poly(ScalarPoly.constant(0, -4))


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as info:
        parse("x1 + ")
    assert info.value.line == 1
    with pytest.raises(ParseError):
        parse("x^-2")
    with pytest.raises(ParseError):
        parse("(x1")
    with pytest.raises(ParseError):
        parse("x1 + y")
    with pytest.raises(ParseError):
        parse("1/0")
    with pytest.raises(ParseError):
        parse("x1 $ x2")


def test_implicit_multiplication_rejected():
    with pytest.raises(ParseError):
        parse("2x")
    with pytest.raises(ParseError):
        parse("x1 x2")


def test_unknown_identifier_with_declared_vars():
    with pytest.raises(ParseError):
        parse("a + c", var_names=["a", "b"])


def test_format_examples():
    assert format_poly(VectorPoly.zero(3)) == "0"
    x1, x2 = variables(2)
    assert format_poly(as_vector_poly(x1 * x2)) == "x1*x2"
    assert format_poly(as_vector_poly(x1**2 - x2)) == "x1^2 - x2"
    assert format_poly(as_vector_poly(Fraction(1, 2) * x1)) == "1/2*x1"
    assert format_poly(as_vector_poly(-x1 + 1)) == "-x1 + 1"


def test_format_orders_graded_lex_descending():
    x1, x2 = variables(2)
    p = as_vector_poly(x2**2 + x1 * x2 + x1**2 + x1 + 1)
    assert format_poly(p) == "x1^2 + x1*x2 + x2^2 + x1 + 1"


def test_format_vector():
    x1, x2 = variables(2)
    p = VectorPoly((x1 + x2, x1 * x2))
    assert format_poly(p) == "[x1 + x2, x1*x2]"


def test_parse_format_round_trip_random():
    rng = Random(181)
    for _ in range(100):
        n = rng.randint(1, 3)
        p = rand_vector_poly(rng, n, 4, codim=rng.randint(1, 2))
        names = [f"x{i + 1}" for i in range(n)]
        text = format_poly(p, names)
        assert parse(text, var_names=names) == p


def test_parse_format_round_trip_auto_indexed():
    rng = Random(191)
    for _ in range(60):
        n = rng.randint(1, 3)
        p = rand_vector_poly(rng, n, 4, exact_degree=False)
        # auto-indexing infers nvars from the top variable used, so make it used
        top_used = any(exps[n - 1] for coord in p.coords for exps in coord.terms)
        if not top_used:
            continue
        assert parse(format_poly(p)) == p


def test_format_parse_is_idempotent_canonicalization():
    text = "x1*x2 + x2*x1 + 0*x1"
    canonical = format_poly(parse(text))
    assert canonical == "2*x1*x2"
    assert format_poly(parse(canonical)) == canonical


def test_round_trip_with_custom_block_names():
    from polydiff.diffcalc import block_names, symbolic_mixed_diff

    x1, x2 = variables(2)
    sym = symbolic_mixed_diff(x1 * x2, 1)
    names = block_names(2, 1)
    text = format_poly(sym, names)
    assert parse(text, var_names=names) == sym
