import pytest

from errors import ParseError, ZeroPolynomialError
from ncpoly import LeadingTerm, Polynomial, format_polynomial, is_monic, leading_term, parse_polynomial, sub
from tests.conftest import random_word
from words import EMPTY, Alphabet


def random_poly(rng, alphabet, terms=4, max_len=3, bound=3):
    return Polynomial({random_word(rng, alphabet, max_len): rng.randint(-bound, bound) for _ in range(terms)})


def test_parse_examples(xy, P):
    x, y = xy.word("x"), xy.word("y")
    assert P("x^2 - y^2") == Polynomial({x + x: 1, y + y: -1})
    assert P("-3*x y") == Polynomial({x + y: -3})
    assert P("1 + y x y") == Polynomial({EMPTY: 1, y + x + y: 1})
    assert P("3*1") == 3
    assert P("0").is_zero()
    assert P("x - x").is_zero()


@pytest.mark.parametrize("text, message", [
    ("3*", "missing word"),
    ("x + + y", "two signs"),
    ("2 3", "two coefficients"),
    ("x 2", "inside a word"),
    ("x ; y", "unexpected character"),
    ("x^0", "zero power"),
    ("x +", "empty polynomial term"),
])
def test_parse_errors(xy, text, message):
    with pytest.raises(ParseError, match=message):
        parse_polynomial(text, xy)


def test_add_and_zero(P):
    assert P("x + y") + P("x - y") == P("2*x")
    assert P("x + y") + Polynomial.zero() == P("x + y")
    assert (P("x") - P("x")).is_zero()
    assert P("x") + 1 == P("1 + x")


def test_sub_and_degree(P, xy, rng):
    assert sub(P("x^2 - y"), P("x^2 + y")) == P("-2*y")
    assert P("x y") - 1 == P("-1 + x y")
    for _ in range(100):
        p, q = random_poly(rng, xy), random_poly(rng, xy)
        assert p - q == sub(p, q) == p + (-q)
    assert P("1 + x y^2").degree() == 3
    assert P("7").degree() == 0
    assert Polynomial.zero().degree() == -1


def test_multiplication_is_noncommutative(P):
    assert P("x") * P("y") == P("x y")
    assert P("x") * P("y") != P("y") * P("x")
    assert P("1 + y x") * P("y") == P("y + y x y")


def test_difference_of_squares_in_group_letters():
    alphabet = Alphabet.build(["g"])
    p = lambda text: parse_polynomial(text, alphabet)
    assert p("1 - g") * p("1 + g") == p("1 - g^2")


def test_leading_term(xy, P):
    assert leading_term(P("x^2 - y^2"), xy) == LeadingTerm(1, xy.word("x x"))
    assert leading_term(P("x y^2 - y^2 x"), xy) == LeadingTerm(1, xy.word("x y y"))
    assert leading_term(P("y - 3*x"), xy) == LeadingTerm(-3, xy.word("x"))
    assert is_monic(P("x - y"), xy) and not is_monic(P("y - x"), xy)
    with pytest.raises(ZeroPolynomialError):
        leading_term(Polynomial.zero(), xy)


def test_format_is_ascending(xy, P):
    g = Alphabet.build(["x"])
    assert format_polynomial(parse_polynomial("x^2 + x + 1", g), g) == "1 + x + x^2"
    assert format_polynomial(parse_polynomial("-x^-2 - x^-1", g), g) == "-x^-1 - x^-2"
    assert format_polynomial(P("x^2 - 2*y^2 + 3"), xy) == "3 - 2*y^2 + x^2"
    assert format_polynomial(Polynomial.zero(), xy) == "0"


def test_format_then_parse_preserves_value(xy, rng):
    for _ in range(100):
        p = random_poly(rng, xy)
        assert parse_polynomial(format_polynomial(p, xy), xy) == p


def test_ring_axioms(xy, rng):
    for _ in range(200):
        a, b, c = (random_poly(rng, xy) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a * Polynomial.one() == a == Polynomial.one() * a
        assert (a - a).is_zero()


def test_leading_term_is_multiplicative(xy, rng):
    for _ in range(200):
        a, b = random_poly(rng, xy), random_poly(rng, xy)
        if a.is_zero() or b.is_zero():
            continue
        la, lb = leading_term(a, xy), leading_term(b, xy)
        assert leading_term(a * b, xy) == LeadingTerm(la.coefficient * lb.coefficient, la.monomial + lb.monomial)


def test_lrmul_and_word_multiplication(xy, P):
    x, y = xy.word("x"), xy.word("y")
    assert P("x - y").lrmul(y, x, 2) == P("2*y x x - 2*y y x")
    assert P("x - y") * y == P("x y - y y")
    assert y * P("x - y") == P("y x - y y")
