"""Left Fox derivatives of words, valued in the free algebra on X and X^-1.

    d(x)/dx = 1,  d(x^-1)/dx = -x^-1,  d(y)/dx = 0 for y != x,
    d(uv)/dx = d(u)/dx + u * d(v)/dx.

Nothing here knows group relations; projecting to Z[G] happens in groupring.
"""

from typing import NamedTuple

from ncpoly import Polynomial
from words import EMPTY, Letter, Word


class FoxResult(NamedTuple):
    derivative: Polynomial
    with_respect_to: object


def fox_derivative(word, x):
    """d(word)/dx, computed letter by letter on the word as given (no free reduction)."""
    terms = {}
    for k, letter in enumerate(word):
        if letter.generator != x:
            continue
        if letter.sign > 0:
            monomial, coefficient = word[:k], 1
        else:
            monomial, coefficient = word[:k + 1], -1
        terms[monomial] = terms.get(monomial, 0) + coefficient
    return Polynomial(terms)


def fox(word, x):
    return FoxResult(fox_derivative(word, x), x)


def fox_power(n, x):
    """Closed form of d(x^n)/dx: 1 + x + ... + x^(n-1), or -x^-1 - ... - x^-|n|."""
    if n >= 0:
        step = Letter(x, 1)
        return Polynomial({Word((step,) * k): 1 for k in range(n)})
    step = Letter(x, -1)
    return Polynomial({Word((step,) * k): -1 for k in range(1, -n + 1)})


def fox_of_relator(r1, r2, x):
    """d(r)/dx for the relator r1 = r2, read as d(r1)/dx - d(r2)/dx."""
    return fox_derivative(r1, x) - fox_derivative(r2, x)


def fox_jacobian(presentation):
    """Rows indexed by relators, columns by generators."""
    generators = presentation.alphabet.generators
    return [[fox_of_relator(r1, r2, g) for g in generators] for r1, r2 in presentation.relators]


def fundamental_sum(word, generators):
    """Sum over generators of d(word)/dx * (x - 1); equals word - 1 in the free group ring."""
    total = Polynomial()
    for g in generators:
        derivative = fox_derivative(word, g)
        if derivative.is_zero():
            continue
        x_minus_one = Polynomial({Word((Letter(g, 1),)): 1, EMPTY: -1})
        total = total + derivative * x_minus_one
    return total
