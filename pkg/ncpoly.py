"""Integer polynomials in noncommuting letters (the free algebra Z<X>).

A polynomial is a finite map from words to nonzero integers. Ordering only
matters for leading terms and printing, so it is supplied per call through
an ``Alphabet``.
"""

import re
from typing import NamedTuple

from errors import ParseError, ZeroPolynomialError
from words import EMPTY, Word, format_word, parse_word

POLY_TOKEN_RE = re.compile(
    r"\s*(?:(?P<op>[+-])|(?P<int>\d+)|(?P<star>\*)"
    r"|(?P<atom>[A-Za-z_][A-Za-z0-9_]*(?:\^[+-]?\d+)?)|(?P<bad>\S))"
)


class LeadingTerm(NamedTuple):
    coefficient: int
    monomial: Word


class Polynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for word, coefficient in dict(terms).items():
                if coefficient:
                    cleaned[Word(word)] = int(coefficient)
        self._terms = cleaned
        self._hash = None

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({EMPTY: 1})

    @classmethod
    def monomial(cls, word, coefficient=1):
        return cls({word: coefficient})

    @classmethod
    def _from_clean(cls, terms):
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    def items(self):
        return self._terms.items()

    def support(self):
        return list(self._terms)

    def coefficient(self, word):
        return self._terms.get(word, 0)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __contains__(self, word):
        return word in self._terms

    def degree(self):
        return max((len(w) for w in self._terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial({EMPTY: other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return Polynomial._from_clean({w: -c for w, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial({EMPTY: other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial({EMPTY: other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return sub(self, other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, Word):
            return self.lrmul(EMPTY, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, Word):
            return self.lrmul(other, EMPTY)
        return NotImplemented

    def scale(self, k):
        if k == 0:
            return Polynomial()
        return Polynomial._from_clean({w: c * k for w, c in self._terms.items()})

    def lrmul(self, a, b, k=1):
        """k·a·self·b for words a, b."""
        if k == 0:
            return Polynomial()
        return Polynomial._from_clean({a + w + b: c * k for w, c in self._terms.items()})

    def descending(self, alphabet):
        return sorted(self._terms.items(), key=lambda item: alphabet.key(item[0]), reverse=True)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def add(p, q):
    terms = dict(p._terms)
    for word, coefficient in q._terms.items():
        total = terms.get(word, 0) + coefficient
        if total:
            terms[word] = total
        else:
            terms.pop(word, None)
    return Polynomial._from_clean(terms)


def sub(p, q):
    return add(p, -q)


def mul(p, q):
    terms = {}
    for u, a in p._terms.items():
        for v, b in q._terms.items():
            w = u + v
            terms[w] = terms.get(w, 0) + a * b
    return Polynomial(terms)


def leading_term(p, alphabet):
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no leading term")
    word = max(p.support(), key=alphabet.key)
    return LeadingTerm(p.coefficient(word), word)


def is_monic(p, alphabet):
    return leading_term(p, alphabet).coefficient == 1


def parse_polynomial(text, alphabet, line=None, column=1):
    """Parse ``x^2 - y^2``, ``1 + y x y``, ``-3*x y``; ``0`` is the zero polynomial."""
    result = Polynomial()
    term = _TermBuilder()
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = POLY_TOKEN_RE.match(text, pos)
        col = column + match.start(match.lastgroup)
        pos = match.end()
        kind, value = match.lastgroup, match.group(match.lastgroup)
        if kind == "bad":
            raise ParseError(f"unexpected character {value!r}", line, col)
        if kind == "op":
            if term.started:
                result = result + term.build(alphabet, line)
                term = _TermBuilder()
            elif term.sign_seen:
                raise ParseError("two signs in a row", line, col)
            term.sign = -1 if value == "-" else 1
            term.sign_seen = True
        elif kind == "int":
            if term.atoms or term.star:
                if value != "1":
                    raise ParseError(f"integer {value!r} inside a word", line, col)
                term.explicit_one = True
                term.started = True
            elif term.coefficient is not None:
                raise ParseError("two coefficients in one term", line, col)
            else:
                term.coefficient = int(value)
                term.started = True
                term.column = col
        elif kind == "star":
            if term.coefficient is None or term.atoms or term.star:
                raise ParseError("'*' must follow a coefficient", line, col)
            term.star = True
        else:
            if term.column is None:
                term.column = col
            term.atoms.append(value)
            term.started = True
    if not term.started:
        raise ParseError("empty polynomial term", line, column + len(text))
    return result + term.build(alphabet, line)


class _TermBuilder:
    def __init__(self):
        self.sign = 1
        self.sign_seen = False
        self.coefficient = None
        self.star = False
        self.atoms = []
        self.started = False
        self.explicit_one = False
        self.column = None

    def build(self, alphabet, line):
        if self.star and not self.atoms and not self.explicit_one:
            raise ParseError("missing word after '*'", line, self.column)
        word = parse_word(" ".join(self.atoms), alphabet, line, self.column or 1)
        coefficient = 1 if self.coefficient is None else self.coefficient
        return Polynomial({word: self.sign * coefficient})


def format_polynomial(p, alphabet=None):
    """Terms in ascending deg-lex order, e.g. ``1 + x + x^2``."""
    if p.is_zero():
        return "0"
    if alphabet is None:
        ordered = sorted(p.items(), key=lambda item: (len(item[0]), format_word(item[0])))
    else:
        ordered = sorted(p.items(), key=lambda item: alphabet.key(item[0]))
    out = []
    for i, (word, coefficient) in enumerate(ordered):
        magnitude = abs(coefficient)
        if word.is_identity():
            body = str(magnitude)
        elif magnitude == 1:
            body = format_word(word)
        else:
            body = f"{magnitude}*{format_word(word)}"
        if i == 0:
            out.append(body if coefficient > 0 else f"-{body}")
        else:
            out.append(("+ " if coefficient > 0 else "- ") + body)
    return " ".join(out)
