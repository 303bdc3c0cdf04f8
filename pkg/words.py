"""Words in the free monoid on generator letters and their formal inverses.

A word never knows group relations: ``x x^-1`` is a word of length two.
Free reduction is available as an explicit operation, and group equality
is handled by the rewriting systems in ``groupring``.
"""

import enum
import re
from dataclasses import dataclass, field
from typing import NamedTuple

from errors import ParseError, UnknownLetterError

TOKEN_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^([+-]?\d+))?$")


class Generator(NamedTuple):
    name: str
    index: int


class Letter(NamedTuple):
    generator: Generator
    sign: int = 1

    @property
    def name(self):
        return self.generator.name

    def inverse(self):
        return Letter(self.generator, -self.sign)

    def __str__(self):
        return self.name if self.sign > 0 else f"{self.name}^-1"


class Word(tuple):
    """An immutable sequence of letters; the empty word is the identity."""

    __slots__ = ()

    def __new__(cls, letters=()):
        return super().__new__(cls, letters)

    @classmethod
    def identity(cls):
        return EMPTY

    def is_identity(self):
        return len(self) == 0

    def __add__(self, other):
        return Word(tuple.__add__(self, tuple(other)))

    def __getitem__(self, item):
        result = tuple.__getitem__(self, item)
        if isinstance(item, slice):
            return Word(result)
        return result

    def __repr__(self):
        return f"Word({format_word(self)!r})"

    def __str__(self):
        return format_word(self)


EMPTY = Word()


class Comparison(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@dataclass(frozen=True)
class Alphabet:
    """Generators plus a total precedence over letters, greatest first."""

    generators: tuple
    precedence: tuple
    _rank: dict = field(init=False, repr=False, compare=False, hash=False)
    _by_name: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ParseError(f"duplicate generator names in {names}")
        if len(set(self.precedence)) != len(self.precedence):
            raise ParseError("precedence lists a letter twice")
        by_name = {g.name: g for g in self.generators}
        for letter in self.precedence:
            if by_name.get(letter.name) != letter.generator:
                raise UnknownLetterError(f"precedence letter {letter} is not a generator letter")
        covered = {letter.generator for letter in self.precedence}
        if covered != set(self.generators):
            raise ParseError("precedence must cover every generator")
        signs = {letter.generator: set() for letter in self.precedence}
        for letter in self.precedence:
            signs[letter.generator].add(letter.sign)
        if len({frozenset(s) for s in signs.values()}) > 1 or any(1 not in s for s in signs.values()):
            raise ParseError("precedence must list inverses for all generators or for none")
        size = len(self.precedence)
        rank = {letter: size - position for position, letter in enumerate(self.precedence)}
        object.__setattr__(self, "_rank", rank)
        object.__setattr__(self, "_by_name", by_name)

    @classmethod
    def build(cls, names, inverses=True, order=None):
        """Alphabet over ``names``; default precedence is g > g^-1 in declaration order.

        ``order`` optionally lists letter tokens (``x``, ``x^-1``) greatest first.
        """
        generators = tuple(Generator(name, i) for i, name in enumerate(names))
        if order is None:
            precedence = []
            for g in generators:
                precedence.append(Letter(g, 1))
                if inverses:
                    precedence.append(Letter(g, -1))
            return cls(generators, tuple(precedence))
        by_name = {g.name: g for g in generators}
        precedence = []
        for token in order:
            match = TOKEN_RE.match(token)
            if not match or match.group(2) not in (None, "-1", "1", "+1"):
                raise ParseError(f"bad letter in order list: {token!r}")
            if match.group(1) not in by_name:
                raise UnknownLetterError(f"unknown generator {match.group(1)!r} in order list")
            sign = -1 if match.group(2) == "-1" else 1
            precedence.append(Letter(by_name[match.group(1)], sign))
        alphabet = cls(generators, tuple(precedence))
        if alphabet.with_inverses != inverses:
            raise ParseError("order list must contain exactly the letters of the alphabet")
        return alphabet

    @property
    def with_inverses(self):
        return any(letter.sign < 0 for letter in self.precedence)

    @property
    def letters(self):
        return self.precedence

    @property
    def names(self):
        return [g.name for g in self.generators]

    def generator(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownLetterError(f"unknown generator {name!r}") from None

    def letter(self, name, sign=1):
        letter = Letter(self.generator(name), sign)
        if letter not in self._rank:
            raise UnknownLetterError(f"letter {letter} is not in the alphabet")
        return letter

    def rank(self, letter):
        try:
            return self._rank[letter]
        except KeyError:
            raise UnknownLetterError(f"letter {letter} is not in the alphabet") from None

    def key(self, word):
        """Sort key realizing deg-lex: larger key means larger word."""
        rank = self._rank
        try:
            return (len(word), tuple(rank[letter] for letter in word))
        except KeyError as exc:
            raise UnknownLetterError(f"letter {exc.args[0]} is not in the alphabet") from None

    def word(self, text):
        return parse_word(text, self)

    def format_order(self):
        return " ".join(str(letter) for letter in self.precedence)


def parse_word(text, alphabet, line=None, column=1):
    """Parse ``y x^-2 y`` style literals; ``1`` is the empty word."""
    letters = []
    for match in re.finditer(r"\S+", text):
        token = match.group(0)
        col = column + match.start()
        if token == "1":
            continue
        parsed = TOKEN_RE.match(token)
        if not parsed:
            raise ParseError(f"bad word token {token!r}", line, col)
        name, power = parsed.group(1), parsed.group(2)
        exponent = 1 if power is None else int(power)
        if exponent == 0:
            raise ParseError(f"zero power in {token!r}", line, col)
        try:
            letter = alphabet.letter(name, 1 if exponent > 0 else -1)
        except UnknownLetterError as exc:
            if line is None:
                raise
            raise ParseError(str(exc), line, col) from None
        letters.extend([letter] * abs(exponent))
    return Word(letters)


def format_word(word):
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        count = (j - i) * word[i].sign
        parts.append(word[i].name if count == 1 else f"{word[i].name}^{count}")
        i = j
    return " ".join(parts)


def word_power(word, k):
    if k < 0:
        return Word(tuple.__mul__(inverse_word(word), -k))
    return Word(tuple.__mul__(word, k))


def inverse_word(word):
    return Word(letter.inverse() for letter in reversed(word))


def free_reduce(word):
    stack = []
    for letter in word:
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return Word(stack)


def is_freely_reduced(word):
    return all(word[i + 1] != word[i].inverse() for i in range(len(word) - 1))


def deglex_compare(u, v, alphabet):
    ku, kv = alphabet.key(u), alphabet.key(v)
    if ku < kv:
        return Comparison.LESS
    if ku > kv:
        return Comparison.GREATER
    return Comparison.EQUAL


class Overlap(NamedTuple):
    a: Word
    b: Word
    w: Word


def find_intersection_overlaps(u, v):
    """All proper overlaps u·b = a·v with a, b nonempty, shortest w first."""
    overlaps = []
    for k in range(min(len(u), len(v)) - 1, 0, -1):
        if u[len(u) - k:] == v[:k]:
            b = v[k:]
            overlaps.append(Overlap(u[:len(u) - k], b, u + b))
    return overlaps


def find_inclusions(u, v):
    """Every factorization u = a·v·b, left to right."""
    n, m = len(u), len(v)
    return [(u[:i], u[i + m:]) for i in range(n - m + 1) if u[i:i + m] == v]


def occurs_in(u, v):
    """True when v is a subword of u."""
    m = len(v)
    return any(u[i:i + m] == v for i in range(len(u) - m + 1))


def longest_common_prefix(u, v):
    k = 0
    for a, b in zip(u, v):
        if a != b:
            break
        k += 1
    return u[:k]


def involves(word, generator):
    return any(letter.generator == generator for letter in word)


def x_segments(word, generator):
    """Split ``w_1 x^{n_1} ... w_m x^{n_m} w_{m+1}`` into (segments, exponents).

    Runs of one sign of ``generator`` become a single exponent; the segments
    between them do not involve the generator and may be empty.
    """
    segments, exponents = [], []
    current = []
    i = 0
    while i < len(word):
        letter = word[i]
        if letter.generator != generator:
            current.append(letter)
            i += 1
            continue
        j = i
        while j < len(word) and word[j] == letter:
            j += 1
        segments.append(Word(current))
        exponents.append((j - i) * letter.sign)
        current = []
        i = j
    segments.append(Word(current))
    return segments, exponents
