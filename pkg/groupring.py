"""Presentations, normal-form arithmetic in their rings, and the chain maps d0/d1.

A group presentation is turned into a semigroup presentation over X and X^-1
(adding x x^-1 = 1 and x^-1 x = 1), its relations become monic rules, and
the completed system gives each element of Z[G] a unique normal form.
"""

import enum
import hashlib
import logging
import re
from dataclasses import dataclass
from functools import cached_property

from errors import (
    CompletionLimitError,
    FoxDivError,
    LengthMismatchError,
    NotCompletedError,
    ParseError,
    RingMismatchError,
)
from fox import fox_derivative, fox_of_relator
from gsbasis import CompletionLimits, RewriteSystem, irr_enumerate, reduce, shirshov_complete
from ncpoly import Polynomial, format_polynomial, parse_polynomial
from words import EMPTY, Alphabet, Comparison, Letter, Word, deglex_compare, format_word, parse_word

logger = logging.getLogger(__name__)

KEY_RE = re.compile(r"^(?P<key>[A-Za-z][A-Za-z0-9 -]*?)\s*:\s*(?P<value>.*)$")


class PresentationKind(enum.Enum):
    GROUP = "group"
    SEMIGROUP = "semigroup"


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    relators: tuple
    kind: PresentationKind = PresentationKind.GROUP

    @property
    def generators(self):
        return self.alphabet.generators

    def __str__(self):
        return format_presentation(self)


def free_group(names):
    return Presentation(Alphabet.build(names), ())


def cyclic_group(n, name="g"):
    alphabet = Alphabet.build([name])
    g = alphabet.letter(name)
    return Presentation(alphabet, ((Word((g,) * n), EMPTY),))


def to_semigroup(presentation):
    """Add x x^-1 = 1 and x^-1 x = 1 for every generator."""
    if presentation.kind is not PresentationKind.GROUP:
        raise FoxDivError("to_semigroup needs a group presentation", code="not_a_group")
    relators = list(presentation.relators)
    for g in presentation.alphabet.generators:
        x, x_inv = Letter(g, 1), Letter(g, -1)
        relators.append((Word((x, x_inv)), EMPTY))
        relators.append((Word((x_inv, x)), EMPTY))
    return Presentation(presentation.alphabet, tuple(relators), PresentationKind.SEMIGROUP)


def presentation_to_rules(presentation, alphabet=None):
    """One monic rule (greater side) - (lesser side) per relation; trivial relations dropped."""
    if presentation.kind is not PresentationKind.SEMIGROUP:
        raise FoxDivError("presentation_to_rules needs a semigroup presentation", code="not_a_semigroup")
    alphabet = alphabet or presentation.alphabet
    rules = []
    for left, right in presentation.relators:
        order = deglex_compare(left, right, alphabet)
        if order is Comparison.EQUAL:
            continue
        greater, lesser = (left, right) if order is Comparison.GREATER else (right, left)
        rules.append(Polynomial({greater: 1, lesser: -1}))
    return RewriteSystem(tuple(rules), alphabet)


def normal_form(word, system):
    """The irreducible word equal to ``word`` modulo a completed semigroup-relation system."""
    if not system.is_completed:
        raise NotCompletedError("normal forms need a completed rewrite system")
    reduced = reduce(Polynomial.monomial(word), system)
    items = list(reduced.items())
    if len(items) != 1 or items[0][1] != 1:
        raise FoxDivError(f"{format_word(word)} does not reduce to a single word", code="not_monomial")
    return items[0][0]


class GroupRing:
    """Z[G] (or the semigroup ring) of a presentation, via its completed rewrite system."""

    def __init__(self, presentation, limits=None):
        self.presentation = presentation
        self.alphabet = presentation.alphabet
        semigroup = presentation
        if presentation.kind is PresentationKind.GROUP:
            semigroup = to_semigroup(presentation)
        self.semigroup = semigroup
        self.system = shirshov_complete(presentation_to_rules(semigroup), limits or CompletionLimits())
        if not self.system.is_completed:
            raise CompletionLimitError(
                f"completion stopped: {self.system.stats.get('reason', 'limit exceeded')}", system=self.system
            )
        logger.debug("ring ready: %d rules", len(self.system.rules))

    @property
    def generators(self):
        return self.alphabet.generators

    def project(self, polynomial):
        return GroupRingElement(reduce(polynomial, self.system), self)

    def element(self, value):
        if isinstance(value, GroupRingElement):
            self._check(value)
            return value
        if isinstance(value, str):
            value = parse_polynomial(value, self.alphabet)
        elif isinstance(value, int):
            value = Polynomial({EMPTY: value})
        elif isinstance(value, Word):
            value = Polynomial.monomial(value)
        return self.project(value)

    def zero(self):
        return GroupRingElement(Polynomial(), self)

    def one(self):
        return GroupRingElement(Polynomial.one(), self)

    def generator(self, name):
        return self.element(Word((self.alphabet.letter(name, 1),)))

    def normal_form(self, word):
        if isinstance(word, str):
            word = parse_word(word, self.alphabet)
        return normal_form(word, self.system)

    def basis(self, max_len):
        return irr_enumerate(self.system, max_len)

    @cached_property
    def jacobian(self):
        """J[j][i] = image of d(r_j)/d(x_i) in the ring."""
        return [
            [self.project(fox_of_relator(r1, r2, g)) for g in self.generators]
            for r1, r2 in self.presentation.relators
        ]

    def fox_image(self, relator_index, generator):
        if isinstance(generator, str):
            generator = self.alphabet.generator(generator)
        return self.jacobian[relator_index][generator.index]

    def fox_image_of_word(self, word, generator):
        return self.project(fox_derivative(word, generator))

    def vector(self, entries):
        return ChainVector(tuple(self.element(e) for e in entries), self)

    def _check(self, element):
        if element.ring is not self:
            raise RingMismatchError("elements belong to different rings")


@dataclass(frozen=True, eq=False)
class GroupRingElement:
    value: Polynomial
    ring: GroupRing

    def is_zero(self):
        return self.value.is_zero()

    def __bool__(self):
        return not self.value.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.ring is other.ring and self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __add__(self, other):
        other = self.ring.element(other)
        return GroupRingElement(self.value + other.value, self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        other = self.ring.element(other)
        return GroupRingElement(self.value - other.value, self.ring)

    def __rsub__(self, other):
        return self.ring.element(other) - self

    def __neg__(self):
        return GroupRingElement(-self.value, self.ring)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.value.scale(other), self.ring)
        return ring_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.value.scale(other), self.ring)
        return NotImplemented

    def format(self):
        return format_polynomial(self.value, self.ring.alphabet)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"GroupRingElement({self.format()!r})"


@dataclass(frozen=True)
class ChainVector:
    entries: tuple
    ring: GroupRing

    def __post_init__(self):
        for entry in self.entries:
            if entry.ring is not self.ring:
                raise RingMismatchError("chain vector entries belong to different rings")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def format(self):
        return [e.format() for e in self.entries]


def ring_mul(a, b):
    if not isinstance(b, GroupRingElement) or a.ring is not b.ring:
        raise RingMismatchError("cannot multiply elements of different rings")
    return a.ring.project(a.value * b.value)


def d0(vector):
    """sum_i alpha_i * (x_i - 1)."""
    ring = vector.ring
    if len(vector) != len(ring.generators):
        raise LengthMismatchError(f"d0 expects {len(ring.generators)} entries, got {len(vector)}")
    total = Polynomial()
    for alpha, g in zip(vector, ring.generators):
        total = total + alpha.value * Polynomial({Word((Letter(g, 1),)): 1, EMPTY: -1})
    return ring.project(total)


def d1(vector):
    """Generator-indexed vector with x-entry sum_j beta_j * J(r_j, x); beta multiplies on the left."""
    ring = vector.ring
    m = len(ring.presentation.relators)
    if len(vector) != m:
        raise LengthMismatchError(f"d1 expects {m} entries, got {len(vector)}")
    entries = []
    for i in range(len(ring.generators)):
        total = Polynomial()
        for beta, row in zip(vector, ring.jacobian):
            if not beta.is_zero():
                total = total + beta.value * row[i].value
        entries.append(ring.project(total))
    return ChainVector(tuple(entries), ring)


def is_in_kernel_d1(vector):
    return d1(vector).is_zero()


def unit_vector(ring, j):
    m = len(ring.presentation.relators)
    return ChainVector(tuple(ring.one() if k == j else ring.zero() for k in range(m)), ring)


def parse_presentation(text):
    """Parse the ``group``/``semigroup`` file format; errors cite line and column."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty presentation", 1, 1)
    lineno, header, _ = lines[0]
    try:
        kind = PresentationKind(header)
    except ValueError:
        raise ParseError(f"expected 'group' or 'semigroup', got {header!r}", lineno, 1) from None
    names, order, relator_lines = None, None, []
    for lineno, content, offset in lines[1:]:
        key, value, column = _split_key(content, lineno, offset)
        if key == "generators":
            if names is not None:
                raise ParseError("generators declared twice", lineno, offset)
            names = value.split()
            if not names:
                raise ParseError("no generators", lineno, column)
        elif key == "order":
            order = (value.split(), lineno, column)
        elif key == "relator":
            relator_lines.append((lineno, value, column))
        else:
            raise ParseError(f"unknown key {key!r}", lineno, offset)
    if names is None:
        raise ParseError("missing 'generators:' line", lines[-1][0], 1)
    alphabet = _build_alphabet(names, kind, order)
    relators = tuple(_parse_relator(value, alphabet, lineno, column) for lineno, value, column in relator_lines)
    return Presentation(alphabet, relators, kind)


def _build_alphabet(names, kind, order):
    for name in names:
        if not re.match(r"^[A-Za-z_][A-Za-z0-9_]*$", name):
            raise ParseError(f"bad generator name {name!r}")
    if order is None:
        return Alphabet.build(names, inverses=kind is PresentationKind.GROUP)
    tokens, lineno, column = order
    inverses = kind is PresentationKind.GROUP or any(t.endswith("^-1") for t in tokens)
    try:
        return Alphabet.build(names, inverses=inverses, order=tokens)
    except FoxDivError as exc:
        raise ParseError(str(exc), lineno, column) from None


def _parse_relator(value, alphabet, lineno, column):
    if value.count("=") > 1:
        raise ParseError("a relator has at most one '='", lineno, column + value.index("=", value.index("=") + 1))
    if "=" in value:
        left, right = value.split("=")
        right_column = column + len(left) + 1
    else:
        left, right, right_column = value, "1", column
    if not left.strip():
        raise ParseError("empty relator side", lineno, column)
    if not right.strip():
        raise ParseError("empty relator side", lineno, right_column)
    return (parse_word(left, alphabet, lineno, column), parse_word(right, alphabet, lineno, right_column))


def _content_lines(text):
    """(line number, stripped content, 1-based column of content) for non-blank lines."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        stripped = content.lstrip()
        if stripped:
            out.append((lineno, stripped, len(content) - len(stripped) + 1))
    return out


def _split_key(content, lineno, offset):
    match = KEY_RE.match(content)
    if not match:
        raise ParseError(f"expected 'key: value', got {content!r}", lineno, offset)
    return match.group("key").strip(), match.group("value"), offset + match.start("value")


def format_presentation(presentation):
    """Canonical text form; parsing it back gives an equal presentation."""
    alphabet = presentation.alphabet
    lines = [
        presentation.kind.value,
        "generators: " + " ".join(alphabet.names),
        "order: " + alphabet.format_order(),
    ]
    for left, right in presentation.relators:
        lines.append(f"relator: {format_word(left)} = {format_word(right)}")
    return "\n".join(lines) + "\n"


def fingerprint(presentation):
    return hashlib.sha256(format_presentation(presentation).encode("utf-8")).hexdigest()
