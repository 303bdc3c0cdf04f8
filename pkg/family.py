"""Interleaved relator families and the common right divisor of their x-derivatives.

A relator side interleaves x-free blocks with the factor ``w x``:

    r_i1 = u_i1 (w x) u_i2 (w x) ... (w x) u_ip
    r_i2 = v_i1 (w x) v_i2 ... (w x) v_iq     (or the single word v_i0)

Every d(r_i)/dx is then D_i * f with f = d(w)/dx + w.
"""

import enum
import logging
import re
from dataclasses import dataclass
from typing import NamedTuple

from errors import FamilyError, FoxDivError, NotDivisible, ParseError, ZeroPolynomialError
from fox import fox_derivative, fox_of_relator
from groupring import Presentation, PresentationKind, _content_lines, _split_key
from ncpoly import Polynomial, leading_term
from words import (
    EMPTY,
    Alphabet,
    Letter,
    Word,
    format_word,
    involves,
    is_freely_reduced,
    longest_common_prefix,
    occurs_in,
    parse_word,
)

logger = logging.getLogger(__name__)

RELATOR_KEY_RE = re.compile(r"^relator\s+(\d+)$")


@dataclass(frozen=True)
class FamilySpec:
    ell: int
    w: Word
    u: tuple
    v: tuple
    alphabet: Alphabet

    @classmethod
    def build(cls, ell, w, u, v, order=None):
        """Spec over x, y1..y_ell from word literals, e.g. ``build(1, "y1", [["1", "1", "y1"]], [["y1"]])``."""
        alphabet = Alphabet.build(["x"] + [f"y{k}" for k in range(1, ell + 1)], order=order)
        word = lambda text: text if isinstance(text, Word) else parse_word(text, alphabet)
        return cls(
            ell,
            word(w),
            tuple(tuple(word(b) for b in row) for row in u),
            tuple(tuple(word(b) for b in row) for row in v),
            alphabet,
        )

    @property
    def x(self):
        return self.alphabet.generator("x")

    @property
    def x_letter(self):
        return Letter(self.x, 1)

    @property
    def n(self):
        return len(self.u)

    def p(self, i):
        return len(self.u[i - 1])

    def q(self, i):
        row = self.v[i - 1]
        return len(row) if len(row) >= 2 else 0

    def sides(self, i):
        """(r_i1, r_i2) for the 1-based relator index i."""
        return _assemble(self.u[i - 1], self.w, self.x_letter), _assemble(self.v[i - 1], self.w, self.x_letter)


def _assemble(blocks, w, x_letter):
    if not blocks:
        return EMPTY
    joint = w + (x_letter,)
    word = blocks[0]
    for block in blocks[1:]:
        word = word + joint + block
    return word


class Violation(NamedTuple):
    code: str
    relator: int = None
    side: int = None
    other: int = None

    def __str__(self):
        args = [str(a) for a in (self.relator, self.side if self.other is None else self.other) if a is not None]
        return f"{self.code}({','.join(args)})" if args else self.code


class FactorizationReport(NamedTuple):
    f: Polynomial
    D: tuple
    exact: bool
    derivatives: tuple


class CaseTag(enum.Enum):
    PHI1_ZERO = "phi1_zero"
    LT_U_DFBAR = "lt_u_dfbar"
    LT_R2 = "lt_r2"
    LT_U_F1 = "lt_u_f1"
    NONE = "none"


class Phi1Analysis(NamedTuple):
    tag: CaseTag
    phi1: Polynomial
    u: Word
    fbar: Word
    f1: Polynomial


class EliminationStep(NamedTuple):
    remainder: Polynomial
    u: Word
    coefficient: int


class EliminationChain(NamedTuple):
    steps: tuple
    quotient: Polynomial
    remainder: Polynomial

    @property
    def divisible(self):
        return self.remainder.is_zero()


class UdfDecomposition(NamedTuple):
    u2: Word
    period: Word
    n: int
    rest: Word
    narrow: bool


def validate_family(spec):
    """Every violated side condition; empty when the spec defines an interleaved family."""
    violations = []
    x = spec.x
    if spec.w.is_identity():
        violations.append(Violation("w_must_be_nonempty"))
    elif involves(spec.w, x):
        violations.append(Violation("w_involves_x"))
    if len(spec.u) != len(spec.v):
        violations.append(Violation("row_count_mismatch"))
        return violations
    for i in range(1, spec.n + 1):
        if spec.p(i) < 1:
            violations.append(Violation("p_must_be_positive", i))
        for side, row in ((1, spec.u[i - 1]), (2, spec.v[i - 1])):
            if any(involves(block, x) for block in row):
                violations.append(Violation("block_involves_x", i, side))
    if violations:
        return violations
    sides = [spec.sides(i) for i in range(1, spec.n + 1)]
    for i, pair in enumerate(sides, start=1):
        for side, word in enumerate(pair, start=1):
            if not is_freely_reduced(word):
                violations.append(Violation("not_freely_reduced", i, side))
    for i, pair in enumerate(sides, start=1):
        for k, other in enumerate(sides, start=1):
            if i == k:
                continue
            if any(term and sub and occurs_in(term, sub) for term in pair for sub in other):
                violations.append(Violation("cross_subword", i, other=k))
    return violations


def build_family(spec):
    """The group presentation <x, y1..y_ell | r_i1 = r_i2>."""
    violations = validate_family(spec)
    if violations:
        raise FamilyError("invalid family: " + ", ".join(str(v) for v in violations), violations)
    relators = tuple(spec.sides(i) for i in range(1, spec.n + 1))
    return Presentation(spec.alphabet, relators, PresentationKind.GROUP)


def common_divisor(spec):
    """f = d(w)/dx + w."""
    return fox_derivative(spec.w, spec.x) + Polynomial.monomial(spec.w)


def _prefix_sum(blocks, w, x_letter):
    # prefixes ending just before each (w x) factor
    total, prefix = {}, EMPTY
    joint = w + (x_letter,)
    for block in blocks[:-1]:
        prefix = prefix + block
        total[prefix] = total.get(prefix, 0) + 1
        prefix = prefix + joint
    return Polynomial(total)


def factor_derivatives(spec):
    f = common_divisor(spec)
    x_letter = spec.x_letter
    D, derivatives = [], []
    exact = True
    for i in range(1, spec.n + 1):
        r1, r2 = spec.sides(i)
        v_row = spec.v[i - 1] if spec.q(i) else ()
        D_i = _prefix_sum(spec.u[i - 1], spec.w, x_letter) - _prefix_sum(v_row, spec.w, x_letter)
        derivative = fox_of_relator(r1, r2, spec.x)
        exact = exact and D_i * f == derivative
        D.append(D_i)
        derivatives.append(derivative)
    return FactorizationReport(f, tuple(D), exact, tuple(derivatives))


def _check_divisor(f, alphabet):
    if f.is_zero():
        raise ZeroPolynomialError("cannot divide by the zero polynomial")
    lead = leading_term(f, alphabet)
    if lead.coefficient != 1:
        raise FoxDivError(f"divisor must be monic, leading coefficient is {lead.coefficient}", code="non_monic_divisor")
    return lead.monomial


def elimination_chain(p, f, alphabet):
    """Remainders phi_0 = p, phi_{k+1} = phi_k - c*u*f while LT(phi_k) = c*u*LT(f)."""
    fbar = _check_divisor(f, alphabet)
    k = len(fbar)
    remainder, quotient, steps = p, Polynomial(), []
    while not remainder.is_zero():
        lead = leading_term(remainder, alphabet)
        word = lead.monomial
        if len(word) < k or word[len(word) - k:] != fbar:
            break
        u = word[:len(word) - k]
        steps.append(EliminationStep(remainder, u, lead.coefficient))
        quotient = quotient + Polynomial.monomial(u, lead.coefficient)
        remainder = remainder - f.lrmul(u, EMPTY, lead.coefficient)
    return EliminationChain(tuple(steps), quotient, remainder)


def right_divide(p, f, alphabet):
    """D with D*f = p in the free algebra, or NotDivisible."""
    chain = elimination_chain(p, f, alphabet)
    if not chain.divisible:
        lead = leading_term(chain.remainder, alphabet)
        raise NotDivisible(f"remainder term {format_word(lead.monomial)} does not end in the divisor's leading word")
    return chain.quotient


def analyze_phi1(spec, i, f):
    if not 1 <= i <= spec.n:
        raise FoxDivError(f"relator index {i} out of range 1..{spec.n}", code="bad_index")
    alphabet, x = spec.alphabet, spec.x
    r1, r2 = spec.sides(i)
    fbar = leading_term(f, alphabet).monomial
    first = fox_derivative(r1, x)
    if first.is_zero():
        return Phi1Analysis(CaseTag.NONE, None, None, fbar, None)
    lead = leading_term(first, alphabet).monomial
    if len(lead) < len(fbar) or lead[len(lead) - len(fbar):] != fbar:
        return Phi1Analysis(CaseTag.NONE, None, None, fbar, None)
    u = lead[:len(lead) - len(fbar)]
    phi1 = fox_of_relator(r1, r2, x) - f.lrmul(u, EMPTY)
    f1 = f - Polynomial.monomial(fbar)
    if phi1.is_zero():
        return Phi1Analysis(CaseTag.PHI1_ZERO, phi1, u, fbar, f1)
    target = leading_term(phi1, alphabet).monomial
    candidates = (
        (CaseTag.LT_U_DFBAR, fox_derivative(fbar, x), u),
        (CaseTag.LT_R2, fox_derivative(r2, x), EMPTY),
        (CaseTag.LT_U_F1, f1, u),
    )
    for tag, poly, prefix in candidates:
        if not poly.is_zero() and prefix + leading_term(poly, alphabet).monomial == target:
            return Phi1Analysis(tag, phi1, u, fbar, f1)
    return Phi1Analysis(CaseTag.NONE, phi1, u, fbar, f1)


def phi1(spec, i, f):
    return analyze_phi1(spec, i, f).phi1


def classify_phi1(spec, i, f):
    """Which leading-term case phi_1 = d(r_i)/dx - u_i*f falls into."""
    return analyze_phi1(spec, i, f).tag


def common_left_divisors(w, P, x):
    """For each term shared by d(w)/dx and P, the longest common prefix of w and that term."""
    derivative = fox_derivative(w, x)
    shared = sorted(set(derivative.support()) & set(P.support()), key=lambda m: (len(m), str(m)))
    return [(m, longest_common_prefix(w, m)) for m in shared]


def decompose_lt_udf(u1, fbar, x, alphabet):
    """Solve LT(u1 * d(fbar)/dx) = u2 * fbar.

    Returns None when the equation fails. Otherwise u1 = u2 * period and
    fbar = period^n * rest; ``narrow`` says whether fbar = (w x)^n w with
    u1 = u2 w x.
    """
    derivative = fox_derivative(fbar, x)
    if derivative.is_zero():
        return None
    lead = leading_term(derivative.lrmul(u1, EMPTY), alphabet).monomial
    k = len(fbar)
    if len(lead) < k or lead[len(lead) - k:] != fbar:
        return None
    u2 = lead[:len(lead) - k]
    if len(u1) <= len(u2):
        return UdfDecomposition(u2, EMPTY, 0, fbar, False)
    period = u1[len(u2):]
    n = k // len(period)
    rest = fbar[n * len(period):]
    narrow = (
        not rest.is_identity()
        and period == rest + (Letter(x, 1),)
        and not involves(rest, x)
    )
    return UdfDecomposition(u2, period, n, rest, narrow)


def x_free_chain_vanishes(u2, fbar, tail, r2, f1, x, alphabet):
    """Whether d(r)/dx is right divisible by f = fbar + f1 for r_1 = u2 fbar x tail.

    With u2, fbar, tail x-free and every term of f1 below fbar, d(r)/dx equals
    u2*f - (u2*f1 + d(r2)/dx). For x-free r2 the chain vanishes iff f1 = 0. An r2
    involving x makes it vanish exactly when u2*f1 + d(r2)/dx is a left multiple of f.
    """
    r1 = u2 + fbar + (Letter(x, 1),) + tail
    f = Polynomial.monomial(fbar) + f1
    return elimination_chain(fox_of_relator(r1, r2, x), f, alphabet).divisible


def parse_family(text):
    """Parse the ``family`` file format into a FamilySpec."""
    lines = _content_lines(text)
    if not lines or lines[0][1] != "family":
        where = lines[0][0] if lines else 1
        raise ParseError("expected 'family' header", where, 1)
    ell, w_entry, order, rows = None, None, None, {}
    for lineno, content, offset in lines[1:]:
        key, value, column = _split_key(content, lineno, offset)
        relator = RELATOR_KEY_RE.match(key)
        if key == "y-generators":
            if not value.strip().isdigit() or int(value) < 1:
                raise ParseError(f"y-generators must be a positive integer, got {value.strip()!r}", lineno, column)
            ell = int(value)
        elif key == "w":
            w_entry = (value, lineno, column)
        elif key == "order":
            order = (value.split(), lineno, column)
        elif relator:
            index = int(relator.group(1))
            if index in rows:
                raise ParseError(f"relator {index} declared twice", lineno, offset)
            rows[index] = (value, lineno, column)
        else:
            raise ParseError(f"unknown key {key!r}", lineno, offset)
    if ell is None:
        raise ParseError("missing 'y-generators:' line", lines[-1][0], 1)
    if w_entry is None:
        raise ParseError("missing 'w:' line", lines[-1][0], 1)
    if sorted(rows) != list(range(1, len(rows) + 1)) or not rows:
        raise ParseError("relators must be numbered 1..n", lines[-1][0], 1)
    names = ["x"] + [f"y{k}" for k in range(1, ell + 1)]
    try:
        alphabet = Alphabet.build(names, order=order[0] if order else None)
    except FoxDivError as exc:
        raise ParseError(str(exc), order[1] if order else None, order[2] if order else None) from None
    value, lineno, column = w_entry
    w = parse_word(value, alphabet, lineno, column) if value.strip() else EMPTY
    u_rows, v_rows = [], []
    for index in sorted(rows):
        value, lineno, column = rows[index]
        u_row, v_row = _parse_relator_row(value, alphabet, lineno, column)
        u_rows.append(u_row)
        v_rows.append(v_row)
    return FamilySpec(ell, w, tuple(u_rows), tuple(v_rows), alphabet)


def _parse_relator_row(value, alphabet, lineno, column):
    parts = value.split(";")
    if len(parts) != 2:
        raise ParseError("expected 'u = ... ; v = ...'", lineno, column)
    rows, start = [], 0
    for part, name in zip(parts, ("u", "v")):
        match = re.match(r"^\s*" + name + r"\s*=", part)
        if not match:
            raise ParseError(f"expected '{name} ='", lineno, column + start)
        body, body_start = part[match.end():], start + match.end()
        blocks = []
        if body.strip():
            pos = 0
            for block in body.split(","):
                if not block.strip():
                    raise ParseError("empty block (write 1 for the empty word)", lineno, column + body_start + pos)
                blocks.append(parse_word(block, alphabet, lineno, column + body_start + pos))
                pos += len(block) + 1
        rows.append(tuple(blocks))
        start += len(part) + 1
    return rows[0], rows[1]


def format_family(spec):
    lines = ["family", f"y-generators: {spec.ell}", f"w: {format_word(spec.w)}"]
    for i in range(1, spec.n + 1):
        u = ", ".join(format_word(b) for b in spec.u[i - 1])
        v = ", ".join(format_word(b) for b in spec.v[i - 1])
        lines.append(f"relator {i}: u = {u} ; v = {v}".rstrip())
    lines.append("order: " + spec.alphabet.format_order())
    return "\n".join(lines) + "\n"
