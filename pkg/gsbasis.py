"""Composition-Diamond machinery over monic sets of integer polynomials.

A ``RewriteSystem`` is a monic set S with the deg-lex order of its alphabet.
``reduce`` rewrites modulo S, ``shirshov_complete`` adds the reduced
compositions until every composition is trivial (or a limit trips), and
``irr_enumerate`` lists the words avoiding every leading monomial.
"""

import enum
import heapq
import logging
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from errors import CompositionError, FoxDivError, NonMonicObstruction, NotCompletedError
from ncpoly import Polynomial, leading_term
from words import EMPTY, Word, find_inclusions, find_intersection_overlaps

logger = logging.getLogger(__name__)

STRATEGIES = ("deterministic", "leftmost", "rightmost", "random")


class CompletionStatus(enum.Enum):
    RAW = "raw"
    COMPLETED = "completed"
    LIMIT_EXCEEDED = "limit_exceeded"


@dataclass(frozen=True)
class CompletionLimits:
    max_rules: int = 500
    max_steps: int = 100000
    max_degree: int = 24

    def __post_init__(self):
        for name in ("max_rules", "max_steps", "max_degree"):
            value = getattr(self, name)
            if not isinstance(value, int) or value <= 0:
                raise FoxDivError(f"{name} must be a positive integer, got {value!r}", code="bad_limits")

    @classmethod
    def from_config(cls, config, **overrides):
        values = {name: config.get(name, getattr(cls, name)) for name in ("max_rules", "max_steps", "max_degree")}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class Certificate:
    """A finite sum of k * a * s_i * b over the input rules s_i of a completion."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms = {key: c for key, c in (terms or {}).items() if c}

    @classmethod
    def unit(cls, index):
        return cls({(EMPTY, index, EMPTY): 1})

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        return isinstance(other, Certificate) and self._terms == other._terms

    def __add__(self, other):
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, 0) + c
        return Certificate(terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k):
        return Certificate({key: c * k for key, c in self._terms.items()})

    def lrmul(self, a, b, k=1):
        return Certificate({(a + left, index, right + b): c * k for (left, index, right), c in self._terms.items()})

    def expand(self, originals):
        total = Polynomial()
        for (a, index, b), c in self._terms.items():
            total = total + originals[index].lrmul(a, b, c)
        return total

    def __repr__(self):
        return f"Certificate({len(self._terms)} terms)"


class Redex(NamedTuple):
    index: int
    a: Word
    b: Word


class Composition(NamedTuple):
    kind: str  # "intersection" or "inclusion"
    i: int
    j: int
    a: Word
    b: Word
    w: Word
    polynomial: Polynomial


@dataclass
class RewriteSystem:
    """A monic set of rules plus the bookkeeping of how it was obtained."""

    rules: tuple
    alphabet: object
    status: CompletionStatus = CompletionStatus.RAW
    stats: dict = field(default_factory=lambda: {"steps": 0, "compositions": 0, "added": 0})
    certificates: tuple = None
    originals: tuple = None

    def __post_init__(self):
        self.rules = tuple(self.rules)
        for rule in self.rules:
            lead = leading_term(rule, self.alphabet)
            if lead.coefficient != 1:
                raise NonMonicObstruction(f"rule with leading coefficient {lead.coefficient} is not monic")
        if self.originals is None:
            self.originals = self.rules
            self.certificates = tuple(Certificate.unit(i) for i in range(len(self.rules)))
        self.originals = tuple(self.originals)
        if self.certificates is not None:
            self.certificates = tuple(self.certificates)

    @classmethod
    def build(cls, polynomials, alphabet):
        """Normalize to monic rules: negate a leading -1, drop zeros, reject other coefficients."""
        rules = []
        for p in polynomials:
            if p.is_zero():
                continue
            rules.append(normalize_rule(p, alphabet))
        return cls(tuple(rules), alphabet)

    @cached_property
    def leads(self):
        return tuple(leading_term(rule, self.alphabet).monomial for rule in self.rules)

    @property
    def is_completed(self):
        return self.status is CompletionStatus.COMPLETED

    def __len__(self):
        return len(self.rules)

    def sorted_rules(self):
        """Rules in ascending deg-lex order of their leading monomial."""
        return sorted(self.rules, key=lambda rule: self.alphabet.key(leading_term(rule, self.alphabet).monomial))

    def find_redex(self, word, strategy="deterministic", rng=None):
        if strategy == "deterministic":
            for index, lead in enumerate(self.leads):
                pos = _find(word, lead)
                if pos >= 0:
                    return Redex(index, word[:pos], word[pos + len(lead):])
            return None
        hits = []
        for index, lead in enumerate(self.leads):
            for a, b in find_inclusions(word, lead):
                hits.append((len(a), index, a, b))
        if not hits:
            return None
        if strategy == "leftmost":
            _, index, a, b = min(hits, key=lambda h: (h[0], h[1]))
        elif strategy == "rightmost":
            _, index, a, b = max(hits, key=lambda h: (h[0], -h[1]))
        elif strategy == "random":
            _, index, a, b = (rng or random).choice(hits)
        else:
            raise FoxDivError(f"unknown reduction strategy {strategy!r}", code="bad_strategy")
        return Redex(index, a, b)


def normalize_rule(p, alphabet):
    lead = leading_term(p, alphabet)
    if lead.coefficient == 1:
        return p
    if lead.coefficient == -1:
        return -p
    raise NonMonicObstruction(
        f"leading coefficient {lead.coefficient} of {lead.monomial} is not a unit over the integers"
    )


def _find(word, sub):
    m = len(sub)
    if m == 0:
        return 0
    first = sub[0]
    for i in range(len(word) - m + 1):
        if word[i] == first and word[i:i + m] == sub:
            return i
    return -1


class _StepBudgetExhausted(Exception):
    pass


def _heap_key(alphabet, word):
    length, ranks = alphabet.key(word)
    return (-length, tuple(-r for r in ranks))


def _reduce(f, system, strategy="deterministic", rng=None, budget=None):
    """Return (normal form, trace) with f - normal form = sum of k * a * s_index * b over the trace."""
    alphabet = system.alphabet
    terms = dict(f.items())
    heap = [(_heap_key(alphabet, w), w) for w in terms]
    heapq.heapify(heap)
    result = {}
    trace = []
    while heap:
        _, word = heapq.heappop(heap)
        coefficient = terms.pop(word, 0)
        if not coefficient:
            continue
        redex = system.find_redex(word, strategy, rng)
        if redex is None:
            result[word] = coefficient
            continue
        if budget is not None:
            if budget[0] <= 0:
                raise _StepBudgetExhausted()
            budget[0] -= 1
        rule, lead = system.rules[redex.index], system.leads[redex.index]
        for tail_word, c in rule.items():
            if tail_word == lead:
                continue
            new_word = redex.a + tail_word + redex.b
            if new_word not in terms:
                heapq.heappush(heap, (_heap_key(alphabet, new_word), new_word))
            total = terms.get(new_word, 0) - coefficient * c
            if total:
                terms[new_word] = total
            else:
                del terms[new_word]
        trace.append((coefficient, redex))
    return Polynomial._from_clean(result), trace


def reduce(f, system, strategy="deterministic", rng=None):
    """Normal form of f modulo the rules of ``system``.

    The deg-lex greatest reducible monomial is rewritten first. ``strategy``
    picks the redex inside it: the lowest-indexed rule at its leftmost
    occurrence by default, or the leftmost/rightmost/a random occurrence.
    """
    if strategy not in STRATEGIES:
        raise FoxDivError(f"unknown reduction strategy {strategy!r}", code="bad_strategy")
    return _reduce(f, system, strategy, rng)[0]


def reduce_with_trace(f, system):
    return _reduce(f, system)


def is_trivial_mod(f, system):
    return reduce(f, system).is_zero()


def membership(f, system):
    if not system.is_completed:
        raise NotCompletedError("ideal membership needs a completed rewrite system")
    return is_trivial_mod(f, system)


def intersection_composition(phi, psi, a, b, alphabet):
    """(phi, psi)_w = phi*b - a*psi for LT(phi)*b = a*LT(psi) = w."""
    u, v = _monic_lead(phi, alphabet), _monic_lead(psi, alphabet)
    w = u + b
    if w != a + v:
        raise CompositionError(f"{u} * {b} != {a} * {v}")
    if len(u) + len(v) <= len(w):
        raise CompositionError(f"leading words {u} and {v} do not overlap inside {w}")
    return w, phi.lrmul(EMPTY, b) - psi.lrmul(a, EMPTY)


def inclusion_composition(phi, psi, a, b, alphabet):
    """(phi, psi)_w = phi - a*psi*b for LT(phi) = a*LT(psi)*b = w."""
    u, v = _monic_lead(phi, alphabet), _monic_lead(psi, alphabet)
    if u != a + v + b:
        raise CompositionError(f"{u} != {a} * {v} * {b}")
    return u, phi - psi.lrmul(a, b)


def _monic_lead(p, alphabet):
    lead = leading_term(p, alphabet)
    if lead.coefficient != 1:
        raise CompositionError(f"composition of a non-monic polynomial (leading coefficient {lead.coefficient})")
    return lead.monomial


def _ambiguities(leads, i, j):
    """Overlap and inclusion ambiguities between rule i (left) and rule j."""
    u, v = leads[i], leads[j]
    found = [("intersection", ov.a, ov.b, ov.w) for ov in find_intersection_overlaps(u, v)]
    if i != j:
        found.extend(("inclusion", a, b, u) for a, b in find_inclusions(u, v))
    return found


def _compose(kind, phi, psi, a, b, alphabet):
    if kind == "intersection":
        return intersection_composition(phi, psi, a, b, alphabet)
    return inclusion_composition(phi, psi, a, b, alphabet)


def compositions(system):
    """Every composition of the system, in increasing order of its ambiguity word."""
    found = []
    n = len(system.rules)
    for i in range(n):
        for j in range(n):
            for kind, a, b, _ in _ambiguities(system.leads, i, j):
                w, c = _compose(kind, system.rules[i], system.rules[j], a, b, system.alphabet)
                found.append(Composition(kind, i, j, a, b, w, c))
    found.sort(key=lambda comp: (system.alphabet.key(comp.w), comp.i, comp.j))
    return found


def is_groebner_shirshov(system):
    return all(is_trivial_mod(comp.polynomial, system) for comp in compositions(system))


def _certified_remainder(cert, trace, certificates):
    for coefficient, redex in trace:
        cert = cert - certificates[redex.index].lrmul(redex.a, redex.b, coefficient)
    return cert


def shirshov_complete(system, limits=None):
    """Add reduced compositions until all of them are trivial.

    Returns a new system whose status is ``completed`` (then inter-reduced
    and sorted) or ``limit_exceeded`` with the partial rule set. Each rule
    carries a certificate over ``system.originals``.
    """
    limits = limits or CompletionLimits()
    alphabet = system.alphabet
    rules = list(system.rules)
    certificates = list(system.certificates or (Certificate.unit(i) for i in range(len(rules))))
    originals = system.originals
    stats = {"steps": 0, "compositions": 0, "added": 0}
    budget = [limits.max_steps]
    work = RewriteSystem(tuple(rules), alphabet, certificates=tuple(certificates), originals=originals)

    pending = []
    counter = 0

    def enqueue(i, j):
        nonlocal counter
        for kind, a, b, w in _ambiguities(work.leads, i, j):
            heapq.heappush(pending, (alphabet.key(w), counter, kind, i, j, a, b))
            counter += 1

    for i in range(len(rules)):
        for j in range(len(rules)):
            enqueue(i, j)

    status = CompletionStatus.COMPLETED
    reason = None
    try:
        while pending:
            (length, _), _, kind, i, j, a, b = heapq.heappop(pending)
            if length > limits.max_degree:
                status, reason = CompletionStatus.LIMIT_EXCEEDED, f"ambiguity of degree {length} > max_degree"
                break
            w, c = _compose(kind, rules[i], rules[j], a, b, alphabet)
            stats["compositions"] += 1
            if kind == "intersection":
                cert = certificates[i].lrmul(EMPTY, b) - certificates[j].lrmul(a, EMPTY)
            else:
                cert = certificates[i] - certificates[j].lrmul(a, b)
            remainder, trace = _reduce(c, work, budget=budget)
            if remainder.is_zero():
                continue
            lead = leading_term(remainder, alphabet)
            cert = _certified_remainder(cert, trace, certificates)
            if lead.coefficient == -1:
                remainder, cert = -remainder, cert.scale(-1)
            elif lead.coefficient != 1:
                raise NonMonicObstruction(
                    f"composition at {w} reduces to a rule with leading coefficient {lead.coefficient}"
                )
            if len(rules) >= limits.max_rules:
                status, reason = CompletionStatus.LIMIT_EXCEEDED, f"more than {limits.max_rules} rules"
                break
            if remainder.degree() > limits.max_degree:
                status, reason = CompletionStatus.LIMIT_EXCEEDED, f"rule of degree {remainder.degree()} > max_degree"
                break
            rules.append(remainder)
            certificates.append(cert)
            stats["added"] += 1
            logger.debug("composition %s(%d,%d) at %s added rule #%d", kind, i, j, w, len(rules) - 1)
            work = RewriteSystem(tuple(rules), alphabet, certificates=tuple(certificates), originals=originals)
            new = len(rules) - 1
            for k in range(new + 1):
                enqueue(new, k)
                if k != new:
                    enqueue(k, new)
    except _StepBudgetExhausted:
        status, reason = CompletionStatus.LIMIT_EXCEEDED, f"more than {limits.max_steps} reduction steps"
    stats["steps"] = limits.max_steps - budget[0]

    if status is CompletionStatus.LIMIT_EXCEEDED:
        logger.info("completion stopped: %s (%d rules, %d compositions)", reason, len(rules), stats["compositions"])
        stats["reason"] = reason
        return RewriteSystem(tuple(rules), alphabet, status, stats, tuple(certificates), originals)

    rules, certificates = _inter_reduce(rules, certificates, alphabet, originals)
    logger.info("completion finished: %d rules, %d compositions, %d steps",
                len(rules), stats["compositions"], stats["steps"])
    return RewriteSystem(tuple(rules), alphabet, CompletionStatus.COMPLETED, stats, tuple(certificates), originals)


def _inter_reduce(rules, certificates, alphabet, originals):
    """Drop rules whose leading word contains another's, then reduce every tail."""
    leads = [leading_term(rule, alphabet).monomial for rule in rules]
    order = sorted(range(len(rules)), key=lambda i: (alphabet.key(leads[i]), i))
    kept = []
    for i in order:
        if not any(_find(leads[i], leads[k]) >= 0 for k in kept):
            kept.append(i)
    basis = RewriteSystem(
        tuple(rules[i] for i in kept), alphabet,
        certificates=tuple(certificates[i] for i in kept), originals=originals,
    )
    new_rules, new_certs = [], []
    for position, i in enumerate(kept):
        lead = Polynomial.monomial(leads[i])
        tail, trace = _reduce(rules[i] - lead, basis)
        new_rules.append(lead + tail)
        new_certs.append(_certified_remainder(certificates[i], trace, basis.certificates))
    return new_rules, new_certs


def expand_certificate(certificate, system):
    return certificate.expand(system.originals)


def irr_enumerate(system, max_len):
    """All words of length <= max_len avoiding every leading monomial, in deg-lex order."""
    letters = sorted(system.alphabet.letters, key=system.alphabet.rank)
    leads = system.leads
    layer = [EMPTY]
    found = [EMPTY] if not any(len(lead) == 0 for lead in leads) else []
    if not found:
        return []
    for _ in range(max_len):
        next_layer = []
        for word in layer:
            for letter in letters:
                candidate = word + (letter,)
                if not any(len(lead) <= len(candidate) and candidate[len(candidate) - len(lead):] == lead
                           for lead in leads):
                    next_layer.append(candidate)
        found.extend(next_layer)
        layer = next_layer
    return sorted(found, key=system.alphabet.key)
