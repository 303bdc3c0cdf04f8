import pytest

from errors import CompletionLimitError, LengthMismatchError, NotCompletedError, ParseError, RingMismatchError
from family import FamilySpec, build_family
from groupring import (
    GroupRing,
    Presentation,
    PresentationKind,
    cyclic_group,
    d0,
    d1,
    fingerprint,
    format_presentation,
    free_group,
    is_in_kernel_d1,
    normal_form,
    parse_presentation,
    presentation_to_rules,
    ring_mul,
    to_semigroup,
    unit_vector,
)
from gsbasis import CompletionLimits, CompletionStatus, reduce
from ncpoly import Polynomial
from tests.conftest import random_word, read_sample
from words import EMPTY, inverse_word


def test_to_semigroup_adds_inverse_relations():
    semigroup = to_semigroup(cyclic_group(2, "x"))
    alphabet = semigroup.alphabet
    assert semigroup.kind is PresentationKind.SEMIGROUP
    assert semigroup.relators == (
        (alphabet.word("x x"), EMPTY),
        (alphabet.word("x x^-1"), EMPTY),
        (alphabet.word("x^-1 x"), EMPTY),
    )
    assert len(to_semigroup(free_group(["x", "y"])).relators) == 4


def test_presentation_to_rules(xy, P):
    x2, y2 = xy.word("x x"), xy.word("y y")
    semigroup = Presentation(xy, ((y2, x2), (x2, x2)), PresentationKind.SEMIGROUP)
    assert presentation_to_rules(semigroup).rules == (P("x^2 - y^2"),)


def test_normal_forms_in_cyclic_groups(c5_ring, c3_ring):
    assert c5_ring.normal_form("g^4 g^3") == c5_ring.alphabet.word("g^2")
    assert c5_ring.normal_form("g^2") == c5_ring.alphabet.word("g^2")
    assert c5_ring.normal_form("g^5") == EMPTY
    assert [str(w) for w in c3_ring.basis(3)] == ["1", "g^-1", "g"]


def test_normal_form_in_the_free_group(free3_ring):
    assert free3_ring.normal_form("x x^-1") == EMPTY
    assert free3_ring.normal_form("y x^-1 z") == free3_ring.alphabet.word("y x^-1 z")


def test_normal_form_needs_a_completed_system(xy):
    raw = presentation_to_rules(Presentation(xy, (), PresentationKind.SEMIGROUP))
    with pytest.raises(NotCompletedError):
        normal_form(xy.word("x"), raw)


def test_z2_with_inverse_ordered_first(z2_ring):
    assert [str(w) for w in z2_ring.basis(3)] == ["1", "x"]
    assert z2_ring.element("x^-1") == z2_ring.element("x")


def test_ring_arithmetic(c5_ring, z2_default_ring):
    ring = c5_ring
    assert ring_mul(ring.element("1 - g"), ring.element("1 + g + g^2 + g^3 + g^4")).is_zero()
    a = ring.element("2 - g^2")
    assert a * ring.one() == a
    assert ring.zero() + a == a
    assert (a - a).is_zero()
    assert ring.element(3) == 3
    z = z2_default_ring
    assert (z.element("1 - x") * z.element("1 + x")).is_zero()


def test_ring_axioms(c5_ring, rng):
    ring = c5_ring
    for _ in range(100):
        a, b, c = (ring.element(Polynomial({random_word(rng, ring.alphabet, 4): rng.randint(-2, 2)}))
                   for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * ring.one() == a == ring.one() * a


def test_elements_of_different_rings_do_not_mix(c3_ring, c5_ring):
    with pytest.raises(RingMismatchError):
        ring_mul(c3_ring.one(), c5_ring.one())
    with pytest.raises(RingMismatchError):
        c3_ring.element(c5_ring.one())


def test_d0_and_d1_on_z2(z2_default_ring):
    ring = z2_default_ring
    assert d0(ring.vector([1])) == ring.element("x - 1")
    assert d0(ring.vector([0])).is_zero()
    assert d0(ring.vector(["1 + x"])).is_zero()
    assert d1(ring.vector([1]))[0] == ring.element("1 + x")
    assert d1(ring.vector([0])).is_zero()
    assert is_in_kernel_d1(ring.vector(["1 - x"]))
    assert not is_in_kernel_d1(ring.vector(["1"]))


def test_d_length_mismatch(z2_default_ring):
    ring = z2_default_ring
    with pytest.raises(LengthMismatchError):
        d0(ring.vector([1, 1]))
    with pytest.raises(LengthMismatchError):
        d1(ring.vector([1, 0]))


def _chain_rings():
    yield GroupRing(free_group(["x"]))
    yield GroupRing(free_group(["x", "y"]))
    for n in range(2, 7):
        yield GroupRing(cyclic_group(n))
    yield GroupRing(build_family(FamilySpec.build(1, "y1", [["1", "1", "y1"]], [["y1"]])))
    yield GroupRing(parse_presentation(read_sample("worked_example.txt")))


def test_d0_after_d1_vanishes():
    for ring in _chain_rings():
        for j in range(len(ring.presentation.relators)):
            assert d0(d1(unit_vector(ring, j))).is_zero()


def test_semigroup_words_reduce_to_single_words(rng):
    for ring in _chain_rings():
        for _ in range(30):
            word = random_word(rng, ring.alphabet, 4)
            reduced = reduce(Polynomial.monomial(word), ring.system)
            assert list(reduced.items()) == [(ring.normal_form(word), 1)]


def test_equal_normal_forms_mean_equal_group_elements(rng):
    for ring in _chain_rings():
        classes = {}
        for _ in range(60):
            word = random_word(rng, ring.alphabet, 5)
            classes.setdefault(ring.normal_form(word), []).append(word)
        for normal, words in classes.items():
            for u in words:
                assert reduce(Polynomial.monomial(u) - Polynomial.monomial(normal), ring.system).is_zero()
                assert reduce(Polynomial.monomial(u) - Polynomial.monomial(words[0]), ring.system).is_zero()
        for _ in range(30):
            a, b = random_word(rng, ring.alphabet, 3), random_word(rng, ring.alphabet, 3)
            rule = rng.choice(ring.system.rules)
            assert reduce(rule.lrmul(a, b), ring.system).is_zero()


def test_relator_derivatives_agree_with_the_word_form(c5_ring, z2_ring):
    for ring in (c5_ring, z2_ring):
        for j, (r1, r2) in enumerate(ring.presentation.relators):
            for g in ring.generators:
                assert ring.fox_image(j, g) == ring.fox_image_of_word(r1 + inverse_word(r2), g)


def test_family_ring_normal_forms():
    ring = GroupRing(build_family(FamilySpec.build(1, "y1", [["1", "1", "y1"]], [["y1"]])))
    assert ring.system.is_completed
    assert ring.normal_form("y1 x y1 x y1") == ring.normal_form("y1")


def test_completion_limits_surface_as_errors():
    with pytest.raises(CompletionLimitError) as info:
        GroupRing(cyclic_group(5), CompletionLimits(max_rules=3))
    assert info.value.system.status is CompletionStatus.LIMIT_EXCEEDED
    assert info.value.exit_code == 3


def test_parse_presentation_sample():
    presentation = parse_presentation(read_sample("worked_example.txt"))
    assert presentation.kind is PresentationKind.SEMIGROUP
    assert presentation.alphabet.names == ["x", "y"]
    assert len(presentation.relators) == 2
    bare = parse_presentation(read_sample("cyclic5.txt"))
    assert bare.relators == cyclic_group(5).relators


@pytest.mark.parametrize("text, message, line", [
    ("group\ngenerators: x\nrelator: x^0 = 1\n", "zero power", 3),
    ("group\ngenerators: x\n\n# comment\nrelator: x q\n", "unknown", 5),
    ("monoid\ngenerators: x\n", "expected 'group'", 1),
    ("group\nrelator: x = 1\n", "missing 'generators:'", 2),
    ("group\ngenerators: x\nrelator: x = = 1\n", "at most one", 3),
    ("group\ngenerators: x\nweight: 3\n", "unknown key", 3),
])
def test_parse_presentation_errors(text, message, line):
    with pytest.raises(ParseError, match=message) as info:
        parse_presentation(text)
    assert info.value.line == line


@pytest.mark.parametrize("name", ["z2.txt", "free2.txt", "cyclic3.txt", "cyclic5.txt", "worked_example.txt"])
def test_format_then_parse_gives_the_same_presentation(name):
    presentation = parse_presentation(read_sample(name))
    assert parse_presentation(format_presentation(presentation)) == presentation


def test_fingerprint_is_stable():
    a = fingerprint(parse_presentation(read_sample("cyclic5.txt")))
    b = fingerprint(cyclic_group(5))
    assert a == b
    assert len(a) == 64 and int(a, 16) >= 0
    assert fingerprint(cyclic_group(3)) != a
