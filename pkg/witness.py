"""Zero-divisor certificates: if beta is in ker d1 and every d(r_j)/dx = D_j * f,
then (sum_j beta_j D_j) * f = 0 in Z[G].
"""

import itertools
import logging
import multiprocessing
from dataclasses import dataclass

from errors import FoxDivError, LengthMismatchError, NotDivisible, NotInKernelError
from family import FactorizationReport, right_divide
from fox import fox_of_relator
from groupring import ChainVector, GroupRing, cyclic_group, d1, ring_mul
from ncpoly import Polynomial, leading_term
from words import EMPTY

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WitnessReport:
    beta: ChainVector
    D: tuple
    f: Polynomial
    A: object
    B: object
    product_zero: bool
    nontrivial: bool


def _ring_of(presentation, limits=None):
    if isinstance(presentation, GroupRing):
        return presentation
    return GroupRing(presentation, limits)


def verify_witness(presentation, beta, factorization, limits=None):
    """Check beta in ker d1, then form A = sum beta_j D_j and B = f and multiply them."""
    ring = _ring_of(presentation, limits)
    if not isinstance(beta, ChainVector):
        beta = ring.vector(beta)
    m = len(ring.presentation.relators)
    if len(factorization.D) != m:
        raise LengthMismatchError(f"{len(factorization.D)} quotients for {m} relators")
    image = d1(beta)
    if not image.is_zero():
        raise NotInKernelError("beta is not in ker d1: d1(beta) = (" + ", ".join(image.format()) + ")")
    A = ring.zero()
    for b, D_j in zip(beta, factorization.D):
        A = A + b * ring.project(D_j)
    B = ring.project(factorization.f)
    product = ring_mul(A, B)
    report = WitnessReport(beta, tuple(factorization.D), factorization.f, A, B,
                           product.is_zero(), not A.is_zero() and not B.is_zero())
    logger.info("witness A=%s B=%s product_zero=%s nontrivial=%s", A, B, report.product_zero, report.nontrivial)
    return report


def common_right_divisor(polynomials, alphabet):
    """A monic f dividing every polynomial on the right, largest leading word first; f = 1 always works."""
    candidates = {}
    for p in polynomials:
        if p.is_zero():
            continue
        lead = leading_term(p, alphabet)
        if lead.coefficient in (1, -1):
            candidates[p * lead.coefficient] = lead.monomial
    ordered = sorted(candidates, key=lambda f: alphabet.key(candidates[f]), reverse=True)
    for f in ordered:
        try:
            D = tuple(right_divide(p, f, alphabet) for p in polynomials)
        except NotDivisible:
            continue
        return FactorizationReport(f, D, True, tuple(polynomials))
    return FactorizationReport(Polynomial.one(), tuple(polynomials), True, tuple(polynomials))


def presentation_factorization(ring, generator=None):
    """Common right divisor of d(r_j)/dx over the relators, for x the given (default first) generator."""
    alphabet = ring.alphabet
    x = alphabet.generators[0] if generator is None else alphabet.generator(generator)
    derivatives = [fox_of_relator(r1, r2, x) for r1, r2 in ring.presentation.relators]
    return common_right_divisor(derivatives, alphabet)


def _kernel_images(ring, basis):
    """images[j * len(basis) + k][i] = normal form of basis[k] * J(r_j, x_i), as plain term dicts."""
    images = []
    for row in ring.jacobian:
        for word in basis:
            images.append([dict(ring.project(entry.value.lrmul(word, EMPTY)).value.items()) for entry in row])
    return images


def _scan(first, images, n_generators, bound):
    found = []
    rest = len(images) - 1
    for tail in itertools.product(range(-bound, bound + 1), repeat=rest):
        coefficients = (first,) + tail
        if not any(coefficients):
            continue
        if _in_kernel(coefficients, images, n_generators):
            found.append(coefficients)
    return found


def _scan_task(args):
    return _scan(*args)


def _in_kernel(coefficients, images, n_generators):
    for i in range(n_generators):
        total = {}
        for c, image in zip(coefficients, images):
            if not c:
                continue
            for word, k in image[i].items():
                total[word] = total.get(word, 0) + c * k
        if any(total.values()):
            return False
    return True


def search_kernel(presentation, support_len, coeff_bound, workers=1, limits=None):
    """Every nonzero beta in ker d1 with entries on Irr words of length <= support_len
    and coefficients in [-coeff_bound, coeff_bound], in enumeration order."""
    ring = _ring_of(presentation, limits)
    m = len(ring.presentation.relators)
    if m == 0:
        return []
    basis = ring.basis(support_len)
    images = _kernel_images(ring, basis)
    n_generators = len(ring.generators)
    firsts = range(-coeff_bound, coeff_bound + 1)
    tasks = [(first, images, n_generators, coeff_bound) for first in firsts]
    logger.info("kernel search: %d coordinates, %d candidates, %d workers",
                len(images), (2 * coeff_bound + 1) ** len(images) - 1, workers)
    if workers > 1:
        with multiprocessing.Pool(processes=workers) as pool:
            chunks = pool.map(_scan_task, tasks)
    else:
        chunks = [_scan_task(task) for task in tasks]
    vectors = []
    size = len(basis)
    for coefficients in itertools.chain.from_iterable(chunks):
        entries = []
        for j in range(m):
            terms = {basis[k]: coefficients[j * size + k] for k in range(size)}
            entries.append(ring.element(Polynomial(terms)))
        vectors.append(ChainVector(tuple(entries), ring))
    return vectors


def torsion_identity_check(n, limits=None):
    """(1 - g)(1 + g + ... + g^(n-1)) = 0 in Z[<g | g^n>] with both factors nonzero."""
    if n < 2:
        raise FoxDivError(f"torsion identity needs n >= 2, got {n}", code="bad_order")
    ring = GroupRing(cyclic_group(n), limits)
    g = ring.generator("g")
    left = ring.one() - g
    right, power = ring.zero(), ring.one()
    for _ in range(n):
        right = right + power
        power = power * g
    return ring_mul(left, right).is_zero() and not left.is_zero() and not right.is_zero()
