"""
Verification suites.

Each suite checks one family of identities at finite depth with exact
equality and records one ``CheckResult`` per case. Pseudo-random states come
from ``random.Random(seed)``, created afresh for every suite, so a suite gives
the same cases whether it runs alone or inside ``all``.
"""
import logging
import random
from fractions import Fraction

from django.conf import settings
from django.utils.translation import gettext as _

from coherent.pairing import (
    divergence_certificate,
    induced_coefficients,
    norm_squared,
    renormalized_pairing,
    stabilized_level_pairing,
)
from coherent.random_states import (
    random_cascade,
    random_constant,
    random_leaves,
    random_x_combination,
    x_basis,
)
from coherent.states import (
    XCombination,
    build_delta,
    build_x,
    cascade_from_leaves,
    cascade_violations,
    delta_disk_coefficients,
    fcs_to_fock,
    fock_to_fcs,
    residual_at_boundary,
    x_combination_coefficients,
    x_disk_coefficients,
)
from fock.fock_lib import (
    FockVector,
    annihilate,
    basis_vector,
    create,
    inner_product,
    sum_vectors,
    zero_vector,
)
from padic_fn.distributions import (
    GeneralizedFunction,
    TestFunction,
    dk_functional_norm,
    evaluate,
    gf_delta,
    gf_pair,
    haar_integral,
    indicator,
    l2_inner,
    multiply,
)
from scalars.scalar_lib import abs2, constant, real_part
from words.word_lib import (
    PAdicPoint,
    Word,
    format_word,
    word_sort_key,
    words_of_length,
    words_up_to,
)

from . import choices, exceptions
from .maps import equivalent, phi, phi_inverse, phi_matrix, phi_prime, phi_prime_inverse
from .reports import VerificationReport

LOGGER = logging.getLogger(__name__)

RANDOM_TEST_FUNCTIONS = 50
THRESHOLD_DEPTHS = range(4, 13)


def _states():
    return settings.FCS_SUITE_STATES


def _top(depth):
    """
    Longest X_I paired against each other
    """
    return min(depth, settings.FCS_SUITE_MAX_LENGTH)


def _random_point(p, resolution, rng):
    return PAdicPoint(p, [rng.randrange(p) for unused in range(resolution)])


def _random_test_function(p, level, rng):
    return TestFunction(
        p, level, {w: random_constant(rng) for w in words_of_length(p, level)}
    )


def _key(*words):
    return tuple(word_sort_key(w) for w in words)


def verify_ccr(report, p, depth, rng):
    for w in words_up_to(p, depth - 1):
        e_w = basis_vector(w, depth)
        for i in range(p):
            for j in range(p):
                report.check(
                    "A_i A+_j e_w = delta_ij e_w",
                    "w={} i={} j={}".format(format_word(w), i, j),
                    annihilate(i, create(j, e_w)),
                    e_w if i == j else zero_vector(p, depth),
                    _key(w) + (i, j),
                )
    for n in range(_states()):
        shallow = fcs_to_fock(random_cascade(p, depth - 1, rng))
        u = FockVector(p, depth, dict(shallow.items()))
        v = fcs_to_fock(random_cascade(p, depth, rng))
        for i in range(p):
            report.check(
                "<A+_i u, v> = <u, A_i v>",
                "state={} i={}".format(n, i),
                inner_product(create(i, u), v),
                inner_product(u, annihilate(i, v)),
                (n, i),
            )


def verify_cascade(report, p, depth, rng):
    for n in range(_states()):
        dc = random_cascade(p, depth, rng)
        report.check("cascade violations", "state={}".format(n), cascade_violations(dc), [], (n,))
        report.check(
            "levels of the Fock vector", "state={}".format(n), fock_to_fcs(fcs_to_fock(dc)), dc, (n,)
        )


def verify_xrelat(report, p, depth, rng):
    for w in words_up_to(p, depth - 1):
        refined = sum_vectors(
            p, depth, (build_x(w.append(j), depth) for j in range(p))
        ).scale(Fraction(1, p))
        report.check(
            "X_I = p^-1 sum_j X_Ij", "I={}".format(format_word(w)), build_x(w, depth), refined, _key(w)
        )
        total = TestFunction(p, len(w) + 1)
        for j in range(p):
            total = total + indicator(w.append(j))
        report.check(
            "theta_I = sum_j theta_Ij", "I={}".format(format_word(w)), indicator(w), total, _key(w)
        )


def verify_lemma2(report, p, depth, rng):
    for n in range(_states()):
        dc = random_cascade(p, depth, rng)
        for w in words_up_to(p, depth):
            combination = XCombination.x(w)
            case = "state={} I={}".format(n, format_word(w))
            report.check(
                "(Psi, X_I) = p^|I| Psi_I",
                case,
                renormalized_pairing(dc, combination),
                constant(p ** len(w)) * dc[w],
                (n,) + _key(w),
            )
            stable = [
                stabilized_level_pairing(dc, combination, k)
                for k in range(len(w), depth + 1)
            ]
            report.check(
                "S_k constant for k >= |I|", case, stable, [stable[0]] * len(stable), (n,) + _key(w)
            )


def verify_corollary4(report, p, depth, rng):
    top = _top(depth)
    words = list(words_up_to(p, top))
    for i in words:
        dc = x_disk_coefficients(i, top + 1)
        theta_i = indicator(i)
        normalized_i = theta_i.scale(constant(p ** len(i)))
        for j in words:
            theta_j = indicator(j)
            pairing = renormalized_pairing(dc, XCombination.x(j))
            case = "I={} J={}".format(format_word(i), format_word(j))
            report.check(
                "(X_I, X_J) = p^(|I|+|J|) int theta_I theta_J",
                case,
                pairing,
                constant(p ** (len(i) + len(j))) * haar_integral(multiply(theta_i, theta_j)),
                _key(i, j),
            )
            # theta / ||theta||**2 = p**|I| theta
            report.check(
                "(X_I, X_J) = (theta_I/|theta_I|^2, theta_J/|theta_J|^2)",
                case,
                pairing,
                l2_inner(normalized_i, theta_j.scale(constant(p ** len(j)))),
                _key(i, j),
            )


def verify_example6(report, p, depth, rng):
    for n in range(RANDOM_TEST_FUNCTIONS):
        x = _random_point(p, depth, rng)
        f = _random_test_function(p, rng.randint(0, depth), rng)
        u = phi_prime(delta_disk_coefficients(x, depth))
        case = "x={} f={}".format(x, n)
        report.check("phi'(delta_x) = delta(x - .)", case, u, gf_delta(x, depth), (n,))
        report.check("(phi'(delta_x), f) = f(x)", case, gf_pair(u, f), evaluate(f, x), (n,))


def verify_lemma7(report, p, depth, rng):
    for n in range(_states()):
        leaves = random_leaves(p, depth, rng)
        u = GeneralizedFunction(cascade_from_leaves(p, depth, leaves))
        dc = phi_prime_inverse(u)
        report.check("cascade violations", "state={}".format(n), cascade_violations(dc), [], (n,))
        report.check("phi'(phi'^-1(u)) = u", "state={}".format(n), phi_prime(dc), u, (n,))
        weight = constant(Fraction(1, p**depth))
        for w, value in leaves.items():
            report.check(
                "p^-D (Psi, X_I) = leaf_I",
                "state={} I={}".format(n, format_word(w)),
                weight * renormalized_pairing(dc, XCombination.x(w)),
                value,
                (n,) + _key(w),
            )


def verify_lemma10(report, p, depth, rng):
    for n in range(_states()):
        combination = random_x_combination(p, depth, rng)
        induced = induced_coefficients(combination, depth)
        case = "combination={}".format(n)
        report.check("cascade violations", case, cascade_violations(induced), [], (n,))
        report.check(
            "p^-|J| (Phi, X_J) = int_J phi(Phi)",
            case,
            induced,
            x_combination_coefficients(combination, depth),
            (n,),
        )


def verify_intertwining(report, p, depth, rng):
    top = _top(depth)
    combinations = x_basis(p, top) + [
        random_x_combination(p, top, rng) for unused in range(_states())
    ]
    points = [_random_point(p, depth, rng) for unused in range(2)]
    states = [("cascade{}".format(n), random_cascade(p, depth, rng)) for n in range(_states())]
    states += [("delta:{}".format(x), delta_disk_coefficients(x, depth)) for x in points]
    states += [
        ("X:{}".format(format_word(w)), x_disk_coefficients(w, depth))
        for w in words_up_to(p, top)
    ]
    images = [phi(combination) for combination in combinations]
    for a, (label, dc) in enumerate(states):
        u = phi_prime(dc)
        for b, combination in enumerate(combinations):
            report.check(
                "(phi' Psi, phi Phi) = (Psi, Phi)",
                "Psi={} Phi={}".format(label, b),
                gf_pair(u, images[b]),
                renormalized_pairing(dc, combination),
                (a, b),
            )
    for a, x in enumerate(points):
        dc = delta_disk_coefficients(x, depth)
        for b, combination in enumerate(combinations):
            report.check(
                "(delta_x, Phi) = phi(Phi)(x)",
                "x={} Phi={}".format(x, b),
                renormalized_pairing(dc, combination),
                evaluate(images[b], x),
                (a, b),
            )
    for a, left in enumerate(combinations):
        conjugate = x_combination_coefficients(left, depth).conjugate()
        for b, right in enumerate(combinations):
            report.check(
                "(phi Phi, phi Phi')_L2 = (conj Phi, Phi')",
                "Phi={} Phi'={}".format(a, b),
                l2_inner(images[a], images[b]),
                renormalized_pairing(conjugate, right),
                (a, b),
            )


def verify_threshold(report, p, depth, rng):
    resolution = max(THRESHOLD_DEPTHS)
    x = PAdicPoint(p, [0] * resolution)
    truncated = norm_squared(delta_disk_coefficients(x, resolution))
    for lambda2 in (Fraction(p), Fraction(5 * p, 4)):
        certificate = divergence_certificate(x, lambda2, THRESHOLD_DEPTHS)
        case = "t={} partial sums {}..{}".format(
            lambda2, certificate.partial_sums[0], certificate.partial_sums[-1]
        )
        report.check("|delta_x|^2 partial sums nondecreasing", case, certificate.monotone, True)
        report.check("|delta_x|^2 level ratio >= 1", case, certificate.diverges, True)
        report.check(
            "|delta_x|^2 has no finite tail",
            case,
            truncated.certificate(lambda2, THRESHOLD_DEPTHS).partial_sums,
            certificate.partial_sums,
        )
    t = Fraction(p, 2)
    closed = norm_squared(XCombination.x(Word(p))).evaluate(t)
    deep = norm_squared(x_disk_coefficients(Word(p), resolution))
    partial = sum((deep.coefficient(k) * constant(t**k) for k in range(resolution + 1)), constant(0))
    ratio = t / p
    tail = constant(ratio ** (resolution + 1) / (1 - ratio))
    report.check(
        "|X_e|^2 = partial sum + geometric tail",
        "t={} depth={}".format(t, resolution),
        closed,
        partial + tail,
    )


def verify_eigen(report, p, depth, rng):
    for n in range(_states()):
        v = fcs_to_fock(random_cascade(p, depth, rng))
        report.check(
            "A Psi - L Psi supported at depth", "state={}".format(n), residual_at_boundary(v), True, (0, n)
        )
    for w in words_up_to(p, depth):
        report.check(
            "A X_I - L X_I supported at depth",
            "I={}".format(format_word(w)),
            residual_at_boundary(build_x(w, depth)),
            True,
            (1,) + _key(w),
        )
    x = _random_point(p, depth, rng)
    report.check(
        "A delta_x - L delta_x supported at depth",
        "x={}".format(x),
        residual_at_boundary(build_delta(x, depth)),
        True,
        (2,),
    )


def verify_lemma3(report, p, depth, rng):
    top = _top(depth)
    for w, entry in phi_matrix(p, top):
        combination = XCombination.x(w)
        case = "I={}".format(format_word(w))
        report.check("phi(X_I) = p^|I| theta_I", case, phi(combination), indicator(w).scale(entry), _key(w))
        report.check(
            "phi^-1(phi(X_I)) ~ X_I", case, equivalent(phi_inverse(phi(combination, top)), combination), True, _key(w)
        )
        report.check(
            "|phi(X_I)|^2 = p^|I|", case, l2_inner(phi(combination), phi(combination)), entry, _key(w)
        )
    for n in range(_states()):
        f = _random_test_function(p, rng.randint(0, top), rng)
        report.check("phi(phi^-1(f)) = f", "f={}".format(n), phi(phi_inverse(f)), f, (n,))


def verify_lemma5(report, p, depth, rng):
    states = [random_cascade(p, depth, rng) for unused in range(_states())]
    states.append(delta_disk_coefficients(_random_point(p, depth, rng), depth))
    for n, dc in enumerate(states):
        u = phi_prime(dc)
        for k in range(depth + 1):
            norm = dk_functional_norm(u, k)
            case = "state={} k={}".format(n, k)
            attained = max(abs2(gf_pair(u, indicator(w))) for w in words_up_to(p, k))
            report.check("|u|_Dk = max |(u, theta_I)|", case, norm.modulus_squared, attained, (n, k))
            f = TestFunction(
                p,
                k,
                {w: random_constant(rng, complex_values=False) for w in words_of_length(p, k)},
            )
            total = sum((abs(real_part(value)) for w, value in f.items()), Fraction(0))
            report.check(
                "|(u, f)| <= |u|_Dk sum |f(I)|",
                case,
                abs2(gf_pair(u, f)) <= norm.modulus_squared * total**2,
                True,
                (n, k),
            )


SUITES = {
    choices.CCR: verify_ccr,
    choices.CASCADE: verify_cascade,
    choices.XRELAT: verify_xrelat,
    choices.LEMMA2: verify_lemma2,
    choices.COROLLARY4: verify_corollary4,
    choices.EXAMPLE6: verify_example6,
    choices.LEMMA7: verify_lemma7,
    choices.LEMMA10: verify_lemma10,
    choices.INTERTWINE: verify_intertwining,
    choices.THRESHOLD: verify_threshold,
    choices.EIGEN: verify_eigen,
    choices.LEMMA3: verify_lemma3,
    choices.LEMMA5: verify_lemma5,
}


def run_suite(suite, p, depth, seed) -> VerificationReport:
    """
    Run one suite, or every suite for ``all``

    Raises
    ------
    UnknownSuiteError
    SuiteDepthError
        depth < 1
    """
    if suite == choices.ALL:
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise exceptions.UnknownSuiteError(
            suite,
            _("Unknown suite {!r}, expected one of {}").format(
                suite, ", ".join(choices.SUITE_NAMES)
            ),
        )
    if depth < 1:
        raise exceptions.SuiteDepthError(
            depth, _("Verification suites need depth >= 1, got {}").format(depth)
        )
    report = VerificationReport(suite, p, depth, seed)
    for name in names:
        LOGGER.info("Running suite %s p=%s depth=%s seed=%s", name, p, depth, seed)
        partial = VerificationReport(name, p, depth, seed)
        SUITES[name](partial, p, depth, random.Random(seed))
        report.extend(partial)
    return report
