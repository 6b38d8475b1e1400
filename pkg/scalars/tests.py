import random
from fractions import Fraction

from django.test import SimpleTestCase

from scalars import exceptions
from scalars.scalar_lib import (
    FIELD,
    ONE,
    ZERO,
    L,
    abs2,
    add,
    as_complex,
    conj,
    constant,
    divide_lambda_power,
    evaluate,
    inv,
    is_constant,
    mul,
    neg,
    parse_constant,
    parse_scalar,
    render_constant,
    render_float,
    render_scalar,
    scalar,
    to_constant,
)
from scalars.series import GeometricSeriesValue, renormalized_limit


def _random_scalar(rng):
    numerator = FIELD.zero
    for k in range(3):
        numerator += scalar(constant(rng.randint(-3, 3), rng.randint(-2, 2))) * L**k
    denominator = scalar(constant(rng.randint(1, 3))) + scalar(rng.randint(-2, 2)) * L
    return numerator / denominator


class ScalarArithmeticTest(SimpleTestCase):
    def test_add_fractions(self):
        self.assertEqual(
            scalar(Fraction(5, 6)), add(scalar(Fraction(1, 2)), scalar(Fraction(1, 3)))
        )

    def test_mul_lambda(self):
        self.assertEqual(L**2, mul(L, L))

    def test_conj_fixes_lambda(self):
        i = scalar(constant(0, 1))
        self.assertEqual(-i * L, conj(i * L))

    def test_neg(self):
        self.assertEqual(scalar(-3), neg(scalar(3)))

    def test_inv_of_zero(self):
        with self.assertRaises(exceptions.ScalarDivisionByZeroError):
            inv(FIELD.zero)

    def test_field_axioms_hold_exactly(self):
        rng = random.Random(11)
        for unused in range(20):
            a, b, c = (_random_scalar(rng) for unused in range(3))
            self.assertEqual(a + (b + c), (a + b) + c)
            self.assertEqual(a * (b * c), (a * b) * c)
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a + b, b + a)
            self.assertEqual(a * b, b * a)
            if a:
                self.assertEqual(FIELD.one, a * inv(a))
            self.assertEqual(conj(a * b), conj(a) * conj(b))
            self.assertEqual(a, conj(conj(a)))

    def test_constants(self):
        self.assertTrue(is_constant(scalar(Fraction(3, 4))))
        self.assertFalse(is_constant(L / 2))
        self.assertEqual(constant(Fraction(3, 4)), to_constant(scalar(Fraction(3, 4))))

    def test_to_constant_rejects_lambda(self):
        with self.assertRaises(exceptions.ScalarNotConstantError):
            to_constant(L + 1)

    def test_divide_lambda_power(self):
        s = scalar(constant(1, 1)) * L**3
        self.assertEqual(constant(1, 1), to_constant(divide_lambda_power(s, 3)))

    def test_abs2(self):
        self.assertEqual(Fraction(25, 4), abs2(constant(Fraction(3, 2), 2)))


class EvaluateTest(SimpleTestCase):
    def test_lambda_squared_at_one(self):
        self.assertEqual(ONE, evaluate(L**2, 1))

    def test_pole(self):
        s = FIELD.one / (FIELD.one - L**2 / 2)
        with self.assertRaises(exceptions.ScalarPoleError):
            evaluate(s, 2, squared=True)

    def test_regular_point(self):
        s = FIELD.one / (FIELD.one - L**2 / 2)
        self.assertEqual(constant(2), evaluate(s, 1))

    def test_float(self):
        s = FIELD.one / (FIELD.one - L**2 / 2)
        self.assertAlmostEqual(2.0, evaluate(s, 1.0).real)

    def test_squared_requires_even_function(self):
        with self.assertRaises(exceptions.OddPowerError):
            evaluate(L + 1, 4, squared=True)

    def test_squared_matches_the_square_root(self):
        s = (L**4 + scalar(constant(0, 1)) * L**2) / (FIELD.one + L**2)
        self.assertEqual(constant(Fraction(4, 3), Fraction(2, 3)), evaluate(s, 2, squared=True))
        self.assertEqual(evaluate(s, 2), evaluate(s, 4, squared=True))

    def test_float_squared(self):
        s = (L**4 + scalar(constant(0, 1)) * L**2) / (FIELD.one + L**2)
        value = evaluate(s, 2.0, squared=True)
        self.assertAlmostEqual(4 / 3, value.real)
        self.assertAlmostEqual(2 / 3, value.imag)


class RenderTest(SimpleTestCase):
    def test_rational_function(self):
        self.assertEqual("(1+L^2)/(2)", render_scalar((FIELD.one + L**2) / 2))

    def test_integer(self):
        self.assertEqual("4", render_scalar(scalar(4)))

    def test_gaussian_constant(self):
        self.assertEqual("1/2-3/4*i", render_constant(constant(Fraction(1, 2), Fraction(-3, 4))))
        self.assertEqual("i", render_constant(constant(0, 1)))

    def test_polynomial(self):
        self.assertEqual("L-L^3", render_scalar(L - L**3))

    def test_float(self):
        self.assertEqual("5.00000000000000e-01", render_float(0.5))


class ParseConstantTest(SimpleTestCase):
    def test_rational(self):
        self.assertEqual(constant(Fraction(-1, 2)), parse_constant("-1/2"))

    def test_gaussian(self):
        self.assertEqual(
            constant(Fraction(1, 2), Fraction(3, 4)), parse_constant("1/2+3/4*i")
        )

    def test_round_trip_with_render(self):
        c = constant(Fraction(2, 3), Fraction(-5, 7))
        self.assertEqual(c, parse_constant(render_constant(c)))

    def test_invalid(self):
        with self.assertRaises(exceptions.ScalarLiteralError):
            parse_constant("x+1")


class GeometricSeriesValueTest(SimpleTestCase):
    def _xi_xi(self):
        # <X_I, X_I> for p=2, |I|=2
        return GeometricSeriesValue(2, [ONE, ONE, ONE], ONE, 2)

    def test_polynomial_only_has_zero_limit(self):
        g = GeometricSeriesValue(2, [ONE, ONE, ONE], ZERO, 2)
        self.assertEqual(ZERO, renormalized_limit(g, 2))

    def test_limit_of_x_self_pairing(self):
        self.assertEqual(constant(4), renormalized_limit(self._xi_xi(), 2))

    def test_limit_is_p_power_times_tail_constant(self):
        c = constant(Fraction(3, 5), 1)
        g = GeometricSeriesValue(3, [ONE], c, 4)
        self.assertEqual(c * constant(81), renormalized_limit(g, 3))

    def test_limit_rejects_other_p(self):
        with self.assertRaises(exceptions.SeriesMismatchError):
            renormalized_limit(self._xi_xi(), 3)

    def test_rebase_keeps_value(self):
        g = self._xi_xi()
        rebased = g.rebase(5)
        self.assertEqual(g, rebased)
        self.assertEqual(constant(Fraction(1, 8)), rebased.tail_constant)
        self.assertEqual(constant(Fraction(1, 2)), rebased.coefficient(3))
        self.assertEqual(g.as_scalar(), rebased.as_scalar())

    def test_rebase_backwards_fails(self):
        with self.assertRaises(exceptions.SeriesRebaseError):
            self._xi_xi().rebase(1)

    def test_add_aligns_tails(self):
        a = GeometricSeriesValue(2, [ONE], ONE, 0)
        b = GeometricSeriesValue(2, [ONE, ONE], ONE, 1)
        total = a + b
        self.assertEqual(1, total.tail_start)
        self.assertEqual(
            renormalized_limit(a, 2) + renormalized_limit(b, 2),
            renormalized_limit(total, 2),
        )
        self.assertEqual(a.as_scalar() + b.as_scalar(), total.as_scalar())

    def test_exact_evaluation_matches_closed_form(self):
        g = GeometricSeriesValue(2, [ONE], ONE, 0)
        # 1 + sum_{k>=1} (t/2)**k = 1/(1 - t/2)
        self.assertEqual(constant(2), g.evaluate(Fraction(1)))
        self.assertEqual(g.evaluate(Fraction(1, 3)), evaluate(g.as_scalar(), Fraction(1, 3), squared=True))

    def test_evaluation_at_threshold_is_a_pole(self):
        with self.assertRaises(exceptions.ScalarPoleError):
            self._xi_xi().evaluate(Fraction(2))

    def test_prelimit_at_threshold_equals_limit(self):
        g = self._xi_xi()
        self.assertEqual(renormalized_limit(g, 2), g.prelimit(Fraction(2)))

    def test_prelimit_converges_linearly(self):
        g = self._xi_xi()
        exact = as_complex(renormalized_limit(g, 2))
        for eps in (1e-2, 1e-4, 1e-6):
            error = abs(g.prelimit(2 * (1 - eps)) - exact)
            self.assertLessEqual(error, 10 * eps * (abs(exact) + 1))
        for eps in (1e-2, 1e-3):
            ratio = abs(g.prelimit(2 * (1 - eps / 2)) - exact) / abs(
                g.prelimit(2 * (1 - eps)) - exact
            )
            self.assertTrue(0.4 <= ratio <= 0.6, ratio)

    def test_truncated(self):
        g = GeometricSeriesValue(2, [ONE], ONE, 0)
        self.assertEqual(FIELD.one + L**2 / 2 + L**4 / 4, g.truncated(2))


class ParseScalarTest(SimpleTestCase):
    def test_round_trip_with_render(self):
        for s in (
            (FIELD.one + L**2) / 2,
            scalar(constant(Fraction(1, 2), Fraction(1, 3))) * L**2,
            L**3 / 8,
            scalar(4),
        ):
            self.assertEqual(s, parse_scalar(render_scalar(s)))

    def test_invalid(self):
        with self.assertRaises(exceptions.ScalarLiteralError):
            parse_scalar("y*L")
