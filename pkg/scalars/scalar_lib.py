"""
Exact coefficient ring.

Constants (the lambda-free scalars) are Gaussian rationals, elements of
sympy's ``QQ_I``. Scalars are rational functions of the formal eigenvalue
lambda, spelled ``L``, with Gaussian rational coefficients: elements of the
field ``QQ_I(L)``. Both representations are canonical, so equality is exact.
"""
import logging
from fractions import Fraction
from numbers import Rational

from django.utils.translation import gettext as _
from sympy import I, Symbol, sympify
from sympy.core.sympify import SympifyError
from sympy.polys.domains import CC, QQ, QQ_I
from sympy.polys.fields import FracElement, field
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import ring

from . import exceptions

LOGGER = logging.getLogger(__name__)

FIELD, L = field("L", QQ_I)
RING = FIELD.ring
COMPLEX_RING = ring("L", CC)[0]

Scalar = FracElement
Constant = QQ_I.dtype

LAMBDA_SYMBOL = "L"


def _qq(value):
    if isinstance(value, Rational):
        return QQ(int(value.numerator), int(value.denominator))
    return QQ.convert(value)


def constant(re=0, im=0) -> Constant:
    """
    Gaussian rational re + im*i from ints, Fractions or sympy rationals
    """
    return QQ_I(_qq(re), _qq(im))


ZERO = constant(0)
ONE = constant(1)
IMAGINARY_UNIT = constant(0, 1)


def real_part(c: Constant) -> Fraction:
    return Fraction(int(c.x.numerator), int(c.x.denominator))


def imag_part(c: Constant) -> Fraction:
    return Fraction(int(c.y.numerator), int(c.y.denominator))


def conj_constant(c: Constant) -> Constant:
    return QQ_I(c.x, -c.y)


def abs2(c: Constant) -> Fraction:
    """
    |c|**2 as an exact rational
    """
    return real_part(c) ** 2 + imag_part(c) ** 2


def as_complex(c: Constant) -> complex:
    return complex(float(real_part(c)), float(imag_part(c)))


def is_real(c: Constant) -> bool:
    return not c.y


def scalar(value) -> Scalar:
    """
    Lift a constant (or an int / Fraction) into the field QQ_I(L).
    """
    if isinstance(value, FracElement):
        return value
    if not isinstance(value, Constant):
        value = constant(value)
    return FIELD(value)


def lambda_power(k: int) -> Scalar:
    return L**k


def monomial(c: Constant, k: int) -> Scalar:
    """
    c * L**k
    """
    return FIELD(c) * L**k


def is_constant(s: Scalar) -> bool:
    return s.numer.is_ground and s.denom.is_ground


def _ground(poly):
    return poly.get(RING.zero_monom, ZERO)


def to_constant(s: Scalar) -> Constant:
    if not is_constant(s):
        raise exceptions.ScalarNotConstantError(
            _("{} depends on {}").format(render_scalar(s), LAMBDA_SYMBOL)
        )
    return QQ_I.quo(_ground(s.numer), _ground(s.denom))


def divide_lambda_power(s: Scalar, k: int) -> Scalar:
    return s / L**k


def add(a: Scalar, b: Scalar) -> Scalar:
    return scalar(a) + scalar(b)


def mul(a: Scalar, b: Scalar) -> Scalar:
    return scalar(a) * scalar(b)


def neg(a: Scalar) -> Scalar:
    return -scalar(a)


def inv(a: Scalar) -> Scalar:
    a = scalar(a)
    if not a:
        raise exceptions.ScalarDivisionByZeroError(_("Division by zero scalar"))
    return FIELD.one / a


def _conj_poly(poly):
    return RING.from_dict({monom: conj_constant(c) for monom, c in poly.items()})


def conj(a: Scalar) -> Scalar:
    """
    Conjugate the Gaussian rational coefficients; L is fixed.
    """
    a = scalar(a)
    return FIELD((_conj_poly(a.numer), _conj_poly(a.denom)))


def _is_even(poly):
    return all(monom[0] % 2 == 0 for monom in poly.keys())


def _in_ring(poly, target, squared, convert=lambda c: c):
    """
    ``poly`` rebuilt over ``target``, as a polynomial in L**2 when ``squared``
    """
    return target.from_dict(
        {((m[0] // 2,) if squared else m): convert(c) for m, c in poly.items()}
    )


def _eval_poly(poly, value, squared):
    return _in_ring(poly, RING, squared)(value)


def _eval_poly_float(poly, value, squared):
    return complex(_in_ring(poly, COMPLEX_RING, squared, as_complex)(value))


def evaluate(s: Scalar, value, squared=False):
    """
    Value of ``s`` at L = value.

    Arguments
    ---------
        value: int, Fraction or float
        squared: when True ``value`` is L**2 and ``s`` must be even in L

    Return
    ------
    Constant for exact input, complex for float input

    Raises
    ------
    ScalarPoleError
    """
    s = scalar(s)
    if squared and not (_is_even(s.numer) and _is_even(s.denom)):
        raise exceptions.OddPowerError(
            _("{} is not a function of {}^2").format(render_scalar(s), LAMBDA_SYMBOL)
        )
    if isinstance(value, float):
        denominator = _eval_poly_float(s.denom, value, squared)
        if denominator == 0:
            raise exceptions.ScalarPoleError(
                value, _("{} has a pole at {}").format(render_scalar(s), value)
            )
        return _eval_poly_float(s.numer, value, squared) / denominator
    point = constant(value)
    denominator = _eval_poly(s.denom, point, squared)
    if not denominator:
        raise exceptions.ScalarPoleError(
            value, _("{} has a pole at {}").format(render_scalar(s), value)
        )
    return QQ_I.quo(_eval_poly(s.numer, point, squared), denominator)


def render_constant(c: Constant) -> str:
    re, im = real_part(c), imag_part(c)
    if not im:
        return str(re)
    if im == 1:
        imaginary = "i"
    elif im == -1:
        imaginary = "-i"
    else:
        imaginary = f"{im}*i"
    if not re:
        return imaginary
    if imaginary.startswith("-"):
        return f"{re}{imaginary}"
    return f"{re}+{imaginary}"


def _render_term(c, exponent):
    if exponent == 0:
        return render_constant(c)
    power = LAMBDA_SYMBOL if exponent == 1 else f"{LAMBDA_SYMBOL}^{exponent}"
    if c == ONE:
        return power
    if c == -ONE:
        return f"-{power}"
    text = render_constant(c)
    if not is_real(c) and real_part(c):
        text = f"({text})"
    return f"{text}*{power}"


def render_poly(poly) -> str:
    if not poly:
        return "0"
    terms = [_render_term(c, monom[0]) for monom, c in sorted(poly.items())]
    return "+".join(terms).replace("+-", "-")


def render_scalar(s: Scalar) -> str:
    """
    ``num/den`` with lambda spelled L, e.g. ``(1+L^2)/(2)``
    """
    s = scalar(s)
    if is_constant(s):
        return render_constant(to_constant(s))
    if s.denom == RING.one:
        return render_poly(s.numer)
    return f"({render_poly(s.numer)})/({render_poly(s.denom)})"


def render_float(value) -> str:
    """
    15 significant digits in scientific notation
    """
    if isinstance(value, complex):
        if value.imag == 0:
            return f"{value.real:.14e}"
        return f"{value.real:.14e}{value.imag:+.14e}i"
    return f"{value:.14e}"


def parse_constant(text: str) -> Constant:
    """
    Parse ``3``, ``-1/2``, ``1/2+3/4*i`` or ``i`` into a Gaussian rational
    """
    try:
        expression = sympify(text.strip(), locals={"i": I, "I": I})
        return QQ_I.from_sympy(expression)
    except (SympifyError, CoercionFailed, TypeError, AttributeError) as e:
        raise exceptions.ScalarLiteralError(
            text, _("Invalid scalar literal {!r}: {}").format(text, e)
        )


def parse_scalar(text: str) -> Scalar:
    """
    Parse a rendered scalar such as ``(1+L^2)/(2)`` back into QQ_I(L)
    """
    try:
        expression = sympify(
            text.strip(), locals={"i": I, "I": I, LAMBDA_SYMBOL: Symbol(LAMBDA_SYMBOL)}
        )
        return FIELD.from_expr(expression)
    except (SympifyError, CoercionFailed, TypeError, ValueError, AttributeError) as e:
        raise exceptions.ScalarLiteralError(
            text, _("Invalid scalar literal {!r}: {}").format(text, e)
        )
