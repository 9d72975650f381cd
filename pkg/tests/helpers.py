"""Shared test utilities: exact-rational oracles and digit-string helpers."""

from decimal import Context, Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction


def sig_digit_count(text: str) -> int:
    """Number of significant digits in a decimal string like '-1.23e-7'."""
    mantissa = text.split("e")[0]
    return len(mantissa.lstrip("-0.").replace(".", ""))


def rel_diff(a, b) -> Decimal:
    a, b = Decimal(str(a)), Decimal(str(b))
    with localcontext(Context(prec=40)):
        return abs(a - b) / abs(b)


def fraction_to_decimal(f: Fraction, digits: int) -> Decimal:
    with localcontext(Context(prec=digits, rounding=ROUND_HALF_EVEN)):
        return Decimal(f.numerator) / Decimal(f.denominator)


def sin_rational_series(z: Fraction, terms: int = 80) -> Fraction:
    """Exact-rational Taylor prefix of sin(z); enough terms for |z| <= 6."""
    acc = Fraction(0)
    term = Fraction(z)
    m = 0
    for _ in range(terms):
        acc += term
        term *= -z * z
        term /= (2 * m + 2) * (2 * m + 3)
        m += 1
    return acc


def ulp_at(value: Decimal, digits: int) -> Decimal:
    """One unit in the last of `digits` significant places of value."""
    return Decimal(1).scaleb(value.adjusted() - digits + 1)
