"""Arbitrary-precision real arithmetic for the expansion and series machinery.

Everything runs on the stdlib ``decimal`` module.  A :class:`PrecisionContext`
fixes the number of significant decimal digits and round-half-even rounding,
which makes every result reproducible bit-for-bit across platforms.  The
gamma-function family lives here as well: integer and half-integer arguments
take an exact path (rational multiples of 1 or sqrt(pi)), everything else goes
through upward recurrence plus a Stirling series.
"""

from __future__ import annotations

import math
import threading
from decimal import Context, Decimal, ROUND_HALF_EVEN, localcontext
from decimal import DivisionByZero, InvalidOperation, Overflow
from fractions import Fraction

Real = Decimal
Rational = Fraction

_ZERO = Decimal(0)
_ONE = Decimal(1)
_TWO = Decimal(2)


class DomainError(ValueError):
    """An argument is outside the domain an operation supports."""


def to_fraction(x) -> Fraction:
    """Exact rational value of any accepted numeric input.

    Decimal and float inputs are exact rationals by construction, so this
    conversion is lossless for every representable input.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (Decimal, float, str)):
        return Fraction(Decimal(str(x)) if isinstance(x, str) else Decimal(x))
    raise TypeError(f"unsupported numeric type {type(x).__name__}")


class PrecisionContext:
    """Working/display precision plus per-context caches.

    working_digits is the precision of all internal arithmetic and must leave
    at least 10 guard digits above display_digits.  Rounding is fixed to
    round-half-even, so identical inputs give identical outputs everywhere.
    Instances are immutable after construction and safe to share between
    threads.
    """

    def __init__(self, working_digits: int = 64, display_digits: int = 34):
        if working_digits < 1 or display_digits < 1:
            raise ValueError("digit counts must be positive")
        if working_digits < display_digits + 10:
            raise ValueError("working_digits must be >= display_digits + 10")
        self.working_digits = working_digits
        self.display_digits = display_digits
        self.dec = Context(
            prec=working_digits,
            rounding=ROUND_HALF_EVEN,
            Emin=-999999999,
            Emax=999999999,
            traps=[InvalidOperation, DivisionByZero, Overflow],
        )
        self._cache: dict = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"PrecisionContext(working_digits={self.working_digits}, display_digits={self.display_digits})"

    def __eq__(self, other):
        return (
            isinstance(other, PrecisionContext)
            and self.working_digits == other.working_digits
            and self.display_digits == other.display_digits
        )

    def __hash__(self):
        return hash((self.working_digits, self.display_digits))

    def real(self, x) -> Real:
        """Convert an int/Fraction/Decimal/float/str to a Decimal at working precision."""
        if isinstance(x, Decimal):
            return x
        if isinstance(x, int):
            return self.dec.create_decimal(x)
        if isinstance(x, Fraction):
            with localcontext(self.dec):
                return Decimal(x.numerator) / Decimal(x.denominator)
        if isinstance(x, str):
            return Decimal(x)
        if isinstance(x, float):
            return Decimal(x)  # exact binary expansion; deterministic
        raise TypeError(f"unsupported numeric type {type(x).__name__}")

    def _cached(self, key, build):
        try:
            return self._cache[key]
        except KeyError:
            pass
        value = build()
        with self._lock:
            self._cache.setdefault(key, value)
        return self._cache[key]

    @property
    def pi(self) -> Real:
        return self._cached("pi", lambda: _compute_pi(self.working_digits))

    @property
    def sqrt_pi(self) -> Real:
        return self._cached("sqrt_pi", lambda: self.pi.sqrt(self.dec))


DEFAULT_CONTEXT = PrecisionContext()


# ---------------------------------------------------------------------------
# pi (Machin formula in scaled-integer arithmetic; exact and deterministic)

def _atan_inv_scaled(x: int, one: int) -> int:
    # one/x - one/(3 x^3) + one/(5 x^5) - ...
    val = one // x
    total = val
    x2 = x * x
    n = 1
    sign = 1
    while val:
        val //= x2
        n += 2
        sign = -sign
        total += sign * (val // n)
    return total


def _compute_pi(prec: int) -> Decimal:
    extra = 12
    one = 10 ** (prec + extra)
    scaled = 16 * _atan_inv_scaled(5, one) - 4 * _atan_inv_scaled(239, one)
    with localcontext(Context(prec=prec, rounding=ROUND_HALF_EVEN)):
        return Decimal(scaled) / Decimal(one)


# ---------------------------------------------------------------------------
# Bernoulli numbers (exact rationals, shared across contexts)

_bernoulli: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def _bernoulli_number(m: int) -> Fraction:
    """B_m via the defining recurrence sum_{j<=m} C(m+1, j) B_j = 0."""
    with _bernoulli_lock:
        while len(_bernoulli) <= m:
            n = len(_bernoulli)
            acc = Fraction(0)
            for j in range(n):
                acc += math.comb(n + 1, j) * _bernoulli[j]
            _bernoulli.append(-acc / (n + 1))
    return _bernoulli[m]


# ---------------------------------------------------------------------------
# gamma family

def double_factorial(n: int) -> int:
    """n!! for n >= -1, with (-1)!! = 0!! = 1."""
    if n < -1:
        raise DomainError("double_factorial requires n >= -1")
    return math.prod(range(n, 0, -2)) if n > 0 else 1


def binomial(n: int, k: int) -> int:
    """Pascal-triangle binomial; 0 outside the triangle (k < 0 or k > n)."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _stirling_log_gamma(x: Decimal, work: Context, digits: int) -> Decimal:
    """log Gamma(x) for x at or above the shift threshold.

    Truncation bound: the Stirling series for real x > 0 has error smaller in
    magnitude than the first omitted term, so summing until terms fall below
    10^-(digits+4) in absolute value bounds the result's absolute error by the
    same amount.  The shift threshold guarantees the terms reach that size
    while still decreasing.
    """
    with localcontext(work):
        ln2pi_half = work.create_decimal(2 * _pi_for_prec(work.prec)).ln() / 2
        half = Decimal("0.5")
        acc = (x - half) * x.ln() - x + ln2pi_half
        tol = Decimal(10) ** (-(digits + 4))
        x2 = x * x
        powx = _ONE / x
        prev = None
        for j in range(1, 420):
            b = _bernoulli_number(2 * j)
            term = (
                Decimal(b.numerator)
                / Decimal(b.denominator)
                / (2 * j * (2 * j - 1))
                * powx
            )
            acc += term
            at = abs(term)
            if at < tol:
                break
            if prev is not None and at >= prev:
                raise RuntimeError("Stirling series stopped decreasing; shift threshold too low")
            prev = at
            powx /= x2
        else:
            raise RuntimeError("Stirling series did not converge")
        return +acc


_pi_cache_by_prec: dict[int, Decimal] = {}


def _pi_for_prec(prec: int) -> Decimal:
    try:
        return _pi_cache_by_prec[prec]
    except KeyError:
        value = _compute_pi(prec)
        _pi_cache_by_prec[prec] = value
        return value


def _stirling_threshold(digits: int) -> int:
    # e^(-2 pi x) <= 10^-(digits+6) makes the series floor low enough
    return int(math.ceil((digits + 6) * math.log(10) / (2 * math.pi))) + 5


def _gamma_general(fx: Fraction, ctx: PrecisionContext) -> Decimal:
    digits = ctx.working_digits
    work = Context(prec=digits + 10, rounding=ROUND_HALF_EVEN, Emin=-999999999, Emax=999999999)
    threshold = _stirling_threshold(digits)
    with localcontext(work):
        x = Decimal(fx.numerator) / Decimal(fx.denominator)
        shift_product = _ONE
        while x < threshold:
            shift_product *= x
            x += 1
        lg = _stirling_log_gamma(x, work, digits)
        value = lg.exp() / shift_product
    return ctx.dec.create_decimal(value)


def gamma(x, ctx: PrecisionContext = DEFAULT_CONTEXT) -> Real:
    """Gamma(x) for x > 0 to working-precision relative accuracy.

    Positive integers use (n-1)! exactly; half-odd-integers use
    Gamma(n + 1/2) = (2n-1)!! sqrt(pi) / 2^n.  Other arguments are shifted
    upward by the recurrence and finished with a Stirling series.
    """
    fx = to_fraction(x)
    if fx <= 0:
        raise DomainError(f"gamma requires x > 0, got {x}")
    if fx.denominator == 1:
        def build_int():
            with localcontext(ctx.dec):
                return +Decimal(math.factorial(fx.numerator - 1))
        return ctx._cached(("gamma", fx), build_int)
    if fx.denominator == 2:
        def build_half():
            n = (fx.numerator - 1) // 2  # x = n + 1/2
            with localcontext(ctx.dec):
                return ctx.sqrt_pi * Decimal(double_factorial(2 * n - 1)) / (_TWO ** n)
        return ctx._cached(("gamma", fx), build_half)
    return _gamma_general(fx, ctx)


def reciprocal_gamma(x, ctx: PrecisionContext = DEFAULT_CONTEXT) -> Real:
    """1/Gamma(x) for any real x; exactly 0 at the poles (x = 0, -1, -2, ...)."""
    fx = to_fraction(x)
    if fx.denominator == 1 and fx <= 0:
        return _ZERO
    if fx > 0:
        with localcontext(ctx.dec):
            return _ONE / gamma(fx, ctx)
    # negative non-integer: reflection 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
    with localcontext(ctx.dec):
        return gamma(1 - fx, ctx) * _sin_pi(fx, ctx) / ctx.pi


def _sin_pi(fx: Fraction, ctx: PrecisionContext) -> Decimal:
    """sin(pi x) with exact range reduction on the rational argument."""
    r = fx - 2 * (fx.numerator // (2 * fx.denominator))  # x mod 2, in [0, 2)
    sign = 1
    if r > 1:
        r -= 1
        sign = -1
    if r > Fraction(1, 2):
        r = 1 - r
    # now 0 <= r <= 1/2; Taylor series of sin(pi r)
    work = Context(prec=ctx.working_digits + 5, rounding=ROUND_HALF_EVEN)
    with localcontext(work):
        u = ctx.pi * Decimal(r.numerator) / Decimal(r.denominator)
        u2 = u * u
        term = u
        acc = u
        tol = Decimal(10) ** (-(ctx.working_digits + 4))
        m = 1
        while abs(term) > tol:
            term *= -u2 / ((2 * m) * (2 * m + 1))
            acc += term
            m += 1
        value = sign * acc
    return ctx.dec.create_decimal(value)


def pochhammer(x, n, ctx: PrecisionContext = DEFAULT_CONTEXT) -> Real:
    """Rising factorial (x)_n.

    Integer n >= 0 is the finite product x (x+1) ... (x+n-1), defined for any
    x (and possibly 0).  Any other n goes through Gamma(x+n)/Gamma(x), which
    needs x > 0 and x + n > 0.
    """
    fn = to_fraction(n)
    if fn.denominator == 1 and fn >= 0:
        with localcontext(ctx.dec):
            acc = _ONE
            base = ctx.real(x)
            for i in range(int(fn)):
                acc *= base + i
            return +acc
    fx = to_fraction(x)
    if fx <= 0 or fx + fn <= 0:
        raise DomainError("pochhammer with non-integer count requires x > 0 and x + n > 0")
    with localcontext(ctx.dec):
        return gamma(fx + fn, ctx) / gamma(fx, ctx)


def pochhammer_fraction(x: Fraction, n: int) -> Fraction:
    """Exact rational rising factorial for integer n >= 0."""
    if n < 0:
        raise DomainError("pochhammer_fraction requires n >= 0")
    acc = Fraction(1)
    for i in range(n):
        acc *= x + i
    return acc


def beta(a, b, ctx: PrecisionContext = DEFAULT_CONTEXT) -> Real:
    """B(a, b) = Gamma(a) Gamma(b) / Gamma(a+b) for a, b > 0.

    When either argument is a positive integer m the ratio collapses to
    (m-1)! / (other)_m, which avoids evaluating Gamma at a huge shifted
    argument (the scale parameter can be as large as 2^20 here).
    """
    fa, fb = to_fraction(a), to_fraction(b)
    if fa <= 0 or fb <= 0:
        raise DomainError("beta requires positive arguments")
    if fb.denominator != 1 and fa.denominator == 1:
        fa, fb = fb, fa
    with localcontext(ctx.dec):
        if fb.denominator == 1:
            m = int(fb)
            return +(Decimal(math.factorial(m - 1)) / pochhammer(fa, m, ctx))
        return gamma(fa, ctx) * gamma(fb, ctx) / gamma(fa + fb, ctx)


# ---------------------------------------------------------------------------
# formatting and summation helpers

def format_decimal(v, sig_digits: int) -> str:
    """Decimal string with exactly sig_digits significant digits.

    Rounding is half-even.  Positional notation is used while the leading
    digit sits at 10^-5 or above and no trailing zeros would be needed left
    of the decimal point; otherwise scientific notation with a lowercase 'e'.
    Output is bit-exact across platforms.
    """
    if sig_digits < 1:
        raise ValueError("sig_digits must be >= 1")
    d = v if isinstance(v, Decimal) else Decimal(str(v))
    if d == 0:
        return "0"
    work = Context(prec=sig_digits + 8, rounding=ROUND_HALF_EVEN, Emin=-999999999, Emax=999999999)
    exp_target = d.adjusted() - sig_digits + 1
    q = d.quantize(Decimal(1).scaleb(exp_target), rounding=ROUND_HALF_EVEN, context=work)
    if len(q.as_tuple().digits) > sig_digits:  # rounding carried into a new digit
        q = q.quantize(Decimal(1).scaleb(exp_target + 1), rounding=ROUND_HALF_EVEN, context=work)
    sign, digits, exponent = q.as_tuple()
    body = "".join(map(str, digits))
    adjusted = exponent + len(digits) - 1
    prefix = "-" if sign else ""
    if adjusted < -5 or exponent > 0:
        mantissa = body[0] + ("." + body[1:] if len(body) > 1 else "")
        return f"{prefix}{mantissa}e{adjusted:+d}"
    if exponent == 0:
        return prefix + body
    int_len = len(digits) + exponent
    if int_len > 0:
        return prefix + body[:int_len] + "." + body[int_len:]
    return prefix + "0." + "0" * (-int_len) + body


def neumaier_sum(terms, ctx: PrecisionContext = DEFAULT_CONTEXT) -> Real:
    """Compensated (Neumaier) summation at working precision, in given order."""
    with localcontext(ctx.dec):
        s = _ZERO
        comp = _ZERO
        for t in terms:
            total = s + t
            if abs(s) >= abs(t):
                comp += (s - total) + t
            else:
                comp += (t - total) + s
            s = total
        return +(s + comp)


def agreement_digits(value, reference, ctx: PrecisionContext = DEFAULT_CONTEXT) -> int:
    """Number of agreeing significant digits, floor(-log10 |v-r|/|r|), capped."""
    with localcontext(ctx.dec):
        v = ctx.real(value)
        r = ctx.real(reference)
        if r == 0:
            return ctx.working_digits if v == 0 else 0
        diff = abs(v - r)
        if diff == 0:
            return ctx.working_digits
        rel = diff / abs(r)
        digits = -rel.log10()
        return max(0, min(ctx.working_digits, int(digits.to_integral_value(rounding="ROUND_FLOOR"))))
