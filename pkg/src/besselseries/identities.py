"""Summed series of 1F2 hypergeometric functions and their verification.

Each identity family equates an infinite sum over expansion order L (one 1F2
evaluation per term) with a single closed-form number: the Maclaurin
coefficient of J_nu(kx) at the power x^(2h+nu),

    rhs = (-1)^h 2^(-2h-nu) k^(2h+nu) / (h! Gamma(h+nu+1)).

Terms with L below the family's starting order vanish identically (the basis
polynomial of too-low degree simply has no x^(2h) monomial), which is why
truncation limits are quoted as h plus a constant.

The sign_flip switch realizes the modified-Bessel variant: substituting
k^2 -> -k^2 flips the 1F2 argument to +k^2/4, cancels the alternating sign
that rides on k^(2L), and removes the (-1)^h from the right-hand side.

An independent brute-force check lives in power_gather_oracle: expand every
basis polynomial into exact-rational monomials, multiply by the tabulated
expansion coefficients, and gather the coefficient of one fixed power.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .mpcore import (
    DEFAULT_CONTEXT,
    DomainError,
    PrecisionContext,
    Real,
    beta,
    binomial,
    double_factorial,
    gamma,
    pochhammer,
    pochhammer_fraction,
    to_fraction,
)
from .hypergeom import HyperSpec, eval_pFq
from .expansions import (
    Chebyshev,
    Gegenbauer,
    Legendre,
    chebyshev_coeff,
    coefficient_table,
)
from .orthopoly import ChebyshevT, GegenbauerC, LegendreP, monomial_coeffs

_HALF = Fraction(1, 2)


class IdentityId(enum.Enum):
    LEGENDRE_J0 = "legendre-j0"
    LEGENDRE_J1 = "legendre-j1"
    CHEBYSHEV_EVEN = "chebyshev-even"
    CHEBYSHEV_ODD = "chebyshev-odd"
    CHEBYSHEV_GENERAL_NU = "chebyshev-general-nu"
    GEGENBAUER_NU0 = "gegenbauer-nu0"
    GEGENBAUER_GENERAL = "gegenbauer-general"
    CLENSHAW_SUM_RULE = "clenshaw-sum-rule"


_FIXED_NU = {
    IdentityId.LEGENDRE_J0: Fraction(0),
    IdentityId.LEGENDRE_J1: Fraction(1),
    IdentityId.CHEBYSHEV_EVEN: Fraction(0),
    IdentityId.CHEBYSHEV_ODD: Fraction(1),
    IdentityId.GEGENBAUER_NU0: Fraction(0),
    IdentityId.CLENSHAW_SUM_RULE: Fraction(0),
}


@dataclass(frozen=True)
class IdentityCase:
    """One verification instance of a summed-series family."""

    id: IdentityId
    h: int = 0
    k: Fraction = Fraction(1)
    nu: Fraction | None = None
    lam: Fraction | None = None
    lmax: int = 21
    tolerance: Fraction = Fraction(1, 10**33)
    sign_flip: bool = False

    def __post_init__(self):
        object.__setattr__(self, "k", to_fraction(self.k))
        object.__setattr__(self, "tolerance", to_fraction(self.tolerance))
        if self.h < 0:
            raise DomainError("h must be >= 0")
        if self.k <= 0:
            raise DomainError("k must be > 0")
        if self.lmax < self.h:
            raise DomainError("lmax must be >= h")
        nu = self.nu
        if self.id in _FIXED_NU:
            fixed = _FIXED_NU[self.id]
            if nu is not None and to_fraction(nu) != fixed:
                raise DomainError(f"{self.id.value} has nu fixed to {fixed}")
            nu = fixed
        elif nu is None:
            raise DomainError(f"{self.id.value} requires nu")
        object.__setattr__(self, "nu", to_fraction(nu))
        if self.nu < 0:
            raise DomainError("nu must be >= 0")
        if self.id in (IdentityId.GEGENBAUER_NU0, IdentityId.GEGENBAUER_GENERAL):
            if self.lam is None:
                raise DomainError(f"{self.id.value} requires lambda")
            lam = to_fraction(self.lam)
            if lam <= Fraction(-1, 2) or lam == 0:
                raise DomainError("lambda must be > -1/2 and nonzero")
            object.__setattr__(self, "lam", lam)
        elif self.lam is not None:
            raise DomainError(f"{self.id.value} takes no lambda")


@dataclass(frozen=True)
class VerificationReport:
    lhs: Real
    rhs: Real
    abs_diff: Real
    rel_diff: Real
    terms_used: int
    passed: bool
    terms: tuple | None = None  # ((L, term), ...) when tracing


def first_contributing_order(case: IdentityCase) -> int:
    """Smallest L whose summand is not identically zero."""
    if case.id == IdentityId.LEGENDRE_J0:
        return 2 * case.h
    if case.id == IdentityId.LEGENDRE_J1:
        return 2 * case.h + 1
    if case.id == IdentityId.CLENSHAW_SUM_RULE:
        return 0
    return case.h


def _parity_skip(case: IdentityCase, L: int) -> bool:
    if case.id == IdentityId.LEGENDRE_J0:
        return L % 2 == 1
    if case.id == IdentityId.LEGENDRE_J1:
        return L % 2 == 0
    return False


def identity_term(case: IdentityCase, L: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> Real:
    """The L-th summand; exactly zero below the first contributing order."""
    if L < 0:
        raise DomainError("L must be >= 0")
    if _parity_skip(case, L) or L < first_contributing_order(case):
        return Decimal(0)
    if case.id in (IdentityId.LEGENDRE_J0, IdentityId.LEGENDRE_J1):
        return _legendre_term(case, L, ctx)
    if case.id in (IdentityId.CHEBYSHEV_EVEN, IdentityId.CHEBYSHEV_ODD, IdentityId.CHEBYSHEV_GENERAL_NU):
        return _chebyshev_term(case, L, ctx)
    if case.id in (IdentityId.GEGENBAUER_NU0, IdentityId.GEGENBAUER_GENERAL):
        return _gegenbauer_term(case, L, ctx)
    if case.id == IdentityId.CLENSHAW_SUM_RULE:
        coef = chebyshev_coeff(L, 0, case.k, ctx)
        return coef.copy_negate() if L % 2 else coef  # exact sign flip, no rounding
    raise DomainError(f"unknown identity {case.id}")


def _series_argument(case: IdentityCase) -> Fraction:
    z = (case.k * case.k) / 4
    return z if case.sign_flip else -z


def _legendre_term(case: IdentityCase, L: int, ctx: PrecisionContext) -> Real:
    N = 0 if case.id == IdentityId.LEGENDRE_J0 else 1
    z = _series_argument(case)
    if N == 0:
        f = eval_pFq(HyperSpec((Fraction(L, 2) + _HALF,), (Fraction(L, 2) + 1, L + Fraction(3, 2)), z), ctx)
    else:
        f = eval_pFq(
            HyperSpec((Fraction(L, 2) + 1,), (Fraction(L, 2) + Fraction(3, 2), L + Fraction(3, 2)), z), ctx
        )
    brace = brace_factor_legendre(L, case.h, "eq11", order=N)
    sign = 1 if case.sign_flip else (1 if ((L - N) // 2) % 2 == 0 else -1)
    with localcontext(ctx.dec):
        pref = ctx.sqrt_pi * sign * (2 * L + 1) * binomial(L, (L - N) // 2)
        pref = pref * ctx.real(case.k) ** L / (Decimal(2) ** (2 * L + 1) * gamma(L + Fraction(3, 2), ctx))
        return +(pref * f * ctx.real(brace))


def _chebyshev_term(case: IdentityCase, L: int, ctx: PrecisionContext) -> Real:
    nu = case.nu
    z = _series_argument(case)
    f = eval_pFq(HyperSpec((L + _HALF,), (2 * L + 1, L + nu + 1), z), ctx)
    m = L - case.h
    bracket = (
        pochhammer_fraction(_HALF - L, m)
        * pochhammer_fraction(Fraction(-L), m)
        / (math.factorial(m) * pochhammer_fraction(Fraction(1 - 2 * L), m))
    )
    sign = 1 if case.sign_flip else (-1 if L % 2 else 1)
    with localcontext(ctx.dec):
        pref = sign * _pow2(-2 * L - nu, ctx) * _pow_k(case.k, 2 * L + nu, ctx)
        pref = pref / (Decimal(math.factorial(L)) * gamma(L + nu + 1, ctx))
        return +(pref * ctx.real(bracket) * f)


def _gegenbauer_term(case: IdentityCase, L: int, ctx: PrecisionContext) -> Real:
    nu, lam, h = case.nu, case.lam, case.h
    z = _series_argument(case)
    f = eval_pFq(HyperSpec((L + _HALF,), (2 * L + lam + 1, L + nu + 1), z), ctx)
    sign = (-1 if L % 2 else 1) if case.sign_flip else 1
    with localcontext(ctx.dec):
        num = (
            sign
            * _pow2(2 * L - nu, ctx)
            * pochhammer(Fraction(-L), h, ctx)
            * pochhammer(lam + _HALF, 2 * L, ctx)
            * pochhammer(L + lam, h, ctx)
            * _pow_k(case.k, 2 * L + nu, ctx)
        )
        den = (
            ctx.sqrt_pi
            * Decimal(math.factorial(h))
            * pochhammer(_HALF, h, ctx)
            * ctx.real(L + lam)
            * pochhammer(2 * lam, 2 * L, ctx)
            * pochhammer(2 * L + 2 * lam, 2 * L, ctx)
            * pochhammer(L + _HALF, nu + _HALF, ctx)
            * beta(lam, L + 1, ctx)
        )
        return +(num / den * f)


def _pow2(e: Fraction, ctx: PrecisionContext) -> Decimal:
    if e.denominator == 1:
        return ctx.dec.power(Decimal(2), Decimal(int(e)))
    return ctx.dec.power(Decimal(2), ctx.real(e))


def _pow_k(k: Fraction, e: Fraction, ctx: PrecisionContext) -> Decimal:
    kv = ctx.real(k)
    if e.denominator == 1:
        return ctx.dec.power(kv, Decimal(int(e)))
    return ctx.dec.power(kv, ctx.real(e))


def identity_rhs(case: IdentityCase, ctx: PrecisionContext = DEFAULT_CONTEXT) -> Real:
    """Closed-form right-hand side: the x^(2h+nu) Maclaurin coefficient of
    J_nu(kx) (or of I_nu with sign_flip), times nothing else."""
    if case.id == IdentityId.CLENSHAW_SUM_RULE:
        return ctx.real(1)
    nu, h = case.nu, case.h
    sign = 1 if case.sign_flip else (-1 if h % 2 else 1)
    with localcontext(ctx.dec):
        value = sign * _pow2(Fraction(-2 * h) - nu, ctx) * _pow_k(case.k, 2 * h + nu, ctx)
        value = value / (Decimal(math.factorial(h)) * gamma(h + nu + 1, ctx))
        return +value


def verify_identity(
    case: IdentityCase, ctx: PrecisionContext = DEFAULT_CONTEXT, trace: bool = False
) -> VerificationReport:
    """Sum the family's terms for L = 0..lmax and compare with the closed form.

    Terms are accumulated in ascending L with compensated summation; reports
    are therefore deterministic for a given context.
    """
    start = first_contributing_order(case)
    trace_rows = [] if trace else None
    with localcontext(ctx.dec):
        total = Decimal(0)
        comp = Decimal(0)
        used = 0
        for L in range(case.lmax + 1):
            if _parity_skip(case, L):
                continue
            if L < start:
                if trace_rows is not None:
                    trace_rows.append((L, Decimal(0)))
                continue
            term = identity_term(case, L, ctx)
            used += 1
            if trace_rows is not None:
                trace_rows.append((L, term))
            new_total = total + term
            if abs(total) >= abs(term):
                comp += (total - new_total) + term
            else:
                comp += (term - new_total) + total
            total = new_total
        lhs = +(total + comp)
        rhs = identity_rhs(case, ctx)
        abs_diff = abs(lhs - rhs)
        rel_diff = abs_diff / abs(rhs)
        passed = rel_diff <= ctx.real(case.tolerance)
    return VerificationReport(
        lhs=lhs,
        rhs=rhs,
        abs_diff=abs_diff,
        rel_diff=rel_diff,
        terms_used=used,
        passed=bool(passed),
        terms=tuple(trace_rows) if trace_rows is not None else None,
    )


def clenshaw_sum_rule(k, lmax: int, ctx: PrecisionContext = DEFAULT_CONTEXT,
                      tolerance=Fraction(1, 10**33)) -> VerificationReport:
    """Alternating sum of the nu=0 Chebyshev coefficients equals J_0(0) = 1."""
    case = IdentityCase(IdentityId.CLENSHAW_SUM_RULE, h=0, k=k, lmax=lmax, tolerance=tolerance)
    return verify_identity(case, ctx)


def brace_factor_legendre(L: int, h: int, variant: str = "eq11", order: int = 0) -> Fraction:
    """Combinatorial bracket multiplying the 1F2 in the Legendre families.

    Both variants are exact rationals and equal the coefficient of
    x^(2h+order) in P_L; they differ only in how that number is assembled
    (double-factorial versus central-binomial route), which is what makes the
    cross-variant agreement test meaningful.
    """
    if variant not in ("eq10", "eq11"):
        raise DomainError("variant must be 'eq10' or 'eq11'")
    if order not in (0, 1):
        raise DomainError("order must be 0 or 1")
    if L % 2 != order:
        return Fraction(0)
    m = (L - order) // 2 - h
    if m < 0:
        return Fraction(0)
    if variant == "eq11":
        lead = Fraction(binomial(2 * L, L), 2**L)
        return (
            lead
            * pochhammer_fraction(Fraction(1 - L, 2), m)
            * pochhammer_fraction(Fraction(-L, 2), m)
            / (math.factorial(m) * pochhammer_fraction(_HALF - L, m))
        )
    # eq10 route, stated for the even family only: build from the constant
    # term (L-1)!!/(2^(L/2) (L/2)!) and climb h powers with Pochhammer ratios.
    if order != 0:
        raise DomainError("the eq10 variant is defined for the even (order 0) family")
    half = L // 2
    sign = Fraction(-1) ** half
    lead = sign * Fraction(double_factorial(L - 1), 2**half * math.factorial(half))
    return (
        lead
        * pochhammer_fraction(Fraction(L, 2) + _HALF, h)
        * pochhammer_fraction(Fraction(-L, 2), h)
        / (math.factorial(h) * pochhammer_fraction(_HALF, h))
    )


@dataclass(frozen=True)
class OracleRow:
    h: int
    gathered: Real
    maclaurin: Real
    rel_diff: Real


def power_gather_oracle(
    kind, k, hmax: int, lmax: int, ctx: PrecisionContext = DEFAULT_CONTEXT
) -> list[OracleRow]:
    """Brute-force route: gather x-powers from exact monomial expansions.

    Expands each basis polynomial into monomials, multiplies by the tabulated
    expansion coefficients, gathers the coefficient of x^(2h+nu) for each h,
    and compares with the Maclaurin coefficient of J_nu(kx).  Everything on
    the gathering side except the coefficients themselves is exact-rational.
    """
    if lmax < 2 * hmax:
        raise DomainError("lmax must be at least 2*hmax for a meaningful gather")
    kf = to_fraction(k)
    table = coefficient_table(kind, kf, lmax, ctx)
    if isinstance(kind, Legendre):
        nu = Fraction(kind.N)
        monos = [monomial_coeffs(LegendreP(), L) for L in range(lmax + 1)]
        powers = [2 * h + kind.N for h in range(hmax + 1)]
        k_power = Fraction(0)
    else:
        if isinstance(kind, Chebyshev):
            poly = ChebyshevT()
        elif isinstance(kind, Gegenbauer):
            poly = GegenbauerC(kind.lam)
        else:
            raise TypeError(f"unknown expansion kind {kind!r}")
        nu = kind.nu
        monos = [monomial_coeffs(poly, 2 * L) for L in range(lmax + 1)]
        powers = [2 * h for h in range(hmax + 1)]
        k_power = nu  # (kx)^nu prefactor contributes k^nu to each gathered power
    rows = []
    with localcontext(ctx.dec):
        for h in range(hmax + 1):
            power = powers[h]
            total = Decimal(0)
            comp = Decimal(0)
            for L, c in table.entries:
                frac = monos[L].coefficient(power)
                if not frac or c == 0:
                    continue
                term = c * ctx.real(frac)
                new_total = total + term
                if abs(total) >= abs(term):
                    comp += (total - new_total) + term
                else:
                    comp += (term - new_total) + total
                total = new_total
            gathered = +(total + comp)
            if k_power:
                gathered = +(gathered * _pow_k(kf, k_power, ctx))
            sign = -1 if h % 2 else 1
            maclaurin = sign * _pow2(Fraction(-2 * h) - nu, ctx) * _pow_k(kf, 2 * h + nu, ctx)
            maclaurin = +(maclaurin / (Decimal(math.factorial(h)) * gamma(h + nu + 1, ctx)))
            rel = abs(gathered - maclaurin) / abs(maclaurin)
            rows.append(OracleRow(h=h, gathered=gathered, maclaurin=maclaurin, rel_diff=+rel))
    return rows
