"""Legendre, Chebyshev and Gegenbauer polynomials.

Point evaluation uses the forward three-term recurrences (numerically benign
on [-1, 1]).  Monomial coefficients are extracted through the finite 2F1-type
Pochhammer-ratio sums instead, entirely in exact rational arithmetic, so the
power-gathering oracle carries no rounding error of its own.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import localcontext
from fractions import Fraction

from .mpcore import (
    DEFAULT_CONTEXT,
    DomainError,
    PrecisionContext,
    Real,
    double_factorial,
    pochhammer_fraction,
    to_fraction,
)

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class LegendreP:
    pass


@dataclass(frozen=True)
class ChebyshevT:
    pass


@dataclass(frozen=True)
class GegenbauerC:
    lam: Fraction

    def __post_init__(self):
        lam = to_fraction(self.lam)
        if lam <= Fraction(-1, 2) or lam == 0:
            raise DomainError("Gegenbauer requires lambda > -1/2 and lambda != 0")
        object.__setattr__(self, "lam", lam)


@dataclass(frozen=True)
class MonomialExpansion:
    """poly(x) = sum c_j x^j with only parity-matching powers present."""

    degree: int
    coeffs: tuple  # ((j, Fraction), ...) ascending in j

    def coefficient(self, j: int) -> Fraction:
        for power, c in self.coeffs:
            if power == j:
                return c
        return Fraction(0)

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        return sum((c * x**j for j, c in self.coeffs), Fraction(0))


def eval_poly(kind, n: int, x, ctx: PrecisionContext = DEFAULT_CONTEXT) -> Real:
    """Value of the degree-n polynomial of the given family at x."""
    if n < 0:
        raise DomainError("polynomial degree must be >= 0")
    with localcontext(ctx.dec):
        xv = ctx.real(x)
        if n == 0:
            return ctx.real(1)
        if isinstance(kind, LegendreP):
            prev, cur = ctx.real(1), xv
            for m in range(1, n):
                prev, cur = cur, ((2 * m + 1) * xv * cur - m * prev) / (m + 1)
            return +cur
        if isinstance(kind, ChebyshevT):
            prev, cur = ctx.real(1), xv
            for _ in range(1, n):
                prev, cur = cur, 2 * xv * cur - prev
            return +cur
        if isinstance(kind, GegenbauerC):
            lam = ctx.real(kind.lam)
            prev, cur = ctx.real(1), 2 * lam * xv
            for m in range(1, n):
                prev, cur = cur, (2 * (m + lam) * xv * cur - (m + 2 * lam - 1) * prev) / (m + 1)
            return +cur
    raise TypeError(f"unknown polynomial kind {kind!r}")


def monomial_coeffs(kind, n: int) -> MonomialExpansion:
    """Exact monomial coefficients via the finite Pochhammer-ratio sums."""
    if n < 0:
        raise DomainError("polynomial degree must be >= 0")
    out = []
    if isinstance(kind, LegendreP):
        # c_{n-2m} = (2n-1)!!/n! * ((1-n)/2)_m (-n/2)_m / (m! (1/2 - n)_m)
        lead = Fraction(double_factorial(2 * n - 1), math.factorial(n))
        for m in range(n // 2 + 1):
            c = lead * pochhammer_fraction(Fraction(1 - n, 2), m) * pochhammer_fraction(Fraction(-n, 2), m)
            c /= math.factorial(m) * pochhammer_fraction(_HALF - n, m)
            out.append((n - 2 * m, c))
    elif isinstance(kind, ChebyshevT):
        # 2^(n-1) x^n * 2F1((1-n)/2, -n/2; 1-n; 1/x^2), augmented by [1 + delta_{n0}]
        # so the conversion extends down to n = 0.
        lead = Fraction(2) ** (n - 1) * (2 if n == 0 else 1)
        for m in range(n // 2 + 1):
            c = lead * pochhammer_fraction(Fraction(1 - n, 2), m) * pochhammer_fraction(Fraction(-n, 2), m)
            c /= math.factorial(m) * pochhammer_fraction(Fraction(1 - n), m)
            out.append((n - 2 * m, c))
    elif isinstance(kind, GegenbauerC):
        lam = kind.lam
        if n % 2 == 0:
            # C_{2r} = (-1)^r / ((r+lam) B(lam, r+1)) * sum_m (-r)_m (r+lam)_m x^(2m) / (m! (1/2)_m)
            r = n // 2
            lead = Fraction(-1) ** r / ((r + lam) * _beta_fraction(lam, r + 1))
            for m in range(r + 1):
                c = lead * pochhammer_fraction(Fraction(-r), m) * pochhammer_fraction(r + lam, m)
                c /= math.factorial(m) * pochhammer_fraction(_HALF, m)
                out.append((2 * m, c))
        else:
            # C_{2r+1} = (-1)^r 2x (lam)_{r+1}/r! * 2F1(-r, r+lam+1; 3/2; x^2)
            r = (n - 1) // 2
            lead = Fraction(-1) ** r * 2 * pochhammer_fraction(lam, r + 1) / math.factorial(r)
            for m in range(r + 1):
                c = lead * pochhammer_fraction(Fraction(-r), m) * pochhammer_fraction(r + lam + 1, m)
                c /= math.factorial(m) * pochhammer_fraction(Fraction(3, 2), m)
                out.append((2 * m + 1, c))
    else:
        raise TypeError(f"unknown polynomial kind {kind!r}")
    out = [(j, c) for j, c in out if c != 0]
    out.sort(key=lambda jc: jc[0])
    return MonomialExpansion(degree=n, coeffs=tuple(out))


def _beta_fraction(lam: Fraction, m: int) -> Fraction:
    # B(lam, m) for integer m >= 1 collapses to (m-1)! / (lam)_m
    return Fraction(math.factorial(m - 1)) / pochhammer_fraction(lam, m)
