import math
import random
from decimal import Decimal
from fractions import Fraction

import pytest

from besselseries import (
    Chebyshev,
    DomainError,
    Gegenbauer,
    Legendre,
    agreement_digits,
    bessel_i_ref,
    bessel_j_ref,
    chebyshev_coeff,
    coefficient_table,
    eval_expansion,
    format_decimal,
    gegenbauer_coeff,
    legendre_coeff,
    legendre_coeff_general,
)

from helpers import fraction_to_decimal, rel_diff, sig_digit_count
import reference_tables as ref


def test_legendre_coefficient_values(ctx):
    assert format_decimal(legendre_coeff(0, 0, 1, ctx), 34) == ref.LEGENDRE_J0_K1[0]
    assert format_decimal(legendre_coeff(42, 0, 1, ctx), 34) == ref.LEGENDRE_J0_K1[21]
    assert legendre_coeff(1, 0, 1, ctx) == 0  # parity zero


def test_chebyshev_coefficient_values(ctx):
    assert format_decimal(chebyshev_coeff(0, 0, 1, ctx), 34) == ref.CHEBYSHEV_J0_K1[0]
    assert format_decimal(chebyshev_coeff(0, 0, 8, ctx), 34) == ref.CHEBYSHEV_J0_K8_PLAIN_FIRST
    assert format_decimal(chebyshev_coeff(1, 1, 1, ctx), 34) == ref.CHEBYSHEV_J1_K1[1]


def test_gegenbauer_coefficient_values(ctx):
    lam = Fraction(1, 4)
    assert format_decimal(gegenbauer_coeff(0, 0, lam, 1, ctx), 33) == ref.GEGENBAUER_J0_K1_LAMBDA_QUARTER[0]
    assert format_decimal(gegenbauer_coeff(1, 0, lam, 1, ctx), 33) == ref.GEGENBAUER_J0_K1_LAMBDA_QUARTER[1]
    assert format_decimal(gegenbauer_coeff(0, 1, lam, 1, ctx), 33) == ref.GEGENBAUER_J1_K1_LAMBDA_QUARTER[0]


def test_reduced_forms_agree_with_general_form(ctx):
    for N in (0, 1):
        for L in range(N, 43, 6):
            if (L + N) % 2:
                L += 1
            reduced = legendre_coeff(L, N, 1, ctx)
            general = legendre_coeff_general(L, N, 1, ctx)
            assert rel_diff(reduced, general) < Decimal("1e-58"), (L, N)


def test_table_parity_entries(ctx):
    table = coefficient_table(Legendre(0), 1, 3, ctx)
    values = [v for _, v in table.entries]
    assert values[1] == 0 and values[3] == 0
    assert values[0] != 0 and values[2] != 0


def test_table_alternation(ctx):
    for kind, lmax in [
        (Chebyshev(0), 21),
        (Chebyshev(1), 21),
        (Gegenbauer(0, Fraction(1, 4)), 21),
        (Legendre(0), 42),
    ]:
        table = coefficient_table(kind, 8 if isinstance(kind, Chebyshev) else 1, lmax, ctx)
        nonzero = [v for _, v in table.entries if v != 0]
        for a, b in zip(nonzero, nonzero[1:]):
            assert (a > 0) != (b > 0)


def test_eval_expansion_accuracy_claims(ctx):
    j0_1 = bessel_j_ref(0, 1, ctx)
    assert format_decimal(j0_1, sig_digit_count(ref.J0_AT_1)) == ref.J0_AT_1
    got = eval_expansion(Chebyshev(0), 1, 1, 21, ctx)
    assert agreement_digits(got, j0_1, ctx) >= 33

    j0_8 = bessel_j_ref(0, 8, ctx)
    assert format_decimal(j0_8, sig_digit_count(ref.J0_AT_8)) == ref.J0_AT_8
    got = eval_expansion(Chebyshev(0), 8, 1, 21, ctx)
    assert agreement_digits(got, j0_8, ctx) >= 27


def test_eval_expansion_trivial_points(ctx):
    assert eval_expansion(Chebyshev(0), 1, 0, 0, ctx) == chebyshev_coeff(0, 0, 1, ctx)
    assert eval_expansion(Legendre(0), 1, 0, 0, ctx) == legendre_coeff(0, 0, 1, ctx)
    # positive order vanishes at the origin
    assert eval_expansion(Chebyshev(1), 1, 0, 21, ctx) == 0


def test_eval_expansion_domain_errors(ctx):
    with pytest.raises(DomainError):
        eval_expansion(Chebyshev(0), 1, Fraction(3, 2), 5, ctx)
    with pytest.raises(DomainError):
        eval_expansion(Chebyshev(Fraction(1, 2)), 1, Fraction(-1, 2), 5, ctx)


def test_cross_basis_agreement(ctx):
    # 22 tabulated orders in each basis: Legendre runs to degree 42+N, the
    # even-polynomial bases to index 21 (degree 42)
    rng = random.Random(77)
    xs = [Fraction(rng.randint(-999, 999), 1000) for _ in range(20)]
    for N in (0, 1):
        for x in xs:
            leg = eval_expansion(Legendre(N), 1, x, 42 + N, ctx)
            che = eval_expansion(Chebyshev(N), 1, abs(x) if N == 0 else x, 21, ctx)
            if N == 0:
                che = eval_expansion(Chebyshev(0), 1, x, 21, ctx)
            assert abs(Decimal(str(leg)) - Decimal(str(che))) < Decimal("1e-30"), (N, x)


def test_expansion_matches_reference_series(ctx):
    rng = random.Random(13)
    xs = [Fraction(rng.randint(-999, 999), 1000) for _ in range(6)]
    kinds = [
        (Legendre(0), Fraction(0), 42),
        (Legendre(1), Fraction(1), 43),
        (Chebyshev(0), Fraction(0), 21),
        (Chebyshev(1), Fraction(1), 21),
        (Gegenbauer(0, Fraction(1, 4)), Fraction(0), 21),
        (Gegenbauer(1, Fraction(4)), Fraction(1), 21),
    ]
    for kind, nu, lmax in kinds:
        for x in xs:
            got = eval_expansion(kind, 1, x, lmax, ctx)
            want = bessel_j_ref(nu, x, ctx)
            assert abs(Decimal(str(got)) - Decimal(str(want))) < Decimal("1e-32"), (kind, x)


def test_regularized_legendre_reconstructs_second_order(ctx):
    # N = 2 pulls the zero lower parameter through the regularized route
    for x in (Fraction(1), Fraction(-1), Fraction(3, 10), Fraction(-77, 100)):
        got = eval_expansion(Legendre(2), 1, x, 22, ctx)
        want = bessel_j_ref(2, x, ctx)
        assert abs(Decimal(str(got)) - Decimal(str(want))) < Decimal("1e-30")
        assert got.is_finite()


def test_sum_rule_at_origin(ctx):
    # alternating coefficient sums reproduce J0(0) = 1; k = 8 still carries
    # a visible truncation tail at 22 terms, gone by 27 terms
    from besselseries import neumaier_sum

    for k, lmax, tol in [(1, 21, "1e-33"), (5, 21, "1e-33"), (8, 21, "1e-25"), (8, 26, "1e-33")]:
        direct = eval_expansion(Chebyshev(0), k, 0, lmax, ctx)
        signed = (
            chebyshev_coeff(L, 0, k, ctx) if L % 2 == 0 else -chebyshev_coeff(L, 0, k, ctx)
            for L in range(lmax + 1)
        )
        alt = neumaier_sum(signed, ctx)
        assert abs(direct - 1) < Decimal(tol), (k, lmax)
        assert rel_diff(alt, direct) < Decimal("1e-50")


def test_bessel_j_reference_values(ctx):
    assert bessel_j_ref(0, 0, ctx) == 1
    assert format_decimal(bessel_j_ref(1, 8, ctx), sig_digit_count(ref.J1_AT_8)) == ref.J1_AT_8
    # J_{1/2}(pi) = 0 up to the precision of pi itself
    assert abs(bessel_j_ref(Fraction(1, 2), ctx.pi, ctx)) < Decimal("1e-60")


def test_bessel_j_half_order_closed_form(ctx):
    # J_{1/2}(z) = sqrt(2/(pi z)) sin z, with sin from an exact-rational series
    from decimal import Context, localcontext

    from helpers import sin_rational_series

    for z in (Fraction(1, 2), Fraction(2), Fraction(7, 2)):
        got = bessel_j_ref(Fraction(1, 2), z, ctx)
        with localcontext(Context(prec=80)):
            sin_z = fraction_to_decimal(sin_rational_series(z), 80)
            zf = fraction_to_decimal(z, 80)
            want = (Decimal(2) / (ctx.pi * zf)).sqrt() * sin_z
        assert rel_diff(got, want) < Decimal("1e-58")


def test_bessel_i_reference(ctx):
    assert bessel_i_ref(0, 0, ctx) == 1
    assert bessel_i_ref(1, 0, ctx) == 0
    # brute-force oracle: I_0(1) = sum (1/4)^m / (m!)^2 in exact rationals
    exact = sum(Fraction(1, 4**m) / Fraction(math.factorial(m)) ** 2 for m in range(60))
    assert rel_diff(bessel_i_ref(0, 1, ctx), fraction_to_decimal(exact, 80)) < Decimal("1e-62")


def test_bessel_domain(ctx):
    with pytest.raises(DomainError):
        bessel_j_ref(Fraction(1, 2), -1, ctx)
    with pytest.raises(DomainError):
        bessel_j_ref(Fraction(-1, 2), 1, ctx)
