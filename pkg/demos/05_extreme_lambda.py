"""The Gegenbauer identities hold for every weight lambda > -1/2.

Two extremes show how differently the same sum converges: at lambda = 2^-20
eight terms reach ~16 digits of the answer -1/4; at lambda = 2^20 the first
contributing term alone is good to 7 digits and seven terms reach ~44.
"""

from fractions import Fraction

from besselseries import IdentityCase, IdentityId, PrecisionContext, format_decimal, verify_identity

ctx = PrecisionContext()

for lam, label in ((Fraction(1, 2**20), "lambda = 2^-20"), (Fraction(2**20), "lambda = 2^20")):
    case = IdentityCase(
        IdentityId.GEGENBAUER_NU0, h=1, k=1, lam=lam, lmax=7,
        tolerance=Fraction(1, 10**15),
    )
    report = verify_identity(case, ctx, trace=True)
    print(f"{label}: terms of the x^2 gather, h = 1, k = 1")
    for L, term in report.terms:
        print(f"  L={L}  {format_decimal(term, 33)}")
    print(f"  sum of 8 terms: {format_decimal(report.lhs, 33)}")
    print(f"  closed form   : {format_decimal(report.rhs, 33)}")
    print(f"  |lhs-rhs|     : {format_decimal(report.abs_diff, 3)}\n")
