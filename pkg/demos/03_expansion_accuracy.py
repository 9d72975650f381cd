"""How accurate are 22-term expansions of J_nu(kx) at the edge of the domain?

All three bases agree with the independent Maclaurin-series reference to
about 33 digits at k = 1.  At k = 8 the same truncation still yields 27+
digits for J0 and 29+ for J1.
"""

from fractions import Fraction

from besselseries import (
    Chebyshev,
    Gegenbauer,
    Legendre,
    PrecisionContext,
    agreement_digits,
    bessel_j_ref,
    eval_expansion,
    format_decimal,
)

ctx = PrecisionContext()

cases = [
    ("Chebyshev  nu=0 k=1", Chebyshev(0), 1, Fraction(0), 21),
    ("Chebyshev  nu=1 k=1", Chebyshev(1), 1, Fraction(1), 21),
    ("Chebyshev  nu=0 k=8", Chebyshev(0), 8, Fraction(0), 21),
    ("Chebyshev  nu=1 k=8", Chebyshev(1), 8, Fraction(1), 21),
    ("Gegenbauer l=1/4    ", Gegenbauer(0, Fraction(1, 4)), 1, Fraction(0), 21),
    ("Gegenbauer l=4      ", Gegenbauer(0, Fraction(4)), 1, Fraction(0), 21),
    ("Legendre   N=0      ", Legendre(0), 1, Fraction(0), 42),
    ("Legendre   N=2      ", Legendre(2), 1, Fraction(2), 22),
]

print("expansion value at x = 1 vs Maclaurin reference")
for label, kind, k, nu, lmax in cases:
    got = eval_expansion(kind, k, 1, lmax, ctx)
    want = bessel_j_ref(nu, k, ctx)
    digits = agreement_digits(got, want, ctx)
    print(f"{label}  J_nu({k}) = {format_decimal(got, 30)}   agree {digits:>2} digits")

# non-integer orders work the same way through the (kx)^nu prefactor
half = Fraction(1, 2)
got = eval_expansion(Chebyshev(half), 1, Fraction(9, 10), 21, ctx)
want = bessel_j_ref(half, Fraction(9, 10), ctx)
print(f"\nnu=1/2, x=0.9: expansion {format_decimal(got, 30)}")
print(f"               reference {format_decimal(want, 30)}")
