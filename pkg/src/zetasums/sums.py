"""Partial-power-sum polynomials.

power_sum_poly(n) is the unique polynomial with

    S_n(M) = 1^n + 2^n + ... + (M-1)^n   for every integer M >= 1,

and offset_power_sum_poly(n, a) generalizes the start of the sum to a
rational offset 0 < a <= 1:

    S_{n,a}(M) = sum_{k=0}^{M-2} (k + a)^n   for every integer M >= 2.

Both come from the Bernoulli closed forms; the recursive construction is an
independent second route used for cross-validation.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .bernoulli import bernoulli_number, bernoulli_poly
from .poly import Polynomial


def _check_offset(a) -> Fraction:
    a = Fraction(a)
    if not 0 < a <= 1:
        raise ValueError(f"offset must satisfy 0 < a <= 1, got {a}")
    return a


def power_sum_poly(n: int) -> Polynomial:
    """S_n(x) = (B_{n+1}(x) - B_{n+1}(1)) / (n+1), of degree n+1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    b = bernoulli_poly(n + 1)
    return (b - Polynomial.constant(b(Fraction(1)))) / (n + 1)


def offset_power_sum_poly(n: int, a) -> Polynomial:
    """S_{n,a}(x) = (B_{n+1}(x + a - 1) - B_{n+1}(a)) / (n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a = _check_offset(a)
    b = bernoulli_poly(n + 1)
    return (b.shift(a - 1) - Polynomial.constant(b(a))) / (n + 1)


def offset_power_sum_poly_recursive(n: int, a) -> Polynomial:
    """Independent construction of S_{n,a} from the plain power-sum polynomials:

        S_{n,a}(x) = a^n S_0(x) + sum_{k=0}^{n-1} C(n,k) a^k S_{n-k}(x - 1).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    a = _check_offset(a)
    result = a**n * power_sum_poly(0)
    for k in range(n):
        result = result + comb(n, k) * a**k * power_sum_poly(n - k).shift(-1)
    return result


def signed_area_poly(k: int) -> Polynomial:
    """(-1)^(k+1) (B_{2k+2}(x) - B_{2k+2}) / (2k+2).

    Positive on (0, 1); its area over [0, 1] is |zeta(-2k-1)|.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    n = 2 * k + 2
    sign = 1 if k % 2 else -1
    return sign * (bernoulli_poly(n) - Polynomial.constant(bernoulli_number(n))) / n
