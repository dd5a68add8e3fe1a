"""Special values of zeta and L-functions at non-positive integers.

Everything here is an exact rational (or cyclotomic) number, and every value
is reachable by at least two independent routes:

  * Hurwitz zeta at -n: a Bernoulli closed form and a definite integral of an
    offset power-sum polynomial;
  * L(-n, chi): a generalized-Bernoulli closed form, the constant of a
    character-twisted power-sum combination, scaled Hurwitz values, and (under
    a parity hypothesis) an integral of the character partial-sum polynomial;
  * L(-n, chi4): additionally a power-sum integral and an Euler-polynomial
    integral.

The routes exist to cross-verify each other; the verification suites do
exactly that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .arith import CyclotomicElement, format_rational
from .bernoulli import bernoulli_number, bernoulli_poly, euler_number, euler_poly, _check_euler_parameter
from .dirichlet import DirichletCharacter, generalized_bernoulli_number, generalized_bernoulli_poly, tilde_bernoulli_poly
from .poly import Polynomial, Scalar
from .report import VerificationReport
from .sums import offset_power_sum_poly, power_sum_poly

ROUTES = ("closed_form", "integral", "euler_poly", "hurwitz_scaled")


@dataclass(frozen=True)
class SpecialValueResult:
    """A computed special value together with the route that produced it."""

    value: object
    route: str
    params: tuple

    def __str__(self):
        return f"{self.value} ({self.route})"


@dataclass(frozen=True)
class PiPower:
    """An exact multiple of a power of pi: coefficient * pi^power."""

    coefficient: Fraction
    power: int

    def __str__(self):
        if self.power == 0:
            return format_rational(self.coefficient)
        return f"{format_rational(self.coefficient)}*pi^{self.power}"


def _check_offset(a) -> Fraction:
    a = Fraction(a)
    if not 0 < a <= 1:
        raise ValueError(f"offset must satisfy 0 < a <= 1, got {a}")
    return a


# -- Hurwitz / Riemann zeta ---------------------------------------------------

def hurwitz_value(n: int, a) -> Fraction:
    """zeta(-n, a) = -B_{n+1}(a) / (n+1) for n >= 0, 0 < a <= 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a = _check_offset(a)
    return -bernoulli_poly(n + 1)(a) / (n + 1)


def hurwitz_value_integral(n: int, a) -> Fraction:
    """zeta(-n, a) as the integral of S_{n,a} over [1-a, 2-a]."""
    a = _check_offset(a)
    return offset_power_sum_poly(n, a).integrate(1 - a, 2 - a)


def zeta_value(n: int) -> Fraction:
    """zeta(-n) for n >= 0; -1/2 at n = 0, 0 at even n >= 2."""
    return hurwitz_value(n, Fraction(1))


def zeta_value_integral(n: int) -> Fraction:
    """zeta(-n) as the integral of S_n over [0, 1]."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return power_sum_poly(n).integrate(Fraction(0), Fraction(1))


def zeta_even_value(n: int) -> PiPower:
    """zeta(2n) as an exact rational multiple of pi^(2n):

        zeta(2n) = (-1)^(n+1) * (2 pi)^(2n) / (2 * (2n)!) * B_{2n}.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    sign = 1 if n % 2 else -1
    factorial = 1
    for i in range(2, 2 * n + 1):
        factorial *= i
    coeff = sign * Fraction(2 ** (2 * n)) * bernoulli_number(2 * n) / (2 * factorial)
    return PiPower(coeff, 2 * n)


# -- L-functions of Dirichlet characters --------------------------------------

def _require_nontrivial(chi: DirichletCharacter) -> None:
    if chi.is_trivial:
        raise ValueError(
            "L-value routes require a non-trivial character; use zeta_value for the trivial one"
        )


def l_value(chi: DirichletCharacter, n: int) -> Scalar:
    """L(-n, chi) = -B_{n+1,chi} / (n+1) for non-trivial chi."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _require_nontrivial(chi)
    return -generalized_bernoulli_number(chi, n + 1) / (n + 1)


def l_value_hurwitz(chi: DirichletCharacter, n: int) -> Scalar:
    """L(-n, chi) as k^n * sum_r chi(r) zeta(-n, r/k)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    k = chi.modulus
    acc = sum(
        (chi(r) * hurwitz_value(n, Fraction(r, k)) for r in range(1, k + 1) if chi(r)),
        Fraction(0),
    )
    return Fraction(k) ** n * acc


def char_sum_poly(chi: DirichletCharacter, n: int) -> Polynomial:
    """k^n * sum_r chi(r) S_{n,r/k}(x + 1 - r/k); constant for non-trivial chi."""
    if n < 0:
        raise ValueError("n must be >= 0")
    k = chi.modulus
    total = Polynomial()
    for r in range(1, k + 1):
        value = chi(r)
        if value:
            a = Fraction(r, k)
            total = total + value * offset_power_sum_poly(n, a).shift(1 - a)
    return Fraction(k) ** n * total


def char_power_sum_poly(chi: DirichletCharacter, n: int) -> Polynomial:
    """The polynomial taking M to sum_{r=1}^{Mk} chi(r) r^n at integers M >= 1:

        (B_{n+1,chi}(x k) - B_{n+1,chi}) / (n+1).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    k = chi.modulus
    b = generalized_bernoulli_poly(chi, n + 1)
    return (b.scale_arg(k) - Polynomial.constant(b(Fraction(0)))) / (n + 1)


def l_value_parity_integral(chi: DirichletCharacter, n: int) -> Scalar:
    """L(-n, chi) as the integral of the character partial-sum polynomial over
    [-1/2, 1/2]; valid when chi and n have the same parity."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _require_nontrivial(chi)
    even_even = chi.is_even and n % 2 == 0
    odd_odd = chi.is_odd and n % 2 == 1
    if not (even_even or odd_odd):
        raise ValueError(
            f"parity hypothesis violated: chi is {chi.parity} but n = {n}; "
            "need even chi with even n, or odd chi with odd n"
        )
    return char_power_sum_poly(chi, n).integrate(Fraction(-1, 2), Fraction(1, 2))


# -- twisted L-functions -------------------------------------------------------

def _require_primitive_nontrivial(chi: DirichletCharacter) -> None:
    _require_nontrivial(chi)
    if not chi.is_primitive:
        raise ValueError("twisted L-values require a primitive character")


def twisted_l_value(chi: DirichletCharacter, n: int, a) -> Scalar:
    """L(-n, a, chi) = -tilde(B)_{n+1,chi}(a) / (n+1) for non-trivial
    primitive chi and 0 < a <= 1; a = 1 recovers L(-n, chi)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _require_primitive_nontrivial(chi)
    a = _check_offset(a)
    return -tilde_bernoulli_poly(chi, n + 1)(a) / (n + 1)


def twisted_l_value_hurwitz(chi: DirichletCharacter, n: int, a) -> Scalar:
    """L(-n, a, chi) as k^n * sum_r chi(r) zeta(-n, (r + a - 1)/k)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _require_primitive_nontrivial(chi)
    a = _check_offset(a)
    k = chi.modulus
    acc = sum(
        (
            chi(r) * hurwitz_value(n, (Fraction(r) + a - 1) / k)
            for r in range(1, k + 1)
            if chi(r)
        ),
        Fraction(0),
    )
    return Fraction(k) ** n * acc


# -- Lerch zeta ----------------------------------------------------------------

def lerch_value(c, k: int, a) -> Scalar:
    """The Lerch value zeta(1-k, a, gamma) = E_{c,k-1}(a) / (1 + 1/c) for
    gamma = 1/c; requires k >= 1, a > 0 and c not in {0, -1}."""
    if k < 1:
        raise ValueError("k must be >= 1")
    c = _check_euler_parameter(c)
    if not c:
        raise ValueError("Lerch parameter requires c != 0")
    a = Fraction(a)
    if a <= 0:
        raise ValueError(f"Lerch offset must be positive, got {a}")
    denom = 1 + 1 / c
    return euler_poly(c, k - 1)(a) / denom


# -- the conductor-4 character: two more routes --------------------------------

def chi4_value_powersum(n: int) -> Fraction:
    """L(-n, chi4) via power sums: 0 for odd n, else
    (4^(n+1)/2) * integral of S_{n,1/4} over [3/4, 7/4]."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 2 == 1:
        return Fraction(0)
    integral = offset_power_sum_poly(n, Fraction(1, 4)).integrate(Fraction(3, 4), Fraction(7, 4))
    return Fraction(4) ** (n + 1) / 2 * integral


def chi4_value_euler(n: int) -> Fraction:
    """L(-n, chi4) via the classical Euler polynomial:
    -(1/4) * integral_0^2 (E_{1,n}(x) - E_{1,n} - 1/(n+1)) dx."""
    if n < 0:
        raise ValueError("n must be >= 0")
    shifted = euler_poly(Fraction(1), n) - Polynomial.constant(
        euler_number(Fraction(1), n) + Fraction(1, n + 1)
    )
    return Fraction(-1, 4) * shifted.integrate(Fraction(0), Fraction(2))


def euler_number_half(n: int) -> Fraction:
    """E_{1,n} / 2; equals L(-n, chi4) for all n >= 0."""
    return euler_number(Fraction(1), n) / 2


# -- misc exact integrals --------------------------------------------------------

def power_sum_half_integral(n: int) -> Fraction:
    """integral_0^{1/2} S_n(x) dx for even n >= 2; equals
    (2^(-n-1) - 2) / ((n+1)(n+2)) * B_{n+2}."""
    if n < 2 or n % 2:
        raise ValueError("n must be an even integer >= 2")
    return power_sum_poly(n).integrate(Fraction(0), Fraction(1, 2))


def power_sum_half_integral_closed_form(n: int) -> Fraction:
    if n < 2 or n % 2:
        raise ValueError("n must be an even integer >= 2")
    return (Fraction(2) ** (-n - 1) - 2) / ((n + 1) * (n + 2)) * bernoulli_number(n + 2)


# -- proof-identity verification ---------------------------------------------

def verify_proof_identities(n_max: int, a_values) -> VerificationReport:
    """Check the scalar identity families behind the integral representation
    of zeta(-n, a), as exact rational equalities over a grid of offsets.

    For each a and each n <= n_max:

      (i)   zeta(-n,a) = a^n - a^(n+1)/(n+1) + sum_{k=0}^{n} C(n,k) a^k zeta(k-n)
      (ii)  integral_{1-a}^{2-a} S_k(x-1) dx = (-a)^(k+1)/(k+1) + zeta(-k),  k >= 1,
            with the k = 0 boundary case integral = zeta(0) + (1 - a)
      (iii) a^(n+1) = sum_{k=0}^{n} (-1)^(k+1) C(n+1,k+1)
                        * (integral_{1-a}^{2-a} S_{n-k,a}(x) dx - a^(n-k))
                      + (-1)^(n+1)/(n+2)

    Identity (iii) telescopes (M+a-2)^(n+1) through differences of (k+a)
    powers, so the polynomials under its integrals are the offset sums
    S_{j,a}, not the plain S_j (with the plain ones the identity is false
    already at n = 2).
    """
    report = VerificationReport("proof-identities")
    a_values = [_check_offset(a) for a in a_values]
    for a in a_values:
        lo, hi = 1 - a, 2 - a
        for n in range(n_max + 1):
            lhs = hurwitz_value(n, a)
            rhs = a**n - a ** (n + 1) / (n + 1) + sum(
                comb(n, k) * a**k * zeta_value(n - k) for k in range(n + 1)
            )
            report.add_equal("hurwitz-from-riemann", f"n={n}, a={a}", lhs, rhs)
        boundary = power_sum_poly(0).integrate(lo, hi)
        report.add_equal(
            "shifted-integral-boundary", f"k=0, a={a}", boundary, zeta_value(0) + (1 - a)
        )
        for k in range(1, n_max + 1):
            lhs = power_sum_poly(k).shift(-1).integrate(lo, hi)
            rhs = (-a) ** (k + 1) / (k + 1) + zeta_value(k)
            report.add_equal("shifted-integral", f"k={k}, a={a}", lhs, rhs)
        for n in range(n_max + 1):
            rhs = sum(
                (-1) ** (k + 1)
                * comb(n + 1, k + 1)
                * (offset_power_sum_poly(n - k, a).integrate(lo, hi) - a ** (n - k))
                for k in range(n + 1)
            ) + Fraction((-1) ** (n + 1), n + 2)
            report.add_equal("telescoping-power", f"n={n}, a={a}", a ** (n + 1), rhs)
    return report
