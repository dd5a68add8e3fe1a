"""Integrality and congruence facts for quadratic generalized Bernoulli numbers.

For the Legendre-symbol character chi mod an odd prime p, B_{n,chi} is an
integer except when n is congruent to (p-1)/2 mod (p-1) (and of the right
parity), in which case it is a/p with a = -1 mod p.  These facts are checked
here directly on the exact rationals, with brute-force modular power sums as
the oracle of record for the mod-p^2 congruence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime, padic_valuation
from .dirichlet import generalized_bernoulli_number, quadratic_character
from .report import VerificationReport

#: Branches of the integrality classification.
INTEGER_BRANCH = "integer_branch"
POLE_BRANCH = "pole_branch"
PARITY_ZERO = "parity_zero"


def _check_odd_prime(p: int) -> None:
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")


def power_sum_mod_p(p: int, r: int) -> int:
    """sum_{a=1}^{p} a^r mod p, by direct modular summation.

    Equals 0 when (p-1) does not divide r, and p-1 (= -1) when it does.
    """
    _check_odd_prime(p)
    if r < 1:
        raise ValueError("r must be >= 1")
    return sum(pow(a, r, p) for a in range(1, p + 1)) % p


@dataclass(frozen=True)
class PropA1Verdict:
    """Classification of B_{n,chi} for the quadratic character mod p."""

    p: int
    n: int
    branch: str
    b_value: Fraction
    holds: bool


def classify_quadratic_bernoulli(p: int, n: int) -> PropA1Verdict:
    """Classify and check one (p, n) cell.

    parity_zero:    n has parity opposite to chi           -> B = 0
    integer_branch: n != (p-1)/2 mod (p-1)                 -> B is an integer
    pole_branch:    n  = (p-1)/2 mod (p-1), same parity    -> v_p(B) = -1 and
                                                              p*B = -1 mod p
    """
    _check_odd_prime(p)
    if n < 0:
        raise ValueError("n must be >= 0")
    chi = quadratic_character(p)
    delta = 1 if chi.is_odd else 0
    b = generalized_bernoulli_number(chi, n)
    half = (p - 1) // 2
    if n % 2 != delta:
        return PropA1Verdict(p, n, PARITY_ZERO, b, b == 0)
    if (n - half) % (p - 1) != 0:
        return PropA1Verdict(p, n, INTEGER_BRANCH, b, b.denominator == 1)
    pb = p * b
    holds = (
        padic_valuation(b, p) == -1
        and pb.denominator == 1
        and pb.numerator % p == p - 1
    )
    return PropA1Verdict(p, n, POLE_BRANCH, b, holds)


def check_prop_a1(p: int, n_max: int) -> list[PropA1Verdict]:
    """Verdicts for n = 0..n_max."""
    return [classify_quadratic_bernoulli(p, n) for n in range(n_max + 1)]


def congruence_p2(p: int, n: int) -> VerificationReport:
    """Check p^2 B_{n,chi} = sum_{a=1}^{p^2} chi(a) a^n (mod p^2) by brute
    force, for the quadratic character mod p."""
    _check_odd_prime(p)
    if n < 0:
        raise ValueError("n must be >= 0")
    chi = quadratic_character(p)
    report = VerificationReport(f"congruence-p2 p={p} n={n}")
    b = generalized_bernoulli_number(chi, n)
    p2b = p * p * b
    if p2b.denominator != 1:
        report.add_true(
            "p-integrality", f"p={p}, n={n}", False, f"p^2*B = {p2b} is not an integer"
        )
        return report
    modulus = p * p
    brute = sum(int(chi(a)) * pow(a, n, modulus) for a in range(1, modulus + 1) if chi(a))
    report.add_equal(
        "mod-p2-congruence",
        f"p={p}, n={n}",
        p2b.numerator % modulus,
        brute % modulus,
    )
    return report
