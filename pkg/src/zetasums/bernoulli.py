"""Bernoulli numbers and polynomials, and the c-parameterized Euler polynomials.

Bernoulli numbers use the convention B_1 = -1/2 and are produced from the
binomial recurrence

    B_n = -1/(n+1) * sum_{k=0}^{n-1} C(n+1, k) B_k,

which is the explicit form of the implicit fixed-point identity
sum_{k=0}^{n} C(n,k) B_k = B_n for n >= 2.  The lazily grown cache is guarded
by a lock so concurrent callers always observe a fully computed prefix.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

from .arith import CyclotomicElement
from .poly import Polynomial, Scalar

_numbers: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
_numbers_lock = threading.Lock()


def bernoulli_number(n: int) -> Fraction:
    """B_n as an exact fraction; zero for odd n >= 3."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n >= len(_numbers):
        with _numbers_lock:
            while len(_numbers) <= n:
                m = len(_numbers)
                acc = sum(comb(m + 1, k) * _numbers[k] for k in range(m))
                _numbers.append(-acc / (m + 1))
    return _numbers[n]


def bernoulli_poly(n: int) -> Polynomial:
    """B_n(x) = sum_{k=0}^{n} C(n,k) B_k x^(n-k); monic of degree n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    bernoulli_number(n)  # make sure the prefix exists
    coeffs = [comb(n, n - j) * _numbers[n - j] for j in range(n + 1)]
    return Polynomial(coeffs)


# -- Euler polynomials E_{c,n}(t) --------------------------------------------
#
# The sequence is pinned by three properties:
#   E_{c,0}(t) = 1
#   E_{c,n}'(t) = n E_{c,n-1}(t)
#   E_{c,n}(t+1) + c E_{c,n}(t) = (1+c) t^n
# The derivative property determines E_{c,n} up to its constant term, and the
# functional equation at t = 0 fixes that constant:
#   E_{c,n}(0) = -(n/(1+c)) * integral_0^1 E_{c,n-1}(t) dt   (n >= 1).

_euler_cache: dict[Scalar, list[Polynomial]] = {}
_euler_lock = threading.Lock()


def _check_euler_parameter(c) -> Scalar:
    if isinstance(c, int):
        c = Fraction(c)
    if not isinstance(c, (Fraction, CyclotomicElement)):
        raise TypeError(f"unsupported Euler parameter type: {type(c).__name__}")
    if not (1 + c):
        raise ValueError("Euler parameter requires 1 + c != 0")
    return c


def euler_poly(c, n: int) -> Polynomial:
    """The degree-n Euler polynomial for weight c; c = 1 gives the classical one."""
    if n < 0:
        raise ValueError("n must be >= 0")
    c = _check_euler_parameter(c)
    with _euler_lock:
        polys = _euler_cache.setdefault(c, [Polynomial.constant(1)])
        while len(polys) <= n:
            m = len(polys)
            scaled = m * polys[m - 1].antiderivative()
            constant = -scaled(1) / (1 + c)
            polys.append(scaled + Polynomial.constant(constant))
    return polys[n]


def euler_number(c, n: int) -> Scalar:
    """The Euler number 2^n * E_{c,n}(1/2)."""
    return 2**n * euler_poly(c, n)(Fraction(1, 2))
