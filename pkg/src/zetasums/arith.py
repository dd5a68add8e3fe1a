"""Exact scalar arithmetic: rationals, p-adic valuations, cyclotomic numbers.

The ambient scalar of the whole library is the stdlib ``fractions.Fraction``,
which already keeps values in canonical reduced form (positive denominator,
gcd-reduced, zero as 0/1).  This module adds the pieces Fraction does not
cover: parsing/formatting in the ``p/q`` wire format, p-adic valuations, and
the ring Q[x]/Phi_m(x) used as the value ring of non-real Dirichlet
characters.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

#: Valuation of zero.  ``math.inf`` so that ``min`` and ``+`` behave.
INFINITY = math.inf


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``p`` (optional leading sign) into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    """Render in the canonical wire format: ``-691/2730``, ``5``, ``0``."""
    return str(Fraction(q))


def is_prime(n: int) -> bool:
    """Deterministic trial division; intended for desk-scale n."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(q: Fraction, p: int) -> int | float:
    """v_p(q) = ord_p(numerator) - ord_p(denominator); INFINITY for q = 0.

    Raises ValueError unless p is prime.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    q = Fraction(q)
    if q == 0:
        return INFINITY
    return _int_valuation(abs(q.numerator), p) - _int_valuation(q.denominator, p)


def euler_phi(m: int) -> int:
    """Euler's totient by trial-division factorization."""
    if m < 1:
        raise ValueError("m must be positive")
    result = m
    n = m
    f = 2
    while f * f <= n:
        if n % f == 0:
            while n % f == 0:
                n //= f
            result -= result // f
        f += 1
    if n > 1:
        result -= result // n
    return result


# --- dense integer/rational coefficient helpers (ascending order) ---

def _trim(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    """Quotient and remainder of dense coefficient lists; den must be monic
    up to an invertible leading coefficient."""
    num = list(num)
    q = [0 * den[-1]] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        factor = num[-1] / lead if isinstance(num[-1], Fraction) or isinstance(lead, Fraction) else num[-1] // lead
        q[shift] = factor
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
        _trim(num)
    return _trim(q), num


_cyclotomic_cache: dict[int, tuple[int, ...]] = {}


def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the m-th cyclotomic polynomial Phi_m.

    Computed by dividing x^m - 1 by the product of Phi_d over proper
    divisors d of m; results are cached (idempotent fill).
    """
    if m < 1:
        raise ValueError("m must be positive")
    cached = _cyclotomic_cache.get(m)
    if cached is not None:
        return cached
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            q, r = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not r, f"nonzero remainder dividing x^{m}-1 by Phi_{d}"
            num = q
    result = tuple(int(c) for c in num)
    _cyclotomic_cache[m] = result
    return result


def _ext_gcd_poly(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Return (g, s) with s*a = g mod b and g a nonzero constant, for a
    coprime to b.  Used to invert elements of Q[x]/Phi_m."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _poly_divmod(r0, r1)
        # s_next = s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1) if q and s1 else []
        for i, qc in enumerate(q):
            for j, sc in enumerate(s1):
                prod[i + j] += qc * sc
        s_next = [Fraction(0)] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            s_next[i] += c
        for i, c in enumerate(prod):
            s_next[i] -= c
        r0, r1 = r1, r
        s0, s1 = s1, _trim(s_next)
    return r0, s0


class CyclotomicElement:
    """An element of Q[x]/Phi_m(x), stored fully reduced.

    The coefficient vector has length exactly phi(m).  The class of the
    residue x is a primitive m-th root of unity; rationals embed as the
    constant vector.  Values are immutable and hashable.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs) -> None:
        phi = euler_phi(order)
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if len(cs) > phi:
            modulus = [Fraction(c) for c in cyclotomic_polynomial(order)]
            _, cs = _poly_divmod(cs, modulus)
        cs.extend([Fraction(0)] * (phi - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("CyclotomicElement is immutable")

    @classmethod
    def from_rational(cls, order: int, q) -> "CyclotomicElement":
        return cls(order, [Fraction(q)])

    @classmethod
    def root(cls, order: int) -> "CyclotomicElement":
        """The residue of x: a primitive order-th root of unity."""
        return cls(order, [Fraction(0), Fraction(1)])

    # -- coercion -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CyclotomicElement):
            if other.order != self.order:
                raise ValueError(
                    f"mixed cyclotomic orders: {self.order} vs {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement.from_rational(self.order, other)
        return None

    # -- ring operations ------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicElement(
            self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)]
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicElement(
            self.order, [a - b for a, b in zip(self.coeffs, o.coeffs)]
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CyclotomicElement(self.order, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        """Multiplicative inverse; Phi_m is irreducible over Q, so every
        nonzero element is invertible."""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        g, s = _ext_gcd_poly(list(self.coeffs), modulus)
        assert len(g) == 1, "element not coprime to the cyclotomic modulus"
        return CyclotomicElement(self.order, [c / g[0] for c in s])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CyclotomicElement(
                self.order, [c / Fraction(other) for c in self.coeffs]
            )
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicElement.from_rational(self.order, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- structure ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicElement.from_rational(self.order, other)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __repr__(self):
        return f"CyclotomicElement({self.order}, {list(self.coeffs)})"

    def __str__(self):
        sym = f"z{self.order}"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(format_rational(c))
            else:
                power = sym if i == 1 else f"{sym}^{i}"
                if c == 1:
                    terms.append(power)
                elif c == -1:
                    terms.append(f"-{power}")
                else:
                    terms.append(f"{format_rational(c)}*{power}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out
