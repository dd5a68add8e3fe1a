"""Dense exact univariate polynomials over Fraction or CyclotomicElement.

Coefficients are stored ascending (index i = coefficient of x^i) in a
trimmed tuple, so equality is structural.  All operations are pure; mixed
Fraction/cyclotomic arithmetic coerces through the scalar ring's embedding,
while genuinely mismatched cyclotomic orders raise ValueError.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .arith import CyclotomicElement, format_rational

Scalar = Union[Fraction, CyclotomicElement]


def _as_scalar(value) -> Scalar:
    if isinstance(value, (Fraction, CyclotomicElement)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"unsupported coefficient type: {type(value).__name__}")


class Polynomial:
    """Immutable dense polynomial; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()) -> None:
        cs = [_as_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Polynomial":
        return cls([0] * degree + [c])

    # -- structure --------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Scalar:
        """The value of a constant polynomial (0 for the zero polynomial)."""
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
            return Polynomial(out)
        try:
            scalar = _as_scalar(other)
        except TypeError:
            return NotImplemented
        return Polynomial([c * scalar for c in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = _as_scalar(scalar)
        if not s:
            raise ZeroDivisionError("division of polynomial by zero scalar")
        return Polynomial([c / s for c in self.coeffs])

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Polynomial.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- evaluation and calculus -------------------------------------------
    def __call__(self, x0) -> Scalar:
        """Horner evaluation at an exact point."""
        x0 = _as_scalar(x0)
        result = None
        for c in reversed(self.coeffs):
            result = c if result is None else result * x0 + c
        return Fraction(0) if result is None else result

    def shift(self, c) -> "Polynomial":
        """q with q(x) = p(x + c)."""
        c = _as_scalar(c)
        if not c:
            return self
        x_plus_c = Polynomial([c, 1])
        result = Polynomial()
        for coeff in reversed(self.coeffs):
            result = result * x_plus_c + Polynomial.constant(coeff)
        return result

    def scale_arg(self, factor) -> "Polynomial":
        """q with q(x) = p(factor * x)."""
        factor = _as_scalar(factor)
        out = []
        power = Fraction(1)
        for c in self.coeffs:
            out.append(c * power)
            power = power * factor
        return Polynomial(out)

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "Polynomial":
        """Antiderivative with zero constant term."""
        return Polynomial([Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def integrate(self, lo, hi) -> Scalar:
        """Exact definite integral over [lo, hi]."""
        anti = self.antiderivative()
        return anti(hi) - anti(lo)

    # -- rendering -----------------------------------------------------------
    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        """Descending-power rendering, e.g. ``1/6*x^3 - 1/2*x^2 + 1/3*x``."""
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if isinstance(c, CyclotomicElement):
                cstr = format_rational(c.to_rational()) if c.is_rational() else f"({c})"
            else:
                cstr = format_rational(c)
            if i == 0:
                terms.append(cstr)
                continue
            power = "x" if i == 1 else f"x^{i}"
            if cstr == "1":
                terms.append(power)
            elif cstr == "-1":
                terms.append(f"-{power}")
            else:
                terms.append(f"{cstr}*{power}")
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out
