"""Dirichlet characters and generalized Bernoulli numbers/polynomials.

A character mod k is stored as its full value table on residues 1..k and
validated on construction: support exactly on units, total multiplicativity,
chi(1) = 1, and a coherent parity.  Real characters carry Fraction values;
non-real ones carry CyclotomicElement values (order = the character's order),
so every computation downstream stays exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .arith import CyclotomicElement, is_prime
from .bernoulli import bernoulli_poly
from .poly import Polynomial, Scalar


class CharacterError(ValueError):
    """A character table failed validation; the message names the constraint."""


def _coerce_values(values) -> tuple[Scalar, ...]:
    vals = []
    order = None
    for v in values:
        if isinstance(v, int):
            v = Fraction(v)
        if isinstance(v, CyclotomicElement):
            if v.is_rational():
                v = v.to_rational()
            elif order is None:
                order = v.order
            elif v.order != order:
                raise CharacterError("mixed cyclotomic orders in value table")
        elif not isinstance(v, Fraction):
            raise CharacterError(f"unsupported character value type: {type(v).__name__}")
        vals.append(v)
    if order is not None:
        vals = [
            v if isinstance(v, CyclotomicElement) else CyclotomicElement.from_rational(order, v)
            for v in vals
        ]
    return tuple(vals)


class DirichletCharacter:
    """Validated conductor-k character given by its value table on 1..k."""

    __slots__ = ("modulus", "values", "parity", "is_trivial", "is_primitive", "label")

    def __init__(self, modulus: int, values, label: str | None = None) -> None:
        if modulus < 1:
            raise CharacterError("modulus must be a positive integer")
        values = _coerce_values(values)
        if len(values) != modulus:
            raise CharacterError(
                f"value table must have length {modulus}, got {len(values)}"
            )
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "label", label or f"table:{modulus}")
        self._validate()
        object.__setattr__(self, "parity", self._parity())
        object.__setattr__(
            self,
            "is_trivial",
            all(self(r) == 1 for r in range(1, modulus + 1) if gcd(r, modulus) == 1),
        )
        object.__setattr__(self, "is_primitive", self._primitive())

    def __setattr__(self, name, value):
        raise AttributeError("DirichletCharacter is immutable")

    def __call__(self, m: int) -> Scalar:
        """chi(m) for any integer m, by k-periodicity."""
        return self.values[(m - 1) % self.modulus]

    def _validate(self) -> None:
        k = self.modulus
        for r in range(1, k + 1):
            on_unit = gcd(r, k) == 1
            if on_unit and not self(r):
                raise CharacterError(f"chi({r}) = 0 but gcd({r},{k}) = 1")
            if not on_unit and self(r):
                raise CharacterError(f"chi({r}) != 0 but gcd({r},{k}) > 1")
        if self(1) != 1:
            raise CharacterError("chi(1) must equal 1")
        units = [r for r in range(1, k + 1) if gcd(r, k) == 1]
        for r in units:
            for s in units:
                if self(r * s) != self(r) * self(s):
                    raise CharacterError(
                        f"multiplicativity fails: chi({r}*{s}) != chi({r})*chi({s})"
                    )

    def _parity(self) -> str:
        at_minus_one = self(-1)
        if at_minus_one == self(1):
            return "even"
        if at_minus_one == -self(1):
            return "odd"
        raise CharacterError("chi(-1) is neither chi(1) nor -chi(1)")

    @property
    def is_even(self) -> bool:
        return self.parity == "even"

    @property
    def is_odd(self) -> bool:
        return self.parity == "odd"

    def _primitive(self) -> bool:
        # Primitive iff chi does not factor through any proper divisor d of k:
        # some pair a = b (mod d), both coprime to k, must have chi(a) != chi(b).
        k = self.modulus
        units = [r for r in range(1, k + 1) if gcd(r, k) == 1]
        for d in range(1, k):
            if k % d:
                continue
            factors_through_d = all(
                self(a) == self(b)
                for a in units
                for b in units
                if a < b and (a - b) % d == 0
            )
            if factors_through_d:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return self.modulus == other.modulus and all(
            a == b for a, b in zip(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.modulus, self.values))

    def __repr__(self):
        return f"DirichletCharacter({self.modulus}, {list(self.values)})"

    def __str__(self):
        return self.label


def trivial_character(k: int = 1) -> DirichletCharacter:
    """The trivial character mod k (1 on units, 0 elsewhere)."""
    values = [1 if gcd(r, k) == 1 else 0 for r in range(1, k + 1)]
    return DirichletCharacter(k, values, label=f"trivial:{k}")


def quadratic_character(p: int) -> DirichletCharacter:
    """The Legendre-symbol character mod an odd prime p."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    values = []
    for r in range(1, p + 1):
        if r % p == 0:
            values.append(0)
        else:
            values.append(1 if pow(r, (p - 1) // 2, p) == 1 else -1)
    return DirichletCharacter(p, values, label=f"kronecker:{p}")


def chi4() -> DirichletCharacter:
    """The non-trivial character mod 4: 1, 0, -1, 0."""
    return DirichletCharacter(4, [1, 0, -1, 0], label="chi4")


def character_from_table(k: int, values) -> DirichletCharacter:
    """Build and fully validate a character from an explicit value table."""
    return DirichletCharacter(k, values)


def parse_character(text: str) -> DirichletCharacter:
    """Parse a character literal: ``kronecker:p``, ``chi4``, ``trivial:k``,
    or ``table:k:v1,v2,...,vk`` with rational entries."""
    text = text.strip()
    if text == "chi4":
        return chi4()
    if text.startswith("kronecker:"):
        return quadratic_character(int(text.split(":", 1)[1]))
    if text.startswith("trivial:"):
        k = int(text.split(":", 1)[1])
        if k < 1:
            raise ValueError("trivial:k requires k >= 1")
        return trivial_character(k)
    if text.startswith("table:"):
        parts = text.split(":", 2)
        if len(parts) != 3:
            raise ValueError("table literal must look like table:k:v1,...,vk")
        k = int(parts[1])
        values = [Fraction(v) for v in parts[2].split(",")]
        return character_from_table(k, values)
    raise ValueError(f"unrecognized character literal: {text!r}")


# -- generalized Bernoulli attached to a character ---------------------------

def generalized_bernoulli_poly(chi: DirichletCharacter, n: int) -> Polynomial:
    """B_{n,chi}(x) = k^(n-1) * sum_{r=1}^{k} chi(r) B_n((r + x)/k)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    k = chi.modulus
    base = bernoulli_poly(n).scale_arg(Fraction(1, k))
    total = Polynomial()
    for r in range(1, k + 1):
        value = chi(r)
        if value:
            total = total + value * base.shift(r)
    return Fraction(k) ** (n - 1) * total


def generalized_bernoulli_number(chi: DirichletCharacter, n: int) -> Scalar:
    """B_{n,chi} = k^(n-1) * sum_{r=1}^{k} chi(r) B_n(r/k)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    k = chi.modulus
    b = bernoulli_poly(n)
    acc = sum((chi(r) * b(Fraction(r, k)) for r in range(1, k + 1) if chi(r)), Fraction(0))
    return Fraction(k) ** (n - 1) * acc


def tilde_bernoulli_poly(chi: DirichletCharacter, n: int) -> Polynomial:
    """The shifted variant B_{n,chi}(x - 1); equals B_n(x) for the trivial
    character mod 1."""
    return generalized_bernoulli_poly(chi, n).shift(-1)
