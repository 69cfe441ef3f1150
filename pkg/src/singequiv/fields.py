"""Exact scalar arithmetic over the rationals and prime fields.

Scalars are ``fractions.Fraction`` in characteristic 0 and plain ints in
``range(p)`` in characteristic p.  A :class:`FieldSpec` bundles the
characteristic with the arithmetic so that the linear algebra kernels can
stay field-generic without ever rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MAX_CHARACTERISTIC = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Ground field: characteristic 0 means Q, otherwise a prime p < 2^31."""

    char: int = 0

    def __post_init__(self):
        if self.char != 0:
            if self.char >= MAX_CHARACTERISTIC or not _is_prime(self.char):
                raise ValueError(f"characteristic must be 0 or a prime < 2^31, got {self.char}")

    # -- constants ---------------------------------------------------------
    @property
    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.char == 0 else 1

    # -- conversions -------------------------------------------------------
    def of(self, x):
        """Coerce an int / Fraction into a normalized scalar of this field."""
        if self.char == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.char == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.char}")
            return (x.numerator * pow(x.denominator, -1, self.char)) % self.char
        return x % self.char

    # -- arithmetic --------------------------------------------------------
    def add(self, a, b):
        return a + b if self.char == 0 else (a + b) % self.char

    def sub(self, a, b):
        return a - b if self.char == 0 else (a - b) % self.char

    def mul(self, a, b):
        return a * b if self.char == 0 else (a * b) % self.char

    def neg(self, a):
        return -a if self.char == 0 else (-a) % self.char

    def inv(self, a):
        if self.char == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        return pow(a, -1, self.char)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __str__(self):
        return "Q" if self.char == 0 else f"F_{self.char}"


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    """The prime field with p elements."""
    return FieldSpec(p)
