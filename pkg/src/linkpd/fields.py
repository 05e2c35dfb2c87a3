"""Coefficient fields: the rationals and prime fields F_p.

Elements are stored raw inside polynomials: ``Fraction`` for QQ and the
least nonnegative residue (a plain ``int``) for F_p.  Both forms are
canonical, so structural equality of coefficients is mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Coeff = Union[int, Fraction]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class FieldSpec:
    """Base class; use :class:`Rationals` or :class:`PrimeField`."""

    characteristic = 0

    def coerce(self, value) -> Coeff:
        raise NotImplementedError

    def is_zero(self, a: Coeff) -> bool:
        return a == 0

    def add(self, a: Coeff, b: Coeff) -> Coeff:
        raise NotImplementedError

    def sub(self, a: Coeff, b: Coeff) -> Coeff:
        raise NotImplementedError

    def mul(self, a: Coeff, b: Coeff) -> Coeff:
        raise NotImplementedError

    def neg(self, a: Coeff) -> Coeff:
        raise NotImplementedError

    def inv(self, a: Coeff) -> Coeff:
        raise NotImplementedError

    def div(self, a: Coeff, b: Coeff) -> Coeff:
        return self.mul(a, self.inv(b))

    def random_element(self, rng, nonzero: bool = False) -> Coeff:
        raise NotImplementedError

    def format(self, a: Coeff) -> str:
        return str(a)


class Rationals(FieldSpec):
    name = "QQ"

    def coerce(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return Fraction(1) / Fraction(a)

    def random_element(self, rng, nonzero=False):
        # small integers keep rational GB computations cheap
        while True:
            c = Fraction(rng.randint(-9, 9))
            if c or not nonzero:
                return c

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(FieldSpec):
    """The field Z/p for a prime 2 < p < 2**31."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 < p < 2**31 or not _is_prime(p):
            raise ValueError(f"PrimeField needs an odd prime below 2^31, got {p!r}")
        self.p = p
        self.characteristic = p
        self.name = f"ZZ/{p}"

    def coerce(self, value) -> int:
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, str):
            return int(value) % self.p
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        return pow(a, -1, self.p)

    def random_element(self, rng, nonzero=False):
        return rng.randrange(1 if nonzero else 0, self.p)

    def format(self, a):
        # symmetric representative reads better: p-1 prints as -1
        return str(a - self.p if a > self.p // 2 else a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("ZZ/", self.p))

    def __repr__(self):
        return f"ZZ/{self.p}"


QQ = Rationals()
DEFAULT_PRIME = 32003


def field_from_name(name: str) -> FieldSpec:
    """Parse ``"QQ"`` or ``"ZZ/p"``."""
    name = name.strip()
    if name == "QQ":
        return QQ
    if name.startswith("ZZ/"):
        return PrimeField(int(name[3:]))
    raise ValueError(f"unknown field {name!r}")
