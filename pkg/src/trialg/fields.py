"""Exact ground fields: arbitrary-precision rationals and prime fields.

Scalars are plain Python values (``fractions.Fraction`` over the rationals,
``int`` residues in ``[0, p)`` over a prime field).  A field descriptor
supplies arithmetic, parsing, and canonical formatting; every matrix,
subspace, and algebra in this package carries exactly one descriptor, and
mixing descriptors raises :class:`FieldMismatchError`.
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = [
    "Field",
    "RationalField",
    "PrimeField",
    "QQ",
    "GF",
    "parse_field",
    "FieldMismatchError",
    "check_same_field",
]

_SCALAR_RE = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


class FieldMismatchError(ValueError):
    """Values with different ground-field descriptors were combined."""


def check_same_field(a: "Field", b: "Field") -> None:
    if a != b:
        raise FieldMismatchError(f"field mismatch: {a.name} vs {b.name}")


class Field:
    """Base descriptor. Concrete fields implement the arithmetic hooks."""

    name = "?"

    def parse(self, text: str):
        """Parse an integer or ``p/q`` fraction string into a scalar."""
        text = text.strip()
        if not _SCALAR_RE.match(text):
            raise ValueError(f"not an exact scalar string: {text!r}")
        if "/" in text:
            num, den = text.split("/")
            return self.from_quotient(int(num), int(den))
        return self.coerce(int(text))

    # hooks
    def coerce(self, value):
        raise NotImplementedError

    def from_quotient(self, num: int, den: int):
        raise NotImplementedError

    def __repr__(self):
        return f"<field {self.name}>"


class RationalField(Field):
    """The rationals; scalars are reduced ``Fraction`` values."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def from_quotient(self, num, den):
        if den == 0:
            raise ValueError("zero denominator")
        return Fraction(num, den)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return a / b

    def to_str(self, value) -> str:
        return str(value)

    def random_scalar(self, rng, lo: int = -3, hi: int = 3):
        return Fraction(rng.randint(lo, hi))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    """Integers mod a prime; scalars are ints reduced to ``[0, p)``."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2:
            raise ValueError(f"modulus must be a prime >= 2, got {p!r}")
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.name = f"Fp:{p}"
        self.zero = 0
        self.one = 1 % p

    def coerce(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return self.from_quotient(value.numerator, value.denominator)
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def from_quotient(self, num, den):
        d = den % self.p
        if d == 0:
            raise ValueError(f"denominator {den} is 0 mod {self.p}")
        return (num % self.p) * pow(d, self.p - 2, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, value) -> str:
        return str(value)

    def random_scalar(self, rng, lo: int = 0, hi: int = 0):
        return rng.randrange(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(name: str) -> Field:
    """Parse a field tag: ``"Q"`` or ``"Fp:<prime>"``."""
    name = name.strip()
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise ValueError(f"bad prime-field tag: {name!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field tag: {name!r} (expected 'Q' or 'Fp:<prime>')")
