"""Exact ground fields: the rationals and prime fields GF(p).

Scalars are plain Python values: ``fractions.Fraction`` over the rationals,
canonical residues (ints in ``[0, p)``) over GF(p).  A ``Field`` object
supplies the arithmetic, parsing and formatting for its scalars, so matrix
and polynomial code can stay field-agnostic.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    """Invalid field specification or mixed-field operation."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface of the two field kinds."""

    char: int

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def div(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        return self.div(self.one, a)

    def pow(self, a, e: int):
        raise NotImplementedError

    def from_int(self, k: int):
        raise NotImplementedError

    def parse(self, s: str):
        raise NotImplementedError

    def fmt(self, a) -> str:
        raise NotImplementedError

    @property
    def spec(self) -> str:
        raise NotImplementedError


class RationalField(Field):
    """Arbitrary-precision rationals; scalars are ``Fraction``."""

    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return a / b

    def pow(self, a, e):
        return a ** e

    def from_int(self, k):
        return Fraction(k)

    def parse(self, s):
        return Fraction(s.strip())

    def fmt(self, a):
        return str(a)

    @property
    def spec(self):
        return "q"

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    """GF(p); scalars are canonical residues in [0, p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return a * pow(b, self.p - 2, self.p) % self.p

    def pow(self, a, e):
        return pow(a, e, self.p)

    def from_int(self, k):
        return k % self.p

    def parse(self, s):
        f = Fraction(s.strip())
        return self.div(f.numerator % self.p, f.denominator % self.p)

    def fmt(self, a):
        return str(a % self.p)

    @property
    def spec(self):
        return f"p:{self.p}"

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> Field:
    """Parse a field spec string: "q" for the rationals, "p:<prime>" for GF(p)."""
    s = spec.strip().lower()
    if s == "q":
        return QQ
    if s.startswith("p:"):
        try:
            p = int(s[2:])
        except ValueError:
            raise FieldError(f"bad field spec {spec!r}") from None
        return PrimeField(p)
    raise FieldError(f"bad field spec {spec!r} (expected 'q' or 'p:<prime>')")
