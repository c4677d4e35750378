"""Exact field arithmetic: arbitrary-precision rationals and prime fields.

Everything downstream is generic over a ``Field`` object.  Elements are
plain immutable Python values -- ``fractions.Fraction`` for the rationals,
``int`` residues in ``[0, p)`` for a prime field -- so they are cheap to
hash, compare and share between threads.  The ``Field`` supplies the
operations; no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ValidationError

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 3.3e24."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
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
    """An exact field.  Elements are canonical immutable values."""

    name = "abstract"
    zero = None
    one = None

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b) -> bool:
        # Elements are kept canonical, so plain equality is field equality.
        return a == b

    def is_zero(self, a) -> bool:
        return a == self.zero

    def coerce(self, value):
        """Turn ``value`` (element, int, or text) into a canonical element."""
        raise NotImplementedError

    def is_canonical(self, value) -> bool:
        """True iff ``value`` already is a canonical element (coerce would
        return it unchanged)."""
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self.name)


class RationalField(Field):
    """Arbitrary-precision rationals, always reduced with positive denominator."""

    name = "rational"
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

    def inv(self, a):
        if a == 0:
            raise ValidationError("cannot invert zero")
        return 1 / a

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, float):
            raise ValidationError("floating point values are not accepted; "
                                  "write an exact decimal or p/q string")
        raise ValidationError("cannot interpret %r as a rational" % (value,))

    def is_canonical(self, value) -> bool:
        return type(value) is Fraction

    def parse(self, text: str):
        # Fraction accepts "5/3", "-3" and exact decimals like "0.25".
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError("bad rational literal %r: %s" % (text, exc))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational-field")


class PrimeField(Field):
    """Integers mod a prime p; residues stored reduced in [0, p)."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2 or not _is_prime(p):
            raise ValidationError("prime field order must be a prime >= 2, got %r" % (p,))
        self.p = p
        self.name = "gf %d" % p
        self.zero = 0
        self.one = 1

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
            raise ValidationError("cannot invert zero in %s" % self.name)
        return pow(a, -1, self.p)

    def coerce(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction) and value.denominator == 1:
            return int(value) % self.p
        raise ValidationError("prime-field values must be integers, got %r" % (value,))

    def is_canonical(self, value) -> bool:
        return type(value) is int and 0 <= value < self.p

    def parse(self, text: str):
        try:
            return int(text, 10) % self.p
        except ValueError:
            raise ValidationError("bad %s literal %r: expected an integer" % (self.name, text))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime-field", self.p))


#: The default field.
QQ = RationalField()


def parse_field_spec(text: str) -> Field:
    """Parse a field description: "rational", "gf 7" or "gf:7"."""
    words = text.strip().lower().replace(":", " ").split()
    if words == ["rational"]:
        return QQ
    if len(words) == 2 and words[0] == "gf":
        try:
            p = int(words[1], 10)
        except ValueError:
            raise ValidationError("bad prime in field spec %r" % text)
        return PrimeField(p)
    raise ValidationError("unknown field spec %r (use 'rational' or 'gf:<p>')" % text)


def require_same_field(a: Field, b: Field, what: str = "operands"):
    if a != b:
        raise ValidationError("field mismatch: %s are over %s and %s" % (what, a.name, b.name))
