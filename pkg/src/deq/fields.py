"""Exact scalar domains: Q, prime fields F_p, and rational function fields Q(vars).

Values are raw objects (Fraction, int residue, sympy FracElement) owned by a
field object that supplies the arithmetic. All representations are canonical,
so equality of values is representation equality.
"""

from __future__ import annotations

import re
from fractions import Fraction

import sympy


class UsageError(ValueError):
    """Bad dimensions, mismatched fields, or invalid arguments."""


class MathError(ValueError):
    """A precondition that is a mathematical verdict failed (e.g. the input
    operator is not a solution); distinct from usage errors for exit codes."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common helpers; concrete fields define zero/one and the primitive ops."""

    kind = "abstract"

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        if self.is_zero(b):
            raise UsageError("division by zero")
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def dot(self, xs, ys):
        acc = self.zero
        for x, y in zip(xs, ys):
            acc = self.add(acc, self.mul(x, y))
        return acc

    def __ne__(self, other):
        return not self.__eq__(other)


class RationalField(Field):
    """The rationals, values are fractions.Fraction."""

    kind = "Q"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a  # Fraction raises ZeroDivisionError on 0

    def from_int(self, k: int):
        return Fraction(k)

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, str):
            return self.parse(v)
        raise UsageError("not a rational value: %r" % (v,))

    def validate(self, v):
        if not isinstance(v, Fraction):
            raise UsageError("rational entries must be Fraction, got %r" % (v,))
        return v

    def canonical(self, v):
        return Fraction(v)  # Fraction normalizes on construction

    def parse(self, text: str):
        text = text.strip()
        # integers and integer quotients only, no decimals
        if not re.fullmatch(r"[+-]?\d+(\s*/\s*\d+)?", text):
            raise UsageError("bad rational literal %r" % text)
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise UsageError("bad rational literal %r: zero denominator" % text)

    def show(self, v) -> str:
        return str(v)

    def random(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    def header(self) -> str:
        return "Q"

    def __repr__(self):
        return "RationalField()"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    """F_p, values are ints in [0, p)."""

    kind = "F"

    def __init__(self, p: int):
        if not is_prime(p):
            raise UsageError("modulus %r is not prime" % (p,))
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise UsageError("inverse of 0 in F_%d" % self.p)
        return pow(a, self.p - 2, self.p)

    def from_int(self, k: int):
        return k % self.p

    def coerce(self, v):
        if isinstance(v, int):
            return v % self.p
        if isinstance(v, str):
            return self.parse(v)
        raise UsageError("not an F_%d value: %r" % (self.p, v))

    def validate(self, v):
        if not isinstance(v, int) or not 0 <= v < self.p:
            raise UsageError("F_%d entries must be ints in [0,%d), got %r" % (self.p, self.p, v))
        return v

    def canonical(self, v):
        return v % self.p

    def parse(self, text: str):
        try:
            return int(text.strip()) % self.p
        except ValueError as exc:
            raise UsageError("bad integer literal %r: %s" % (text, exc))

    def show(self, v) -> str:
        return str(v)

    def random(self, rng):
        return rng.randrange(self.p)

    def header(self) -> str:
        return "F %d" % self.p

    def __repr__(self):
        return "PrimeField(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_LITERAL_CHARS = re.compile(r"^[0-9A-Za-z_+\-*/^() ]*$")


class FunctionField(Field):
    """Q(vars): rational functions with sympy FracElement values.

    FracElement is canonical (coprime numerator/denominator, denominator
    normalized by its lex-leading coefficient), hashable, and compares by
    representation, which is exactly the Scalar contract.
    """

    kind = "QFUN"

    def __init__(self, names):
        names = tuple(names)
        if not names or len(set(names)) != len(names):
            raise UsageError("variable names must be nonempty and distinct: %r" % (names,))
        for name in names:
            if not _NAME_RE.fullmatch(name):
                raise UsageError("bad variable name %r" % (name,))
        self.names = names
        self.ring = sympy.QQ.frac_field(*names)
        self.gens = self.ring.gens
        self.zero = self.ring.zero
        self.one = self.ring.one

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == self.zero:
            raise UsageError("inverse of 0 in %r" % self)
        return self.one / a

    def from_int(self, k: int):
        return self.ring.convert(k)

    def coerce(self, v):
        if isinstance(v, str):
            return self.parse(v)
        try:
            return self.ring.convert(v)
        except Exception:
            raise UsageError("not a %r value: %r" % (self, v))

    def validate(self, v):
        if getattr(v, "field", None) != self.ring.field:
            raise UsageError("entries must live in %r, got %r" % (self, v))
        return v

    def canonical(self, v):
        return v  # FracElement is canonical by construction

    def parse(self, text: str):
        text = text.strip()
        if not _LITERAL_CHARS.fullmatch(text):
            raise UsageError("illegal characters in scalar literal %r" % text)
        for name in _NAME_RE.findall(text):
            if name not in self.names:
                raise UsageError("unknown variable %r in literal %r" % (name, text))
        try:
            expr = sympy.sympify(text.replace("^", "**"), rational=True)
            return self.ring.from_sympy(expr)
        except (sympy.SympifyError, ValueError, TypeError, ZeroDivisionError) as exc:
            raise UsageError("bad function-field literal %r: %s" % (text, exc))

    def show(self, v) -> str:
        return str(v).replace("**", "^")

    def random(self, rng):
        # small linear numerator over a denominator from a short nonzero list
        num = self.from_int(rng.randint(-3, 3))
        for g in self.gens:
            num = num + self.from_int(rng.randint(-2, 2)) * g
        dens = [self.one, self.one + self.gens[0], self.from_int(2)]
        return num / dens[rng.randrange(len(dens))]

    def header(self) -> str:
        return "QFUN %s" % ",".join(self.names)

    def __repr__(self):
        return "FunctionField(%r)" % (self.names,)

    def __eq__(self, other):
        return isinstance(other, FunctionField) and other.names == self.names

    def __hash__(self):
        return hash(("QFUN", self.names))


QQ = RationalField()


def field_from_header(text: str) -> Field:
    """Parse the payload of a `field ...` header: Q | F <p> | QFUN <v,...>."""
    parts = text.split()
    if parts == ["Q"]:
        return QQ
    if len(parts) == 2 and parts[0] == "F":
        try:
            p = int(parts[1])
        except ValueError:
            raise UsageError("bad prime in field header %r" % text)
        return PrimeField(p)
    if len(parts) == 2 and parts[0] == "QFUN":
        names = [s for s in parts[1].split(",") if s]
        return FunctionField(names)
    raise UsageError("bad field header %r" % text)
