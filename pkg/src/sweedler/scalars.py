"""Exact field arithmetic over Q and F_p.

Every coefficient in the library is either a `fractions.Fraction` (over Q)
or an int in [0, p) (over F_p).  A `Field` object tags which one is in play
and supplies the arithmetic; spaces and maps carry their field and refuse to
mix.  Signs are field elements too, so Koszul bookkeeping composes with
coefficients without special cases.
"""

from __future__ import annotations

from fractions import Fraction


class ScalarError(Exception):
    pass


class DivisionByZero(ScalarError):
    pass


class MixedFields(ScalarError):
    pass


class ParseError(ScalarError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """A coefficient field: the rationals or a prime field F_p."""

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise ScalarError(f"modulus {p} is not prime")
        self.p = p

    # -- identity ----------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Q" if self.p is None else f"F{self.p}"

    @property
    def name(self) -> str:
        return "Q" if self.p is None else f"Fp:{self.p}"

    # -- element constructors ----------------------------------------------
    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def of(self, n) -> Fraction | int:
        """Coerce an int or Fraction into this field."""
        if self.p is None:
            return Fraction(n)
        if isinstance(n, Fraction):
            return self.div(n.numerator % self.p, n.denominator % self.p)
        return n % self.p

    def sign(self, exponent: int):
        """(-1)**exponent as a field element."""
        return self.of(-1) if exponent % 2 else self.one()

    # -- arithmetic ----------------------------------------------------------
    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.is_zero(a):
            raise DivisionByZero("inverse of zero")
        if self.p is None:
            return 1 / Fraction(a)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def is_one(self, a) -> bool:
        return a == self.one()

    # -- text form -----------------------------------------------------------
    def format(self, a) -> str:
        if self.p is None:
            f = Fraction(a)
            return f"{f.numerator}/{f.denominator}"
        return str(a % self.p)

    def parse(self, text: str):
        """Parse "p/q" (over Q) or an integer residue (over F_p)."""
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                if self.p is None:
                    if int(den) == 0:
                        raise ParseError(f"zero denominator in {text!r}")
                    return Fraction(int(num), int(den))
                return self.div(self.of(int(num)), self.of(int(den)))
            return self.of(int(text))
        except ParseError:
            raise
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coefficient {text!r}: {exc}") from None

    @staticmethod
    def parse_name(name: str) -> "Field":
        """Parse a field declaration: "Q" or "Fp:<p>"."""
        name = name.strip()
        if name == "Q":
            return QQ
        if name.startswith("Fp:"):
            try:
                return Field(int(name[3:]))
            except ScalarError:
                raise
            except ValueError:
                raise ParseError(f"bad field declaration {name!r}") from None
        raise ParseError(f"bad field declaration {name!r}")


QQ = Field()


def require_same_field(f: Field, g: Field) -> Field:
    if f != g:
        raise MixedFields(f"cannot mix {f!r} and {g!r}")
    return f


def scalar_arith(field: Field, a, b=None, op: str = "add"):
    """Spec surface for scalar arithmetic: op in {add, mul, neg, inv}."""
    if op == "add":
        return field.add(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "neg":
        return field.neg(a)
    if op == "inv":
        return field.inv(a)
    raise ScalarError(f"unknown op {op!r}")
