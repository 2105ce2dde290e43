"""Exact field arithmetic: the rationals and prime fields.

Scalars are immutable values supporting the usual operators.  Over Q they are
`fractions.Fraction` (already canonical: reduced, positive denominator); over
F_p they are `FpElement` with the residue stored in [0, p).  All arithmetic is
exact; nothing in the package ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ParseError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FpElement:
    """Residue mod p.  Canonical form: 0 <= value < p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _check(self, other: "FpElement") -> None:
        if not isinstance(other, FpElement) or other.p != self.p:
            raise TypeError(f"cannot mix F_{self.p} with {other!r}")

    def __add__(self, other):
        self._check(other)
        return FpElement(self.value + other.value, self.p)

    def __sub__(self, other):
        self._check(other)
        return FpElement(self.value - other.value, self.p)

    def __mul__(self, other):
        self._check(other)
        return FpElement(self.value * other.value, self.p)

    def __truediv__(self, other):
        self._check(other)
        if other.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(self.value * pow(other.value, -1, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __eq__(self, other):
        return (
            isinstance(other, FpElement)
            and other.p == self.p
            and other.value == self.value
        )

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


Scalar = Union[Fraction, FpElement]


def scalar_sort_key(c: Scalar) -> tuple:
    """A total sortable key; scalars of one field only ever meet their own kind."""
    if isinstance(c, FpElement):
        return (c.value, 1)
    return (c.numerator, c.denominator)


class Rationals:
    """The field Q.  Stateless; all instances are interchangeable."""

    kind = "Q"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {text!r}: {exc}") from None

    def render(self, a: Fraction) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The field F_p for a prime p."""

    kind = "Fp"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def zero(self) -> FpElement:
        return FpElement(0, self.p)

    @property
    def one(self) -> FpElement:
        return FpElement(1, self.p)

    def from_int(self, n: int) -> FpElement:
        return FpElement(n, self.p)

    def parse(self, text: str) -> FpElement:
        text = text.strip()
        try:
            q = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad field literal {text!r}: {exc}") from None
        num = FpElement(q.numerator, self.p)
        den = FpElement(q.denominator, self.p)
        return num / den

    def render(self, a: FpElement) -> str:
        return str(a.value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F_{self.p}"


Field = Union[Rationals, PrimeField]

QQ = Rationals()


@dataclass(frozen=True)
class FieldSpec:
    """Field selection plus parameter bindings, as read from a presentation file.

    Parameters (q, alpha, ...) are bound to concrete field elements at load
    time; symbolic coefficient fields are out of scope.
    """

    kind: str = "Q"  # "Q" or "Fp"
    p: int = 0
    params: tuple = ()  # sorted tuple of (name, literal-string)

    def field(self) -> Field:
        if self.kind == "Q":
            return QQ
        if self.kind == "Fp":
            return PrimeField(self.p)
        raise ParseError(f"unknown field kind {self.kind!r}")

    def bindings(self) -> dict:
        fld = self.field()
        return {name: fld.parse(text) for name, text in self.params}

    @staticmethod
    def from_json(doc: dict, params: dict | None = None) -> "FieldSpec":
        kind = doc.get("kind", "Q")
        if kind in ("Q", "Rationals"):
            spec_kind, p = "Q", 0
        elif kind in ("Fp", "PrimeField"):
            spec_kind, p = "Fp", int(doc["p"])
            if not _is_prime(p):
                raise ParseError(f"field characteristic {p} is not prime")
        else:
            raise ParseError(f"unknown field kind {kind!r}")
        items = tuple(sorted((str(k), str(v)) for k, v in (params or {}).items()))
        return FieldSpec(spec_kind, p, items)

    def to_json(self) -> dict:
        doc = {"kind": self.kind}
        if self.kind == "Fp":
            doc["p"] = self.p
        return doc
