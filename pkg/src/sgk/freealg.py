"""The free associative algebra K{x_1,...,x_n}.

Words are tuples of 0-based generator indices (the empty tuple is the unit
monomial); multiplication is concatenation.  Polynomials are sparse maps from
words to nonzero scalars.  The deglex order -- degree first, then left-to-right
lexicographic comparison of letter indices -- is the multiplication-compatible
order used by the rewriting engine; a weighted variant supports gradings where
generators carry weight > 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    GeneratorCountMismatch,
    MixedDegrees,
    NotHomogeneous,
    ParseError,
    SliceTooLarge,
    UnknownGenerator,
)
from .fields import Field, Scalar

Word = tuple  # tuple of generator indices

SLICE_DIM_CAP = 1 << 16


def deglex_key(w: Word):
    return (len(w), w)


def deglex_cmp(u: Word, v: Word) -> int:
    ku, kv = deglex_key(u), deglex_key(v)
    return (ku > kv) - (ku < kv)


class WordOrder:
    """Degree-then-lex word order, optionally with positive integer weights.

    Compatible with concatenation: u < v implies aub < avb.  With all weights
    equal to 1 this is plain deglex.
    """

    def __init__(self, weights: tuple | None = None):
        if weights is not None:
            weights = tuple(int(w) for w in weights)
            if any(w <= 0 for w in weights):
                raise ValueError("weights must be positive integers")
        self.weights = weights

    def degree(self, w: Word) -> int:
        if self.weights is None:
            return len(w)
        return sum(self.weights[i] for i in w)

    def key(self, w: Word):
        return (self.degree(w), w)

    def __repr__(self):
        return f"WordOrder(weights={self.weights})"


@dataclass(frozen=True)
class DegreeSlice:
    """The homogeneous component F_d, with its fixed word <-> coordinate bijection.

    The i-th word of F_d is determined by lexicographic order on letter
    sequences, so coordinates are stable across processes.
    """

    ngens: int
    degree: int

    def __post_init__(self):
        if self.ngens < 1 or self.degree < 0:
            raise ValueError("need ngens >= 1 and degree >= 0")
        if self.ngens**self.degree > SLICE_DIM_CAP:
            raise SliceTooLarge(
                f"slice dimension {self.ngens}^{self.degree} exceeds {SLICE_DIM_CAP}"
            )

    @property
    def dim(self) -> int:
        return self.ngens**self.degree

    def index_of(self, w: Word) -> int:
        if len(w) != self.degree:
            raise NotHomogeneous(f"word {w} does not live in F_{self.degree}")
        i = 0
        for c in w:
            i = i * self.ngens + c
        return i

    def word_at(self, i: int) -> Word:
        if not 0 <= i < self.dim:
            raise IndexError(i)
        letters = []
        for _ in range(self.degree):
            letters.append(i % self.ngens)
            i //= self.ngens
        return tuple(reversed(letters))

    def words(self) -> Iterator[Word]:
        for i in range(self.dim):
            yield self.word_at(i)


class Poly:
    """Sparse scalar combination of words; no zero coefficients are stored."""

    __slots__ = ("field", "ngens", "terms")

    def __init__(self, field: Field, ngens: int, terms: dict | None = None):
        self.field = field
        self.ngens = ngens
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field: Field, ngens: int) -> "Poly":
        return cls(field, ngens, {})

    @classmethod
    def monomial(cls, field: Field, ngens: int, w: Word, coeff=None) -> "Poly":
        c = field.one if coeff is None else coeff
        return cls(field, ngens, {tuple(w): c})

    @classmethod
    def gen(cls, field: Field, ngens: int, i: int) -> "Poly":
        return cls.monomial(field, ngens, (i,))

    @classmethod
    def const(cls, field: Field, ngens: int, c) -> "Poly":
        return cls(field, ngens, {(): c})

    # -- basics --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "Poly") -> None:
        if self.ngens != other.ngens:
            raise GeneratorCountMismatch(
                f"{self.ngens} generators vs {other.ngens}"
            )

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ngens == other.ngens
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ngens, frozenset(self.terms.items())))

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            nc = terms.get(w)
            nc = c if nc is None else nc + c
            if nc:
                terms[w] = nc
            else:
                terms.pop(w, None)
        return Poly(self.field, self.ngens, terms)

    def __neg__(self) -> "Poly":
        return Poly(self.field, self.ngens, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c) -> "Poly":
        if not c:
            return Poly.zero(self.field, self.ngens)
        return Poly(self.field, self.ngens, {w: c * x for w, x in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        terms: dict = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                c = a * b
                nc = terms.get(w)
                nc = c if nc is None else nc + c
                if nc:
                    terms[w] = nc
                else:
                    terms.pop(w, None)
        return Poly(self.field, self.ngens, terms)

    # -- degrees and components ---------------------------------------------

    def degree(self, weights: tuple | None = None) -> int:
        """Max term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if weights is None:
            return max(len(w) for w in self.terms)
        return max(sum(weights[i] for i in w) for w in self.terms)

    def min_degree(self, weights: tuple | None = None) -> int:
        if not self.terms:
            return -1
        if weights is None:
            return min(len(w) for w in self.terms)
        return min(sum(weights[i] for i in w) for w in self.terms)

    def homogeneous_component(self, d: int, weights: tuple | None = None) -> "Poly":
        if weights is None:
            sel = {w: c for w, c in self.terms.items() if len(w) == d}
        else:
            sel = {
                w: c
                for w, c in self.terms.items()
                if sum(weights[i] for i in w) == d
            }
        return Poly(self.field, self.ngens, sel)

    def components(self, weights: tuple | None = None) -> Iterator[tuple[int, "Poly"]]:
        """Yield (degree, component) pairs in increasing degree."""
        by_deg: dict[int, dict] = {}
        for w, c in self.terms.items():
            d = len(w) if weights is None else sum(weights[i] for i in w)
            by_deg.setdefault(d, {})[w] = c
        for d in sorted(by_deg):
            yield d, Poly(self.field, self.ngens, by_deg[d])

    def is_homogeneous(self, weights: tuple | None = None) -> bool:
        return self.is_zero() or self.degree(weights) == self.min_degree(weights)

    def leading_word(self, order: WordOrder | None = None) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        key = order.key if order is not None else deglex_key
        return max(self.terms, key=key)

    # -- coordinates ----------------------------------------------------------

    def to_vector(self, slc: DegreeSlice) -> dict:
        """Sparse coordinate vector of a homogeneous polynomial in F_d."""
        if self.ngens != slc.ngens:
            raise GeneratorCountMismatch(f"{self.ngens} vs slice {slc.ngens}")
        vec = {}
        for w, c in self.terms.items():
            vec[slc.index_of(w)] = c
        return vec

    @staticmethod
    def from_vector(vec: dict, slc: DegreeSlice, field: Field) -> "Poly":
        return Poly(field, slc.ngens, {slc.word_at(i): c for i, c in vec.items() if c})

    # -- rendering -------------------------------------------------------------

    def render(self, names: Iterable[str]) -> str:
        names = list(names)
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=deglex_key, reverse=True):
            c = self.terms[w]
            parts.append((w, c))
        out = []
        for k, (w, c) in enumerate(parts):
            s = _render_term(w, c, names, self.field, first=(k == 0))
            out.append(s)
        return "".join(out)

    def __repr__(self):
        names = [f"x{i+1}" for i in range(self.ngens)]
        return f"Poly({self.render(names)})"


def _render_word(w: Word, names: list) -> str:
    if not w:
        return "1"
    runs = []
    for i in w:
        if runs and runs[-1][0] == i:
            runs[-1][1] += 1
        else:
            runs.append([i, 1])
    return "*".join(
        names[i] if e == 1 else f"{names[i]}^{e}" for i, e in runs
    )


def _render_term(w: Word, c, names: list, field: Field, first: bool) -> str:
    body = _render_word(w, names)
    minus_one = -field.one
    coeff_txt = None
    sign = "+"
    if c == field.one:
        pass
    elif c == minus_one:
        sign = "-"
    else:
        txt = field.render(c)
        if txt.startswith("-"):
            sign = "-"
            txt = txt[1:]
        coeff_txt = txt
    if w == ():
        # bare constant: fold the coefficient into the body
        coeff_txt, body = None, (field.render(c).lstrip("-") or "0")
        sign = "-" if field.render(c).startswith("-") else "+"
    lead = "" if first and sign == "+" else ("-" if first else f" {sign} ")
    if coeff_txt is None:
        return f"{lead}{body}"
    return f"{lead}{coeff_txt}*{body}"


# -- parsing --------------------------------------------------------------------

_TOKEN_CHARS = set("+-*^() \t")


def _tokenize(text: str) -> list:
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^()":
            toks.append(ch)
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            # rational literal a/b
            if j < len(text) and text[j] == "/" and j + 1 < len(text) and text[j + 1].isdigit():
                k = j + 1
                while k < len(text) and text[k].isdigit():
                    k += 1
                toks.append(("num", text[i:k]))
                i = k
            else:
                toks.append(("num", text[i:j]))
                i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j]))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r} at position {i}")
    return toks


class _Parser:
    """Recursive-descent parser for the plain-text polynomial grammar.

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' int]
    atom   := number | name | '(' expr ')'
    """

    def __init__(self, toks, names, field, params):
        self.toks = toks
        self.pos = 0
        self.names = {n: i for i, n in enumerate(names)}
        self.ngens = len(names)
        self.field = field
        self.params = params or {}

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return t

    def parse(self) -> Poly:
        p = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input at token {self.pos}: {self.peek()!r}")
        return p

    def expr(self) -> Poly:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        elif self.peek() == "+":
            self.take()
        p = self.term()
        if sign < 0:
            p = -p
        while self.peek() in ("+", "-"):
            op = self.take()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.factor()
        while self.peek() == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> Poly:
        p = self.atom()
        if self.peek() == "^":
            self.take()
            t = self.take()
            if not (isinstance(t, tuple) and t[0] == "num" and "/" not in t[1]):
                raise ParseError("exponent must be a nonnegative integer")
            e = int(t[1])
            out = Poly.const(self.field, self.ngens, self.field.one)
            for _ in range(e):
                out = out * p
            return out
        return p

    def atom(self) -> Poly:
        t = self.take()
        if t == "(":
            p = self.expr()
            if self.take() != ")":
                raise ParseError("expected ')'")
            return p
        if isinstance(t, tuple) and t[0] == "num":
            return Poly.const(self.field, self.ngens, self.field.parse(t[1]))
        if isinstance(t, tuple) and t[0] == "name":
            name = t[1]
            if name in self.names:
                return Poly.gen(self.field, self.ngens, self.names[name])
            if name in self.params:
                return Poly.const(self.field, self.ngens, self.params[name])
            raise UnknownGenerator(f"unknown generator or parameter {name!r}")
        raise ParseError(f"unexpected token {t!r}")


def parse_poly(text: str, names, field: Field, params: dict | None = None) -> Poly:
    """Parse terms like ``-2*x*y + y*x`` against the declared generator names."""
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty polynomial")
    return _Parser(toks, list(names), field, params).parse()


def all_words(ngens: int, length: int) -> list:
    """All words of the given length in lexicographic order."""
    return list(DegreeSlice(ngens, length).words())


def span_check_same_degree(polys: list) -> int:
    """Common degree of a nonempty list of homogeneous polynomials."""
    deg = None
    for p in polys:
        if p.is_zero():
            continue
        if not p.is_homogeneous():
            raise MixedDegrees(f"not homogeneous: {p!r}")
        d = p.degree()
        if deg is None:
            deg = d
        elif d != deg:
            raise MixedDegrees(f"degrees {deg} and {d} mixed in one span")
    if deg is None:
        raise MixedDegrees("cannot infer degree from zero polynomials alone")
    return deg
