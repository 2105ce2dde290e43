"""Exact linear algebra on subspaces of a fixed degree slice F_d.

A subspace is stored canonically as a reduced row echelon basis: rows sorted
by pivot column, pivot columns cleared elsewhere.  Over Q the stored rows are
primitive integer vectors with positive pivot (the integer image of the
pivot-1 rational RREF, so equality of subspaces is still equality of canonical
forms and deduplication is a hash lookup); over a prime field the rows carry
field elements with pivot 1.

Elimination over Q runs fraction-free: forward-only reduction on primitive
integer rows during accumulation, one back-elimination pass at export.  This
keeps the lattice closures over Q fast without ever leaving exact arithmetic.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional

from .errors import MixedDegrees, SliceMismatch
from .fields import Field, Rationals, scalar_sort_key
from .freealg import DegreeSlice, Poly, span_check_same_degree


class Echelon:
    """Incremental reduced row echelon form over an exact field.

    Used for rational and prime-field reads and small eliminations; the bulk
    integer path below carries the heavy lattice work over Q.
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows: list = []  # list of (pivot, rowdict), sorted by pivot

    def reduce_vector(self, vec: dict) -> dict:
        """Fully reduce vec against the current rows (vec is not mutated)."""
        v = {i: c for i, c in vec.items() if c}
        for piv, row in self.rows:
            c = v.get(piv)
            if c:
                for j, a in row.items():
                    nc = v.get(j)
                    nc = -c * a if nc is None else nc - c * a
                    if nc:
                        v[j] = nc
                    else:
                        v.pop(j, None)
        return v

    def add_vector(self, vec: dict) -> bool:
        """Insert a vector; return True if the rank grew."""
        v = self.reduce_vector(vec)
        if not v:
            return False
        piv = min(v)
        inv = v[piv]
        row = {j: c / inv for j, c in v.items()}
        for k, (p2, r2) in enumerate(self.rows):
            c = r2.get(piv)
            if c:
                nr = dict(r2)
                for j, a in row.items():
                    nc = nr.get(j)
                    nc = -c * a if nc is None else nc - c * a
                    if nc:
                        nr[j] = nc
                    else:
                        nr.pop(j, None)
                self.rows[k] = (p2, nr)
        self.rows.append((piv, row))
        self.rows.sort(key=lambda t: t[0])
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce_vector(vec)

    @property
    def rank(self) -> int:
        return len(self.rows)


def _gcd_reduce(v: dict) -> dict:
    g = 0
    for c in v.values():
        g = gcd(g, c)
        if g == 1:
            return v
    if g > 1:
        return {j: c // g for j, c in v.items()}
    return v


class IntEchelon:
    """Forward-only fraction-free echelon over Q (integer rows).

    Rows are kept sorted by pivot but not back-eliminated; each row's minimum
    column is its pivot.  `canonical_rows` produces the reduced, primitive,
    positive-pivot form.
    """

    __slots__ = ("pivots", "rows")

    def __init__(self):
        self.pivots: list = []
        self.rows: list = []

    def reduce_vector(self, vec: dict) -> dict:
        """Reduce an integer vector (up to positive scale)."""
        v = {i: int(c) for i, c in vec.items() if c}
        pivots, rows = self.pivots, self.rows
        for idx in range(len(pivots)):
            c = v.get(pivots[idx])
            if c:
                row = rows[idx]
                rp = row[pivots[idx]]
                if rp != 1:
                    v = {j: a * rp for j, a in v.items()}
                for j, a in row.items():
                    nc = v.get(j, 0) - c * a
                    if nc:
                        v[j] = nc
                    else:
                        v.pop(j, None)
                if v:
                    v = _gcd_reduce(v)
        return v

    def add_vector(self, vec: dict) -> bool:
        v = self.reduce_vector(vec)
        if not v:
            return False
        piv = min(v)
        if v[piv] < 0:
            v = {j: -c for j, c in v.items()}
        at = bisect_left(self.pivots, piv)
        self.pivots.insert(at, piv)
        self.rows.insert(at, v)
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce_vector(vec)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def canonical_rows(self) -> list:
        """Back-eliminated primitive rows, ascending pivots."""
        out_pivs: list = []
        out_rows: list = []
        for idx in range(len(self.pivots) - 1, -1, -1):
            v = dict(self.rows[idx])
            for k in range(len(out_pivs)):
                c = v.get(out_pivs[k])
                if c:
                    row = out_rows[k]
                    rp = row[out_pivs[k]]
                    if rp != 1:
                        v = {j: a * rp for j, a in v.items()}
                    for j, a in row.items():
                        nc = v.get(j, 0) - c * a
                        if nc:
                            v[j] = nc
                        else:
                            v.pop(j, None)
                    v = _gcd_reduce(v)
            piv = min(v)
            if v[piv] < 0:
                v = {j: -c for j, c in v.items()}
            out_pivs.append(piv)
            out_rows.append(v)
        pairs = sorted(zip(out_pivs, out_rows))
        return pairs


def _int_vector(vec: dict) -> dict:
    """Clear denominators of a rational vector; integer dicts pass through."""
    denom = 1
    for c in vec.values():
        if isinstance(c, Fraction):
            denom = lcm(denom, c.denominator)
    if denom == 1:
        return {j: int(c) for j, c in vec.items() if c}
    return {j: int(c * denom) for j, c in vec.items() if c}


def _canonical_int_row(row: dict) -> dict:
    v = _gcd_reduce(_int_vector(row))
    if v and v[min(v)] < 0:
        v = {j: -c for j, c in v.items()}
    return v


class Subspace:
    """A linear subspace of F_d in canonical (RREF) form.

    Constructor rows must already be mutually reduced (pivot columns cleared);
    all factory methods here guarantee that.
    """

    __slots__ = ("field", "slice", "rows", "_key", "_reader", "_sort_key")

    def __init__(self, field: Field, slc: DegreeSlice, echelon_rows: Iterable):
        self.field = field
        self.slice = slc
        if isinstance(field, Rationals):
            self.rows = tuple(
                (piv, tuple(sorted(_canonical_int_row(
                    row if isinstance(row, dict) else dict(row)).items())))
                for piv, row in echelon_rows
            )
        else:
            self.rows = tuple(
                (piv, tuple(sorted((row if isinstance(row, dict) else dict(row)).items())))
                for piv, row in echelon_rows
            )
        self._key = None
        self._reader = None
        self._sort_key = None

    # -- constructors ----------------------------------------------------------

    @classmethod
    def from_vectors(cls, field: Field, slc: DegreeSlice, vecs: Iterable[dict]) -> "Subspace":
        if isinstance(field, Rationals):
            ech = IntEchelon()
            for v in vecs:
                ech.add_vector(_int_vector(v))
            return cls(field, slc, ech.canonical_rows())
        ech = Echelon()
        for v in vecs:
            ech.add_vector(v)
        return cls(field, slc, ech.rows)

    @classmethod
    def zero(cls, field: Field, slc: DegreeSlice) -> "Subspace":
        return cls(field, slc, [])

    @classmethod
    def full(cls, field: Field, slc: DegreeSlice) -> "Subspace":
        if isinstance(field, Rationals):
            rows = [(i, {i: 1}) for i in range(slc.dim)]
        else:
            rows = [(i, {i: field.one}) for i in range(slc.dim)]
        return cls(field, slc, rows)

    # -- views -----------------------------------------------------------------

    def basis_vectors(self) -> list:
        """Pivot-1 row vectors over the field (Fractions over Q)."""
        out = []
        for piv, row in self.rows:
            if isinstance(self.field, Rationals):
                d = dict(row)
                pv = d[piv]
                out.append({j: Fraction(c, pv) for j, c in d.items()})
            else:
                out.append(dict(row))
        return out

    def int_rows(self) -> list:
        """The stored primitive integer rows (Q only)."""
        return [(piv, dict(row)) for piv, row in self.rows]

    def echelon(self) -> Echelon:
        """A fresh mutable field echelon copy (callers may add vectors)."""
        ech = Echelon()
        pairs = []
        for (piv, _), vec in zip(self.rows, self.basis_vectors()):
            pairs.append((piv, vec))
        ech.rows = pairs
        return ech

    def _read_echelon(self) -> Echelon:
        """Cached echelon for read-only reductions; never mutate this one."""
        if self._reader is None:
            self._reader = self.echelon()
        return self._reader

    def basis_polys(self) -> list:
        return [
            Poly.from_vector(vec, self.slice, self.field)
            for vec in self.basis_vectors()
        ]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def key(self):
        if self._key is None:
            self._key = (self.slice.ngens, self.slice.degree, self.rows)
        return self._key

    def sort_key(self):
        """Deterministic total order on subspaces of one slice."""
        if self._sort_key is None:
            rows = tuple(
                (piv, tuple((j, scalar_sort_key(c)) for j, c in row))
                for piv, row in self.rows
            )
            self._sort_key = (self.dim, rows)
        return self._sort_key

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Subspace(dim={self.dim} of F_{self.slice.degree}, n={self.slice.ngens})"

    # -- operations --------------------------------------------------------------

    def _check(self, other: "Subspace") -> None:
        if self.slice != other.slice:
            raise SliceMismatch(f"{self.slice} vs {other.slice}")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if isinstance(self.field, Rationals):
            ech = IntEchelon()
            for _, row in self.rows:
                ech.add_vector(dict(row))
            for _, row in other.rows:
                ech.add_vector(dict(row))
            return Subspace(self.field, self.slice, ech.canonical_rows())
        ech = self.echelon()
        for v in other.basis_vectors():
            ech.add_vector(v)
        return Subspace(self.field, self.slice, ech.rows)

    def sum_and_intersect(self, other: "Subspace") -> tuple:
        """One Zassenhaus elimination yields both the sum and the intersection.

        Eliminating [X|X; Y|0], rows pivoting in the left block restrict to a
        basis of X + Y and rows pivoting in the right block are X cap Y.
        """
        self._check(other)
        n = self.slice.dim
        if isinstance(self.field, Rationals):
            ech = IntEchelon()
            for _, row in self.rows:
                v = dict(row)
                ech.add_vector({**v, **{j + n: c for j, c in v.items()}})
            for _, row in other.rows:
                ech.add_vector(dict(row))
            sum_ech = IntEchelon()
            int_ech = IntEchelon()
            for piv, row in zip(ech.pivots, ech.rows):
                if piv < n:
                    sum_ech.add_vector({j: c for j, c in row.items() if j < n})
                else:
                    int_ech.add_vector({j - n: c for j, c in row.items()})
            s = Subspace(self.field, self.slice, sum_ech.canonical_rows())
            i = Subspace(self.field, self.slice, int_ech.canonical_rows())
        else:
            fech = Echelon()
            for v in self.basis_vectors():
                fech.add_vector({**v, **{j + n: c for j, c in v.items()}})
            for v in other.basis_vectors():
                fech.add_vector(dict(v))
            sum_rows = []
            int_rows = []
            for piv, row in fech.rows:
                if piv < n:
                    sum_rows.append((piv, {j: c for j, c in row.items() if j < n}))
                else:
                    int_rows.append((piv - n, {j - n: c for j, c in row.items()}))
            s = Subspace(self.field, self.slice, sum_rows)
            i = Subspace(self.field, self.slice, int_rows)
        # dimension formula dim X + dim Y = dim(X+Y) + dim(X cap Y), enforced
        assert self.dim + other.dim == s.dim + i.dim, "dimension formula violated"
        return s, i

    def intersect(self, other: "Subspace") -> "Subspace":
        return self.sum_and_intersect(other)[1]

    def contains_vector(self, vec: dict) -> bool:
        return self._read_echelon().contains(vec)

    def contains(self, f: Poly) -> bool:
        if f.is_zero():
            return True
        if not f.is_homogeneous() or f.degree() != self.slice.degree:
            raise SliceMismatch(
                f"polynomial of degree {f.degree()} vs slice F_{self.slice.degree}"
            )
        return self.contains_vector(f.to_vector(self.slice))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        ech = self._read_echelon()
        return all(ech.contains(v) for v in other.basis_vectors())

    def render_basis(self, names) -> list:
        return [p.render(names) for p in self.basis_polys()]


def span(polys: list, field: Optional[Field] = None, slc: Optional[DegreeSlice] = None) -> Subspace:
    """RREF basis of the span of homogeneous polynomials of equal degree.

    With an explicit slice, zero or empty input yields the zero subspace there;
    otherwise the slice is inferred from the polynomials.
    """
    polys = list(polys)
    nonzero = [p for p in polys if not p.is_zero()]
    if slc is None:
        if not nonzero:
            raise MixedDegrees("cannot infer the slice of an empty span")
        d = span_check_same_degree(nonzero)
        slc = DegreeSlice(nonzero[0].ngens, d)
        field = nonzero[0].field
    else:
        if nonzero:
            d = span_check_same_degree(nonzero)
            if d != slc.degree or nonzero[0].ngens != slc.ngens:
                raise MixedDegrees(f"span of degree {d} vs slice F_{slc.degree}")
            field = nonzero[0].field
        elif field is None:
            raise MixedDegrees("need a field for an empty span")
    return Subspace.from_vectors(field, slc, (p.to_vector(slc) for p in nonzero))
