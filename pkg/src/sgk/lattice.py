"""Sublattices of the subspace lattice of a degree slice, and distributivity.

The sublattice generated by a finite family is computed by worklist closure
under sum and intersection, with canonical RREF forms as dedup keys.  A family
is distributive iff every ordered triple (X, Y, Z) of closure elements
satisfies X cap (Y + Z) = (X cap Y) + (X cap Z); since the right side is always
contained in the left in a subspace lattice, only dimensions are compared, and
triples where the identity holds for order reasons (Y, Z comparable, or X
below Y or Z) are skipped.  On success the report carries an adapted-basis
certificate (one basis of F_d containing a basis of every lattice element); on
failure, the first violating triple in deterministic order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .errors import CapExceeded, CertificateFailure, NotDistributiveInput
from .fields import scalar_sort_key
from .freealg import Poly
from .subspace import Echelon, Subspace

DEFAULT_CAP = 10_000

_ENC = 1 << 21  # pair tables are keyed by min*_ENC + max


@dataclass
class SubspaceLattice:
    """A finite set of subspaces of one slice, closed under + and cap.

    sum_table / int_table map the packed pair key min(i,j)*2^21 + max(i,j) to
    the element id of the pairwise sum / intersection.
    """

    elements: list
    generator_ids: list
    sum_table: dict
    int_table: dict

    @property
    def size(self) -> int:
        return len(self.elements)

    def sorted_ids(self) -> list:
        return sorted(
            range(len(self.elements)), key=lambda i: self.elements[i].sort_key()
        )

    def sum_id(self, i: int, j: int) -> int:
        return self.sum_table[(i * _ENC + j) if i <= j else (j * _ENC + i)]

    def int_id(self, i: int, j: int) -> int:
        return self.int_table[(i * _ENC + j) if i <= j else (j * _ENC + i)]


@dataclass
class DistributivityReport:
    verdict: str  # "distributive" | "not_distributive" | "cap_exceeded"
    witness: Optional[tuple] = None  # (X, Y, Z) subspaces violating the identity
    certificate: Optional[list] = None  # adapted basis as polynomials
    lattice_size: int = 0
    work_stats: dict = dc_field(default_factory=dict)

    @property
    def distributive(self) -> bool:
        return self.verdict == "distributive"


class _Closure:
    """Worklist closure with memoized pairwise sum/intersection tables."""

    def __init__(self, cap: int):
        self.cap = cap
        self.elements: list = []
        self.index: dict = {}
        self.sum_table: dict = {}
        self.int_table: dict = {}
        self.pending = deque()
        self.pair_ops = 0

    def register(self, sub: Subspace) -> int:
        i = self.index.get(sub.key())
        if i is not None:
            return i
        if len(self.elements) >= self.cap:
            raise CapExceeded(self.cap)
        i = len(self.elements)
        self.elements.append(sub)
        self.index[sub.key()] = i
        self.sum_table[i * _ENC + i] = i
        self.int_table[i * _ENC + i] = i
        for j in range(i):
            self.pending.append(j * _ENC + i)
        return i

    def combine(self, key: int) -> None:
        if key in self.sum_table:
            return
        a, b = divmod(key, _ENC)
        s, t = self.elements[a].sum_and_intersect(self.elements[b])
        self.pair_ops += 1
        si = self.register(s)
        ti = self.register(t)
        self.sum_table[key] = si
        self.int_table[key] = ti

    def run(self) -> None:
        while self.pending:
            self.combine(self.pending.popleft())

    def sum_id(self, i: int, j: int) -> int:
        key = (i * _ENC + j) if i <= j else (j * _ENC + i)
        if key not in self.sum_table:
            self.combine(key)
        return self.sum_table[key]

    def int_id(self, i: int, j: int) -> int:
        key = (i * _ENC + j) if i <= j else (j * _ENC + i)
        if key not in self.int_table:
            self.combine(key)
        return self.int_table[key]


def close(generators: list, cap: int = DEFAULT_CAP) -> SubspaceLattice:
    """The sublattice generated by the given subspaces (smallest closed set).

    Raises CapExceeded if the closure would exceed `cap` elements; over a prime
    field closure always terminates intrinsically, so the cap only matters
    over Q.
    """
    if not generators:
        raise ValueError("need at least one generator")
    slc = generators[0].slice
    for g in generators:
        if g.slice != slc:
            raise ValueError("generators live in different slices")
    work = _Closure(cap)
    gen_ids = [work.register(g) for g in generators]
    work.run()
    return SubspaceLattice(work.elements, gen_ids, work.sum_table, work.int_table)


def _sweep_triples(work: _Closure, lo: int, hi: int):
    """First violating triple with max index in [lo, hi); None if all hold.

    Triples with Y, Z comparable or with X below Y or Z satisfy the identity
    in any subspace lattice and are skipped.
    """
    elements = work.elements
    sum_id, int_id = work.sum_id, work.int_id
    for t in range(lo, hi):
        top = t + 1
        for i in range(top):
            if elements[i].dim == 0:
                continue
            if i == t:
                # X is the new element: all pairs j <= k <= t
                jk_pairs = ((j, k) for j in range(top) for k in range(j, top))
            else:
                # X is old, so the new element must be Y or Z
                jk_pairs = ((j, t) for j in range(top))
            for j, k in jk_pairs:
                yz = sum_id(j, k)
                if yz == j or yz == k:
                    continue  # comparable pair
                xy = int_id(i, j)
                xz = int_id(i, k)
                if xy == i or xz == i:
                    continue  # X below Y or Z
                lhs = int_id(i, yz)
                rhs = sum_id(xy, xz)
                if elements[lhs].dim != elements[rhs].dim:
                    return (i, j, k)
    return None


def is_distributive(lat: SubspaceLattice, with_certificate: bool = True) -> DistributivityReport:
    """Decide distributivity of a closed lattice by the triple identity.

    The witness, when one exists, is the first violating triple in the
    deterministic canonical-form order of the elements.
    """
    elements = lat.elements
    dims = [e.dim for e in elements]
    order = lat.sorted_ids()
    stats = {"lattice_size": lat.size, "triples_checked": lat.size**3}
    for i in order:
        for j in order:
            for k in order:
                yz = lat.sum_id(j, k)
                if yz == j or yz == k:
                    continue
                xy = lat.int_id(i, j)
                xz = lat.int_id(i, k)
                if xy == i or xz == i:
                    continue
                lhs = lat.int_id(i, yz)
                rhs = lat.sum_id(xy, xz)
                if dims[lhs] != dims[rhs]:
                    return DistributivityReport(
                        "not_distributive",
                        witness=(elements[i], elements[j], elements[k]),
                        lattice_size=lat.size,
                        work_stats=stats,
                    )
    cert = None
    if with_certificate:
        cert = find_adapted_basis(lat)
        if not verify_adapted_basis(cert, [elements[i] for i in lat.generator_ids]):
            raise CertificateFailure("adapted basis failed verification")
    return DistributivityReport(
        "distributive", certificate=cert, lattice_size=lat.size, work_stats=stats
    )


def check_during_closure(
    generators: list, cap: int = DEFAULT_CAP, with_certificate: bool = True
) -> DistributivityReport:
    """Closure fused with the triple check, so a violation exits early.

    A violating triple found mid-closure lies in the generated sublattice and
    is therefore a valid witness for the full lattice.  CapExceeded is raised
    only when closure outgrows the cap with no violation found.
    """
    if not generators:
        raise ValueError("need at least one generator")
    work = _Closure(cap)
    gen_ids = [work.register(g) for g in generators]
    checked = 0  # triples within elements[:checked] are all verified
    while True:
        budget = 64
        while work.pending and budget:
            work.combine(work.pending.popleft())
            budget -= 1
        n = len(work.elements)
        if n > checked:
            bad = _sweep_triples(work, checked, n)
            if bad is not None:
                i, j, k = bad
                return DistributivityReport(
                    "not_distributive",
                    witness=(work.elements[i], work.elements[j], work.elements[k]),
                    lattice_size=len(work.elements),
                    work_stats={"lattice_size": len(work.elements), "early_exit": True},
                )
            checked = n
        if not work.pending and len(work.elements) == checked:
            break
    lat = SubspaceLattice(work.elements, gen_ids, work.sum_table, work.int_table)
    cert = None
    if with_certificate:
        cert = find_adapted_basis(lat)
        if not verify_adapted_basis(cert, [lat.elements[i] for i in gen_ids]):
            raise CertificateFailure("adapted basis failed verification")
    return DistributivityReport(
        "distributive",
        certificate=cert,
        lattice_size=lat.size,
        work_stats={"lattice_size": lat.size, "early_exit": False},
    )


def find_adapted_basis(lat: SubspaceLattice) -> list:
    """A basis of F_d adapted to every element of a distributive lattice.

    For each element x, let x_* be the join of the lattice elements strictly
    below x.  The vectors extending a basis of x_* to x, collected over all x
    in increasing dimension and completed to a basis of F_d, are adapted when
    the lattice is distributive.  Callers must verify the result.
    """
    if not lat.elements:
        raise NotDistributiveInput("empty lattice")
    slc = lat.elements[0].slice
    fld = lat.elements[0].field

    collected = Echelon()  # independence bookkeeping only
    increments: list = []
    order = sorted(range(lat.size), key=lambda i: lat.elements[i].sort_key())
    for i in order:
        x = lat.elements[i]
        below = Echelon()
        for j in range(lat.size):
            y = lat.elements[j]
            if y.dim < x.dim and x.contains_subspace(y):
                for v in y.basis_vectors():
                    below.add_vector(v)
        for v in x.basis_vectors():
            inc = below.reduce_vector(v)
            if not inc:
                continue
            below.add_vector(inc)
            # inc lies in x (v in x and x_* sits inside x)
            if collected.add_vector(inc):
                increments.append(inc)
    for idx in range(slc.dim):
        unit = {idx: fld.one}
        if collected.add_vector(unit):
            increments.append(unit)
    increments.sort(
        key=lambda v: sorted((i, scalar_sort_key(c)) for i, c in v.items())
    )
    return [Poly.from_vector(v, slc, fld) for v in increments]


def verify_adapted_basis(basis: list, subspaces: list) -> bool:
    """True iff `basis` is a basis of F_d and basis cap X spans X for each X."""
    if not basis:
        return not subspaces
    if subspaces:
        slc = subspaces[0].slice
    else:
        p0 = next((p for p in basis if not p.is_zero()), None)
        if p0 is None:
            return False
        from .freealg import DegreeSlice

        slc = DegreeSlice(p0.ngens, p0.degree())
    ech = Echelon()
    for p in basis:
        if p.is_zero() or not p.is_homogeneous() or p.degree() != slc.degree:
            return False
        if not ech.add_vector(p.to_vector(slc)):
            return False  # dependent
    if ech.rank != slc.dim:
        return False
    for X in subspaces:
        inside = Echelon()
        for p in basis:
            if X.contains(p):
                inside.add_vector(p.to_vector(slc))
        if inside.rank != X.dim:
            return False
    return True
