"""Truncated Hilbert series, power-series utilities, and Poincare-type checks.

The series of a filtered quotient is computed exactly by central-variable
homogenization followed by degree-truncated completion: the cumulative
dimensions dim F_{<=j}(B) are the homogeneous normal-word counts of the
homogenized algebra and the slice dimensions are their differences.  When the
relations are already (weighted-)homogeneous the counts are taken directly.
A raw linear-algebra oracle on truncated spanning sets is kept alongside as a
cross-check; the two are compared in the test suite, never averaged.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import SgkError
from .freealg import DegreeSlice, Poly, WordOrder
from .koszul import ideal_components_up_to, window_space
from .presentation import Presentation, classify
from .rewriting import RewriteSystem, complete
from .subspace import Echelon


# -- exact truncated power series -------------------------------------------------


@dataclass(frozen=True)
class PowerSeriesTrunc:
    """Integer coefficient vector c_0..c_D with exact arithmetic through D."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("need at least the constant coefficient")

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j]

    def truncate(self, D: int) -> "PowerSeriesTrunc":
        if D >= len(self.coeffs):
            raise ValueError("cannot extend a truncated series")
        return PowerSeriesTrunc(self.coeffs[: D + 1])

    def mul(self, other: "PowerSeriesTrunc") -> "PowerSeriesTrunc":
        D = min(self.truncation, other.truncation)
        out = [0] * (D + 1)
        for i, a in enumerate(self.coeffs[: D + 1]):
            if not a:
                continue
            for j in range(0, D + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return PowerSeriesTrunc(tuple(out))

    def add(self, other: "PowerSeriesTrunc") -> "PowerSeriesTrunc":
        D = min(self.truncation, other.truncation)
        return PowerSeriesTrunc(
            tuple(a + b for a, b in zip(self.coeffs[: D + 1], other.coeffs[: D + 1]))
        )

    def eval_neg(self) -> "PowerSeriesTrunc":
        """Substitute t -> -t."""
        return PowerSeriesTrunc(
            tuple(c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs))
        )

    def inverse(self) -> "PowerSeriesTrunc":
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise SgkError("series inversion needs an invertible integer constant term")
        D = self.truncation
        out = [0] * (D + 1)
        out[0] = c0  # c0 is its own inverse
        for j in range(1, D + 1):
            acc = 0
            for i in range(1, j + 1):
                acc += self.coeffs[i] * out[j - i]
            out[j] = -acc * c0
        return PowerSeriesTrunc(tuple(out))

    def __eq__(self, other):
        return isinstance(other, PowerSeriesTrunc) and self.coeffs == other.coeffs

    def __repr__(self):
        return "PowerSeries[" + ", ".join(str(c) for c in self.coeffs) + "]"


def series_one(D: int) -> PowerSeriesTrunc:
    return PowerSeriesTrunc((1,) + (0,) * D)


def one_over_one_minus_t_pow(n: int, D: int) -> PowerSeriesTrunc:
    """1/(1-t)^n: coefficients C(n+j-1, j)."""
    return PowerSeriesTrunc(tuple(comb(n + j - 1, j) for j in range(D + 1)))


def one_plus_t_pow(n: int, D: int) -> PowerSeriesTrunc:
    """(1+t)^n: coefficients C(n, j)."""
    return PowerSeriesTrunc(tuple(comb(n, j) for j in range(D + 1)))


def one_minus_t_pow(n: int, D: int) -> PowerSeriesTrunc:
    return one_plus_t_pow(n, D).eval_neg()


def inv_one_minus_t_k(k: int, D: int) -> PowerSeriesTrunc:
    """1/(1-t^k)."""
    return PowerSeriesTrunc(tuple(1 if j % k == 0 else 0 for j in range(D + 1)))


def weighted_closed_form(weights, D: int) -> PowerSeriesTrunc:
    """Product of 1/(1-t^w) over the weight list."""
    out = series_one(D)
    for w in weights:
        out = out.mul(inv_one_minus_t_k(w, D))
    return out


# -- homogenization ----------------------------------------------------------------


HOMOGENIZER = "h_"


def homogenize(p: Presentation) -> Presentation:
    """Adjoin a central degree-1 variable and pad every relation to top degree.

    The new variable is inserted *before* the original generators so that it is
    deglex-smallest: tails like x_k h then stay below the original leading word
    of each relation, which keeps pairwise-product rules oriented as written.
    """
    name = HOMOGENIZER
    while name in p.generators:
        name += "_"
    gens = (name,) + p.generators
    weights = (1,) + (p.weights or (1,) * p.ngens)
    order = WordOrder(weights[1:])
    rels = []
    fld = p.field
    for g in range(1, len(gens)):
        # g-th original generator commutes with the homogenizer
        rels.append(
            Poly(fld, len(gens), {(g, 0): fld.one, (0, g): -fld.one})
        )
    for rel in p.relations:
        top = rel.degree(p.weights)
        terms = {}
        for w, c in rel.terms.items():
            wdeg = order.degree(w)
            shifted = tuple(i + 1 for i in w)
            padded = (0,) * (top - wdeg) + shifted
            terms[padded] = c
        rels.append(Poly(fld, len(gens), terms))
    return Presentation(
        p.name + "_hom", gens, tuple(rels), fld, p.params, weights
    )


# -- Hilbert series ------------------------------------------------------------------


def hilbert_series(p: Presentation, D: int) -> PowerSeriesTrunc:
    """Exact slice dimensions c_0..c_D of the (semi-)graded quotient.

    Homogeneous relations are counted directly; otherwise the filtration
    dimensions come from the homogenized algebra and the slices are their
    first differences.
    """
    if D < 0:
        raise ValueError("need D >= 0")
    weights = p.weights or (1,) * p.ngens
    if all(r.is_homogeneous(weights) for r in p.relations):
        system = complete(p, D, WordOrder(weights))
        return PowerSeriesTrunc(tuple(system.normal_words(D)))
    hp = homogenize(p)
    system = complete(hp, D, WordOrder(hp.weights))
    cumulative = system.normal_words(D)
    coeffs = [cumulative[0]]
    for j in range(1, D + 1):
        c = cumulative[j] - cumulative[j - 1]
        if c < 0:
            raise SgkError(
                "homogenization produced shrinking filtration dimensions; "
                "the generator homogenization is not torsion-free here"
            )
        coeffs.append(c)
    return PowerSeriesTrunc(tuple(coeffs))


def completion_system(p: Presentation, D: int) -> RewriteSystem:
    """The rewrite system the series computation runs on (for inspection)."""
    weights = p.weights or (1,) * p.ngens
    if all(r.is_homogeneous(weights) for r in p.relations):
        return complete(p, D, WordOrder(weights))
    hp = homogenize(p)
    return complete(hp, D, WordOrder(hp.weights))


def filtration_dims_by_linear_algebra(p: Presentation, d: int, headroom: int = 2) -> list:
    """Oracle: dim F_{<=j}(B) for j <= d by raw spanning-set linear algebra.

    Works inside F_{<=d+headroom}: spans all u b v of degree <= d + headroom,
    counts the part lying in F_{<=d} via a column order that lists the high
    degrees first, and subtracts.  Exact once the headroom is large enough;
    callers compare consecutive headrooms.
    """
    n = p.ngens
    top = d + headroom
    # block offsets, degrees top..0 so that high-degree columns come first
    offset = {}
    pos = 0
    for j in range(top, -1, -1):
        offset[j] = pos
        pos += n**j
    ech = Echelon()
    for rel in p.relations:
        rdeg = rel.degree()
        for s in range(0, top - rdeg + 1):
            for h in range(0, top - rdeg - s + 1):
                s_slice = DegreeSlice(n, s)
                h_slice = DegreeSlice(n, h)
                for u in s_slice.words():
                    for v in h_slice.words():
                        vec = {}
                        for w, c in rel.terms.items():
                            word = u + w + v
                            j = len(word)
                            idx = offset[j] + DegreeSlice(n, j).index_of(word)
                            vec[idx] = vec.get(idx, p.field.zero) + c
                        ech.add_vector(vec)
    # dim F_{<=j}(B) = sum_{i<=j} n^i - dim(span cap F_{<=j}); with the high
    # degrees listed first, rows pivoting at column >= offset[j] are supported
    # entirely in degrees <= j and count the intersection exactly
    dims = []
    for j in range(d + 1):
        cut = offset[j]
        in_j = sum(1 for piv, _ in ech.rows if piv >= cut)
        free = sum(n**i for i in range(j + 1))
        dims.append(free - in_j)
    return dims


# -- Poincare-type checks --------------------------------------------------------------


@dataclass(frozen=True)
class PoincareCheck:
    ok: bool
    exponent: int
    hilbert: PowerSeriesTrunc
    product: PowerSeriesTrunc  # h(t) * (1-t)^n, should be 1

    def to_json(self) -> dict:
        return {
            "holds_through_degree": self.hilbert.truncation,
            "ok": self.ok,
            "predicted_poincare": f"(1+t)^{self.exponent}",
            "hilbert_coefficients": list(self.hilbert.coeffs),
            "product_coefficients": list(self.product.coeffs),
        }


def numerical_koszul_check(p: Presentation, D: int, n: int | None = None) -> PoincareCheck:
    """Does h(t) * (1+t)^n|_{t -> -t} = 1 hold through degree D?

    A false result is a finding, not an error.  The check is meaningful for
    pairwise-product shapes (the hypothesis class of the closed form).
    """
    if n is None:
        n = p.ngens
    h = hilbert_series(p, D)
    product = h.mul(one_minus_t_pow(n, D))
    return PoincareCheck(product == series_one(D), n, h, product)


@dataclass(frozen=True)
class TorCounts:
    tor0: int
    tor1: int
    tor2_by_degree: tuple  # index g: minimal relation count in degree g

    @property
    def tor2_total(self) -> int:
        return sum(self.tor2_by_degree)

    def to_json(self) -> dict:
        return {
            "tor0": self.tor0,
            "tor1": self.tor1,
            "tor2_by_degree": list(self.tor2_by_degree),
            "tor2_total": self.tor2_total,
        }


def tor_low_counts(p: Presentation, D: int) -> TorCounts:
    """Minimal generator and relation counts from exact linear algebra.

    tor1 is the number of degree-one generators; tor2_by_degree[g] is
    dim I_g / (F_{>=1} I + I F_{>=1})_g, the number of minimal relations the
    quotient needs in degree g, for g <= D.
    """
    comps = ideal_components_up_to(p, D)
    tor2 = [0] * (D + 1)
    for g in range(1, D + 1):
        target = comps[g]
        if target.dim == 0:
            continue
        ech = Echelon()
        for s in range(1, g):
            left = window_space(comps[g - s], s, 0)
            right = window_space(comps[g - s], 0, s)
            for sub in (left, right):
                if not target.contains_subspace(sub):
                    raise SgkError("spanning-set inclusion failed; internal error")
                for v in sub.basis_vectors():
                    ech.add_vector(v)
        tor2[g] = target.dim - ech.rank
    return TorCounts(1, p.ngens, tuple(tor2))


def pbw_certified(p: Presentation, D: int) -> bool:
    """True when the series matches 1/(1-t)^n through D.

    For pairwise-product shapes this certifies the standard-monomial basis in
    the checked degrees.
    """
    flags = classify(p)
    if not flags.pbw_shape:
        return False
    h = hilbert_series(p, D)
    return h == one_over_one_minus_t_pow(p.ngens, D)
