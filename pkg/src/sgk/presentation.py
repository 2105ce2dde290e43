"""Presentations of finitely generated algebras and the relation-shape classifier.

A presentation is a list of generators, relation polynomials over a fixed
exact field (parameters already substituted), and optional positive grading
weights.  The classifier recognizes the two-generator-product relation shape

    x_j x_i = c_ij x_i x_j + a_ij^(1) x_1 + ... + a_ij^(n) x_n + d_ij,   i < j,

with one relation per unordered pair and every c_ij nonzero, and reads off the
standard refinements: quasi-commutative (no tails at all), pre-commutative
(no constant tails), constant and bijective (automatic over a field, reported
with a note), semi-commutative (quasi-commutative and constant).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .errors import NotPBWShape, ParseError, ZeroRelation
from .fields import Field, FieldSpec, QQ
from .freealg import Poly, parse_poly


@dataclass(frozen=True)
class Presentation:
    name: str
    generators: tuple
    relations: tuple  # of Poly
    field: Field = QQ
    params: tuple = ()  # resolved (name, scalar) pairs, for reporting
    weights: Optional[tuple] = None  # positive ints, one per generator

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def relation_strings(self) -> list:
        return [r.render(self.generators) for r in self.relations]

    def fingerprint(self) -> dict:
        return {
            "name": self.name,
            "generators": list(self.generators),
            "field": repr(self.field),
            "params": {k: str(v) for k, v in self.params},
            "relations": self.relation_strings(),
            "weights": list(self.weights) if self.weights else None,
        }

    def with_relations(self, relations, name: str | None = None) -> "Presentation":
        return Presentation(
            name or self.name,
            self.generators,
            tuple(relations),
            self.field,
            self.params,
            self.weights,
        )


@dataclass(frozen=True)
class PBWShape:
    """Normalized data of a pairwise relation shape; keys are pairs (i, j), i < j."""

    n: int
    c: dict  # (i, j) -> nonzero scalar
    a: dict  # (i, j) -> {k: scalar}, zero entries omitted
    d: dict  # (i, j) -> scalar, zero omitted

    def linear_tail_indices(self) -> set:
        out = set()
        for tail in self.a.values():
            out.update(tail)
        return out

    def has_linear_tails(self) -> bool:
        return any(self.a.values())

    def has_constant_tails(self) -> bool:
        return any(self.d.values())


@dataclass
class ClassificationFlags:
    pbw_shape: bool
    quasi_commutative: bool = False
    pre_commutative: bool = False
    constant: bool = True
    bijective: bool = True
    semi_commutative: bool = False
    fsg_algebra: bool = False
    shape: Optional[PBWShape] = None
    notes: list = dc_field(default_factory=list)

    def marks(self) -> dict:
        """C/B/P/QC/SC column marks; meaningful when pbw_shape holds."""
        return {
            "C": self.constant,
            "B": self.bijective,
            "P": self.pre_commutative,
            "QC": self.quasi_commutative,
            "SC": self.semi_commutative,
        }


def _pbw_shape(p: Presentation) -> Optional[PBWShape]:
    n = p.ngens
    c: dict = {}
    a: dict = {}
    d: dict = {}
    seen = set()
    for rel in p.relations:
        if rel.is_zero():
            return None
        if rel.degree() != 2:
            return None
        quad = rel.homogeneous_component(2)
        words = set(quad.terms)
        pair = None
        for w in words:
            i, j = w
            if i == j:
                return None  # squares are not a pair product
            pair_w = (min(i, j), max(i, j))
            if pair is None:
                pair = pair_w
            elif pair != pair_w:
                return None  # more than one pair in the quadratic part
        if pair is None:
            return None
        i, j = pair
        lead = (j, i)  # the descending product x_j x_i
        lead_c = quad.terms.get(lead)
        if not lead_c:
            return None
        if pair in seen:
            return None  # two relations for one pair
        seen.add(pair)
        norm = rel.scale(p.field.one / lead_c)
        cij = -norm.terms.get((i, j), p.field.zero)
        if not cij:
            return None  # Eq-shape requires an invertible coefficient
        tail = {}
        for k in range(n):
            coeff = norm.terms.get((k,))
            if coeff:
                tail[k] = -coeff
        const = norm.terms.get(())
        c[pair] = cij
        if tail:
            a[pair] = tail
        if const:
            d[pair] = -const
    if len(seen) != n * (n - 1) // 2:
        return None  # every pair must carry exactly one relation
    return PBWShape(n, c, a, d)


def classify(p: Presentation) -> ClassificationFlags:
    shape = _pbw_shape(p)
    if shape is not None:
        qc = not shape.has_linear_tails() and not shape.has_constant_tails()
        pre = not shape.has_constant_tails()
        flags = ClassificationFlags(
            pbw_shape=True,
            quasi_commutative=qc,
            pre_commutative=pre,
            constant=True,
            bijective=True,
            semi_commutative=qc,  # = quasi-commutative and constant; constant holds over a field
            fsg_algebra=pre,  # = constant and pre-commutative over a field
            shape=shape,
        )
        flags.notes.append(
            "constant and bijective hold automatically over a field "
            "(scalars are central; every c_ij is invertible)"
        )
        return flags
    in_aug = all(r.min_degree() >= 1 for r in p.relations)
    flags = ClassificationFlags(
        pbw_shape=False,
        constant=True,
        bijective=True,
        fsg_algebra=in_aug,
    )
    if in_aug:
        flags.notes.append(
            "all relations lie in the augmentation ideal; eligibility is a syntactic check"
        )
    else:
        flags.notes.append("some relation has a nonzero constant term")
    return flags


def associated_graded(p: Presentation) -> Presentation:
    """Drop linear and constant tails, keeping x_j x_i - c_ij x_i x_j."""
    flags = classify(p)
    if not flags.pbw_shape:
        raise NotPBWShape(f"{p.name}: relations are not in pairwise product shape")
    shape = flags.shape
    rels = []
    one = p.field.one
    for (i, j), cij in sorted(shape.c.items()):
        terms = {(j, i): one, (i, j): -cij}
        rels.append(Poly(p.field, p.ngens, terms))
    return Presentation(
        p.name + "_gr", p.generators, tuple(rels), p.field, p.params, p.weights
    )


def parse_presentation(doc: dict | str) -> Presentation:
    """Build a presentation from its JSON document (or JSON text)."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad presentation JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("presentation document must be a JSON object")
    try:
        gens = tuple(str(g) for g in doc["generators"])
    except KeyError:
        raise ParseError("presentation needs a 'generators' list") from None
    if not gens or len(set(gens)) != len(gens):
        raise ParseError("generators must be nonempty and distinct")
    spec = FieldSpec.from_json(doc.get("field", {"kind": "Q"}), doc.get("params"))
    fld = spec.field()
    params = spec.bindings()
    rels = []
    for text in doc.get("relations", []):
        poly = parse_poly(str(text), gens, fld, params)
        if poly.is_zero():
            raise ZeroRelation(f"relation {text!r} is zero after substitution")
        rels.append(poly)
    weights = doc.get("weights")
    if weights is not None:
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(gens) or any(w <= 0 for w in weights):
            raise ParseError("weights must list one positive integer per generator")
    name = str(doc.get("name", "anonymous"))
    return Presentation(
        name, gens, tuple(rels), fld, tuple(sorted(params.items())), weights
    )


def load_presentation_file(path) -> Presentation:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_presentation(fh.read())
