"""Built-in presentations: the worked examples and classification-table rows.

Only relation sets that are printed verbatim in the source tables ship here;
algebras that the literature defines by reference (dispin, Woronowicz,
q-Heisenberg, ...) must be supplied as presentation files, with the generic
pairwise-product templates standing in for their relation shape.

Parameter defaults are chosen inside the locus where the presentation really
has a standard-monomial basis (verified through the rewriting engine in the
test suite); see the entry notes for rows whose printed parameters are only
conditionally valid.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import UnknownCatalogEntry
from .fields import FieldSpec
from .presentation import Presentation, parse_presentation


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    generators: tuple
    relations: tuple  # relation strings
    params: tuple = ()  # default (name, value-string) pairs
    weights: tuple | None = None
    # known-claim metadata used by table reproduction and tests
    cpqc: tuple | None = None  # (C, B, P, QC, SC)
    table1: tuple | None = None  # (koszul, semi_graded_koszul)
    poincare_exponent: int | None = None  # claimed (1+t)^n
    notes: str = ""

    def build(self, field: dict | None = None, params: dict | None = None) -> Presentation:
        merged = dict(self.params)
        merged.update({str(k): str(v) for k, v in (params or {}).items()})
        doc = {
            "name": self.name,
            "generators": list(self.generators),
            "field": field or {"kind": "Q"},
            "params": merged,
            "relations": list(self.relations),
        }
        if self.weights:
            doc["weights"] = list(self.weights)
        return parse_presentation(doc)


_ENTRIES: dict = {}


def _add(entry: CatalogEntry) -> None:
    if entry.name in _ENTRIES:
        raise ValueError(f"duplicate catalog entry {entry.name}")
    _ENTRIES[entry.name] = entry


# -- free and polynomial algebras ------------------------------------------------

_add(CatalogEntry(
    "free_2", "free algebra on x, y", ("x", "y"), ()))
_add(CatalogEntry(
    "free_3", "free algebra on x, y, z", ("x", "y", "z"), ()))

for _n, _gens in ((2, ("x", "y")), (3, ("x", "y", "z")), (4, ("x", "y", "z", "w"))):
    _rels = tuple(
        f"{_gens[j]}*{_gens[i]} - {_gens[i]}*{_gens[j]}"
        for i in range(_n)
        for j in range(i + 1, _n)
    )
    _add(CatalogEntry(
        f"poly_{_n}",
        f"commutative polynomial algebra on {_n} variables",
        _gens,
        _rels,
        cpqc=(True, True, True, True, True),
        table1=(True, True),
        poincare_exponent=_n,
    ))

# -- quantum affine space ---------------------------------------------------------

_add(CatalogEntry(
    "quantum_plane",
    "quantum plane y x = q x y",
    ("x", "y"),
    ("y*x - q*x*y",),
    params=(("q", "2"),),
    cpqc=(True, True, True, True, True),
    table1=(True, True),
    poincare_exponent=2,
))

_add(CatalogEntry(
    "quantum_affine_3",
    "multi-parameter quantum affine 3-space",
    ("x", "y", "z"),
    ("y*x - q12*x*y", "z*x - q13*x*z", "z*y - q23*y*z"),
    params=(("q12", "2"), ("q13", "3"), ("q23", "5")),
    cpqc=(True, True, True, True, True),
    table1=(True, True),
    poincare_exponent=3,
))

_add(CatalogEntry(
    "pbw_tails_3",
    "pairwise-product template with one linear tail (y x = c12 x y, "
    "z x = c13 x z + a13 x, z y = c23 y z)",
    ("x", "y", "z"),
    ("y*x - c12*x*y", "z*x - c13*x*z - a13*x", "z*y - c23*y*z"),
    params=(("a13", "1"), ("c12", "2"), ("c13", "3"), ("c23", "1")),
    cpqc=(True, True, True, False, False),
    notes="defaults lie in the standard-monomial locus; c23 must stay 1 "
    "whenever a13 is nonzero",
))

# -- two- and three-generator classics --------------------------------------------

_add(CatalogEntry(
    "jordan_plane",
    "Jordan plane y x = x y + x^2",
    ("x", "y"),
    ("y*x - x*y - x^2",),
    table1=(True, True),
))

_add(CatalogEntry(
    "rogalski_e117",
    "finitely graded algebra with relations y x^2 = x^2 y, y^2 x = x y^2",
    ("x", "y"),
    ("y*x^2 - x^2*y", "y^2*x - x*y^2"),
))

_add(CatalogEntry(
    "rogalski_e118",
    "graded algebra with central-square relation z^2 = x y + y x",
    ("x", "y", "z"),
    ("z^2 - x*y - y*x", "z*x - x*z", "z*y - y*z"),
))

_add(CatalogEntry(
    "sklyanin_special",
    "regular algebra of dimension 3: y x = x y + z^2 and cyclic siblings",
    ("x", "y", "z"),
    ("y*x - x*y - z^2", "z*y - y*z - x^2", "z*x - x*z - y^2"),
))

_add(CatalogEntry(
    "sklyanin_general",
    "three-parameter Sklyanin family a y x + b x y + c z^2 = 0 (cyclic)",
    ("x", "y", "z"),
    ("a*y*x + b*x*y + c*z^2", "a*z*y + b*y*z + c*x^2", "a*x*z + b*z*x + c*y^2"),
    params=(("a", "1"), ("b", "1"), ("c", "1")),
))

_add(CatalogEntry(
    "weyl_1",
    "first Weyl algebra x t = t x + 1",
    ("t", "x"),
    ("x*t - t*x - 1",),
    notes="not an augmented algebra: the relation has a constant term",
))

_add(CatalogEntry(
    "xy_equals_x",
    "two-generator algebra with relation x y = x",
    ("x", "y"),
    ("x*y - x",),
))

_add(CatalogEntry(
    "heisenberg_enveloping",
    "enveloping algebra of the 3-dimensional Heisenberg Lie algebra",
    ("x", "y", "z"),
    ("x*y - y*x - z", "x*z - z*x", "y*z - z*y"),
    table1=(False, True),
))

_add(CatalogEntry(
    "non_sk_example",
    "monomial-plus-one quotient x^2 = x y, y x = 0, y^3 = 0",
    ("x", "y"),
    ("x^2 - x*y", "y*x", "y^3"),
))

# -- monomial and quadratic-ideal examples ------------------------------------------

_add(CatalogEntry(
    "four_gen_monomial",
    "monomial quotient with relations y u, u x - x u, u w",
    ("w", "x", "y", "u"),
    ("y*u", "u*x - x*u", "u*w"),
))

_add(CatalogEntry(
    "two_gen_cubic_monomial",
    "monomial quotient x^2 y = y^2 x = 0",
    ("x", "y"),
    ("x^2*y", "y^2*x"),
))

_add(CatalogEntry(
    "four_gen_mixed_monomial",
    "monomial quotient z^2 y^2, y^3 x^2, x^2 w, z y^3 x",
    ("w", "x", "y", "z"),
    ("z^2*y^2", "y^3*x^2", "x^2*w", "z*y^3*x"),
))

_add(CatalogEntry(
    "three_gen_quartic_monomial",
    "monomial quotient x^4, y x^3, x^3 z",
    ("x", "y", "z"),
    ("x^4", "y*x^3", "x^3*z"),
))

_add(CatalogEntry(
    "three_gen_central_quartic",
    "z central with quartic monomial tails",
    ("x", "y", "z"),
    ("x*z - z*x", "y*z - z*y", "x^3*z", "y^4 + x*z^3"),
))

_add(CatalogEntry(
    "five_gen_central_monomial",
    "g central with quadratic and quartic monomial relations",
    ("x", "y", "z", "w", "g"),
    ("y^2*z", "z*x^2 + g*w^2", "y^2*w^2",
     "x*g - g*x", "y*g - g*y", "w*g - g*w", "z*g - g*z"),
))

_add(CatalogEntry(
    "two_gen_commutator_pair",
    "relations x^2 y = y x^2 and x y^3 = y^3 x",
    ("x", "y"),
    ("x^2*y - y*x^2", "x*y^3 - y^3*x"),
))

_add(CatalogEntry(
    "two_gen_palindrome_monomial",
    "monomial quotient x y x, x y^2 x, y^3",
    ("x", "y"),
    ("x*y*x", "x*y^2*x", "y^3"),
))

# -- three-dimensional skew polynomial rows -------------------------------------------
# fifteen rows; C/B/P/QC/SC marks are the printed classification

_SKEW3D = [
    # (relations, params, cpqc, notes)
    (("y*z - alpha*z*y", "z*x - beta*x*z", "x*y - gamma*y*x"),
     (("alpha", "2"), ("beta", "3"), ("gamma", "5")),
     (True, True, True, True, True), ""),
    (("y*z - z*y - z", "z*x - beta*x*z - y", "x*y - y*x - x"),
     (("beta", "2"),),
     (True, True, True, False, False), ""),
    (("y*z - z*y - z", "z*x - beta*x*z - b", "x*y - y*x - x"),
     (("b", "1"), ("beta", "2")),
     (True, True, False, False, False), ""),
    (("y*z - z*y", "z*x - beta*x*z - y", "x*y - y*x"),
     (("beta", "2"),),
     (True, True, True, False, False), ""),
    (("y*z - z*y", "z*x - beta*x*z - b", "x*y - y*x"),
     (("b", "1"), ("beta", "2")),
     (True, True, False, False, False), ""),
    (("y*z - z*y - a*z", "z*x - beta*x*z", "x*y - y*x - x"),
     (("a", "1"), ("beta", "2")),
     (True, True, True, False, False), ""),
    (("y*z - z*y - z", "z*x - beta*x*z", "x*y - y*x"),
     (("beta", "2"),),
     (True, True, True, False, False), ""),
    (("y*z - alpha*z*y", "z*x - beta*x*z - y - b", "x*y - alpha*y*x"),
     (("alpha", "2"), ("b", "1"), ("beta", "3")),
     (True, True, False, False, False), ""),
    (("y*z - alpha*z*y", "z*x - beta*x*z - b", "x*y - alpha*y*x"),
     (("alpha", "2"), ("b", "1"), ("beta", "3")),
     (True, True, False, False, False), ""),
    (("y*z - alpha*z*y - a1*x - b1", "z*x - alpha*x*z - a2*y - b2",
      "x*y - alpha*y*x - a3*z - b3"),
     (("a1", "0"), ("a2", "0"), ("a3", "0"), ("alpha", "2"),
      ("b1", "1"), ("b2", "1"), ("b3", "1")),
     (True, True, False, False, False),
     "defaults bind a1 = a2 = a3 = 0: the fully generic printed parameters do "
     "not admit a standard-monomial basis"),
    (("y*z - z*y - x", "z*x - x*z - y", "x*y - y*x - z"),
     (),
     (True, True, True, False, False), ""),
    (("y*z - z*y", "z*x - x*z", "x*y - y*x - z"),
     (),
     (True, True, True, False, False), ""),
    (("y*z - z*y", "z*x - x*z", "x*y - y*x - b"),
     (("b", "1"),),
     (True, True, False, False, False), ""),
    (("y*z - z*y + y", "z*x - x*z - x - y", "x*y - y*x"),
     (),
     (True, True, True, False, False), ""),
    (("y*z - z*y - a*z", "z*x - x*z - x", "x*y - y*x"),
     (("a", "0"),),
     (True, True, True, False, False),
     "default binds a = 0: with a nonzero the printed relations fail the "
     "standard-monomial test (the two-step reorderings of z y x disagree)"),
]

for _idx, (_rels, _params, _marks, _note) in enumerate(_SKEW3D, start=1):
    _add(CatalogEntry(
        f"skew3d_case{_idx}",
        f"3-dimensional skew polynomial algebra, classification row {_idx}",
        ("x", "y", "z"),
        _rels,
        params=_params,
        cpqc=_marks,
        table1=(True, True) if _idx == 1 else None,
        poincare_exponent=3 if _idx == 1 else None,
        notes=_note,
    ))

# -- Sridharan enveloping algebras of 3-dimensional Lie algebras -------------------------
# rows give ([x,y], [y,z], [z,x]); relations are u v - v u - [u, v]

_SRIDHARAN = [
    (("x*y - y*x", "y*z - z*y", "z*x - x*z"),
     (), (True, True, True, True, True)),
    (("x*y - y*x", "y*z - z*y - x", "z*x - x*z"),
     (), (True, True, True, False, False)),
    (("x*y - y*x - x", "y*z - z*y", "z*x - x*z"),
     (), (True, True, True, False, False)),
    (("x*y - y*x", "y*z - z*y - alpha*y", "z*x - x*z + x"),
     (("alpha", "2"),), (True, True, True, False, False)),
    (("x*y - y*x", "y*z - z*y - y", "z*x - x*z + x + y"),
     (), (True, True, True, False, False)),
    (("x*y - y*x - z", "y*z - z*y + 2*y", "z*x - x*z + 2*x"),
     (), (True, True, True, False, False)),
    (("x*y - y*x - 1", "y*z - z*y", "z*x - x*z"),
     (), (True, True, False, False, False)),
    (("x*y - y*x - 1", "y*z - z*y - x", "z*x - x*z"),
     (), (True, True, False, False, False)),
    (("x*y - y*x - x", "y*z - z*y - 1", "z*x - x*z"),
     (), (True, True, False, False, False)),
    (("x*y - y*x - 1", "y*z - z*y - y", "z*x - x*z - x"),
     (), (True, True, False, False, False)),
]

for _idx, (_rels, _params, _marks) in enumerate(_SRIDHARAN, start=1):
    _add(CatalogEntry(
        f"sridharan_type{_idx}",
        f"Sridharan enveloping algebra of a 3-dimensional Lie algebra, type {_idx}",
        ("x", "y", "z"),
        _rels,
        params=_params,
        cpqc=_marks,
        table1=(True, True) if _idx == 1 else None,
        poincare_exponent=3 if _idx == 1 else None,
    ))


def catalog_list() -> list:
    return sorted(_ENTRIES)


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise UnknownCatalogEntry(
            f"no catalog entry {name!r}; see `sgk catalog list`"
        ) from None


def catalog(name: str, field: dict | None = None, params: dict | None = None) -> Presentation:
    return catalog_entry(name).build(field=field, params=params)
