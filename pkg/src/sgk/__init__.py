"""Exact invariants of finitely presented semi-graded algebras.

Submodules:
  fields        -- exact scalars over Q and F_p, field/parameter specs
  freealg       -- words, sparse free-algebra polynomials, deglex, slices
  subspace      -- canonical RREF subspaces of a degree slice
  lattice       -- sublattice closure, distributivity, adapted bases
  presentation  -- presentations, relation-shape classifier, associated graded
  catalog       -- built-in example presentations
  koszul        -- ideal components, degree-j lattices, the SK check
  rewriting     -- truncated completion and normal-word counting
  hilbert       -- Hilbert series, series utilities, Poincare-type checks
  cli           -- the `sgk` command-line front end
"""

from .catalog import catalog, catalog_entry, catalog_list
from .fields import FieldSpec, PrimeField, QQ
from .freealg import DegreeSlice, Poly, WordOrder, parse_poly
from .hilbert import (
    PowerSeriesTrunc,
    hilbert_series,
    homogenize,
    numerical_koszul_check,
    one_over_one_minus_t_pow,
    one_plus_t_pow,
    tor_low_counts,
)
from .koszul import ideal_component, lj_generators, sk_check, thm47_basis
from .lattice import (
    DistributivityReport,
    check_during_closure,
    close,
    find_adapted_basis,
    is_distributive,
    verify_adapted_basis,
)
from .presentation import (
    Presentation,
    associated_graded,
    classify,
    parse_presentation,
)
from .subspace import Subspace, span

__version__ = "0.1.0"

__all__ = [
    "FieldSpec",
    "PrimeField",
    "QQ",
    "DegreeSlice",
    "Poly",
    "WordOrder",
    "parse_poly",
    "PowerSeriesTrunc",
    "hilbert_series",
    "homogenize",
    "numerical_koszul_check",
    "one_over_one_minus_t_pow",
    "one_plus_t_pow",
    "tor_low_counts",
    "ideal_component",
    "lj_generators",
    "sk_check",
    "thm47_basis",
    "DistributivityReport",
    "check_during_closure",
    "close",
    "find_adapted_basis",
    "is_distributive",
    "verify_adapted_basis",
    "Presentation",
    "associated_graded",
    "classify",
    "parse_presentation",
    "Subspace",
    "span",
    "catalog",
    "catalog_entry",
    "catalog_list",
]
