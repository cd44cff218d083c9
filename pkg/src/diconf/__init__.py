"""Exact computer algebra for Leibniz algebras, dialgebras, and conformal
endomorphisms over the one-variable polynomial algebra.

The package is organized bottom-up:

- ``exact``: rationals, multivariate polynomials, exact linear algebra;
- ``finalg``: structure-constant (di)algebras and the polylinear identity
  engine, including the translation of one-product identity families into
  dialgebra identity families;
- ``conformal``: conformal endomorphisms as polynomial action tables, their
  products, current algebras, and the induced dialgebra structure;
- ``leibrep``: the faithful conformal representation of a finite-dimensional
  Leibniz algebra and its current-algebra decomposition;
- ``envelope``: the enveloping associative dialgebra, its normal form, and
  the evaluation certificates for faithfulness and the linear-space count;
- ``cli``: the ``diconf`` command with check/rep/envelope/verify pipelines.
"""

from .exact import MPoly, Rat, RatMatrix, rat
from .finalg import (
    DiTerm,
    IdentityTerm,
    StructureAlgebra,
    StructureDialgebra,
    di_translate,
    eval_identity,
    leibniz_quotient,
    leibniz_to_dialgebra,
    minus_functor,
    variety_identities,
)
from .conformal import ConfMap, CurElement, apply, dialgebra_ops, gc_bracket
from .leibrep import LieModule, build_rho, check_faithful, check_representation, decompose
from .envelope import (
    DiPoly,
    DiWord,
    UEnvElement,
    diword_products,
    normal_form,
    ordered_basis,
    pbw_count,
    pbw_lie,
    u_product,
    verify_faithfulness,
)

__all__ = [
    "MPoly",
    "Rat",
    "RatMatrix",
    "rat",
    "DiTerm",
    "IdentityTerm",
    "StructureAlgebra",
    "StructureDialgebra",
    "di_translate",
    "eval_identity",
    "leibniz_quotient",
    "leibniz_to_dialgebra",
    "minus_functor",
    "variety_identities",
    "ConfMap",
    "CurElement",
    "apply",
    "dialgebra_ops",
    "gc_bracket",
    "LieModule",
    "build_rho",
    "check_faithful",
    "check_representation",
    "decompose",
    "DiPoly",
    "DiWord",
    "UEnvElement",
    "diword_products",
    "normal_form",
    "ordered_basis",
    "pbw_count",
    "pbw_lie",
    "u_product",
    "verify_faithfulness",
]

__version__ = "0.1.0"
