"""Exact computations with Temperley-Lieb algebras and their Hom-algebra twists.

Modules:

- ``coeff``: exact polynomials and rational functions in the loop value d, matrices over them
- ``diagrams``: planar diagrams, half-diagrams, composition and the mirror involution
- ``algebra``: finite-dimensional iota-algebras and the diagram algebra TL_n
- ``hom_twist``: Yau twisting by the involution and Hom-associativity checks
- ``cellular``: cellular data, cell modules, Gram matrices and semisimplicity
- ``hom_module``: right Hom-modules, the functor F and submodule constructions
- ``rewrite``: string-diagram terms, rule sets and derivation search
- ``cli``: the ``tlhom`` command
"""

from __future__ import annotations

from .algebra import AlgebraElement, FiniteAlgebra, TLAlgebra, tl_algebra
from .cellular import cell_module, gram_matrix, is_semisimple, radical_dim, simple_dims
from .coeff import DELTA, DeltaPoly, DeltaRational, ExactMatrix
from .diagrams import HalfDiagram, TLDiagram, enumerate_diagrams, enumerate_half
from .hom_module import HomModule, cell_hom_module, check_hom_module, functor_module, regular_hom_module
from .hom_twist import HomAlgebra, Kind, check_hom_assoc, twisted_tl, yau_twist_type2
from .rewrite import Term, RewriteRule, derive, parse_term, rule_set

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "FiniteAlgebra", "TLAlgebra", "tl_algebra",
    "cell_module", "gram_matrix", "is_semisimple", "radical_dim", "simple_dims",
    "DELTA", "DeltaPoly", "DeltaRational", "ExactMatrix",
    "HalfDiagram", "TLDiagram", "enumerate_diagrams", "enumerate_half",
    "HomModule", "cell_hom_module", "check_hom_module", "functor_module", "regular_hom_module",
    "HomAlgebra", "Kind", "check_hom_assoc", "twisted_tl", "yau_twist_type2",
    "Term", "RewriteRule", "derive", "parse_term", "rule_set",
]
