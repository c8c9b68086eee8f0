"""The twisted product x * y = iota(xy) and its Hom-modules.

Run: python demos/hom_tour.py
"""

from __future__ import annotations

from tlhom import hom_module as hm
from tlhom.algebra import tl_algebra
from tlhom.hom_twist import Kind, check_hom_assoc, check_weak_unit, twisted_tl

H, A = twisted_tl(3), tl_algebra(3)
print("e1 * e2 =", A.show(H.multiply(A.word("e1"), A.word("e2"))), "(twisted)")
print("type II:", check_hom_assoc(H, Kind.TYPE_II).to_json())
print("type I1:", check_hom_assoc(H, Kind.TYPE_I1).to_json())
print("weak unit:", check_weak_unit(H, A.unit).passed)

# F turns a left module over TL_n into a right Hom-module over the twist
for n, d in ((3, 1), (4, 1), (4, 2)):
    V = hm.cell_hom_module(n, d)
    print(f"F(C_{d}) over TL_{n}: dim {V.dimension}, axiom {hm.check_hom_module(V).to_json()['result']}, "
          f"Hom-simple {hm.is_hom_simple(V)}")

# at delta = 1 the radical of C_2 over TL_4 is a proper Hom-submodule
V = hm.cell_hom_module(4, 2, 1)
U = hm.generated_submodule(V, [[1, -1]])
print("delta=1: <(1,-1)> has dim", U.dimension, "closed", U.is_closed(), "Hom-simple", hm.is_hom_simple(V))
