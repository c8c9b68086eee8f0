"""Diagrams, products and the cell structure of TL_4.

Run: python demos/tl_tour.py
"""

from __future__ import annotations

from tlhom import cellular as cl
from tlhom.algebra import tl_algebra
from tlhom.coeff import format_poly

A = tl_algebra(4)
print(f"TL_4 has dimension {A.dimension}")

# e1 e1 closes a loop; e1 e2 e1 straightens back to e1
for word in ("e1*e1", "e1*e2*e1", "e1*e3"):
    print(f"{word:10} = {A.show(A.word(word))}")

# the involution reverses words
x = A.word("e1*e2*e3")
print("iota(e1*e2*e3) =", A.show(A.apply_involution(x)))

# Gram matrices of the cell modules, generic and at delta = 1
for d in range(3):
    g = cl.gram_matrix(4, d)
    print(f"C_{d}: dim {len(g.entries)}, det {format_poly(g.det)}, radical at delta=1: {cl.radical_dim(4, d, 1)}")

print("semisimple at delta=2:", cl.is_semisimple(4, 2), " at delta=1:", cl.is_semisimple(4, 1))
print("simple dims at delta=1:", cl.simple_dims(4, 1))
print("cell chain layer dims:", cl.verify_cell_chain(4).layer_dims)
