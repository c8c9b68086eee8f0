"""Equational derivations between string-diagram terms.

Run: python demos/rewrite_tour.py
"""

from __future__ import annotations

import json

from tlhom import rewrite as rw
from tlhom.hom_twist import twisted_tl

t = rw.parse_term("(mu ; alpha # id) ; mu")
print(t, "has boundary", t.boundary, "and layers", t.layers)

# with a genuine unit the two Hom-associativity types meet through alpha(x)y = x alpha(y)
bridge = rw.derive_unital_bridge()
print(f"bridge in {len(bridge)} steps")

proof = rw.derive_type_I1()
print(json.dumps(proof.to_json(), indent=1))

# a search that cannot succeed reports exhaustion rather than failure
print(rw.derive("mu", "mu ; alpha", rw.rule_set("ASSOC"), 6).to_json())

model = rw.hom_model(twisted_tl(3))
for name in ("HOM_II", "HOM_I", "WEAK_UNIT", "UNIT"):
    ok = all(rw.check_rule_soundness(r, model).passed for r in rw.rule_set(name))
    print(f"{name:9} holds on twisted TL_3: {ok}")
