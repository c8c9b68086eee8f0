from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tlhom import rewrite as rw
from tlhom.algebra import AlgebraElement, tl_algebra
from tlhom.hom_twist import twisted_tl
from tlhom.rewrite import (
    ARITY,
    ArityError,
    BoundaryError,
    RewriteRule,
    Term,
    TermSyntaxError,
    derive,
    parse_term,
    rule_set,
    rule_sets,
)


# -- parsing ---------------------------------------------------------------------

def test_parse_examples():
    assert parse_term("mu").boundary == (2, 1)
    assert parse_term("(mu # id) ; mu").boundary == (3, 1)
    t = parse_term("(mu ; alpha # id) ; mu")
    assert t.boundary == (3, 1)
    assert t == parse_term("((mu ; alpha) # id) ; mu")
    assert parse_term("eta").boundary == (0, 1)
    assert parse_term("sigma ; sigma").boundary == (2, 2)
    assert parse_term("id # id").size == 0


def test_precedence():
    # ';' binds tighter than '#'
    assert parse_term("mu ; alpha # id") == parse_term("(mu ; alpha) # id")
    with pytest.raises(ArityError):
        parse_term("mu # mu ; mu")  # mu # (mu ; mu) is ill-typed


def test_parse_errors():
    for bad in ["", "mu #", "(mu", "mu )", "nu", "mu ; ; mu", "mu + mu"]:
        with pytest.raises((TermSyntaxError, ArityError)):
            parse_term(bad)
    with pytest.raises(ArityError):
        parse_term("mu ; mu")
    with pytest.raises(TermSyntaxError):
        parse_term("nu")


def test_printing_round_trips():
    texts = ["mu", "(mu # alpha) ; mu", "(id # eta # id) ; (mu # id) ; mu", "sigma ; (alpha # alpha) ; mu",
             "id # id # id", "eta # eta"]
    for text in texts:
        t = parse_term(text)
        assert parse_term(str(t)) == t


def test_layers():
    assert parse_term("(mu # alpha) ; mu").layers == [["mu", "alpha"], ["mu"]]
    assert parse_term("(mu ; alpha) # id").layers == [["mu", "id"], ["alpha", "id"]]
    assert parse_term("alpha # alpha # alpha").layers == [["alpha", "alpha", "alpha"]]


# -- interchange -------------------------------------------------------------------

def test_interchange_identifies_slides():
    a = parse_term("(alpha # id) ; (id # alpha)")
    b = parse_term("(id # alpha) ; (alpha # id)")
    c = parse_term("alpha # alpha")
    assert a == b == c
    assert parse_term("(mu # id) ; (id # alpha)") == parse_term("(id # id # alpha) ; (mu # id)")
    assert parse_term("(mu # id);mu") != parse_term("(id # mu);mu")
    # eta boxes slide too
    assert parse_term("(eta # id) ; (id # alpha)") == parse_term("alpha ; (eta # id)")


def random_steps(rng, n_in, length):
    steps = []
    width = n_in
    for _ in range(length):
        options = [(g, o) for g in rw.BOXES for o in range(width - ARITY[g][0] + 1)
                   if width - ARITY[g][0] + ARITY[g][1] <= 4 and width - ARITY[g][0] + ARITY[g][1] >= 1]
        g, o = rng.choice(options)
        steps.append((g, o))
        width += ARITY[g][1] - ARITY[g][0]
    return tuple(steps)


def _run(model, n_in, steps, inputs):
    t = Term(n_in, steps)  # raw, not canonicalised
    return rw.tensor_expand(model.run(t, inputs))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_normal_form_is_idempotent_and_sound(seed):
    rng = random.Random(seed)
    n_in = rng.randint(1, 3)
    steps = random_steps(rng, n_in, rng.randint(0, 5))
    t = Term.make(n_in, steps)
    assert Term.make(n_in, t.steps) == t
    assert rw.canonical_steps(t.steps) == t.steps
    model = rw.algebra_model(tl_algebra(3))
    inputs = [AlgebraElement.basis(rng.randrange(5)) for _ in range(n_in)]
    assert _run(model, n_in, steps, inputs) == _run(model, n_in, t.steps, inputs)
    for layout in rw.layouts(t.steps):
        assert rw.canonical_steps(layout) == t.steps


def test_all_layouts_evaluate_equally():
    model = rw.algebra_model(tl_algebra(3))
    t = parse_term("(mu # sigma) ; (alpha # mu) ; mu")
    ls = rw.layouts(t.steps)
    assert len(ls) > 1
    for idx in itertools.product(range(5), repeat=t.n_in):
        inputs = [AlgebraElement.basis(i) for i in idx]
        values = {tuple(sorted(_run(model, t.n_in, lay, inputs).items())) for lay in ls}
        assert len(values) == 1


# -- rule sets ---------------------------------------------------------------------

def _has(rules, lhs, rhs):
    l, r = parse_term(lhs), parse_term(rhs)
    return any((x.lhs, x.rhs) in ((l, r), (r, l)) for x in rules)


def test_rule_sets_contents():
    assert _has(rule_set("ANTI_INV"), "alpha;alpha", "id")
    assert _has(rule_set("ANTI_INV"), "mu ; alpha", "sigma ; (alpha # alpha) ; mu")
    assert _has(rule_set("HOM_II"), "((mu;alpha) # id);mu", "(id # (mu;alpha));mu")
    assert _has(rule_set("UNIT"), "(eta # id);mu", "id")
    assert _has(rule_set("WEAK_UNIT"), "(eta # id);mu", "alpha")
    assert _has(rule_set("ASSOC"), "(mu # id);mu", "(id # mu);mu")
    assert _has(rule_set("HOM_I"), "(mu # alpha);mu", "(alpha # mu);mu")
    assert _has(rule_set("ANTI_INV"), "sigma;sigma", "id # id")
    assert not _has(rule_set("HOM_II"), "sigma;sigma", "id # id")
    assert _has(rule_set("HOM_II", structural=True), "sigma;sigma", "id # id")
    assert all(r.bidirectional for r in rule_sets("HOM_II,UNIT"))
    with pytest.raises(KeyError):
        rule_set("HOM_III")


def test_rules_need_equal_boundaries():
    with pytest.raises(BoundaryError):
        RewriteRule.of("bad", "mu", "alpha")


# -- rewriting and search -------------------------------------------------------------

def test_rewrites_preserve_boundaries():
    rules = rule_sets("HOM_II,UNIT,ANTI_INV")
    t = parse_term("(mu # alpha) ; mu")
    for r in rules:
        for direction in ("lr", "rl"):
            for app in rw.rewrites(t, r, direction):
                assert app.result.boundary == t.boundary
                assert rw.apply(t, app, rules) == app.result


def test_rewrite_inside_context():
    r = rule_set("ANTI_INV")[0]  # alpha;alpha = id
    t = parse_term("(alpha ; alpha) # mu")
    results = {app.result for app in rw.rewrites(t, r, "lr")}
    assert results == {parse_term("id # mu")}
    # the empty side can be inserted on any wire
    back = {app.result for app in rw.rewrites(parse_term("mu"), r, "rl")}
    assert back == {parse_term("(alpha;alpha # id);mu"), parse_term("(id # alpha;alpha);mu"),
                    parse_term("mu;alpha;alpha")}


def test_trivial_derivation():
    p = derive("mu", "mu", rule_set("ASSOC"), 0)
    assert p.found and len(p) == 0 and p.replay(rule_set("ASSOC"))


def test_assoc_cannot_reach_alpha():
    res = derive("mu", "mu ; alpha", rule_set("ASSOC"), 6)
    assert not res.found
    j = res.to_json()
    assert j["result"] == "not_found_within_depth" and j["depth"] == 6


def test_boundary_mismatch():
    with pytest.raises(BoundaryError):
        derive("mu", "alpha", rule_set("ASSOC"), 3)


def test_assoc_pentagon_instance():
    p = derive("(mu # id # id) ; (mu # id) ; mu", "(id # id # mu) ; (id # mu) ; mu", rule_set("ASSOC"), 4)
    assert p.found and len(p) == 2 and p.replay(rule_set("ASSOC"))


@pytest.mark.parametrize("base", ["HOM_II,UNIT", "HOM_I,UNIT"])
def test_unital_bridge(base):
    p = rw.derive_unital_bridge(base, depth=4)
    assert p.found and len(p) <= 4
    assert p.replay(rule_sets(base))
    assert p.lhs == parse_term(rw.BRIDGE_LHS) and p.rhs == parse_term(rw.BRIDGE_RHS)


def test_type_one_from_type_two_and_unit():
    rules = rule_sets("HOM_II,UNIT")
    p = rw.derive_type_I1(rules, depth=8)
    assert p.found and len(p) <= 8 and p.replay(rules)
    steps = p.to_json()["steps"]
    assert [s["rule"] for s in steps].count("hom_II") >= 2


def test_bridge_as_lemma():
    bridge = rw.derive_unital_bridge().as_rule("bridge")
    rules = rule_set("HOM_II") + [bridge]
    p = derive(rw.TYPE_I1_LHS, rw.TYPE_I1_RHS, rules, 8)
    assert p.found and p.replay(rules)


def test_search_is_deterministic():
    a = rw.derive_type_I1().to_json()
    b = rw.derive_type_I1().to_json()
    assert a == b


def test_replay_detects_tampering():
    rules = rule_sets("HOM_II,UNIT")
    p = rw.derive_unital_bridge()
    p.steps = p.steps[:-1]
    assert not p.replay(rules)


def test_anti_involution_rules_derive_double_twist_of_product():
    rules = rule_set("ANTI_INV")
    p = derive("mu ; alpha ; alpha", "mu", rules, 2)
    assert p.found and len(p) == 1


# -- the evaluation model ---------------------------------------------------------------

def test_hom_ii_sound_on_twisted_tl3():
    model = rw.hom_model(twisted_tl(3))
    for r in rule_set("HOM_II"):
        rep = rw.check_rule_soundness(r, model)
        assert rep.passed and rep.checked == 125


def test_soundness_matrix():
    hom = rw.hom_model(twisted_tl(3))
    plain = rw.algebra_model(tl_algebra(3))
    sound = lambda name, m: all(rw.check_rule_soundness(r, m).passed for r in rule_set(name))
    assert sound("ASSOC", plain) and not sound("ASSOC", hom)
    assert sound("UNIT", plain) and not sound("UNIT", hom)
    assert sound("WEAK_UNIT", hom) and not sound("WEAK_UNIT", plain)
    assert sound("ANTI_INV", hom) and sound("ANTI_INV", plain)
    assert not sound("HOM_I", hom)
    rep = rw.check_rule_soundness(rule_set("HOM_I")[0], hom)
    assert rep.witness is not None and rep.to_json()["passed"] is False


def test_derivations_are_sound_where_rules_are():
    """Consecutive terms of an ANTI_INV derivation evaluate alike on both models."""
    rules = rule_set("ANTI_INV")
    p = derive("sigma ; (alpha # alpha) ; mu ; alpha", "mu", rules, 4)
    assert p.found and p.replay(rules)
    terms = [p.lhs] + [s.result for s in p.steps]
    for model in (rw.hom_model(twisted_tl(3)), rw.algebra_model(tl_algebra(3))):
        for a, b in zip(terms, terms[1:]):
            for idx in itertools.product(range(5), repeat=2):
                inputs = [AlgebraElement.basis(i) for i in idx]
                assert rw.evaluate_equal(model, a, b, inputs)


def test_model_arity_check():
    model = rw.algebra_model(tl_algebra(3))
    with pytest.raises(ArityError):
        model.run(parse_term("mu"), [tl_algebra(3).unit])
