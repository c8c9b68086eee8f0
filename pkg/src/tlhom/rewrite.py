"""
String-diagram rewriting over the signature {id, mu, alpha, sigma, eta}.

A :class:`Term` is a morphism of the free strict monoidal category on the
boxes mu (2->1), alpha (1->1), sigma (2->2) and eta (0->1); ``id`` is a bare
wire. It is stored as a sequence of steps ``(box, offset)``: each step
replaces the wires ``offset .. offset+inputs-1`` of the current wire list by
the box outputs. Sequences that differ by sliding independent boxes past
each other (the interchange law) denote the same diagram; terms are kept in
a canonical order so equality is syntactic.

Grammar::

    expr    := seq ('#' seq)*        tensor, left factor on the left wires
    seq     := atom (';' atom)*      composition, read bottom to top
    atom    := NAME | '(' expr ')'

``;`` binds tighter than ``#``, so ``mu ; alpha # id`` is ``(mu;alpha) # id``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .coeff import ONE

ARITY: dict[str, tuple[int, int]] = {
    "id": (1, 1),
    "mu": (2, 1),
    "alpha": (1, 1),
    "sigma": (2, 2),
    "eta": (0, 1),
}
BOXES = ("mu", "alpha", "sigma", "eta")

Step = tuple[str, int]


class TermSyntaxError(ValueError):
    pass


class ArityError(ValueError):
    pass


class BoundaryError(ValueError):
    pass


# ---------------------------------------------------------------------------
# steps and the interchange law
# ---------------------------------------------------------------------------

def _widths(n_in: int, steps: Sequence[Step]) -> list[int]:
    """Wire count before each step, plus the final width."""
    out = [n_in]
    w = n_in
    for g, o in steps:
        i, u = ARITY[g]
        if o < 0 or o + i > w:
            raise ArityError(f"box {g} at offset {o} does not fit on {w} wires")
        w += u - i
        out.append(w)
    return out


def _swap(a: Step, b: Step) -> tuple[Step, Step] | None:
    """Move b (applied after a) in front of a, or None if they are connected."""
    g1, o1 = a
    g2, o2 = b
    i1, u1 = ARITY[g1]
    i2, u2 = ARITY[g2]
    if o2 + i2 <= o1:
        return (g2, o2), (g1, o1 - i2 + u2)
    if o2 >= o1 + u1:
        return (g2, o2 - u1 + i1), (g1, o1)
    return None


@lru_cache(maxsize=200_000)
def _front_moves(steps: tuple[Step, ...]) -> tuple[tuple[Step, tuple[Step, ...]], ...]:
    """Every box that can slide to the front, with the remaining sequence."""
    out = []
    seen = set()
    for idx in range(len(steps)):
        cur = steps[idx]
        prefix = list(steps[:idx])
        ok = True
        for j in range(idx - 1, -1, -1):
            moved = _swap(prefix[j], cur)
            if moved is None:
                ok = False
                break
            cur, prefix[j] = moved
        if not ok:
            continue
        rest = tuple(prefix) + steps[idx + 1:]
        if (cur, rest) not in seen:
            seen.add((cur, rest))
            out.append((cur, rest))
    return tuple(out)


def _front_key(step: Step) -> tuple[int, int]:
    return step[1], 0 if ARITY[step[0]][0] == 0 else 1


@lru_cache(maxsize=200_000)
def canonical_steps(steps: tuple[Step, ...]) -> tuple[Step, ...]:
    """Canonical representative modulo interchange.

    Repeatedly take the front-movable box with the smallest offset (boxes
    without inputs first on ties); remaining ties are broken by the
    lexicographically smallest completion.
    """
    if not steps:
        return ()
    moves = _front_moves(steps)
    best = min(_front_key(m[0]) for m in moves)
    return min((m[0],) + canonical_steps(m[1]) for m in moves if _front_key(m[0]) == best)


@lru_cache(maxsize=50_000)
def layouts(steps: tuple[Step, ...]) -> tuple[tuple[Step, ...], ...]:
    """All step sequences equivalent to ``steps`` under interchange, sorted."""
    if not steps:
        return ((),)
    out = set()
    for front, rest in _front_moves(steps):
        for tail in layouts(rest):
            out.add((front,) + tail)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# terms
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Term:
    n_in: int
    steps: tuple[Step, ...]

    @classmethod
    def make(cls, n_in: int, steps: Iterable[Step]) -> Term:
        steps = tuple((str(g), int(o)) for g, o in steps)
        for g, _ in steps:
            if g not in BOXES:
                raise TermSyntaxError(f"unknown box {g!r}")
        _widths(n_in, steps)
        return cls(n_in, canonical_steps(steps))

    @property
    def n_out(self) -> int:
        return _widths(self.n_in, self.steps)[-1]

    @property
    def boundary(self) -> tuple[int, int]:
        return self.n_in, self.n_out

    @property
    def size(self) -> int:
        return len(self.steps)

    @property
    def layers(self) -> list[list[str]]:
        """Tensor words, each box slid to the earliest layer it can reach."""
        return [_render_layer(lay, w) for lay, w in _layering(self.n_in, self.steps)]

    def then(self, other: Term) -> Term:
        if self.n_out != other.n_in:
            raise ArityError(f"cannot compose {self.boundary} with {other.boundary}")
        return Term.make(self.n_in, self.steps + other.steps)

    def tensor(self, other: Term) -> Term:
        shifted = tuple((g, o + self.n_out) for g, o in other.steps)
        return Term.make(self.n_in + other.n_in, self.steps + shifted)

    def __str__(self) -> str:
        return format_steps(self.n_in, self.steps)

    def to_json(self) -> dict:
        return {"inputs": self.n_in, "outputs": self.n_out, "term": str(self)}


def _layering(n_in: int, steps: tuple[Step, ...]) -> list[tuple[list[Step], int]]:
    """Split into maximal layers of mutually independent boxes, with input widths."""
    out = []
    rest = steps
    width = n_in
    while rest:
        layer: list[Step] = []
        progress = True
        while progress and rest:
            progress = False
            for front, tail in _front_moves(rest):
                # front must also slide below every box already in the layer
                cur, ok = front, True
                for prev in reversed(layer):
                    moved = _swap(prev, cur)
                    if moved is None:
                        ok = False
                        break
                    cur = moved[0]
                if ok:
                    layer.append(front)
                    rest = tail
                    progress = True
                    break
        out.append((layer, width))
        for g, _ in layer:
            width += ARITY[g][1] - ARITY[g][0]
    return out


def _render_layer(layer: Sequence[Step], width: int) -> list[str]:
    wires: list[tuple[float, int | None]] = [(float(j), j) for j in range(width)]
    boxes: list[tuple[float, str]] = []
    used: set[int] = set()
    for g, o in layer:
        i, u = ARITY[g]
        taken = wires[o:o + i]
        if taken:
            key = taken[0][0]
        else:
            left = wires[o - 1][0] if o > 0 else -1.0
            right = wires[o][0] if o < len(wires) else float(width)
            key = (left + right) / 2
        used.update(j for _, j in taken if j is not None)
        boxes.append((key, g))
        wires[o:o + i] = [(key, None)] * u
    items = boxes + [(float(j), "id") for j in range(width) if j not in used]
    return [g for _, g in sorted(items)]


def format_steps(n_in: int, steps: Sequence[Step]) -> str:
    if not steps:
        return " # ".join(["id"] * n_in) if n_in else "empty"
    layers = []
    w = n_in
    for g, o in steps:
        i, u = ARITY[g]
        words = ["id"] * o + [g] + ["id"] * (w - o - i)
        layers.append(words[0] if len(words) == 1 else "(" + " # ".join(words) + ")")
        w += u - i
    return " ; ".join(layers)


_TOKEN = re.compile(r"\s*(?:([A-Za-z_]+)|(.))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    for m in _TOKEN.finditer(text):
        name, sym = m.groups()
        if name:
            tokens.append(name)
        elif sym is not None and not sym.isspace():
            if sym not in "#;()":
                raise TermSyntaxError(f"unexpected character {sym!r}")
            tokens.append(sym)
    return tokens


@dataclass
class _Raw:
    n_in: int
    n_out: int
    steps: tuple[Step, ...]


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        if not self.tokens:
            raise TermSyntaxError("empty term")

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expr(self) -> _Raw:
        left = self.seq()
        while self.peek() == "#":
            self.take()
            right = self.seq()
            shifted = tuple((g, o + left.n_out) for g, o in right.steps)
            left = _Raw(left.n_in + right.n_in, left.n_out + right.n_out, left.steps + shifted)
        return left

    def seq(self) -> _Raw:
        left = self.atom()
        while self.peek() == ";":
            self.take()
            right = self.atom()
            if left.n_out != right.n_in:
                raise ArityError(f"cannot compose {left.n_out} outputs with {right.n_in} inputs")
            left = _Raw(left.n_in, right.n_out, left.steps + right.steps)
        return left

    def atom(self) -> _Raw:
        tok = self.take()
        if tok == "(":
            inner = self.expr()
            if self.take() != ")":
                raise TermSyntaxError("missing ')'")
            return inner
        if tok is None or tok in "#;)":
            raise TermSyntaxError(f"expected a generator, found {tok!r}")
        if tok not in ARITY:
            raise TermSyntaxError(f"unknown generator {tok!r}")
        i, u = ARITY[tok]
        return _Raw(i, u, () if tok == "id" else ((tok, 0),))


def parse_term(text: str | Term) -> Term:
    if isinstance(text, Term):
        return text
    p = _Parser(text)
    raw = p.expr()
    if p.peek() is not None:
        raise TermSyntaxError(f"trailing input at {p.peek()!r}")
    return Term.make(raw.n_in, raw.steps)


# ---------------------------------------------------------------------------
# rules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RewriteRule:
    name: str
    lhs: Term
    rhs: Term
    bidirectional: bool = True

    def __post_init__(self):
        if self.lhs.boundary != self.rhs.boundary:
            raise BoundaryError(f"rule {self.name}: {self.lhs.boundary} vs {self.rhs.boundary}")

    @classmethod
    def of(cls, name: str, lhs: str | Term, rhs: str | Term, bidirectional: bool = True) -> RewriteRule:
        return cls(name, parse_term(lhs), parse_term(rhs), bidirectional)

    def to_json(self) -> dict:
        return {"name": self.name, "lhs": str(self.lhs), "rhs": str(self.rhs), "bidirectional": self.bidirectional}


_RULE_TEXT: dict[str, list[tuple[str, str, str]]] = {
    "ASSOC": [("assoc", "(mu # id) ; mu", "(id # mu) ; mu")],
    "HOM_I": [("hom_I", "(mu # alpha) ; mu", "(alpha # mu) ; mu")],
    "HOM_II": [("hom_II", "((mu ; alpha) # id) ; mu", "(id # (mu ; alpha)) ; mu")],
    "ANTI_INV": [
        ("involutive", "alpha ; alpha", "id"),
        ("anti_multiplicative", "mu ; alpha", "sigma ; (alpha # alpha) ; mu"),
    ],
    "UNIT": [
        ("left_unit", "(eta # id) ; mu", "id"),
        ("right_unit", "(id # eta) ; mu", "id"),
    ],
    "WEAK_UNIT": [
        ("weak_left_unit", "(eta # id) ; mu", "alpha"),
        ("weak_right_unit", "(id # eta) ; mu", "alpha"),
    ],
    "SIGMA": [
        ("sigma_involutive", "sigma ; sigma", "id # id"),
        ("sigma_alpha_left", "(alpha # id) ; sigma", "sigma ; (id # alpha)"),
        ("sigma_alpha_right", "(id # alpha) ; sigma", "sigma ; (alpha # id)"),
        ("sigma_mu_left", "(mu # id) ; sigma", "(id # sigma) ; (sigma # id) ; (id # mu)"),
        ("sigma_mu_right", "(id # mu) ; sigma", "(sigma # id) ; (id # sigma) ; (mu # id)"),
        ("sigma_eta_left", "(eta # id) ; sigma", "id # eta"),
        ("sigma_eta_right", "(id # eta) ; sigma", "eta # id"),
    ],
}
RULE_SET_NAMES = tuple(_RULE_TEXT)
# sets in which sigma occurs carry the structural sigma rules
_WITH_STRUCTURE = {"ANTI_INV"}


def rule_set(name: str, structural: bool | None = None) -> list[RewriteRule]:
    """The named rule family. ``structural`` adds the SIGMA rules
    (default: only for ANTI_INV, the one family that mentions sigma)."""
    key = name.strip().upper()
    if key not in _RULE_TEXT:
        raise KeyError(f"unknown rule set {name!r}; choose from {', '.join(RULE_SET_NAMES)}")
    rules = [RewriteRule.of(*r) for r in _RULE_TEXT[key]]
    if structural is None:
        structural = key in _WITH_STRUCTURE
    if structural and key != "SIGMA":
        rules += [RewriteRule.of(*r) for r in _RULE_TEXT["SIGMA"]]
    return rules


def rule_sets(names: str | Iterable[str]) -> list[RewriteRule]:
    """Union of rule families, given as a list or a comma-separated string."""
    if isinstance(names, str):
        names = [n for n in names.split(",") if n.strip()]
    out: list[RewriteRule] = []
    seen = set()
    for n in names:
        for r in rule_set(n):
            if r.name not in seen:
                seen.add(r.name)
                out.append(r)
    return out


# ---------------------------------------------------------------------------
# rewriting
# ---------------------------------------------------------------------------

LR, RL = "lr", "rl"


@dataclass(frozen=True)
class Application:
    """One rule application: the window in ``layout`` starting at step ``cut``
    on wires ``wire ..`` is replaced, giving ``result``."""

    rule: str
    direction: str
    layout: tuple[Step, ...]
    cut: int
    wire: int
    result: Term

    def to_json(self, n_in: int) -> dict:
        return {"rule": self.rule, "direction": self.direction,
                "position": {"cut": self.cut, "wire": self.wire},
                "layout": format_steps(n_in, self.layout), "result": str(self.result)}


def _sides(rule: RewriteRule, direction: str) -> tuple[Term, Term]:
    return (rule.lhs, rule.rhs) if direction == LR else (rule.rhs, rule.lhs)


def _replace(term: Term, layout, cut, wire, pattern: Term, replacement: Term) -> Term:
    k = len(pattern.steps)
    new = layout[:cut] + tuple((g, o + wire) for g, o in replacement.steps) + layout[cut + k:]
    return Term.make(term.n_in, new)


def rewrites(term: Term, rule: RewriteRule, direction: str = LR) -> list[Application]:
    """All distinct results of one application of ``rule`` to ``term``."""
    if direction == RL and not rule.bidirectional:
        return []
    pattern, replacement = _sides(rule, direction)
    P = pattern.steps
    k = len(P)
    found: dict[Term, Application] = {}
    for layout in layouts(term.steps):
        widths = _widths(term.n_in, layout)
        if k == 0:
            spots = ((cut, w) for cut in range(len(layout) + 1)
                     for w in range(widths[cut] - pattern.n_in + 1))
        else:
            spots = []
            for cut in range(len(layout) - k + 1):
                w = layout[cut][1] - P[0][1]
                if layout[cut][0] != P[0][0] or w < 0 or w + pattern.n_in > widths[cut]:
                    continue
                if all(layout[cut + j] == (P[j][0], P[j][1] + w) for j in range(k)):
                    spots.append((cut, w))
        for cut, w in spots:
            res = _replace(term, layout, cut, w, pattern, replacement)
            if res not in found:
                found[res] = Application(rule.name, direction, layout, cut, w, res)
    return list(found.values())


def apply(term: Term, app: Application, rules: Sequence[RewriteRule]) -> Term:
    """Replay one recorded application; raises if it does not fit ``term``."""
    rule = next((r for r in rules if r.name == app.rule), None)
    if rule is None:
        raise KeyError(f"rule {app.rule!r} not in the rule list")
    if canonical_steps(app.layout) != term.steps:
        raise ValueError("recorded layout is not a form of the current term")
    pattern, replacement = _sides(rule, app.direction)
    k = len(pattern.steps)
    widths = _widths(term.n_in, app.layout)
    window = app.layout[app.cut:app.cut + k]
    if window != tuple((g, o + app.wire) for g, o in pattern.steps) or app.wire + pattern.n_in > widths[app.cut]:
        raise ValueError("recorded window does not match the rule")
    return _replace(term, app.layout, app.cut, app.wire, pattern, replacement)


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

@dataclass
class Proof:
    lhs: Term
    rhs: Term
    steps: list[Application]
    explored: int = 0

    found = True

    def __len__(self):
        return len(self.steps)

    def replay(self, rules: Sequence[RewriteRule]) -> bool:
        cur = self.lhs
        for app in self.steps:
            cur = apply(cur, app, rules)
            if cur != app.result:
                return False
        return cur == self.rhs

    def as_rule(self, name: str) -> RewriteRule:
        return RewriteRule(name, self.lhs, self.rhs)

    def to_json(self) -> dict:
        return {"result": "proof", "lhs": str(self.lhs), "rhs": str(self.rhs), "length": len(self.steps),
                "explored": self.explored, "steps": [s.to_json(self.lhs.n_in) for s in self.steps]}


@dataclass
class NotFoundWithinDepth:
    """No derivation of length <= depth within the size bound.

    This is not a certificate of non-derivability.
    """

    lhs: Term
    rhs: Term
    depth: int
    max_size: int
    explored: int
    exhausted: bool = False

    found = False

    def to_json(self) -> dict:
        return {"result": "not_found_within_depth", "lhs": str(self.lhs), "rhs": str(self.rhs),
                "depth": self.depth, "max_size": self.max_size, "explored": self.explored,
                "search_space_exhausted": self.exhausted}


def _key(t: Term):
    return t.steps


def _neighbours(term: Term, rules: Sequence[RewriteRule], max_size: int) -> list[Application]:
    out: dict[Term, Application] = {}
    for rule in rules:
        for direction in (LR, RL):
            for app in rewrites(term, rule, direction):
                if app.result.size <= max_size and app.result not in out:
                    out[app.result] = app
    return list(out.values())


def _inverse(app_from: Term, app: Application, rules: Sequence[RewriteRule]) -> Application:
    """An application on app.result that leads back to ``app_from``."""
    rule = next(r for r in rules if r.name == app.rule)
    back = RL if app.direction == LR else LR
    for cand in rewrites(app.result, rule, back):
        if cand.result == app_from:
            return cand
    raise RuntimeError("rewrite step has no inverse; this is a bug")


def derive(lhs: str | Term, rhs: str | Term, rules: Sequence[RewriteRule], depth: int,
           max_size: int | None = None) -> Proof | NotFoundWithinDepth:
    """Bidirectional breadth-first search for a chain of rule applications.

    Intermediate terms are limited to ``max_size`` boxes (default: two more
    than the larger endpoint). Frontiers are expanded in sorted order, so the
    proof returned is deterministic and of minimal length.
    """
    lhs, rhs = parse_term(lhs), parse_term(rhs)
    if lhs.boundary != rhs.boundary:
        raise BoundaryError(f"boundaries differ: {lhs.boundary} vs {rhs.boundary}")
    if max_size is None:
        max_size = max(lhs.size, rhs.size) + 2
    if lhs == rhs:
        return Proof(lhs, rhs, [], 1)
    parents = ({lhs: None}, {rhs: None})
    fronts = ([lhs], [rhs])
    levels = [0, 0]
    while levels[0] + levels[1] < depth:
        side = 0 if len(fronts[0]) <= len(fronts[1]) else 1
        if not fronts[side]:
            side = 1 - side
        if not fronts[side]:
            break
        mine, other = parents[side], parents[1 - side]
        new = []
        meet = None
        for t in sorted(fronts[side], key=_key):
            for app in sorted(_neighbours(t, rules, max_size), key=lambda a: _key(a.result)):
                r = app.result
                if r in mine:
                    continue
                mine[r] = (t, app)
                new.append(r)
                if r in other:
                    meet = r
                    break
            if meet is not None:
                break
        levels[side] += 1
        fronts = (new, fronts[1]) if side == 0 else (fronts[0], new)
        if meet is not None:
            explored = len(parents[0]) + len(parents[1])
            return Proof(lhs, rhs, _assemble(meet, parents, rules), explored)
        if not fronts[0] or not fronts[1]:
            explored = len(parents[0]) + len(parents[1])
            return NotFoundWithinDepth(lhs, rhs, depth, max_size, explored, exhausted=True)
    explored = len(parents[0]) + len(parents[1])
    return NotFoundWithinDepth(lhs, rhs, depth, max_size, explored)


def _assemble(meet: Term, parents, rules) -> list[Application]:
    forward = []
    cur = meet
    while parents[0][cur] is not None:
        prev, app = parents[0][cur]
        forward.append(app)
        cur = prev
    forward.reverse()
    cur = meet
    while parents[1][cur] is not None:
        prev, app = parents[1][cur]
        # app rewrites prev into cur; walk it backwards
        forward.append(_inverse(prev, app, rules))
        cur = prev
    return forward


BRIDGE_LHS = "(id # alpha) ; mu"
BRIDGE_RHS = "(alpha # id) ; mu"
TYPE_I1_LHS = "(mu # alpha) ; mu"
TYPE_I1_RHS = "(alpha # mu) ; mu"


def derive_unital_bridge(rules: str | Sequence[RewriteRule] = "HOM_II,UNIT", depth: int = 4) -> Proof | NotFoundWithinDepth:
    """Derive mu(x, alpha y) = mu(alpha x, y) from a Hom-associativity law and the unit."""
    if isinstance(rules, str):
        rules = rule_sets(rules)
    return derive(BRIDGE_LHS, BRIDGE_RHS, rules, depth)


def derive_type_I1(rules: str | Sequence[RewriteRule] = "HOM_II,UNIT", depth: int = 8,
                   max_size: int | None = None) -> Proof | NotFoundWithinDepth:
    if isinstance(rules, str):
        rules = rule_sets(rules)
    return derive(TYPE_I1_LHS, TYPE_I1_RHS, rules, depth, max_size)


# ---------------------------------------------------------------------------
# evaluation model
# ---------------------------------------------------------------------------

@dataclass
class Model:
    """Concrete interpretation: elements are values, boxes are functions."""

    mu: Callable
    alpha: Callable
    unit: object
    basis: list = field(repr=False)

    def run(self, term: Term, inputs: Sequence) -> list:
        state = list(inputs)
        if len(state) != term.n_in:
            raise ArityError(f"term takes {term.n_in} inputs, got {len(state)}")
        for g, o in term.steps:
            if g == "mu":
                state[o:o + 2] = [self.mu(state[o], state[o + 1])]
            elif g == "alpha":
                state[o] = self.alpha(state[o])
            elif g == "sigma":
                state[o], state[o + 1] = state[o + 1], state[o]
            elif g == "eta":
                state.insert(o, self.unit)
        return state


def algebra_model(A) -> Model:
    """mu = multiplication, alpha = involution, eta = unit of an iota-algebra."""
    return Model(A.multiply, A.apply_involution, A.unit, A.basis())


def hom_model(H) -> Model:
    """mu = deformed product, alpha = twist, eta = unit of the base algebra."""
    return Model(H.multiply, H.twist, H.base.unit, [H.basis_element(i) for i in range(H.dimension)])


def tensor_expand(elements: Sequence) -> dict:
    """Expand a pure tensor of algebra elements into {index tuple: coefficient}."""
    acc = {(): ONE}
    for x in elements:
        nxt = {}
        for key, c in acc.items():
            for i, v in x.items():
                nxt[key + (i,)] = c * v
        acc = nxt
    return {k: v for k, v in acc.items() if v}


def evaluate_equal(model: Model, lhs: Term, rhs: Term, inputs: Sequence) -> bool:
    return tensor_expand(model.run(lhs, inputs)) == tensor_expand(model.run(rhs, inputs))


@dataclass
class SoundnessReport:
    rule: str
    passed: bool
    checked: int
    witness: tuple | None = None

    def to_json(self) -> dict:
        return {"rule": self.rule, "passed": self.passed, "checked": self.checked,
                "witness": None if self.witness is None else list(self.witness)}


def check_rule_soundness(rule: RewriteRule, model: Model) -> SoundnessReport:
    """Evaluate both sides on every tuple of basis inputs."""
    checked = 0
    for idx in itertools.product(range(len(model.basis)), repeat=rule.lhs.n_in):
        checked += 1
        inputs = [model.basis[i] for i in idx]
        if not evaluate_equal(model, rule.lhs, rule.rhs, inputs):
            return SoundnessReport(rule.name, False, checked, idx)
    return SoundnessReport(rule.name, True, checked)
