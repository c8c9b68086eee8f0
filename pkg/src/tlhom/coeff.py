"""
Exact scalars for diagram algebras.

Every structure constant of a Temperley-Lieb algebra is a power of the loop
value ``d = q + q^-1``, so the coefficient ring used throughout the package is
Q[d]. Rationals are plain :class:`fractions.Fraction` values. Generic-parameter
linear algebra runs over the fraction field Q(d) (:class:`DeltaRational`);
specialised computations substitute a rational value for ``d`` and run over Q.

Rank and determinant use fraction-free (Bareiss) elimination over Q or Q[d];
nullspaces use reduced row echelon form over the corresponding field. Nothing
here ever touches floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

VARIABLE = "d"


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction or ``"P/Q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class DeltaPoly:
    """A polynomial in ``d`` with rational coefficients, stored sparsely.

    Instances are immutable and hashable. Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[int, Scalar] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                if exp < 0:
                    raise ValueError("negative exponents are not allowed in Q[d]")
                c = as_fraction(c)
                if c:
                    clean[exp] = c
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: Scalar) -> DeltaPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, c: Scalar = 1) -> DeltaPoly:
        return cls({exp: c})

    @classmethod
    def coerce(cls, value) -> DeltaPoly:
        if isinstance(value, DeltaPoly):
            return value
        if isinstance(value, str):
            return parse_poly(value)
        return cls.constant(as_fraction(value))

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    @property
    def degree(self) -> float | int:
        """Largest exponent, or ``-inf`` for the zero polynomial."""
        return max(self._terms) if self._terms else float("-inf")

    def coefficient(self, exp: int) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    @property
    def leading_coefficient(self) -> Fraction:
        return self._terms[max(self._terms)] if self._terms else Fraction(0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> DeltaPoly:
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return DeltaPoly(out)

    __radd__ = __add__

    def __neg__(self) -> DeltaPoly:
        return DeltaPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> DeltaPoly:
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> DeltaPoly:
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> DeltaPoly:
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return DeltaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> DeltaPoly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> DeltaPoly:
        """Multiply by ``d**k``."""
        if k == 0:
            return self
        return DeltaPoly({e + k: c for e, c in self._terms.items()})

    def scale(self, c: Scalar) -> DeltaPoly:
        c = as_fraction(c)
        return DeltaPoly({e: c * v for e, v in self._terms.items()})

    def divmod(self, other: DeltaPoly) -> tuple[DeltaPoly, DeltaPoly]:
        """Euclidean division over Q."""
        other = DeltaPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = dict(self._terms)
        quo: dict[int, Fraction] = {}
        dd = other.degree
        lc = other.leading_coefficient
        while rem and max(rem) >= dd:
            top = max(rem)
            factor = rem[top] / lc
            shift = top - dd
            quo[shift] = factor
            for e, c in other._terms.items():
                v = rem.get(e + shift, 0) - factor * c
                if v:
                    rem[e + shift] = v
                else:
                    rem.pop(e + shift, None)
        return DeltaPoly(quo), DeltaPoly(rem)

    def exact_div(self, other) -> DeltaPoly:
        q, r = self.divmod(DeltaPoly.coerce(other))
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> DeltaPoly:
        if self.is_zero():
            return self
        return self.scale(1 / self.leading_coefficient)

    def __call__(self, delta0) -> Fraction:
        return poly_eval(self, delta0)

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other) -> bool:
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"DeltaPoly({format_poly(self)!r})"


def _poly_or_none(value) -> DeltaPoly | None:
    if isinstance(value, DeltaPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return DeltaPoly.constant(value)
    return None


ZERO = DeltaPoly()
ONE = DeltaPoly.constant(1)
DELTA = DeltaPoly.monomial(1)


def poly_eval(p: DeltaPoly, delta0) -> Fraction:
    """Substitute the rational ``delta0`` for ``d`` (Horner scheme)."""
    delta0 = as_fraction(delta0)
    if p.is_zero():
        return Fraction(0)
    acc = Fraction(0)
    for e in range(int(p.degree), -1, -1):
        acc = acc * delta0 + p.coefficient(e)
    return acc


def poly_gcd(a: DeltaPoly, b: DeltaPoly) -> DeltaPoly:
    """Monic gcd over Q (gcd(0, 0) = 0)."""
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic()


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: DeltaPoly) -> str:
    """Render as e.g. ``"d^3 - 2*d"`` (descending powers)."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.terms, reverse=True):
        c = p.coefficient(e)
        mag = abs(c)
        if e == 0:
            body = _format_coeff(mag)
        else:
            var = VARIABLE if e == 1 else f"{VARIABLE}^{e}"
            body = var if mag == 1 else f"{_format_coeff(mag)}*{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TERM_RE = re.compile(
    r"""^(?P<coef>\d+(?:/\d+)?)?\s*(?:(?P<star>\*)\s*)?(?P<var>[dq])?(?:\s*\^\s*(?P<exp>\d+))?$"""
)


def parse_poly(text: str) -> DeltaPoly:
    """Parse the polynomial grammar used in JSON payloads.

    Terms are separated by ``+``/``-``; each term is ``c``, ``c*d^k``, ``d^k``
    or ``d``, where ``c`` is an integer or ``P/Q`` fraction.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    tokens = re.findall(r"[+-]?[^+-]+", s)
    if "".join(tokens) != s:
        raise ValueError(f"malformed polynomial: {text!r}")
    out: dict[int, Fraction] = {}
    for tok in tokens:
        sign = -1 if tok.startswith("-") else 1
        body = tok.lstrip("+-")
        m = _TERM_RE.match(body)
        if not m or not body or (m.group("star") and not m.group("var")):
            raise ValueError(f"malformed polynomial term {tok!r} in {text!r}")
        if m.group("exp") and not m.group("var"):
            raise ValueError(f"malformed polynomial term {tok!r} in {text!r}")
        if m.group("coef") and m.group("var") and not m.group("star"):
            raise ValueError(f"missing '*' in term {tok!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        exp = 0
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        out[exp] = out.get(exp, 0) + sign * coef
    return DeltaPoly(out)


class DeltaRational:
    """An element of Q(d) in lowest terms with a monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = DeltaPoly.coerce(num)
        den = ONE if den is None else DeltaPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(d)")
        if num.is_zero():
            num, den = ZERO, ONE
        elif not den.is_constant() or den != ONE:
            g = poly_gcd(num, den)
            if g != ONE:
                num, den = num.exact_div(g), den.exact_div(g)
            lc = den.leading_coefficient
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def coerce(cls, value) -> DeltaRational:
        if isinstance(value, DeltaRational):
            return value
        return cls(DeltaPoly.coerce(value))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __add__(self, other):
        other = _rat_or_none(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return DeltaRational(self.num + other.num, self.den)
        return DeltaRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return DeltaRational(-self.num, self.den)

    def __sub__(self, other):
        other = _rat_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _rat_or_none(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _rat_or_none(other)
        if other is None:
            return NotImplemented
        return DeltaRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rat_or_none(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(d)")
        return DeltaRational(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _rat_or_none(other)
        if other is None:
            return NotImplemented
        return other / self

    def evaluate(self, delta0) -> Fraction:
        den = poly_eval(self.den, delta0)
        if den == 0:
            raise ZeroDivisionError(f"denominator {self.den} vanishes at d = {delta0}")
        return poly_eval(self.num, delta0) / den

    def as_poly(self) -> DeltaPoly:
        if self.den != ONE:
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __eq__(self, other):
        other = _rat_or_none(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"DeltaRational({self})"


def _rat_or_none(value) -> DeltaRational | None:
    if isinstance(value, DeltaRational):
        return value
    if isinstance(value, (int, Fraction, DeltaPoly)):
        return DeltaRational(value)
    return None


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

RATIONAL = "rational"
DELTA_FIELD = "delta"


def _field_of(value) -> str:
    if isinstance(value, (DeltaPoly, DeltaRational)):
        return DELTA_FIELD
    if isinstance(value, (int, Fraction)):
        return RATIONAL
    raise TypeError(f"unsupported matrix entry {value!r}")


class DimensionError(ValueError):
    pass


class ExactMatrix:
    """A dense matrix over Q or Q(d).

    Entries are stored as Fractions (field ``"rational"``) or DeltaRationals
    (field ``"delta"``). Mixed input is promoted to Q(d).
    """

    __slots__ = ("rows", "cols", "field", "entries")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None, field: str | None = None):
        grid = [list(r) for r in entries]
        rows = len(grid)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if any(len(r) != cols for r in grid):
            raise DimensionError("ragged matrix rows")
        if field is None:
            field = RATIONAL
            for r in grid:
                for v in r:
                    if _field_of(v) == DELTA_FIELD:
                        field = DELTA_FIELD
                        break
        conv = as_fraction if field == RATIONAL else DeltaRational.coerce
        self.rows = rows
        self.cols = cols
        self.field = field
        self.entries = tuple(tuple(conv(v) for v in r) for r in grid)

    @classmethod
    def identity(cls, n: int, field: str = RATIONAL) -> ExactMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n, field=field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: str = RATIONAL) -> ExactMatrix:
        return cls([[0] * cols for _ in range(rows)], cols=cols, field=field)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def transpose(self) -> ExactMatrix:
        return ExactMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
                           cols=self.rows, field=self.field)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        field = DELTA_FIELD if DELTA_FIELD in (self.field, other.field) else RATIONAL
        zero = Fraction(0) if field == RATIONAL else DeltaRational(ZERO)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return ExactMatrix(out, cols=other.cols, field=field)

    def evaluate(self, delta0) -> ExactMatrix:
        """Specialise ``d`` to a rational value."""
        if self.field == RATIONAL:
            return self
        return ExactMatrix([[v.evaluate(delta0) for v in r] for r in self.entries], cols=self.cols,
                           field=RATIONAL)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i)
        )

    def is_zero(self) -> bool:
        return all(not v for r in self.entries for v in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        if self.field == other.field:
            return self.entries == other.entries
        return all(DeltaRational.coerce(a) == DeltaRational.coerce(b)
                   for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(v) for v in r) for r in self.entries)
        return f"ExactMatrix[{self.rows}x{self.cols}]({body})"

    def to_strings(self) -> list[list[str]]:
        return [[str(v) for v in r] for r in self.entries]


def _ring_rows(m: ExactMatrix) -> tuple[list[list], object, object]:
    """Rows over an integral domain (Q or Q[d]) plus the scale divided out of det.

    Over Q(d) every row is multiplied by the lcm of its denominators; the
    returned scale is the product of those multipliers.
    """
    if m.field == RATIONAL:
        return [list(r) for r in m.entries], Fraction(1), Fraction(1)
    rows = []
    scale = ONE
    for r in m.entries:
        lcm = ONE
        for v in r:
            if v.den != ONE:
                lcm = (lcm * v.den).exact_div(poly_gcd(lcm, v.den))
        rows.append([v.num * lcm.exact_div(v.den) for v in r])
        scale = scale * lcm
    return rows, scale, ONE


def _exact_div(a, b):
    if isinstance(a, DeltaPoly):
        return a.exact_div(b)
    return a / b


def _bareiss(rows: list[list], one) -> tuple[list[list], int, int]:
    """Fraction-free forward elimination in place.

    Pivots are the first nonzero entry (top to bottom) of each column in turn.
    Returns the reduced rows, the rank and the sign of the row permutation.
    """
    n = len(rows)
    m = len(rows[0]) if rows else 0
    prev = one
    r = 0
    sign = 1
    for c in range(m):
        if r == n:
            break
        p = next((i for i in range(r, n) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
            sign = -sign
        piv = rows[r][c]
        for i in range(r + 1, n):
            lead = rows[i][c]
            for j in range(c + 1, m):
                rows[i][j] = _exact_div(piv * rows[i][j] - lead * rows[r][j], prev)
            rows[i][c] = rows[i][c] * 0
        prev = piv
        r += 1
    return rows, r, sign


def matrix_rank(m: ExactMatrix) -> int:
    """Exact rank via Bareiss elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    rows, _, one = _ring_rows(m)
    _, rank, _ = _bareiss(rows, one)
    return rank


def matrix_det(m: ExactMatrix):
    """Exact determinant: a Fraction over Q, a DeltaRational over Q(d)."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1) if m.field == RATIONAL else DeltaRational(ONE)
    rows, scale, one = _ring_rows(m)
    rows, rank, sign = _bareiss(rows, one)
    if rank < n:
        return Fraction(0) if m.field == RATIONAL else DeltaRational(ZERO)
    det = rows[n - 1][n - 1] * sign
    if m.field == RATIONAL:
        return det
    return DeltaRational(det, scale)


def rref(m: ExactMatrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over the field; returns (rows, pivot columns)."""
    rows = [list(r) for r in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        p = next((i for i in range(r, m.rows) if rows[i][c]), None)
        if p is None:
            continue
        rows[p], rows[r] = rows[r], rows[p]
        inv = 1 / rows[r][c] if m.field == RATIONAL else DeltaRational(ONE) / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return rows, pivots


def matrix_nullspace(m: ExactMatrix) -> list[list]:
    """Basis of the right nullspace, one vector per non-pivot column."""
    rows, pivots = rref(m)
    one = Fraction(1) if m.field == RATIONAL else DeltaRational(ONE)
    zero = one * 0
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * m.cols
        v[f] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(v)
    return basis


def field_zero(field: str):
    return Fraction(0) if field == RATIONAL else DeltaRational(ZERO)


def field_one(field: str):
    return Fraction(1) if field == RATIONAL else DeltaRational(ONE)


def coerce_scalar(value, field: str):
    """Bring a Fraction/DeltaPoly/DeltaRational into the given field."""
    if field == RATIONAL:
        if isinstance(value, (DeltaPoly, DeltaRational)):
            raise TypeError("cannot use a d-dependent value over Q without specialising")
        return as_fraction(value)
    return DeltaRational.coerce(value)


def specialise(value, delta0):
    """Evaluate a scalar at ``d = delta0``; ``delta0=None`` keeps it generic."""
    if delta0 is None:
        return DeltaRational.coerce(value)
    if isinstance(value, DeltaPoly):
        return poly_eval(value, delta0)
    if isinstance(value, DeltaRational):
        return value.evaluate(delta0)
    return as_fraction(value)


class Span:
    """An echelon basis of a subspace of K^n, for exact membership tests.

    ``field`` is ``"rational"`` or ``"delta"``. Vectors are dense lists.
    """

    def __init__(self, dim: int, field: str, vectors: Iterable[Sequence] = ()):
        self.dim = dim
        self.field = field
        self._rows: list[list] = []
        self._pivots: list[int] = []
        for v in vectors:
            self.add(v)

    def _reduce(self, v: Sequence) -> list:
        v = [coerce_scalar(x, self.field) for x in v]
        if len(v) != self.dim:
            raise DimensionError(f"vector of length {len(v)} in a span of K^{self.dim}")
        for row, pc in zip(self._rows, self._pivots):
            f = v[pc]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, v: Sequence) -> bool:
        """Insert v; returns True when it enlarged the span."""
        v = self._reduce(v)
        pc = next((i for i, x in enumerate(v) if x), None)
        if pc is None:
            return False
        inv = field_one(self.field) / v[pc]
        v = [x * inv for x in v]
        for k, row in enumerate(self._rows):
            f = row[pc]
            if f:
                self._rows[k] = [a - f * b for a, b in zip(row, v)]
        self._rows.append(v)
        self._pivots.append(pc)
        return True

    def contains(self, v: Sequence) -> bool:
        return not any(self._reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def basis(self) -> list[list]:
        return [list(r) for r in self._rows]

    def contains_span(self, other: Span) -> bool:
        return all(self.contains(v) for v in other.basis())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Span):
            return NotImplemented
        return self.dim == other.dim and self.rank == other.rank and self.contains_span(other)
