"""Exact polynomial arithmetic in the bigraded ring K[x_1..x_m, y_1..y_n].

The x variables carry degree (1,0) and the y variables degree (0,1).  The
x-subring plays the role of coefficient ring for every module this library
produces, so polynomials supported only on x exponents double as its
elements.  Monomials are plain exponent tuples of length m+n; the order is
graded reverse lexicographic with the x block before the y block.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotBihomogeneous, ParseError, ZeroPolynomial


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """A prime field F_p, or the rationals when characteristic is 0."""

    def __init__(self, characteristic=32003):
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {characteristic}")
        self.characteristic = characteristic

    def __call__(self, value):
        if self.characteristic:
            return int(value) % self.characteristic
        return Fraction(value)

    def add(self, a, b):
        if self.characteristic:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a, b):
        if self.characteristic:
            return (a - b) % self.characteristic
        return a - b

    def mul(self, a, b):
        if self.characteristic:
            return (a * b) % self.characteristic
        return a * b

    def neg(self, a):
        if self.characteristic:
            return (-a) % self.characteristic
        return -a

    def inv(self, a):
        if self.characteristic:
            if a % self.characteristic == 0:
                raise ZeroDivisionError("inverse of zero residue")
            return pow(a, -1, self.characteristic)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __eq__(self, other):
        return isinstance(other, Field) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        if self.characteristic:
            return f"Field(p={self.characteristic})"
        return "Field(QQ)"


# ---------------------------------------------------------------------------
# monomials: exponent tuples of length m + n, x block first

def mono_mul(u, v):
    return tuple(a + b for a, b in zip(u, v))


def mono_divides(u, v):
    """True when u divides v."""
    return all(a <= b for a, b in zip(u, v))


def mono_div(u, v):
    """u / v, or None when v does not divide u."""
    w = tuple(a - b for a, b in zip(u, v))
    if any(e < 0 for e in w):
        return None
    return w


def mono_lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_key(u):
    """Sort key realizing grevlex: higher key means larger monomial."""
    return (sum(u), tuple(-e for e in reversed(u)))


class PolyRing:
    """The ring K[x_1..x_m, y_1..y_n] with its grevlex order."""

    def __init__(self, m, n, field=None):
        if m < 1 or n < 0:
            raise ValueError("need m >= 1 and n >= 0")
        self.m = m
        self.n = n
        self.field = field if field is not None else Field()
        self.nvars = m + n
        self._zero_mono = (0,) * self.nvars

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and (self.m, self.n, self.field) == (other.m, other.n, other.field)
        )

    def __hash__(self):
        return hash((self.m, self.n, self.field))

    def __repr__(self):
        return f"PolyRing(m={self.m}, n={self.n}, p={self.field.characteristic})"

    def var_name(self, index):
        if index < self.m:
            return f"x{index + 1}"
        return f"y{index - self.m + 1}"

    def var_index(self, name):
        kind, num = name[0], name[1:]
        if not num.isdigit():
            raise KeyError(name)
        k = int(num)
        if kind == "x" and 1 <= k <= self.m:
            return k - 1
        if kind == "y" and 1 <= k <= self.n:
            return self.m + k - 1
        raise KeyError(name)

    def poly(self, term_dict):
        """Build a canonical polynomial from {exponent tuple: coefficient}."""
        fld = self.field
        terms = []
        for mono, coeff in term_dict.items():
            c = fld(coeff)
            if c != 0:
                terms.append((mono, c))
        terms.sort(key=lambda t: mono_key(t[0]), reverse=True)
        return Poly(self, tuple(terms))

    def zero(self):
        return Poly(self, ())

    def one(self):
        return self.poly({self._zero_mono: 1})

    def constant(self, c):
        return self.poly({self._zero_mono: c})

    def variable(self, index):
        exps = [0] * self.nvars
        exps[index] = 1
        return self.poly({tuple(exps): 1})

    def x(self, k):
        """The variable x_k (1-based)."""
        return self.variable(k - 1)

    def y(self, k):
        """The variable y_k (1-based)."""
        return self.variable(self.m + k - 1)

    def monomial(self, exps, coeff=1):
        return self.poly({tuple(exps): coeff})

    def x_monomials(self, degree):
        """All x-block exponent tuples of the given total degree, descending."""
        out = [m + (0,) * self.n for m in _compositions(degree, self.m)]
        out.sort(key=mono_key, reverse=True)
        return out

    def y_monomials(self, degree):
        out = [(0,) * self.m + c for c in _compositions(degree, self.n)]
        out.sort(key=mono_key, reverse=True)
        return out


def _compositions(total, parts):
    """All tuples of `parts` naturals summing to `total`."""
    if total < 0:
        return []
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


class Poly:
    """Sparse polynomial; terms are kept sorted descending in grevlex."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def lead_term(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no lead term")
        return self.terms[0]

    def lead_mono(self):
        return self.lead_term()[0]

    def lead_coeff(self):
        return self.lead_term()[1]

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        acc = dict(self.terms)
        fld = self.ring.field
        for mono, c in other.terms:
            s = fld.add(acc.get(mono, 0), c)
            if s == 0:
                acc.pop(mono, None)
            else:
                acc[mono] = s
        return self.ring.poly(acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        fld = self.ring.field
        return Poly(self.ring, tuple((m, fld.neg(c)) for m, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        fld = self.ring.field
        acc = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                s = fld.add(acc.get(m, 0), fld.mul(c1, c2))
                if s == 0:
                    acc.pop(m, None)
                else:
                    acc[m] = s
        return self.ring.poly(acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative exponent")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c):
        fld = self.ring.field
        cc = fld(c)
        if cc == 0:
            return self.ring.zero()
        return Poly(self.ring, tuple((m, fld.mul(coef, cc)) for m, coef in self.terms))

    def term_mul(self, mono, coeff=1):
        """Multiply by a single term coeff * x^mono."""
        fld = self.ring.field
        cc = fld(coeff)
        if cc == 0:
            return self.ring.zero()
        return Poly(
            self.ring,
            tuple((mono_mul(m, mono), fld.mul(c, cc)) for m, c in self.terms),
        )

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff()))

    def total_degree(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return max(sum(m) for m, _ in self.terms)

    def is_constant(self):
        return len(self.terms) == 1 and self.terms[0][0] == self.ring._zero_mono

    def is_term(self):
        return len(self.terms) == 1

    def is_x_only(self):
        m = self.ring.m
        return all(all(e == 0 for e in mono[m:]) for mono, _ in self.terms)

    def __str__(self):
        return poly_str(self)

    def __repr__(self):
        return f"<{poly_str(self)}>"


def bidegree_of(f):
    """The (x-degree, y-degree) of a bihomogeneous polynomial."""
    if f.is_zero():
        raise ZeroPolynomial("bidegree of the zero polynomial is undefined")
    m = f.ring.m
    degs = {(sum(mono[:m]), sum(mono[m:])) for mono, _ in f.terms}
    if len(degs) > 1:
        raise NotBihomogeneous(f"terms of mixed bidegrees {sorted(degs)}")
    return degs.pop()


def x_degree_of(f):
    """Total degree of a homogeneous polynomial in the x-subring."""
    a, b = bidegree_of(f)
    if b != 0:
        raise NotBihomogeneous("polynomial involves y variables")
    return a


def specialize(f, var, value):
    """Substitute a field constant for one variable and recanonicalize."""
    ring = f.ring
    idx = ring.var_index(var) if isinstance(var, str) else var
    val = ring.field(value)
    acc = {}
    fld = ring.field
    for mono, c in f.terms:
        e = mono[idx]
        if e:
            c = fld.mul(c, val**e) if fld.characteristic == 0 else fld.mul(c, pow(val, e, fld.characteristic))
            mono = mono[:idx] + (0,) + mono[idx + 1 :]
        if c == 0:
            continue
        s = fld.add(acc.get(mono, 0), c)
        if s == 0:
            acc.pop(mono, None)
        else:
            acc[mono] = s
    return ring.poly(acc)


def content_coefficients(f):
    """Split a bihomogeneous f into (y-monomial, x-coefficient) pairs.

    The returned x-polynomials generate the content of f; summing
    coefficient * y-monomial over all pairs recovers f.
    """
    bidegree_of(f)  # raises on inhomogeneous or zero input
    ring = f.ring
    m = ring.m
    groups = {}
    for mono, c in f.terms:
        ymono = (0,) * m + mono[m:]
        xmono = mono[:m] + (0,) * ring.n
        groups.setdefault(ymono, {})[xmono] = c
    out = [(y, ring.poly(d)) for y, d in groups.items()]
    out.sort(key=lambda pair: mono_key(pair[0]), reverse=True)
    return out


# ---------------------------------------------------------------------------
# printing and parsing

def _coeff_str(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c) if not isinstance(c, Fraction) else c.numerator)


def poly_str(f):
    if f.is_zero():
        return "0"
    ring = f.ring
    parts = []
    for mono, c in f.terms:
        factors = []
        for i, e in enumerate(mono):
            if e == 1:
                factors.append(ring.var_name(i))
            elif e > 1:
                factors.append(f"{ring.var_name(i)}^{e}")
        if not factors:
            parts.append(_coeff_str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append("*".join([_coeff_str(c)] + factors))
    return " + ".join(parts)


class _Tokenizer:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.text):
            return None, self.pos
        ch = self.text[self.pos]
        if ch.isdigit():
            end = self.pos
            while end < len(self.text) and self.text[end].isdigit():
                end += 1
            return self.text[self.pos : end], self.pos
        if ch in "xy":
            end = self.pos + 1
            while end < len(self.text) and self.text[end].isdigit():
                end += 1
            if end == self.pos + 1:
                raise ParseError(f"variable '{ch}' needs an index", self.pos)
            return self.text[self.pos : end], self.pos
        if ch in "+-*^()/":
            return ch, self.pos
        raise ParseError(f"unexpected character {ch!r}", self.pos)

    def next(self):
        tok, pos = self.peek()
        if tok is not None:
            self.pos = pos + len(tok)
        return tok, pos


def parse_poly(text, ring):
    """Parse ASCII polynomial text into a canonical Poly.

    Grammar: integers, variables x<k>/y<k>, operators + - * ^ and
    parentheses.  A '/' directly after an integer gives a rational
    coefficient (characteristic-zero fields only).
    """
    tz = _Tokenizer(text)
    poly = _parse_sum(tz, ring)
    tok, pos = tz.peek()
    if tok is not None:
        raise ParseError(f"unexpected token {tok!r}", pos)
    return poly


def _parse_sum(tz, ring):
    tok, _ = tz.peek()
    negate = False
    if tok in ("+", "-"):
        tz.next()
        negate = tok == "-"
    acc = _parse_product(tz, ring)
    if negate:
        acc = -acc
    while True:
        tok, _ = tz.peek()
        if tok not in ("+", "-"):
            return acc
        tz.next()
        term = _parse_product(tz, ring)
        acc = acc - term if tok == "-" else acc + term


def _parse_product(tz, ring):
    acc = _parse_power(tz, ring)
    while True:
        tok, _ = tz.peek()
        if tok != "*":
            return acc
        tz.next()
        acc = acc * _parse_power(tz, ring)


def _parse_power(tz, ring):
    base = _parse_atom(tz, ring)
    tok, _ = tz.peek()
    if tok == "^":
        tz.next()
        tok, pos = tz.next()
        if tok is None or not tok.isdigit():
            raise ParseError("exponent must be a nonnegative integer", pos)
        return base ** int(tok)
    return base


def _parse_atom(tz, ring):
    tok, pos = tz.next()
    if tok is None:
        raise ParseError("unexpected end of input", pos)
    if tok == "(":
        inner = _parse_sum(tz, ring)
        tok, pos = tz.next()
        if tok != ")":
            raise ParseError("expected ')'", pos)
        return inner
    if tok.isdigit():
        value = int(tok)
        nxt, _ = tz.peek()
        if nxt == "/":
            tz.next()
            den_tok, den_pos = tz.next()
            if den_tok is None or not den_tok.isdigit():
                raise ParseError("expected integer denominator", den_pos)
            if ring.field.characteristic != 0:
                raise ParseError("rational coefficients need characteristic 0", pos)
            return ring.constant(Fraction(value, int(den_tok)))
        return ring.constant(value)
    if tok[0] in "xy":
        try:
            idx = ring.var_index(tok)
        except KeyError:
            raise ParseError(f"unknown variable {tok!r}", pos) from None
        return ring.variable(idx)
    raise ParseError(f"unexpected token {tok!r}", pos)
