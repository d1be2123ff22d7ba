"""Hilbert series and Krull dimension of graded quotients over the x-subring.

The series of a presented module is read off the lead-term module of a
Groebner basis of its relation columns; the numerator of a monomial
quotient comes from the usual pivot-splitting recursion.  This keeps the
series computation independent of the resolution code, which makes the
Betti alternating-sum identity a genuine cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .groebner import Ideal, buchberger_vec, poly_to_vec
from .rings import Poly


def _laurent_add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s == 0:
            out.pop(e, None)
        else:
            out[e] = s
    return out


def _laurent_scale_shift(a, shift, factor=1):
    return {e + shift: c * factor for e, c in a.items()}


def _laurent_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            s = out.get(e, 0) + c1 * c2
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
    return out


def _divide_by_one_minus_t(a):
    """Quotient a / (1 - t), valid exactly when a(1) == 0."""
    if not a:
        return {}
    lo = min(a)
    hi = max(a)
    out = {}
    acc = 0
    for e in range(lo, hi + 1):
        acc += a.get(e, 0)
        if acc:
            out[e] = acc
    return out


def _eval_at_one(a):
    return sum(a.values())


@lru_cache(maxsize=None)
def _monomial_numerator(gens):
    """Numerator of the series of S0 / (monomial ideal) over (1-t)^m.

    `gens` is a frozenset-like tuple of x-exponent tuples, already
    minimal.  Splitting along a pivot variable v uses
    N(I) = N(I + (v)) + t * N(I : v).
    """
    if not gens:
        return ((0, 1),)
    if any(sum(g) == 0 for g in gens):
        return ()
    # pure powers contribute a product of (1 - t^e) factors
    if all(sum(1 for e in g if e) == 1 for g in gens):
        numer = {0: 1}
        for g in gens:
            numer = _laurent_mul(numer, {0: 1, sum(g): -1})
        return tuple(sorted(numer.items()))
    nvars = len(gens[0])
    counts = [0] * nvars
    for g in gens:
        if sum(1 for e in g if e) > 1:
            for v in range(nvars):
                if g[v]:
                    counts[v] += 1
    pivot = max(range(nvars), key=lambda v: counts[v])
    plus = _minimalize_monomials(
        [g for g in gens if g[pivot] == 0]
        + [tuple(1 if v == pivot else 0 for v in range(nvars))]
    )
    colon = _minimalize_monomials(
        [tuple(max(e - 1, 0) if v == pivot else e for v, e in enumerate(g)) for g in gens]
    )
    n_plus = dict(_monomial_numerator(plus))
    n_colon = dict(_monomial_numerator(colon))
    total = _laurent_add(n_plus, _laurent_scale_shift(n_colon, 1))
    return tuple(sorted(total.items()))


def _minimalize_monomials(gens):
    """Drop monomials divisible by another; canonical sorted tuple."""
    uniq = sorted(set(gens))
    out = []
    for g in uniq:
        if not any(h != g and all(a <= b for a, b in zip(h, g)) for h in uniq):
            out.append(g)
    return tuple(out)


@dataclass(frozen=True)
class HilbertSeries:
    """Series Q(t) / (1-t)^pole_order with Q(1) != 0 (Q = 0 for the zero module)."""

    numerator: tuple  # sorted ((exponent, coefficient), ...)
    pole_order: int
    ambient_dim: int

    @property
    def dimension(self):
        if not self.numerator:
            return -1
        return self.pole_order

    def numerator_dict(self):
        return dict(self.numerator)

    def unreduced_numerator(self):
        """Numerator over the full (1-t)^ambient_dim denominator."""
        numer = self.numerator_dict()
        for _ in range(self.ambient_dim - self.pole_order):
            numer = _laurent_mul(numer, {0: 1, 1: -1})
        return numer

    def value(self, degree):
        """Coefficient of t^degree in the expanded series."""
        d = self.pole_order
        total = 0
        for e, c in self.numerator:
            k = degree - e
            if k < 0:
                continue
            if d == 0:
                if k == 0:
                    total += c
            else:
                total += c * math.comb(k + d - 1, d - 1)
        return total

    def values(self, degrees):
        return [self.value(d) for d in degrees]

    def is_zero(self):
        return not self.numerator

    def top_degree(self):
        """Largest degree with a nonzero value; only for finite length."""
        if self.pole_order != 0 or not self.numerator:
            raise ValueError("top degree needs a nonzero finite-length module")
        return max(e for e, _ in self.numerator)


def _reduce_numerator(numer, ambient_dim):
    pole = ambient_dim
    while numer and _eval_at_one(numer) == 0:
        numer = _divide_by_one_minus_t(numer)
        pole -= 1
    return HilbertSeries(tuple(sorted(numer.items())), pole, ambient_dim)


def _x_part(mono, m):
    return mono[:m]


def hilbert_series_of_ideal(ideal):
    """Series of S0 / I for an ideal of the x-subring."""
    ring = ideal.ring
    leads = [g.lead_mono() for g in ideal.groebner]
    gens = _minimalize_monomials([_x_part(u, ring.m) for u in leads])
    numer = dict(_monomial_numerator(gens))
    return _reduce_numerator(numer, ring.m)


def hilbert_series_of_columns(ring, row_degrees, columns):
    """Series of the cokernel of a column span inside a graded free module."""
    if not row_degrees:
        return HilbertSeries((), ring.m, ring.m)
    gb = buchberger_vec([c for c in columns if not c.is_zero()])
    per_row = {r: [] for r in range(len(row_degrees))}
    for g in gb:
        pos, mono, _ = g.lead()
        per_row[pos].append(_x_part(mono, ring.m))
    total = {}
    for r, deg in enumerate(row_degrees):
        gens = _minimalize_monomials(per_row[r])
        numer = dict(_monomial_numerator(gens))
        total = _laurent_add(total, _laurent_scale_shift(numer, deg))
    return _reduce_numerator(total, ring.m)


def hilbert_series(obj):
    """Series of an Ideal's quotient or of a presentation's cokernel."""
    if isinstance(obj, Ideal):
        return hilbert_series_of_ideal(obj)
    # duck-typed graded presentation
    return hilbert_series_of_columns(obj.ring, obj.row_degrees, obj.columns)


def krull_dimension(obj):
    """Pole order of the Hilbert series at t = 1; -1 for the zero module."""
    return hilbert_series(obj).dimension
