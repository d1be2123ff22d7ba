"""Deterministic input families for sweeps and the verification corpus.

Everything is driven by an explicit random.Random seed so repeated runs
produce byte-identical reports.  Sizes are capped at desk scale: the
verification theorems quantify over classes of ideals, and a couple of
dozen seeded samples per class is what the acceptance gate runs.
"""

from __future__ import annotations

import random

from .cohomology import BigradedIdeal
from .groebner import Vec
from .presentations import GradedPresentation
from .rings import Field, PolyRing, _compositions


DEFAULT_SEED = 7321


def _random_x_form(rng, ring, degree):
    """Random nonzero homogeneous polynomial in the x variables."""
    monos = ring.x_monomials(degree)
    p = ring.field.characteristic
    while True:
        terms = {}
        for u in monos:
            if rng.random() < 0.6:
                c = rng.randrange(1, p) if p else rng.randrange(-9, 10) or 1
                terms[u] = c
        f = ring.poly(terms)
        if not f.is_zero():
            return f


def random_bihomogeneous(rng, ring, a, b):
    """Random nonzero bihomogeneous polynomial of bidegree (a, b)."""
    ymonos = ring.y_monomials(b)
    acc = {}
    chosen = [v for v in ymonos if rng.random() < 0.7] or [rng.choice(ymonos)]
    for v in chosen:
        coeff = _random_x_form(rng, ring, a)
        for u, c in coeff.terms:
            mono = tuple(e1 + e2 for e1, e2 in zip(u, v))
            acc[mono] = acc.get(mono, 0) + c
    f = ring.poly(acc)
    if f.is_zero():
        return random_bihomogeneous(rng, ring, a, b)
    return f


def random_bigraded_ideal(rng, m, n, r, max_bidegree=(2, 2), p=32003):
    ring = PolyRing(m, n, Field(p))
    gens = []
    for _ in range(r):
        a = rng.randint(1, max_bidegree[0])
        b = rng.randint(1, max_bidegree[1])
        gens.append(random_bihomogeneous(rng, ring, a, b))
    return BigradedIdeal(ring, gens)


def random_monomial_bigraded_ideal(rng, m, n, r, max_bidegree=(2, 2), p=32003):
    ring = PolyRing(m, n, Field(p))
    gens = []
    seen = set()
    for _ in range(r):
        a = rng.randint(1, max_bidegree[0])
        b = rng.randint(1, max_bidegree[1])
        u = rng.choice(_compositions(a, m))
        v = rng.choice(_compositions(b, n))
        mono = u + v
        if mono in seen:
            continue
        seen.add(mono)
        gens.append(ring.monomial(mono))
    if not gens:
        return random_monomial_bigraded_ideal(rng, m, n, r, max_bidegree, p)
    return BigradedIdeal(ring, gens)


def regular_sequence_hypersurface(d, n, p=32003):
    """f = sum_i x_i^d y_i inside K[x_1..x_n, y_1..y_n]."""
    ring = PolyRing(n, n, Field(p))
    f = ring.zero()
    for i in range(1, n + 1):
        f = f + ring.x(i) ** d * ring.y(i)
    return BigradedIdeal(ring, [f])


def two_summands_ideal(ring, f1, f2):
    """f = f1 y1 + f2 y2 for x-forms f1, f2 of a common degree."""
    f = f1 * ring.y(1) + f2 * ring.y(2)
    return BigradedIdeal(ring, [f])


def random_monomial_presentation(rng, m, p=32003):
    """Random fine-graded presentation with term entries and shifts in N^m.

    Generators get random small multidegree vectors; each relation picks
    a target multidegree above some generators and a sparse set of
    monomial entries realizing it.
    """
    ring = PolyRing(m, 1, Field(p))
    nrows = rng.randint(1, 3)
    rowvecs = []
    for _ in range(nrows):
        rowvecs.append(tuple(rng.randint(0, 1) for _ in range(m)))
    ncols = rng.randint(1, 4)
    columns = []
    col_multi = []
    for _ in range(ncols):
        target = tuple(v + rng.randint(0, 2) for v in rng.choice(rowvecs))
        entries = {}
        for ridx, rv in enumerate(rowvecs):
            delta = tuple(a - b for a, b in zip(target, rv))
            if any(e < 0 for e in delta):
                continue
            if rng.random() < 0.7:
                coeff = rng.randrange(1, p)
                entries[ridx] = ring.monomial(delta + (0,), coeff)
        if not entries:
            continue
        columns.append(Vec(ring, nrows, entries))
        col_multi.append(target)
    row_degrees = [sum(v) for v in rowvecs]
    col_degrees = [sum(v) for v in col_multi]
    return GradedPresentation(
        ring, row_degrees, columns, col_degrees=col_degrees, row_multidegrees=rowvecs
    )


# -- the seeded acceptance corpus ---------------------------------------

_CORPUS_SHAPES = [
    # (m, n, r, (amax, bmax)); n = 3 entries kept lean so the Koszul
    # oracle's dense pieces stay small
    (2, 2, 1, (2, 2)),
    (2, 2, 2, (2, 2)),
    (2, 2, 3, (2, 2)),
    (2, 2, 2, (2, 2)),
    (2, 2, 3, (1, 2)),
    (2, 2, 1, (2, 1)),
    (3, 2, 2, (2, 2)),
    (3, 2, 3, (2, 2)),
    (3, 2, 1, (2, 2)),
    (3, 2, 2, (1, 1)),
    (1, 2, 2, (2, 2)),
    (1, 2, 3, (2, 2)),
    (2, 3, 2, (1, 1)),
    (2, 3, 1, (2, 1)),
    (2, 3, 2, (2, 1)),
    (1, 3, 2, (2, 2)),
    (3, 3, 1, (1, 1)),
    (3, 3, 2, (1, 1)),
    (2, 2, 3, (2, 2)),
    (2, 2, 2, (2, 1)),
]


def corpus_bigraded(seed=DEFAULT_SEED, count=None):
    """Seeded random bigraded ideals with m, n <= 3, r <= 3, bidegrees <= (2,2)."""
    rng = random.Random(seed)
    shapes = _CORPUS_SHAPES if count is None else _CORPUS_SHAPES[:count]
    return [
        random_bigraded_ideal(rng, m, n, r, max_bidegree=mb)
        for m, n, r, mb in shapes
    ]


_MONOMIAL_SHAPES = [
    (2, 2, 2, (2, 2)),
    (2, 2, 3, (2, 2)),
    (3, 2, 2, (2, 2)),
    (2, 3, 2, (2, 1)),
]


def corpus_monomial(seed=DEFAULT_SEED):
    """Seeded monomial bigraded ideals for the boundedness sweeps."""
    rng = random.Random(seed + 1)
    return [
        random_monomial_bigraded_ideal(rng, m, n, r, max_bidegree=mb)
        for m, n, r, mb in _MONOMIAL_SHAPES
    ]


def corpus_monomial_presentations(seed=DEFAULT_SEED, count=20):
    """Seeded fine-graded monomial presentations with m <= 4."""
    rng = random.Random(seed + 2)
    out = []
    while len(out) < count:
        m = rng.randint(1, 4)
        pres = random_monomial_presentation(rng, m)
        if pres.ncols:
            out.append(pres)
    return out


def corpus_regsum_pairs(seed=DEFAULT_SEED, count=10):
    """Seeded (g, h) pairs: h a regular-sequence form, g an x-form."""
    rng = random.Random(seed + 3)
    pairs = []
    for _ in range(count):
        n = 2
        d = rng.randint(1, 2)
        ring = PolyRing(n, n, Field(32003))
        h = ring.zero()
        for i in range(1, n + 1):
            h = h + ring.x(i) ** d * ring.y(i)
        g = _random_x_form(rng, ring, rng.randint(1, 2))
        pairs.append((g, h))
    return pairs
