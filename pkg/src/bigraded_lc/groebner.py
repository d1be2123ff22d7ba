"""Buchberger engine for ideals and submodules of free modules.

Free-module elements are vectors of polynomials compared position over
term: a term at a lower position index beats any term at a higher one,
ties broken by the ring's grevlex order.  Ideals are the rank-one case.
Syzygies are computed by the elimination embedding: the columns are
paired with fresh unit positions ranked below the ambient ones, and the
Groebner basis elements supported entirely on the fresh block cut out
the syzygy module.
"""

from __future__ import annotations

from .errors import NotBihomogeneous
from .rings import (
    Poly,
    bidegree_of,
    mono_div,
    mono_divides,
    mono_key,
    mono_lcm,
    mono_mul,
    x_degree_of,
)


class Vec:
    """Element of a free module, stored as {position: nonzero Poly}."""

    __slots__ = ("ring", "rank", "entries")

    def __init__(self, ring, rank, entries):
        self.ring = ring
        self.rank = rank
        self.entries = {p: f for p, f in entries.items() if not f.is_zero()}

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, Vec)
            and self.rank == other.rank
            and self.entries == other.entries
        )

    def lead(self):
        """(position, monomial, coefficient) of the largest term."""
        pos = min(self.entries)
        mono, coeff = self.entries[pos].lead_term()
        return pos, mono, coeff

    def scale(self, c):
        return Vec(self.ring, self.rank, {p: f.scale(c) for p, f in self.entries.items()})

    def monic(self):
        if self.is_zero():
            return self
        _, _, c = self.lead()
        return self.scale(self.ring.field.inv(c))

    def term_mul(self, mono, coeff=1):
        return Vec(
            self.ring,
            self.rank,
            {p: f.term_mul(mono, coeff) for p, f in self.entries.items()},
        )

    def sub(self, other):
        entries = dict(self.entries)
        for p, f in other.entries.items():
            g = entries.get(p)
            h = f.__neg__() if g is None else g - f
            if h.is_zero():
                entries.pop(p, None)
            else:
                entries[p] = h
        return Vec(self.ring, self.rank, entries)

    def add(self, other):
        return self.sub(other.scale(-1))

    def poly_mul(self, f):
        return Vec(self.ring, self.rank, {p: g * f for p, g in self.entries.items()})

    def __repr__(self):
        inner = ", ".join(f"e{p}: {f}" for p, f in sorted(self.entries.items()))
        return f"Vec({inner})"


def poly_to_vec(f):
    return Vec(f.ring, 1, {0: f})


def vec_to_poly(v):
    assert v.rank == 1
    return v.entries.get(0, v.ring.zero())


def _lead_key(v):
    pos, mono, _ = v.lead()
    return (-pos,) + mono_key(mono)


def _sort_terms(v):
    """All (position, monomial) pairs of v, largest first."""
    out = []
    for p, f in v.entries.items():
        for mono, coeff in f.terms:
            out.append((p, mono, coeff))
    out.sort(key=lambda t: ((-t[0],) + mono_key(t[1])), reverse=True)
    return out


def normal_form_vec(v, basis):
    """Fully reduce v so no term is divisible by a basis lead term."""
    if v.is_zero() or not basis:
        return v
    fld = v.ring.field
    leads = [(g.lead(), g) for g in basis]
    result = v
    progress = True
    while progress and not result.is_zero():
        progress = False
        for pos, mono, coeff in _sort_terms(result):
            for (gpos, gmono, gcoeff), g in leads:
                if gpos != pos:
                    continue
                q = mono_div(mono, gmono)
                if q is None:
                    continue
                factor = fld.div(coeff, gcoeff)
                result = result.sub(g.term_mul(q, factor))
                progress = True
                break
            if progress:
                break
    return result


def normal_form(f, basis):
    """Normal form; accepts polynomials or vectors plus a matching basis."""
    if isinstance(f, Poly):
        vb = [poly_to_vec(g) if isinstance(g, Poly) else g for g in basis]
        return vec_to_poly(normal_form_vec(poly_to_vec(f), vb))
    return normal_form_vec(f, basis)


def _lead_reduce(v, basis_leads):
    """Reduce only at the lead term until it is irreducible (or v is 0)."""
    fld = v.ring.field
    while not v.is_zero():
        pos, mono, coeff = v.lead()
        hit = None
        for (gpos, gmono, gcoeff), g in basis_leads:
            if gpos == pos:
                q = mono_div(mono, gmono)
                if q is not None:
                    hit = (q, fld.div(coeff, gcoeff), g)
                    break
        if hit is None:
            return v
        q, factor, g = hit
        v = v.sub(g.term_mul(q, factor))
    return v


def buchberger_vec(gens):
    """Reduced Groebner basis of the submodule generated by gens."""
    basis = []
    for g in gens:
        if isinstance(g, Poly):
            g = poly_to_vec(g)
        if not g.is_zero():
            basis.append(g.monic())
    if not basis:
        return []
    ring = basis[0].ring
    fld = ring.field

    pending = set()
    done = set()
    for i in range(len(basis)):
        for j in range(i):
            if basis[i].lead()[0] == basis[j].lead()[0]:
                pending.add((j, i))

    def pair_lcm(i, j):
        _, mi, _ = basis[i].lead()
        _, mj, _ = basis[j].lead()
        return mono_lcm(mi, mj)

    while pending:
        i, j = min(pending, key=lambda p: (mono_key(pair_lcm(*p)), p))
        pending.discard((i, j))
        done.add((i, j))
        pos, mi, _ = basis[i].lead()
        _, mj, _ = basis[j].lead()
        lcm = mono_lcm(mi, mj)

        # product criterion, valid when both elements live in one position
        if (
            mono_mul(mi, mj) == lcm
            and set(basis[i].entries) == {pos}
            and set(basis[j].entries) == {pos}
        ):
            continue
        # chain criterion: a third lead divides the lcm and both side pairs
        # were already treated
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            kpos, kmono, _ = basis[k].lead()
            if kpos != pos or not mono_divides(kmono, lcm):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik in done and pjk in done:
                skip = True
                break
        if skip:
            continue

        s = basis[i].term_mul(mono_div(lcm, mi)).sub(basis[j].term_mul(mono_div(lcm, mj)))
        leads = [(g.lead(), g) for g in basis]
        r = _lead_reduce(s, leads)
        if r.is_zero():
            continue
        r = r.monic()
        k = len(basis)
        basis.append(r)
        rpos = r.lead()[0]
        for idx in range(k):
            if basis[idx].lead()[0] == rpos:
                pending.add((idx, k))

    return _interreduce(basis)


def _interreduce(basis):
    # drop elements whose lead is divisible by another lead
    keep = []
    for i, g in enumerate(basis):
        pos, mono, _ = g.lead()
        redundant = False
        for j, h in enumerate(basis):
            if i == j:
                continue
            hpos, hmono, _ = h.lead()
            if hpos == pos and mono_divides(hmono, mono):
                if hmono != mono or j < i:
                    redundant = True
                    break
        if not redundant:
            keep.append(g)
    # tail-reduce each survivor against the others
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        r = normal_form_vec(g, others)
        if not r.is_zero():
            reduced.append(r.monic())
    reduced.sort(key=_lead_key)
    return reduced


def buchberger(gens):
    """Reduced Groebner basis; polynomial input gives polynomial output."""
    if gens and all(isinstance(g, Poly) for g in gens):
        return [vec_to_poly(v) for v in buchberger_vec(gens)]
    return buchberger_vec(gens)


def spoly_reductions_vanish(basis):
    """Self-check: every S-vector of the basis reduces to zero."""
    vb = [poly_to_vec(g) if isinstance(g, Poly) else g for g in basis]
    for i in range(len(vb)):
        for j in range(i):
            pos_i, mi, _ = vb[i].lead()
            pos_j, mj, _ = vb[j].lead()
            if pos_i != pos_j:
                continue
            lcm = mono_lcm(mi, mj)
            s = vb[i].term_mul(mono_div(lcm, mi)).sub(vb[j].term_mul(mono_div(lcm, mj)))
            if not normal_form_vec(s, vb).is_zero():
                return False
    return True


def syzygy_basis(columns, rank):
    """Generators of the kernel of the map defined by the given columns.

    Each returned vector has one coordinate per input column; the map
    sends the k-th unit vector to columns[k] inside the rank-`rank`
    ambient free module.
    """
    cols = [poly_to_vec(c) if isinstance(c, Poly) else c for c in columns]
    if not cols:
        return []
    ring = cols[0].ring
    k = len(cols)
    embedded = []
    for idx, c in enumerate(cols):
        entries = dict(c.entries)
        entries[rank + idx] = ring.one()
        embedded.append(Vec(ring, rank + k, entries))
    gb = buchberger_vec(embedded)
    out = []
    for g in gb:
        if g.lead()[0] >= rank:
            out.append(Vec(ring, k, {p - rank: f for p, f in g.entries.items()}))
    return out


def vec_degree(v, position_degrees):
    """Degree of a homogeneous vector over the x-subring."""
    degs = set()
    for p, f in v.entries.items():
        if not f.is_x_only():
            raise NotBihomogeneous("entry involves y variables")
        for mono, _ in f.terms:
            degs.add(sum(mono) + position_degrees[p])
    if len(degs) != 1:
        raise NotBihomogeneous(f"vector not homogeneous: degrees {sorted(degs)}")
    return degs.pop()


def vec_bidegree(v, position_bidegrees):
    """Bidegree of a bihomogeneous vector over the full ring."""
    degs = set()
    for p, f in v.entries.items():
        a, b = bidegree_of(f)
        pa, pb = position_bidegrees[p]
        degs.add((a + pa, b + pb))
    if len(degs) != 1:
        raise NotBihomogeneous(f"vector not bihomogeneous: bidegrees {sorted(degs)}")
    return degs.pop()


class Ideal:
    """An ideal with a lazily computed reduced Groebner basis."""

    def __init__(self, ring, gens):
        self.ring = ring
        self.gens = [g for g in gens if not g.is_zero()]
        self._gb = None

    @property
    def groebner(self):
        if self._gb is None:
            self._gb = buchberger(self.gens)
        return self._gb

    def contains(self, f):
        return normal_form(f, self.groebner).is_zero()

    def is_unit(self):
        gb = self.groebner
        return len(gb) == 1 and gb[0].is_constant()

    def __eq__(self, other):
        if not isinstance(other, Ideal) or self.ring != other.ring:
            return NotImplemented
        return self.groebner == other.groebner

    def __hash__(self):
        return hash((self.ring, tuple(self.groebner)))

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.gens)
        return f"Ideal({inner})"


def ideal_power(ideal, k):
    """The ideal generated by all k-fold products of the generators."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    ring = ideal.ring
    if k == 0:
        return Ideal(ring, [ring.one()])
    products = [ring.one()]
    for _ in range(k):
        nxt = []
        seen = set()
        for p in products:
            for g in ideal.gens:
                q = p * g
                if q.terms not in seen:
                    seen.add(q.terms)
                    nxt.append(q)
        products = nxt
    return Ideal(ring, products)


def exact_divide(f, g):
    """The quotient f / g, assuming g divides f exactly."""
    ring = f.ring
    fld = ring.field
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    quo = ring.zero()
    rem = f
    gmono, gcoeff = g.lead_term()
    while not rem.is_zero():
        mono, coeff = rem.lead_term()
        q = mono_div(mono, gmono)
        if q is None:
            raise ValueError("division is not exact")
        c = fld.div(coeff, gcoeff)
        t = ring.poly({q: c})
        quo = quo + t
        rem = rem - t * g
    return quo


def pair_gcd(f1, f2):
    """Monic gcd of two polynomials in the x-subring via syzygies.

    The kernel of [f1 f2] is free of rank one, generated in minimal
    degree by (f2/g, -f1/g); dividing recovers g.
    """
    if f1.is_zero():
        return f2.monic()
    if f2.is_zero():
        return f1.monic()
    syz = syzygy_basis([f1, f2], 1)
    degs = [vec_degree(v, [x_degree_of(f1), x_degree_of(f2)]) for v in syz]
    v = syz[min(range(len(syz)), key=lambda i: degs[i])]
    cof = v.entries.get(0)
    if cof is None:
        # first coordinate zero would force f2 = 0, handled above
        raise ValueError("unexpected syzygy shape")
    return exact_divide(f2, cof).monic()
