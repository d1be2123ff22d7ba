"""Graded components of local cohomology along the y-variable ideal.

The degree-j component of the top cohomology of S/I is finitely
presented over the x-subring: generators are indexed by dual exponents c
(n-tuples of naturals of weight -n-j), relations by pairs of an ideal
generator and a dual exponent of weight raised by that generator's
y-degree.  A generator g of y-degree b acts on dual exponents by
contraction: c maps to the sum over y-splittings g = sum g_beta y^beta
of g_beta at c - beta, whenever that difference stays componentwise
nonnegative.  Applying the same rule to every entry of a bigraded free
resolution of S/I gives a complex of free modules over the x-subring
whose homology at position n-s presents the s-th cohomology component.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

from .errors import HypothesisViolated, NotFound, NotMonomial, ZeroModule
from .groebner import Ideal, Vec, buchberger_vec, normal_form_vec, vec_bidegree
from .presentations import GradedPresentation, homology_presentation
from .resolutions import regularity, resolve_by_syzygies
from .rings import (
    Field,
    PolyRing,
    bidegree_of,
    parse_poly,
    poly_str,
    x_degree_of,
    _compositions,
)


class BigradedIdeal:
    """Ideal of the full ring with bihomogeneous generators."""

    def __init__(self, ring, gens):
        self.ring = ring
        self.gens = []
        for g in gens:
            bidegree_of(g)  # validates nonzero and bihomogeneous
            self.gens.append(g)
        self._content = None
        self._resolution = None
        self._induced = {}

    @property
    def bidegrees(self):
        return [bidegree_of(g) for g in self.gens]

    def content_hash(self):
        text = f"m={self.ring.m} n={self.ring.n} p={self.ring.field.characteristic};"
        text += ";".join(poly_str(g) for g in self.gens)
        return hashlib.sha256(text.encode()).hexdigest()[:12]

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.gens)
        return f"BigradedIdeal({inner})"


@dataclass
class CohomologyComponent:
    s: int
    j: int
    presentation: GradedPresentation
    provenance: str

    def is_zero(self):
        return self.presentation.is_zero_module()


def content_ideal(I):
    """Ideal of the x-subring spanned by all content coefficients."""
    from .rings import content_coefficients

    gens = []
    seen = set()
    for g in I.gens:
        for _, coeff in content_coefficients(g):
            if coeff.terms not in seen:
                seen.add(coeff.terms)
                gens.append(coeff)
    return Ideal(I.ring, gens)


def dual_exponents(weight, n):
    """All n-tuples of naturals with the given sum, descending lex."""
    return _compositions(weight, n)


def dual_basis_count(j, n, b=0):
    """Number of dual exponents indexing the free summand at y-degree j."""
    w = -n - j + b
    if w < 0:
        return 0
    return math.comb(w + n - 1, n - 1)


def _content_table(g):
    """Map from y-exponent block to the x-coefficient of g there."""
    m = g.ring.m
    table = {}
    for mono, c in g.terms:
        beta = mono[m:]
        xmono = mono[:m] + (0,) * g.ring.n
        table.setdefault(beta, {})[xmono] = c
    return {beta: g.ring.poly(d) for beta, d in table.items()}


def _contraction_entry(table, ring, c_col, c_row):
    """Coefficient polynomial sending the dual exponent c_col to c_row."""
    beta = tuple(a - b for a, b in zip(c_col, c_row))
    if any(e < 0 for e in beta):
        return ring.zero()
    return table.get(beta, ring.zero())


def top_component_presentation(I, j):
    """The degree-j component of the top cohomology of S/I, presented.

    Rows sit in degree 0 and are indexed by dual exponents of weight
    -n-j; the relation block of generator i consists of one column per
    dual exponent of weight -n-j+b_i, in degree a_i.
    """
    ring = I.ring
    n = ring.n
    rows = dual_exponents(-n - j, n)
    row_index = {c: k for k, c in enumerate(rows)}
    columns = []
    col_degrees = []
    for g, (a, b) in zip(I.gens, I.bidegrees):
        table = _content_table(g)
        for c in dual_exponents(-n - j + b, n):
            entries = {}
            for beta, coeff in table.items():
                target = tuple(ci - bi for ci, bi in zip(c, beta))
                if any(e < 0 for e in target):
                    continue
                r = row_index[target]
                acc = entries.get(r)
                entries[r] = coeff if acc is None else acc + coeff
            columns.append(Vec(ring, len(rows), entries))
            col_degrees.append(a)
    pres = GradedPresentation(ring, [0] * len(rows), columns, col_degrees=col_degrees)
    return CohomologyComponent(n, j, pres, "top-component")


@dataclass
class BigradedResolution:
    """Minimal bigraded free resolution of S/I over the full ring."""

    ring: object
    shifts: list  # shifts[i] = list of (a, b) bidegrees of F_i
    differentials: list  # differentials[i]: columns of F_{i+1} -> F_i

    @property
    def length(self):
        return len(self.shifts) - 1


def bigraded_resolution(I, max_length=None):
    ring = I.ring
    cap = ring.m + ring.n + 1 if max_length is None else max_length
    shifts, diffs = resolve_by_syzygies(
        ring,
        [(0, 0)],
        [Vec(ring, 1, {0: g}) for g in I.gens],
        list(I.bidegrees),
        vec_bidegree,
        cap,
    )
    return BigradedResolution(ring, shifts, diffs)


def _cached_resolution(I):
    if I._resolution is None:
        I._resolution = bigraded_resolution(I)
    return I._resolution


@dataclass
class InducedComplex:
    """The free x-subring complex obtained from a bigraded resolution."""

    ring: object
    j: int
    basis: list  # basis[i] = list of (summand index, dual exponent)
    degrees: list  # degrees[i] = x-shift per basis element of position i
    maps: list  # maps[i]: GradedPresentation viewed as map G_{i+1} -> G_i


def induced_complex(res, j):
    ring = res.ring
    n = ring.n
    basis = []
    degrees = []
    for shifts in res.shifts:
        bas = []
        degs = []
        for k, (a, b) in enumerate(shifts):
            for c in dual_exponents(-n - j + b, n):
                bas.append((k, c))
                degs.append(a)
        basis.append(bas)
        degrees.append(degs)
    maps = []
    for i, cols in enumerate(res.differentials):
        src_basis, src_degs = basis[i + 1], degrees[i + 1]
        dst_basis, dst_degs = basis[i], degrees[i]
        dst_index = {bc: r for r, bc in enumerate(dst_basis)}
        tables = [
            {kp: _content_table(f) for kp, f in col.entries.items()} for col in cols
        ]
        out_cols = []
        for (k, c), _ in zip(src_basis, src_degs):
            entries = {}
            for kp, table in tables[k].items():
                for beta, coeff in table.items():
                    target = tuple(ci - bi for ci, bi in zip(c, beta))
                    if any(e < 0 for e in target):
                        continue
                    r = dst_index[(kp, target)]
                    acc = entries.get(r)
                    entries[r] = coeff if acc is None else acc + coeff
            out_cols.append(Vec(ring, len(dst_basis), entries))
        maps.append(
            GradedPresentation(ring, dst_degs, out_cols, col_degrees=src_degs)
        )
    return InducedComplex(ring, j, basis, degrees, maps)


def _cached_induced(I, j):
    if j not in I._induced:
        I._induced[j] = induced_complex(_cached_resolution(I), j)
    return I._induced[j]


def cohomology_component(I, s, j):
    """Presentation of the s-th cohomology component at y-degree j."""
    ring = I.ring
    n = ring.n
    if not 0 <= s <= n:
        raise ValueError(f"cohomological index {s} outside [0, {n}]")
    cx = _cached_induced(I, j)
    q = n - s
    npos = len(cx.basis)  # resolution positions 0..npos-1
    if q >= npos:
        pres = GradedPresentation(ring, [], [])
    elif q == 0:
        if cx.maps:
            first = cx.maps[0]
            pres = GradedPresentation(
                ring, cx.degrees[0], first.columns, col_degrees=first.col_degrees
            )
        else:
            pres = GradedPresentation(ring, cx.degrees[0], [])
    else:
        A = cx.maps[q - 1]
        if q < len(cx.maps):
            B = cx.maps[q]
        else:
            B = GradedPresentation(ring, A.col_degrees, [])
        pres = homology_presentation(A, B)
    return CohomologyComponent(s, j, pres, "resolution-homology")


def default_annihilation_cap(I, j):
    bmax = max((b for _, b in I.bidegrees), default=1)
    return 4 * (-j) * max(bmax, 1) * max(len(I.gens), 1) + 16


def annihilation_exponent(I, j, cap=None):
    """Least t with content(I)^t killing the top component at degree j."""
    if j > 0:
        raise ValueError("annihilation search needs j <= 0")
    if cap is None:
        cap = default_annihilation_cap(I, j)
    P = top_component_presentation(I, j).presentation
    if P.nrows == 0:
        return 0
    ring = I.ring
    gb = buchberger_vec([c for c in P.columns if not c.is_zero()])
    content = content_ideal(I)
    cgens = content.groebner or []
    current = [ring.one()]
    for t in range(cap + 1):
        killed = all(
            normal_form_vec(Vec(ring, P.nrows, {r: g}), gb).is_zero()
            for g in current
            for r in range(P.nrows)
        )
        if killed:
            return t
        if not cgens:
            break  # zero content ideal can never annihilate a nonzero module
        products = []
        seen = set()
        for g in current:
            for h in cgens:
                q = g * h
                if q.terms and q.terms not in seen:
                    seen.add(q.terms)
                    products.append(q)
        current = Ideal(ring, products).groebner
    raise NotFound(cap)


def least_power_of_max_ideal_inside(ideal, cap=80):
    """Least k with every degree-k x-monomial in the ideal; the quotient
    must be finite length for this to exist."""
    ring = ideal.ring
    gb = ideal.groebner
    for k in range(cap + 1):
        if all(
            normal_form_vec(
                Vec(ring, 1, {0: ring.monomial(u)}), [Vec(ring, 1, {0: g}) for g in gb]
            ).is_zero()
            for u in ring.x_monomials(k)
        ):
            return k
    raise NotFound(cap)


def predicted_reg_regular_sequence(d, n, j):
    """Closed-form regularity of the top component for sum x_i^d y_i forms."""
    return -d * j - n


def predicted_reg_two_summands(d, degg, j):
    """Closed-form regularity for a two-summand hypersurface of bidegree
    (d, 1) whose coefficient gcd has the given degree."""
    if not 0 <= degg <= d:
        raise ValueError("gcd degree must lie between 0 and d")
    if degg < d:
        return -(d - degg) * j + degg - 2
    return degg


def monomial_top_predictor(I, j):
    """For monomial generators u_i * v_i: the x-ideal J and the predicted
    multiplicity of S0/J in the top component."""
    ring = I.ring
    m = ring.m
    xgens = []
    for g in I.gens:
        if not g.is_term():
            raise NotMonomial(f"generator {g} is not a monomial")
        mono = g.lead_mono()
        xgens.append(ring.monomial(mono[:m] + (0,) * ring.n))
    return Ideal(ring, xgens), dual_basis_count(j, ring.n, 0)


def regsum_check(g, h, j):
    """Regularity of the top component gains exactly deg g when the
    hypersurface equation is multiplied by g from the x-subring."""
    ring = h.ring
    degg = x_degree_of(g)
    base = top_component_presentation(BigradedIdeal(ring, [h]), j).presentation
    if base.is_zero_module():
        raise ZeroModule("component for the undecorated hypersurface vanishes")
    scaled = top_component_presentation(BigradedIdeal(ring, [g * h]), j).presentation
    return regularity(scaled) == regularity(base) + degg


# ---------------------------------------------------------------------------
# ideal files

def parse_ideal_file(text):
    """Ideal file: header `ring m=<m> n=<n> p=<p>`, one generator per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("ring"):
        raise HypothesisViolated("ideal file must start with a ring header")
    header = lines[0][4:].strip()
    fields = {}
    for part in header.split():
        key, _, value = part.partition("=")
        fields[key] = int(value)
    try:
        ring = PolyRing(fields["m"], fields["n"], Field(fields.get("p", 32003)))
    except KeyError as exc:
        raise HypothesisViolated(f"ring header missing {exc}") from None
    gens = [parse_poly(ln, ring) for ln in lines[1:]]
    return BigradedIdeal(ring, gens)


def load_ideal(path):
    with open(path, "r", encoding="ascii") as fh:
        return parse_ideal_file(fh.read())


def format_ideal_file(I):
    ring = I.ring
    lines = [f"ring m={ring.m} n={ring.n} p={ring.field.characteristic}"]
    lines.extend(poly_str(g) for g in I.gens)
    return "\n".join(lines) + "\n"
