"""Minimal graded free resolutions, Betti tables and regularity.

Resolutions are built by iterated syzygy computations.  Each new
differential is pruned in place: a unit entry marks a trivial direct
summand, which is split off by homogeneous row and column operations and
deleted.  Since compositions vanish, the column of the previous
differential attached to the dying generator is forced to zero in the
adjusted basis, so deletion there needs no arithmetic.  After pruning,
every entry lies in the graded maximal ideal, so the surviving complex
is the minimal resolution and the iteration stops within m steps.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotMultigraded, ZeroModule
from .groebner import Vec, syzygy_basis, vec_degree
from .presentations import GradedPresentation


class _MutableComplex:
    """Working state: shifts per position and column-major differentials."""

    def __init__(self, ring, row_degrees):
        self.ring = ring
        self.shifts = [list(row_degrees)]
        self.diffs = []  # diffs[i]: list of {row: Poly} columns, F_{i+1} -> F_i

    def push(self, columns, col_degrees):
        self.diffs.append([dict(c.entries) for c in columns])
        self.shifts.append(list(col_degrees))

    def _delete_generator(self, level, r):
        """Remove basis element r of F_level; fixes the two incident maps."""
        del self.shifts[level][r]
        if level > 0:
            del self.diffs[level - 1][r]
        if level < len(self.diffs):
            for col in self.diffs[level]:
                col.pop(r, None)
                remap = {(p - 1 if p > r else p): f for p, f in col.items()}
                col.clear()
                col.update(remap)

    def prune_level(self, i):
        """Cancel unit entries of diffs[i] (the map F_{i+1} -> F_i)."""
        d = self.diffs[i]
        fld = self.ring.field
        while True:
            unit = None
            for c, col in enumerate(d):
                for r, f in col.items():
                    if f.is_constant():
                        unit = (r, c, f.lead_coeff())
                        break
                if unit:
                    break
            if unit is None:
                break
            r, c, u = unit
            uinv = fld.inv(u)
            pivot_col = dict(d[c])
            for c2, col in enumerate(d):
                if c2 == c:
                    continue
                v = col.get(r)
                if v is None:
                    continue
                factor = v.scale(uinv)
                for rr, f in pivot_col.items():
                    g = col.get(rr, self.ring.zero()) - factor * f
                    if g.is_zero():
                        col.pop(rr, None)
                    else:
                        col[rr] = g
            del d[c]
            del self.shifts[i + 1][c]
            self._delete_generator(i, r)
        # relations that became identically zero carry no information
        keep = [k for k, col in enumerate(d) if col]
        if len(keep) != len(d):
            self.diffs[i] = [d[k] for k in keep]
            self.shifts[i + 1] = [self.shifts[i + 1][k] for k in keep]

    def columns_as_vecs(self, i):
        rank = len(self.shifts[i])
        return [Vec(self.ring, rank, dict(col)) for col in self.diffs[i]]


def resolve_by_syzygies(ring, row_degrees, columns, col_degrees, degree_of, cap):
    """Shared resolution loop; `degree_of(vec, posdegs)` supplies grading."""
    state = _MutableComplex(ring, row_degrees)
    state.push(columns, col_degrees)
    state.prune_level(0)
    while len(state.diffs) <= cap:
        cols = state.columns_as_vecs(len(state.diffs) - 1)
        if not cols:
            state.shifts.pop()
            state.diffs.pop()
            break
        syz = syzygy_basis(cols, len(state.shifts[-2]))
        if not syz:
            break
        degs = [degree_of(s, state.shifts[-1]) for s in syz]
        state.push(syz, degs)
        state.prune_level(len(state.diffs) - 1)
    else:
        raise RuntimeError("resolution exceeded the syzygy bound")
    diffs = [state.columns_as_vecs(i) for i in range(len(state.diffs))]
    return [list(s) for s in state.shifts], diffs


@dataclass
class FreeResolution:
    """Minimal graded free resolution with aligned shift lists."""

    ring: object
    shifts: list  # shifts[i] = list of generator degrees of F_i
    differentials: list  # differentials[i]: list of Vec, F_{i+1} -> F_i
    multishifts: list = field(default=None)

    @property
    def length(self):
        return len(self.shifts) - 1

    def betti_table(self):
        counts = {}
        for i, degs in enumerate(self.shifts):
            for d in degs:
                counts[(i, d)] = counts.get((i, d), 0) + 1
        return BettiTable(counts)

    def regularity(self):
        reg = None
        for i, degs in enumerate(self.shifts):
            for d in degs:
                v = d - i
                reg = v if reg is None else max(reg, v)
        if reg is None:
            raise ZeroModule("regularity of the zero module is undefined")
        return reg


@dataclass(frozen=True)
class BettiTable:
    counts: dict

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self):
        return hash(tuple(sorted(self.counts.items())))

    def scaled(self, k):
        return BettiTable({key: k * v for key, v in self.counts.items()})

    def max_position(self):
        return max((i for i, _ in self.counts), default=-1)

    def to_csv(self):
        """Rows are homological positions, columns are degrees."""
        if not self.counts:
            return "position\n"
        degrees = sorted({d for _, d in self.counts})
        lines = ["position," + ",".join(str(d) for d in degrees)]
        for i in range(self.max_position() + 1):
            row = [str(self.counts.get((i, d), 0)) for d in degrees]
            lines.append(f"{i}," + ",".join(row))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        cells = ", ".join(
            f"({i},{d}):{v}" for (i, d), v in sorted(self.counts.items())
        )
        return f"BettiTable({cells})"


def minimal_resolution(P, max_length=None):
    """Minimal free resolution of coker(P) by iterated pruned syzygies."""
    ring = P.ring
    cap = ring.m + 1 if max_length is None else max_length
    shifts, diffs = resolve_by_syzygies(
        ring, P.row_degrees, P.columns, P.col_degrees, vec_degree, cap
    )
    res = FreeResolution(ring, shifts, diffs)
    if P.row_multidegrees is not None:
        res.multishifts = _propagate_multidegrees(res, P.row_multidegrees)
    return res


def resolution_is_minimal(res):
    for cols in res.differentials:
        for col in cols:
            for f in col.entries.values():
                if f.is_constant():
                    return False
    return True


def compositions_vanish(res):
    """Consecutive differentials compose to zero (exact arithmetic check)."""
    for i in range(1, len(res.differentials)):
        outer = res.differentials[i - 1]
        for col in res.differentials[i]:
            image = None
            for pos, f in col.entries.items():
                term = outer[pos].poly_mul(f)
                image = term if image is None else image.add(term)
            if image is not None and not image.is_zero():
                return False
    return True


def regularity(P):
    """Castelnuovo-Mumford regularity of coker(P)."""
    if P.is_zero_module():
        raise ZeroModule("regularity of the zero module is undefined")
    return minimal_resolution(P).regularity()


def betti_numbers(P):
    if P.is_zero_module():
        return BettiTable({})
    return minimal_resolution(P).betti_table()


def _propagate_multidegrees(res, row_multidegrees):
    """Attach fine x-degree vectors to every shift of the resolution.

    Requires the presentation entries (and hence everything the syzygy
    steps produce from them) to be single terms.
    """
    m = res.ring.m
    shifts = [list(map(tuple, row_multidegrees))]
    if len(shifts[0]) != len(res.shifts[0]):
        raise NotMultigraded("one multidegree vector per generator required")
    for level, cols in enumerate(res.differentials):
        prev = shifts[level]
        cur = []
        for col in cols:
            candidates = set()
            for pos, f in col.entries.items():
                if not f.is_term():
                    raise NotMultigraded(f"entry at level {level} mixes monomials")
                mono = f.lead_mono()
                if any(mono[m:]):
                    raise NotMultigraded("entry involves y variables")
                candidates.add(tuple(a + b for a, b in zip(mono[:m], prev[pos])))
            if len(candidates) != 1:
                raise NotMultigraded(
                    f"column at level {level} is not multihomogeneous"
                )
            cur.append(candidates.pop())
        shifts.append(cur)
    return shifts


def multigraded_shifts(P):
    """Fine shift vectors of the minimal resolution, one list per position."""
    if P.row_multidegrees is None:
        raise NotMultigraded("presentation carries no row multidegrees")
    res = minimal_resolution(P)
    return res.multishifts


def check_lcm_bound(shifts):
    """Every shift monomial from position >= 1 divides the lcm of the
    position-1 shift monomials."""
    if len(shifts) < 2 or not shifts[1]:
        return True
    width = len(shifts[1][0])
    lcm = tuple(max(v[i] for v in shifts[1]) for i in range(width))
    for level in range(1, len(shifts)):
        for v in shifts[level]:
            if any(a > b for a, b in zip(v, lcm)):
                return False
    return True


def betti_hilbert_identity(P, res=None):
    """Alternating sum of shift powers equals the series numerator."""
    if res is None:
        if P.is_zero_module():
            return True
        res = minimal_resolution(P)
    alt = {}
    for i, degs in enumerate(res.shifts):
        sign = -1 if i % 2 else 1
        for d in degs:
            s = alt.get(d, 0) + sign
            if s == 0:
                alt.pop(d, None)
            else:
                alt[d] = s
    series = P.hilbert_series()
    return alt == series.unreduced_numerator()


def presentation_of_monomial_quotient(ring, monomials):
    """S0 modulo a monomial ideal, carrying fine multidegree data."""
    gens = [ring.monomial(u) for u in monomials]
    return GradedPresentation(
        ring,
        [0],
        gens,
        row_multidegrees=[(0,) * ring.m],
    )
