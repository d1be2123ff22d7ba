"""Finitely presented graded modules over the x-subring.

A presentation is a matrix with declared generator (row) and relation
(column) degrees; every module this library touches travels in this
form.  Subquotients ker(A)/im(B) are presented without any explicit
lifting: the relations on the kernel generators K are exactly the
K-coordinates of the syzygies of the combined matrix [K | B].
"""

from __future__ import annotations

from .errors import CompositionNonzero, NotBihomogeneous
from .groebner import Vec, syzygy_basis, vec_degree
from .hilbert import hilbert_series_of_columns, krull_dimension
from .rings import Poly, x_degree_of


class GradedPresentation:
    """Cokernel data: columns are relations among rank(row_degrees) generators."""

    def __init__(self, ring, row_degrees, columns, col_degrees=None, row_multidegrees=None):
        self.ring = ring
        self.row_degrees = tuple(row_degrees)
        cols = []
        for c in columns:
            if isinstance(c, Poly):
                c = Vec(ring, len(self.row_degrees), {0: c})
            cols.append(c)
        if col_degrees is None:
            if any(c.is_zero() for c in cols):
                raise ValueError("zero columns need explicit column degrees")
            col_degrees = [vec_degree(c, self.row_degrees) for c in cols]
        self.columns = tuple(cols)
        self.col_degrees = tuple(col_degrees)
        if len(self.columns) != len(self.col_degrees):
            raise ValueError("column count and column degree count differ")
        self.row_multidegrees = (
            tuple(tuple(v) for v in row_multidegrees) if row_multidegrees else None
        )
        self._check_homogeneous()

    @classmethod
    def from_rows(cls, ring, row_degrees, rows, **kw):
        """Build from a row-major list of lists of polynomials."""
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        cols = []
        for c in range(ncols):
            entries = {r: rows[r][c] for r in range(nrows) if not rows[r][c].is_zero()}
            cols.append(Vec(ring, nrows, entries))
        return cls(ring, row_degrees, cols, **kw)

    def _check_homogeneous(self):
        for c, col in enumerate(self.columns):
            if col.is_zero():
                continue
            for r, f in col.entries.items():
                if x_degree_of(f) != self.col_degrees[c] - self.row_degrees[r]:
                    raise NotBihomogeneous(
                        f"entry ({r},{c}) has degree {x_degree_of(f)}, "
                        f"expected {self.col_degrees[c] - self.row_degrees[r]}"
                    )

    @property
    def nrows(self):
        return len(self.row_degrees)

    @property
    def ncols(self):
        return len(self.columns)

    def entry(self, r, c):
        return self.columns[c].entries.get(r, self.ring.zero())

    def is_zero_module(self):
        return self.hilbert_series().is_zero()

    def hilbert_series(self):
        return hilbert_series_of_columns(self.ring, self.row_degrees, self.columns)

    def hilbert_function(self, degrees):
        return self.hilbert_series().values(degrees)

    def dimension(self):
        return krull_dimension(self)

    def entry_strings(self):
        return [
            [str(self.entry(r, c)) for c in range(self.ncols)]
            for r in range(self.nrows)
        ]

    def __repr__(self):
        return (
            f"GradedPresentation({self.nrows} generators {list(self.row_degrees)}, "
            f"{self.ncols} relations {list(self.col_degrees)})"
        )


def free_presentation(ring, degrees):
    return GradedPresentation(ring, degrees, [])


def quotient_presentation(ring, gens):
    """S0 / (gens) as a presentation on one degree-zero generator."""
    return GradedPresentation(ring, [0], list(gens))


def subquotient_presentation(ring, gen_vectors, gen_degrees, rel_columns, ambient_degrees):
    """Present span(gen_vectors) / span(rel_columns) inside a free module.

    Both families live in the free module with the given ambient position
    degrees; every rel column must lie in the span of the generators.
    """
    combined = list(gen_vectors) + list(rel_columns)
    if not gen_vectors:
        return GradedPresentation(ring, [], [])
    syz = syzygy_basis(combined, len(ambient_degrees))
    k = len(gen_vectors)
    columns = []
    for s in syz:
        head = {p: f for p, f in s.entries.items() if p < k}
        col = Vec(ring, k, head)
        if not col.is_zero():
            columns.append(col)
    return GradedPresentation(ring, gen_degrees, columns)


def kernel_generators(columns, ambient_degrees, col_degrees=None):
    """Kernel generators of the map with the given columns, plus degrees."""
    syz = syzygy_basis(list(columns), len(ambient_degrees))
    if col_degrees is None:
        col_degrees = [vec_degree(c, ambient_degrees) for c in columns]
    return syz, [vec_degree(s, col_degrees) for s in syz]


def homology_presentation(A, B):
    """Presentation of ker(A) / im(B) for composable graded maps A, B.

    A and B are presentations read as maps: A sends the free module on
    A.col_degrees to the one on A.row_degrees, and B lands in A's source,
    so B.row_degrees must equal A.col_degrees.
    """
    if tuple(B.row_degrees) != tuple(A.col_degrees):
        raise ValueError("B must map into the source of A")
    for bcol in B.columns:
        image = None
        for pos, f in bcol.entries.items():
            term = A.columns[pos].poly_mul(f)
            image = term if image is None else image.add(term)
        if image is not None and not image.is_zero():
            raise CompositionNonzero("A composed with B is nonzero")
    kernel, kdegs = kernel_generators(A.columns, A.row_degrees, A.col_degrees)
    return subquotient_presentation(A.ring, kernel, kdegs, B.columns, A.col_degrees)


def kernel_of_mult(P, f):
    """Presentation of the submodule of coker(P) killed by f."""
    ring = P.ring
    d = x_degree_of(f)
    scaled = [
        Vec(ring, P.nrows, {r: f})
        for r in range(P.nrows)
    ]
    combined = scaled + list(P.columns)
    syz = syzygy_basis(combined, P.nrows)
    gens = []
    gen_degrees = []
    seen = set()
    for s in syz:
        head = {p: g for p, g in s.entries.items() if p < P.nrows}
        v = Vec(ring, P.nrows, head)
        if v.is_zero():
            continue
        key = tuple(sorted((p, g.terms) for p, g in v.entries.items()))
        if key in seen:
            continue
        seen.add(key)
        gens.append(v)
        gen_degrees.append(vec_degree(v, P.row_degrees))
    return subquotient_presentation(ring, gens, gen_degrees, P.columns, P.row_degrees)
