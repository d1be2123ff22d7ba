"""Brute-force degreewise linear algebra used as an independent oracle.

Everything here works on explicit monomial bases of graded pieces and
numpy row reduction, deliberately avoiding the Groebner machinery it is
used to check.
"""

from bigraded_lc.linalg import rank
from bigraded_lc.rings import mono_mul


def poly_vector(f, index):
    row = [0] * len(index)
    for mono, c in f.terms:
        row[index[mono]] = int(c) if f.ring.field.characteristic else c
    return row


def ideal_piece_rows(ring, gens, degree):
    """Spanning rows of the degree-d piece of an x-subring ideal."""
    monos = ring.x_monomials(degree)
    index = {u: k for k, u in enumerate(monos)}
    rows = []
    for g in gens:
        gdeg = max(sum(u) for u, _ in g.terms)
        for u in ring.x_monomials(degree - gdeg):
            rows.append(poly_vector(g.term_mul(u), index))
    return rows, index


def ideal_contains_by_linalg(ring, gens, f):
    """Membership of a homogeneous f via ranks of one graded piece."""
    p = ring.field.characteristic
    degree = max(sum(u) for u, _ in f.terms)
    rows, index = ideal_piece_rows(ring, gens, degree)
    base = rank(rows, p) if rows else 0
    return rank(rows + [poly_vector(f, index)], p) == base


def free_piece_basis(ring, position_degrees, degree):
    """Basis (position, monomial) of the degree-d piece of a free module."""
    basis = []
    for r, d in enumerate(position_degrees):
        for u in ring.x_monomials(degree - d):
            basis.append((r, u))
    return basis


def map_piece_matrix(ring, columns, row_degrees, col_degrees, degree):
    """Degree-d matrix of the map with the given columns; rows = sources."""
    src = free_piece_basis(ring, col_degrees, degree)
    dst = free_piece_basis(ring, row_degrees, degree)
    dst_index = {b: k for k, b in enumerate(dst)}
    p = ring.field.characteristic
    rows = []
    for c, u in src:
        row = [0] * len(dst)
        col = columns[c]
        for pos, f in col.entries.items():
            for mono, coeff in f.term_mul(u).terms:
                row[dst_index[(pos, mono)]] = int(coeff) if p else coeff
        rows.append(row)
    return rows, len(src), len(dst)


def kernel_dim_by_linalg(ring, columns, row_degrees, col_degrees, degree):
    rows, nsrc, _ = map_piece_matrix(ring, columns, row_degrees, col_degrees, degree)
    if nsrc == 0:
        return 0
    return nsrc - rank(rows, ring.field.characteristic)


def coker_dims_by_linalg(ring, columns, row_degrees, col_degrees, degrees):
    """Hilbert function of the cokernel, one graded piece at a time."""
    out = []
    for d in degrees:
        rows, _, ndst = map_piece_matrix(ring, columns, row_degrees, col_degrees, d)
        rk = rank(rows, ring.field.characteristic) if rows else 0
        out.append(ndst - rk)
    return out
