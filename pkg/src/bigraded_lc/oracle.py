"""Independent dimension oracle for cohomology components.

Local cohomology along the y-variables is the direct limit of the
cohomology of Koszul complexes on rising powers of those variables.
Everything here is finite-dimensional exact linear algebra on graded
pieces of S/I: no Groebner bases, no resolutions, which is what makes
the comparison against the presentation pipeline a genuine cross-check.

Working with pieces of S (rather than quotient bases of S/I) keeps the
code to rank computations only: with U the pieces of the ideal and V
the ambient pieces, a quotient map's rank is
rank([images of V | U_target]) - rank(U_target).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

from .errors import NotStabilized
from .linalg import rank, rank_mod_p
from .rings import _compositions


class KoszulOracle:
    """Caches graded pieces and Koszul ranks for one bigraded ideal."""

    def __init__(self, ideal):
        self.ideal = ideal
        self.ring = ideal.ring
        self.p = self.ring.field.characteristic
        self._monos = {}
        self._piece = {}
        self._dims = {}

    # -- monomial bookkeeping -------------------------------------------

    def _mono_list(self, block, degree):
        key = (block, degree)
        if key not in self._monos:
            width = self.ring.m if block == "x" else self.ring.n
            monos = _compositions(degree, width) if degree >= 0 else []
            index = {u: k for k, u in enumerate(monos)}
            self._monos[key] = (monos, index)
        return self._monos[key]

    def _shift_map(self, block, degree, delta):
        """Index array sending monomials of `degree` to monomial + delta."""
        src, _ = self._mono_list(block, degree)
        _, dst_index = self._mono_list(block, degree + sum(delta))
        return np.array(
            [dst_index[tuple(a + b for a, b in zip(u, delta))] for u in src],
            dtype=np.intp,
        )

    # -- graded pieces of I inside S ------------------------------------

    def _piece_data(self, a, b):
        """(ambient dimension, rank of the ideal piece, span matrix)."""
        key = (a, b)
        if key in self._piece:
            return self._piece[key]
        xs, _ = self._mono_list("x", a)
        ys, _ = self._mono_list("y", b)
        dim = len(xs) * len(ys)
        dtype = np.float64 if self.p else object
        rows = []
        if dim:
            m = self.ring.m
            for g, (ga, gb) in zip(self.ideal.gens, self.ideal.bidegrees):
                xs_src, _ = self._mono_list("x", a - ga)
                ys_src, _ = self._mono_list("y", b - gb)
                if not xs_src or not ys_src:
                    continue
                block = np.zeros((len(xs_src) * len(ys_src), dim), dtype=dtype)
                for mono, coeff in g.terms:
                    xmap = self._shift_map("x", a - ga, mono[:m])
                    ymap = self._shift_map("y", b - gb, mono[m:])
                    cols = (xmap[:, None] * len(ys) + ymap[None, :]).ravel()
                    np.add.at(
                        block,
                        (np.arange(block.shape[0]), cols),
                        float(coeff) if self.p else coeff,
                    )
                rows.append(block % self.p if self.p else block)
        if rows:
            span = np.vstack(rows)
            rk = self._rank(span)
        else:
            span = np.zeros((0, dim), dtype=dtype)
            rk = 0
        self._piece[key] = (dim, rk, span)
        return self._piece[key]

    def _rank(self, matrix):
        if self.p:
            return rank_mod_p(matrix, self.p)
        return rank([[Fraction(v) for v in row] for row in matrix], 0)

    # -- Koszul complex on y powers --------------------------------------

    def _differential(self, i, j, t, pdeg):
        """Ambient matrix of K^pdeg -> K^(pdeg+1) at x-degree i, rows=sources."""
        n = self.ring.n
        b_src = j + t * pdeg
        b_dst = b_src + t
        xs, _ = self._mono_list("x", i)
        ys_src, _ = self._mono_list("y", b_src)
        ys_dst, _ = self._mono_list("y", b_dst)
        subsets_src = list(itertools.combinations(range(n), pdeg))
        subsets_dst = list(itertools.combinations(range(n), pdeg + 1))
        dst_pos = {T: k for k, T in enumerate(subsets_dst)}
        blk_src = len(xs) * len(ys_src)
        blk_dst = len(xs) * len(ys_dst)
        dtype = np.float64 if self.p else object
        mat = np.zeros((blk_src * len(subsets_src), blk_dst * len(subsets_dst)), dtype=dtype)
        if blk_src == 0 or blk_dst == 0:
            return mat
        base = np.arange(len(xs))[:, None] * len(ys_dst)
        for si, T in enumerate(subsets_src):
            for l in range(n):
                if l in T:
                    continue
                sign = (-1) ** sum(1 for e in T if e < l)
                Tl = tuple(sorted(T + (l,)))
                ymap = self._shift_map(
                    "y", b_src, tuple(t if v == l else 0 for v in range(n))
                )
                cols = (base + ymap[None, :]).ravel() + dst_pos[Tl] * blk_dst
                rows = np.arange(blk_src) + si * blk_src
                mat[rows, cols] += sign
        return mat % self.p if self.p else mat

    def koszul_dims(self, i, j, t):
        """Cohomology dimensions [s=0..n] at bidegree (i, j), power t."""
        key = (i, j, t)
        if key in self._dims:
            return self._dims[key]
        n = self.ring.n
        ambient = []
        u_rank = []
        spans = []
        for pdeg in range(n + 1):
            b = j + t * pdeg
            nblocks = math.comb(n, pdeg)
            if b < 0:
                ambient.append(0)
                u_rank.append(0)
                spans.append(None)
                continue
            dim, rk, span = self._piece_data(i, b)
            ambient.append(nblocks * dim)
            u_rank.append(nblocks * rk)
            spans.append(span)
        induced_rank = [0] * (n + 1)  # rank of the quotient map at position p
        for pdeg in range(n):
            if ambient[pdeg] == 0 or ambient[pdeg + 1] == 0:
                continue
            d = self._differential(i, j, t, pdeg)
            stack = [d]
            span = spans[pdeg + 1]
            if span is not None and span.shape[0]:
                nblocks = math.comb(n, pdeg + 1)
                blk = span.shape[1]
                wide = np.zeros((span.shape[0] * nblocks, blk * nblocks), dtype=d.dtype)
                for kblk in range(nblocks):
                    wide[
                        kblk * span.shape[0] : (kblk + 1) * span.shape[0],
                        kblk * blk : (kblk + 1) * blk,
                    ] = span
                stack.append(wide)
            total = np.vstack(stack) if len(stack) > 1 else d
            induced_rank[pdeg] = self._rank(total) - u_rank[pdeg + 1]
        dims = []
        for s in range(n + 1):
            quotient_dim = ambient[s] - u_rank[s]
            below = induced_rank[s - 1] if s > 0 else 0
            dims.append(quotient_dim - induced_rank[s] - below)
        self._dims[key] = dims
        return dims

    def stabilized_dimension(self, s, i, j, t_max):
        """Value at the smallest t where three consecutive powers agree."""
        history = []
        for t in range(1, t_max + 1):
            history.append(self.koszul_dims(i, j, t)[s])
            if len(history) >= 3 and history[-1] == history[-2] == history[-3]:
                return history[-3]
        raise NotStabilized(i, j, t_max)


def ext_oracle(I, s, window, t_max=14):
    """Table of stabilized component dimensions over an (i, j) window."""
    oracle = I.__dict__.setdefault("_koszul_oracle", KoszulOracle(I))
    return {(i, j): oracle.stabilized_dimension(s, i, j, t_max) for i, j in window}
